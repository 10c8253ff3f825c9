#include "causatum/distribution.hpp"

#include <algorithm>
#include <sstream>

#include "causatum/errors.hpp"

namespace causatum {

MergedPredicate merge(const Predicate& a, const Predicate& b) {
  MergedPredicate out;
  out.literals = a;
  for (const auto& [var, value] : b) {
    auto it = out.literals.find(var);
    if (it != out.literals.end() && it->second != value) {
      out.contradictory = true;
    } else {
      out.literals.emplace(var, value);
    }
  }
  return out;
}

std::string format_predicate(const Predicate& p) {
  if (p.empty()) return "(all)";
  std::ostringstream os;
  bool first = true;
  for (const auto& [var, value] : p) {
    if (!first) os << '&';
    os << var << '=' << (value ? '1' : '0');
    first = false;
  }
  return os.str();
}

JointDistribution::JointDistribution(std::string name,
                                     std::vector<std::string> vars,
                                     std::vector<Rational> table)
    : name_(std::move(name)), vars_(std::move(vars)), table_(std::move(table)) {
  if (table_.size() != (std::size_t{1} << vars_.size())) {
    throw DomainError("distribution '" + name_ + "' needs 2^" +
                      std::to_string(vars_.size()) + " cells, got " +
                      std::to_string(table_.size()));
  }
}

bool JointDistribution::has_var(const std::string& v) const {
  return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
}

Rational JointDistribution::mass(const Predicate& p) const {
  std::uint64_t required_mask = 0;
  std::uint64_t required_bits = 0;
  for (const auto& [var, value] : p) {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) {
      throw DomainError("distribution '" + name_ + "' has no variable '" + var +
                        "'");
    }
    auto pos = static_cast<std::size_t>(it - vars_.begin());
    std::uint64_t bit = std::uint64_t{1} << (vars_.size() - 1 - pos);
    required_mask |= bit;
    if (value) required_bits |= bit;
  }
  Rational total = 0;
  for (std::size_t cell = 0; cell < table_.size(); ++cell) {
    if ((cell & required_mask) == required_bits) total += table_[cell];
  }
  return total;
}

std::vector<std::string> JointDistribution::validate() const {
  std::vector<std::string> violations;
  Rational sum = 0;
  for (std::size_t cell = 0; cell < table_.size(); ++cell) {
    if (table_[cell] < 0) {
      violations.push_back("distribution '" + name_ + "': cell " +
                           std::to_string(cell) + " is negative");
    }
    sum += table_[cell];
  }
  if (sum != 1) {
    violations.push_back("distribution '" + name_ + "': cells sum to " +
                         format_rational(sum) + ", expected 1");
  }
  return violations;
}

}  // namespace causatum
