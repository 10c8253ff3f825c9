#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "causatum/rational.hpp"

namespace causatum {

// A conjunction of literals over binary variables; the empty predicate is
// the trivially true one. Values: true = the variable holds.
using Predicate = std::map<std::string, bool>;

// Conjunction of two predicates. A conflicting pair (same variable, opposite
// values) yields a predicate that no assignment satisfies.
struct MergedPredicate {
  Predicate literals;
  bool contradictory = false;
};
MergedPredicate merge(const Predicate& a, const Predicate& b);

// Canonical rendering, e.g. "spade=1&heart=0"; "(all)" for the empty one.
std::string format_predicate(const Predicate& p);

// Exact joint probability table over k binary variables. Cell index packs the
// variable values big-endian in declaration order: vars[0] is the most
// significant bit, so ascending index order matches ascending row order in
// the KB file format.
class JointDistribution {
 public:
  JointDistribution() = default;
  JointDistribution(std::string name, std::vector<std::string> vars,
                    std::vector<Rational> table);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Rational>& table() const { return table_; }
  std::size_t cells() const { return table_.size(); }

  bool has_var(const std::string& v) const;

  // Total mass of the cells satisfying the predicate. Throws DomainError if
  // the predicate mentions an unknown variable.
  Rational mass(const Predicate& p) const;

  // Violation messages; empty when the table is a probability distribution
  // (nonnegative entries summing to exactly 1).
  std::vector<std::string> validate() const;

  bool operator==(const JointDistribution& other) const = default;

 private:
  std::string name_;
  std::vector<std::string> vars_;
  std::vector<Rational> table_;
};

}  // namespace causatum
