#include "causatum/worlds.hpp"

#include <algorithm>
#include <bit>

#include "causatum/errors.hpp"

namespace causatum {

std::string PossibleWorld::bit_string() const {
  std::string s(width, '0');
  for (unsigned j = 0; j < width; ++j) {
    if (truth(j)) s[j] = '1';
  }
  return s;
}

WorldMatrix::WorldMatrix(std::vector<std::string> event_names,
                         std::vector<PossibleWorld> rows)
    : event_names_(std::move(event_names)), rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].width != m()) {
      throw DomainError("world row width " + std::to_string(rows_[i].width) +
                        " does not match event count " + std::to_string(m()));
    }
    if (i > 0 && rows_[i - 1].rank >= rows_[i].rank) {
      throw DomainError("world rows must be strictly ascending");
    }
  }
}

unsigned WorldMatrix::column(const std::string& event) const {
  auto it = std::find(event_names_.begin(), event_names_.end(), event);
  if (it == event_names_.end()) {
    throw DomainError("event '" + event + "' is not in the world matrix");
  }
  return static_cast<unsigned>(it - event_names_.begin());
}

WorldMatrix enumerate_worlds(const KnowledgeBase& kb, unsigned limit) {
  auto m = static_cast<unsigned>(kb.events.size());
  if (m > limit) {
    throw CapacityError("cannot enumerate 2^" + std::to_string(m) +
                        " worlds: " + std::to_string(m) +
                        " events exceed the limit of " + std::to_string(limit));
  }
  std::vector<std::string> names;
  names.reserve(m);
  for (const auto& e : kb.events) names.push_back(e.name);
  std::vector<PossibleWorld> rows;
  rows.reserve(std::size_t{1} << m);
  for (std::uint64_t rank = 0; rank < (std::uint64_t{1} << m); ++rank) {
    rows.push_back(PossibleWorld{rank, m});
  }
  return WorldMatrix(std::move(names), std::move(rows));
}

CombinatoricsReport combinatorics(unsigned m) {
  CombinatoricsReport report;
  report.m = m;
  report.n = pow2(m);
  // The transition relations are counted, never materialized: reporting
  // log2(2^n) = n keeps the quantity exact at any scale.
  report.transition_relation_log2 = report.n;
  if (report.n <= 16) {
    auto n = static_cast<unsigned>(report.n);
    std::vector<Integer> histogram;
    histogram.reserve(n);
    for (unsigned k = 1; k <= n; ++k) histogram.push_back(binomial(n, k));
    report.generality_histogram = std::move(histogram);
  }
  return report;
}

PossibleWorld nearest_world(const WorldMatrix& matrix, const Observation& obs) {
  if (matrix.rows().empty()) {
    throw DomainError("nearest_world requires a nonempty matrix");
  }
  // Precompute the observed bit pattern once; the scan is then popcounts.
  std::uint64_t mask = 0;
  std::uint64_t target = 0;
  for (const auto& [event, value] : obs) {
    unsigned col = matrix.column(event);
    std::uint64_t bit = std::uint64_t{1} << (matrix.m() - 1 - col);
    mask |= bit;
    if (value) target |= bit;
  }
  const PossibleWorld* best = nullptr;
  int best_distance = 0;
  for (const auto& row : matrix.rows()) {
    int distance = std::popcount((row.rank & mask) ^ target);
    if (!best || distance < best_distance) {  // ties keep the earlier row
      best = &row;
      best_distance = distance;
    }
  }
  return *best;
}

}  // namespace causatum
