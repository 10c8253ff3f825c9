#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "causatum/kb.hpp"
#include "causatum/rational.hpp"

namespace causatum {

// One truth assignment to the m event sentences. Bit j (in KB declaration
// order) is stored big-endian: event 0 is the most significant bit, so the
// rank doubles as the row's binary-string value and ascending rank is
// ascending binary order.
struct PossibleWorld {
  std::uint64_t rank = 0;
  unsigned width = 0;

  bool truth(unsigned event_index) const {
    return (rank >> (width - 1 - event_index)) & 1;
  }
  std::string bit_string() const;

  bool operator==(const PossibleWorld& other) const = default;
};

// Rows in strictly ascending binary order, all of width m.
class WorldMatrix {
 public:
  WorldMatrix(std::vector<std::string> event_names,
              std::vector<PossibleWorld> rows);

  unsigned m() const { return static_cast<unsigned>(event_names_.size()); }
  const std::vector<std::string>& event_names() const { return event_names_; }
  const std::vector<PossibleWorld>& rows() const { return rows_; }

  // Column of an event name; throws DomainError when undeclared.
  unsigned column(const std::string& event) const;

 private:
  std::vector<std::string> event_names_;
  std::vector<PossibleWorld> rows_;
};

// Partial truth observation; unobserved events are simply absent.
using Observation = std::map<std::string, bool>;

inline constexpr unsigned kDefaultWorldLimit = 20;

// The full power set of the KB's events, 2^m rows ascending. Throws
// CapacityError when m exceeds the limit.
WorldMatrix enumerate_worlds(const KnowledgeBase& kb,
                             unsigned limit = kDefaultWorldLimit);

struct CombinatoricsReport {
  unsigned m = 0;
  Integer n;                        // 2^m possible worlds
  Integer transition_relation_log2; // there are 2^n transition relations
  // C(n, k) for k = 1..n, present only when n <= 16; entries sum to 2^n - 1.
  std::optional<std::vector<Integer>> generality_histogram;
};

CombinatoricsReport combinatorics(unsigned m);

// Row minimizing Hamming distance to the observation over observed events
// only; ties go to the lower binary order. Throws DomainError on an empty
// matrix or an observation key outside the matrix's events.
PossibleWorld nearest_world(const WorldMatrix& matrix, const Observation& obs);

}  // namespace causatum
