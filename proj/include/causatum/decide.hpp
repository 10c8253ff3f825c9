#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "causatum/rational.hpp"

namespace causatum {

// Finite-horizon decision structure: per-tick act sets, outcome sets,
// utilities, outcome probabilities conditional on the act, and a
// deterministic transition mapping. Stochasticity lives entirely in the
// probability tables; the transition is a function.
struct DecisionProblem {
  int horizon = 0;
  // Index 0..horizon-1. Labels are kept sorted so lexicographic tie-breaking
  // is positional.
  std::vector<std::vector<std::string>> acts;
  std::vector<std::vector<std::string>> outcomes;
  // (tick, act, outcome) -> utility / probability.
  std::map<std::tuple<int, std::string, std::string>, Rational> utility;
  std::map<std::tuple<int, std::string, std::string>, Rational> prob;
  // (tick, act, outcome) -> outcome at tick+1; declared for ticks 0..T-2.
  std::map<std::tuple<int, std::string, std::string>, std::string> transition;

  bool operator==(const DecisionProblem& other) const = default;
};

struct Plan {
  std::vector<std::string> acts;  // one per tick
  Rational total_eu;

  bool operator==(const Plan& other) const = default;
};

struct TrajectoryStep {
  int tick;
  std::string act;
  std::string outcome;

  bool operator==(const TrajectoryStep& other) const = default;
};
using Trajectory = std::vector<TrajectoryStep>;

// Chooses the realized outcome at a tick from the candidates the model
// permits there. The default selector takes the single transition-determined
// candidate; a selector returning anything else is a domain error, which
// keeps every trajectory consistent with the transition mapping.
using ChanceSelector = std::function<std::string(
    int tick, const std::string& act, const std::vector<std::string>& candidates)>;

// Violation messages; empty iff the problem is well-formed (nonempty act and
// outcome sets, complete utility/probability tables, probability vectors
// summing to exactly 1, total transition for ticks 0..T-2).
std::vector<std::string> validate_problem(const DecisionProblem& problem);

// EU(t, d) = sum over outcomes x in X(t) of U(t,d,x) * P(x|d).
Rational expected_utility(const DecisionProblem& problem, int tick,
                          const std::string& act);

// Maximizes the sum of per-tick expected utilities by backward induction over
// (tick, outcome) states; ties broken by lexicographic act order. Equals the
// exhaustive-enumeration optimum.
Plan solve_plan(const DecisionProblem& problem);

Trajectory simulate(const DecisionProblem& problem, const Plan& plan,
                    const std::string& start, ChanceSelector chance = nullptr);

}  // namespace causatum
