#include "causatum/decide.hpp"

#include <algorithm>

#include "causatum/errors.hpp"

namespace causatum {

namespace {

std::string key_string(int tick, const std::string& act,
                       const std::string& outcome) {
  return "(" + std::to_string(tick) + ", " + act + ", " + outcome + ")";
}

bool contains(const std::vector<std::string>& items, const std::string& x) {
  return std::find(items.begin(), items.end(), x) != items.end();
}

}  // namespace

std::vector<std::string> validate_problem(const DecisionProblem& problem) {
  std::vector<std::string> violations;
  if (problem.horizon <= 0) {
    violations.push_back("horizon must be positive");
    return violations;
  }
  if (static_cast<int>(problem.acts.size()) != problem.horizon ||
      static_cast<int>(problem.outcomes.size()) != problem.horizon) {
    violations.push_back("act/outcome sets must cover every tick");
    return violations;
  }
  for (int t = 0; t < problem.horizon; ++t) {
    if (problem.acts[t].empty())
      violations.push_back("empty decision set at tick " + std::to_string(t));
    if (problem.outcomes[t].empty())
      violations.push_back("empty outcome set at tick " + std::to_string(t));
    for (const auto& act : problem.acts[t]) {
      Rational sum = 0;
      for (const auto& outcome : problem.outcomes[t]) {
        auto key = std::make_tuple(t, act, outcome);
        if (!problem.utility.count(key)) {
          violations.push_back("missing utility " + key_string(t, act, outcome));
        }
        auto pit = problem.prob.find(key);
        if (pit == problem.prob.end()) {
          violations.push_back("missing probability " +
                               key_string(t, act, outcome));
        } else {
          if (pit->second < 0) {
            violations.push_back("negative probability " +
                                 key_string(t, act, outcome));
          }
          sum += pit->second;
        }
      }
      if (sum != 1) {
        violations.push_back("probabilities for (tick " + std::to_string(t) +
                             ", act " + act + ") sum to " +
                             format_rational(sum) + ", expected 1");
      }
      if (t + 1 < problem.horizon) {
        for (const auto& outcome : problem.outcomes[t]) {
          auto key = std::make_tuple(t, act, outcome);
          auto tit = problem.transition.find(key);
          if (tit == problem.transition.end()) {
            violations.push_back("missing transition " +
                                 key_string(t, act, outcome));
          } else if (!contains(problem.outcomes[t + 1], tit->second)) {
            violations.push_back("transition " + key_string(t, act, outcome) +
                                 " targets undeclared outcome '" + tit->second +
                                 "'");
          }
        }
      }
    }
  }
  return violations;
}

Rational expected_utility(const DecisionProblem& problem, int tick,
                          const std::string& act) {
  if (tick < 0 || tick >= problem.horizon) {
    throw DomainError("tick " + std::to_string(tick) + " outside horizon");
  }
  if (!contains(problem.acts[tick], act)) {
    throw DomainError("unknown act '" + act + "' at tick " +
                      std::to_string(tick));
  }
  Rational eu = 0;
  for (const auto& outcome : problem.outcomes[tick]) {
    auto key = std::make_tuple(tick, act, outcome);
    auto uit = problem.utility.find(key);
    auto pit = problem.prob.find(key);
    if (uit == problem.utility.end() || pit == problem.prob.end()) {
      throw DomainError("incomplete tables at " + key_string(tick, act, outcome));
    }
    eu += uit->second * pit->second;
  }
  return eu;
}

Plan solve_plan(const DecisionProblem& problem) {
  auto violations = validate_problem(problem);
  if (!violations.empty()) {
    throw DomainError("invalid decision problem: " + violations.front());
  }

  // Backward induction. value[x] is the optimal utility-to-go from (tick, x);
  // EU(t, d) does not depend on the current outcome, so the value function is
  // constant per tick and the chosen act is state-independent.
  std::map<std::string, Rational> value_next;
  for (const auto& outcome : problem.outcomes[problem.horizon - 1]) {
    value_next[outcome] = 0;
  }
  std::vector<std::string> chosen(problem.horizon);
  Rational total = 0;  // filled from the tick-0 value below

  for (int t = problem.horizon - 1; t >= 0; --t) {
    std::map<std::string, Rational> value_here;
    std::string tick_act;
    for (const auto& state : problem.outcomes[t]) {
      bool have_best = false;
      Rational best_value = 0;
      std::string best_act;
      for (const auto& act : problem.acts[t]) {  // sorted: first max wins ties
        Rational q = expected_utility(problem, t, act);
        if (t + 1 < problem.horizon) {
          const auto& successor =
              problem.transition.at(std::make_tuple(t, act, state));
          q += value_next.at(successor);
        }
        if (!have_best || q > best_value) {
          have_best = true;
          best_value = q;
          best_act = act;
        }
      }
      value_here[state] = best_value;
      tick_act = best_act;  // identical across states; see note above
    }
    chosen[t] = tick_act;
    value_next = std::move(value_here);
  }
  total = value_next.begin()->second;
  return Plan{std::move(chosen), total};
}

Trajectory simulate(const DecisionProblem& problem, const Plan& plan,
                    const std::string& start, ChanceSelector chance) {
  if (static_cast<int>(plan.acts.size()) != problem.horizon) {
    throw DomainError("plan length " + std::to_string(plan.acts.size()) +
                      " does not match horizon " +
                      std::to_string(problem.horizon));
  }
  if (problem.horizon <= 0 || problem.outcomes.empty() ||
      !contains(problem.outcomes[0], start)) {
    throw DomainError("start outcome '" + start + "' is not in X(0)");
  }

  Trajectory trajectory;
  std::string current = start;
  for (int t = 0; t < problem.horizon; ++t) {
    const std::string& act = plan.acts[t];
    if (!contains(problem.acts[t], act)) {
      throw DomainError("plan act '" + act + "' not available at tick " +
                        std::to_string(t));
    }
    std::vector<std::string> candidates{current};
    std::string realized = chance ? chance(t, act, candidates) : candidates[0];
    if (!contains(candidates, realized)) {
      throw DomainError("chance selector chose '" + realized +
                        "', inconsistent with the transition mapping at tick " +
                        std::to_string(t));
    }
    trajectory.push_back(TrajectoryStep{t, act, realized});
    if (t + 1 < problem.horizon) {
      auto key = std::make_tuple(t, act, realized);
      auto it = problem.transition.find(key);
      if (it == problem.transition.end()) {
        throw DomainError("missing transition entry " +
                          key_string(t, act, realized));
      }
      current = it->second;
    }
  }
  return trajectory;
}

}  // namespace causatum
