// Shared fixtures, random generators, and independent oracles for the unit
// and acceptance suites. Oracles here deliberately avoid the library's
// computation paths: scenario search is re-derived by naive subset scans,
// plans by exhaustive enumeration, the deck by enumerating 52 cards.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "causatum/decide.hpp"
#include "causatum/distribution.hpp"
#include "causatum/inus.hpp"
#include "causatum/kb.hpp"
#include "causatum/rational.hpp"

namespace causatum::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(CAUSATUM_FIXTURE_DIR) + "/" + name;
}

// ---- randomness -------------------------------------------------------------

using Rng = std::mt19937;

inline int pick_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Uniform-ish positive rational with bounded numerator/denominator.
inline Rational pick_rational01(Rng& rng, int max_den = 20) {
  int den = pick_int(rng, 1, max_den);
  int num = pick_int(rng, 0, den);
  return Rational(num, den);
}

// ---- deck oracle ------------------------------------------------------------

// Enumerates the 52 (suit, rank) cards and accumulates the joint table over
// (black, spade, heart, ace_spades) from scratch.
inline JointDistribution deck_oracle() {
  const std::vector<std::string> vars{"black", "spade", "heart", "ace_spades"};
  std::vector<Rational> table(16, Rational(0));
  const std::vector<std::string> suits{"spade", "club", "heart", "diamond"};
  for (const auto& suit : suits) {
    for (int rank = 1; rank <= 13; ++rank) {
      bool black = suit == "spade" || suit == "club";
      bool spade = suit == "spade";
      bool heart = suit == "heart";
      bool ace_spades = spade && rank == 1;
      std::size_t cell = (std::size_t(black) << 3) | (std::size_t(spade) << 2) |
                         (std::size_t(heart) << 1) | std::size_t(ace_spades);
      table[cell] += Rational(1, 52);
    }
  }
  return JointDistribution("deck", vars, table);
}

// ---- fork tables ------------------------------------------------------------

struct ForkParams {
  Rational p_c;         // in (0,1)
  Rational x_c, x_nc;   // P(X|C) > P(X|~C)
  Rational y_c, y_nc;   // P(Y|C) > P(Y|~C)
};

// Joint over vars (x, y, c) with X and Y independent given C and given ~C.
// Conditions (1)-(4) hold exactly by construction.
inline JointDistribution fork_table(const ForkParams& p,
                                    const std::string& x = "X",
                                    const std::string& y = "Y",
                                    const std::string& c = "C") {
  std::vector<Rational> table(8);
  for (int cell = 0; cell < 8; ++cell) {
    bool xv = cell & 4, yv = cell & 2, cv = cell & 1;
    Rational px = cv ? p.x_c : p.x_nc;
    Rational py = cv ? p.y_c : p.y_nc;
    table[cell] = (cv ? p.p_c : 1 - p.p_c) * (xv ? px : 1 - px) *
                  (yv ? py : 1 - py);
  }
  return JointDistribution("fork", {x, y, c}, table);
}

inline ForkParams random_fork_params(Rng& rng, bool adversarial) {
  ForkParams p;
  do {
    p.p_c = pick_rational01(rng);
  } while (p.p_c == 0 || p.p_c == 1);
  auto ordered_pair = [&rng, adversarial](Rational& hi, Rational& lo) {
    if (adversarial) {
      // Barely-positive relevance: the strict inequalities survive by 1/big.
      lo = pick_rational01(rng, 10);
      Rational gap(1, 1000000 + pick_int(rng, 0, 1000));
      if (lo + gap > 1) lo = 1 - gap;
      hi = lo + gap;
    } else {
      do {
        hi = pick_rational01(rng);
        lo = pick_rational01(rng);
      } while (hi == lo);
      if (hi < lo) std::swap(hi, lo);
    }
  };
  ordered_pair(p.x_c, p.x_nc);
  ordered_pair(p.y_c, p.y_nc);
  return p;
}

// Fully random positive joint over the given variables (no independence
// structure; masses are never zero so conditioning is safe).
inline JointDistribution random_positive_joint(Rng& rng,
                                               std::vector<std::string> vars) {
  std::size_t cells = std::size_t{1} << vars.size();
  std::vector<Rational> table(cells);
  Integer total = 0;
  std::vector<int> weights(cells);
  for (auto& w : weights) {
    w = pick_int(rng, 1, 50);
    total += w;
  }
  for (std::size_t i = 0; i < cells; ++i) {
    table[i] = Rational(weights[i], 1) / Rational(total, 1);
  }
  std::string name = "random";
  return JointDistribution(name, std::move(vars), std::move(table));
}

// ---- INUS oracle ------------------------------------------------------------

// Straight recursive evaluation of one candidate assignment, independent of
// the library's table-and-transform path.
inline bool oracle_eval(const std::string& event, const Context& ctx,
                        const std::vector<Rule>& rules,
                        const std::map<std::string, bool>& assignment) {
  auto it = assignment.find(event);
  if (it != assignment.end()) return it->second;
  if (ctx.field.count(event)) return true;
  for (const auto& rule : rules) {
    if (rule.head != event) continue;
    bool body = true;
    for (const auto& lit : rule.body) {
      if (oracle_eval(lit.event, ctx, rules, assignment) != lit.positive) {
        body = false;
        break;
      }
    }
    if (body) return true;
  }
  return false;
}

// Prime implicants by brute force: a subset is sufficient when every full
// assignment extending it satisfies the effect; minimality checks every
// single-conjunct removal by the same scan.
inline std::vector<Scenario> oracle_scenarios(const Context& ctx,
                                              const std::vector<Rule>& rules,
                                              bool* degenerate = nullptr) {
  std::vector<std::string> candidates(ctx.scenario_candidates.begin(),
                                      ctx.scenario_candidates.end());
  unsigned k = static_cast<unsigned>(candidates.size());
  auto sufficient = [&](unsigned subset) {
    for (unsigned full = 0; full < (1u << k); ++full) {
      if ((full & subset) != subset) continue;
      std::map<std::string, bool> assignment;
      for (unsigned j = 0; j < k; ++j) {
        assignment[candidates[j]] = (full >> j) & 1;
      }
      if (!oracle_eval(ctx.effect, ctx, rules, assignment)) return false;
    }
    return true;
  };
  if (degenerate) *degenerate = sufficient(0);
  std::vector<Scenario> scenarios;
  for (unsigned subset = 1; subset < (1u << k); ++subset) {
    if (!sufficient(subset)) continue;
    bool minimal = true;
    for (unsigned j = 0; j < k && minimal; ++j) {
      if ((subset >> j) & 1) minimal = sufficient(subset & ~(1u << j)) == false;
    }
    if (!minimal) continue;
    Scenario s;
    for (unsigned j = 0; j < k; ++j) {
      if ((subset >> j) & 1) s.conjuncts.push_back(candidates[j]);
    }
    scenarios.push_back(std::move(s));
  }
  std::sort(scenarios.begin(), scenarios.end(),
            [](const Scenario& a, const Scenario& b) {
              if (a.conjuncts.size() != b.conjuncts.size()) {
                return a.conjuncts.size() < b.conjuncts.size();
              }
              return a.conjuncts < b.conjuncts;
            });
  return scenarios;
}

// The classification ladder evaluated directly on a scenario set.
inline CauseClassification oracle_classify(const std::string& factor,
                                           const std::vector<Scenario>& ss) {
  bool in_some = false, in_all = true, singleton = false;
  for (const auto& s : ss) {
    bool member =
        std::find(s.conjuncts.begin(), s.conjuncts.end(), factor) != s.conjuncts.end();
    in_some |= member;
    in_all &= member;
    singleton |= member && s.conjuncts.size() == 1;
  }
  if (!in_some) return CauseClassification::NonCause;
  if (singleton && ss.size() == 1) return CauseClassification::NecessaryAndSufficient;
  if (singleton) return CauseClassification::SufficientOnly;
  if (in_all) return CauseClassification::NecessaryOnly;
  return CauseClassification::Inus;
}

struct InusCase {
  Context ctx;
  std::vector<Rule> rules;
};

// Random layered (hence acyclic) rule base over <= max_candidates candidate
// events, an optional intermediate layer, one field event, effect "z".
inline InusCase random_inus_case(Rng& rng, int max_candidates = 8) {
  InusCase c;
  c.ctx.effect = "z";
  int k = pick_int(rng, 2, max_candidates);
  std::vector<std::string> candidates;
  for (int i = 0; i < k; ++i) {
    candidates.push_back("c" + std::to_string(i));
    c.ctx.scenario_candidates.insert(candidates.back());
  }
  c.ctx.field.insert("f0");

  std::vector<std::string> pool = candidates;
  if (pick_int(rng, 0, 1)) pool.push_back("f0");

  int intermediates = pick_int(rng, 0, 2);
  for (int i = 0; i < intermediates; ++i) {
    std::string name = "m" + std::to_string(i);
    int rules_for_head = pick_int(rng, 1, 2);
    for (int r = 0; r < rules_for_head; ++r) {
      Rule rule;
      rule.head = name;
      std::set<std::string> used;
      int body = pick_int(rng, 1, 3);
      for (int b = 0; b < body; ++b) {
        const std::string& event = pool[pick_int(rng, 0, int(pool.size()) - 1)];
        if (!used.insert(event).second) continue;
        rule.body.push_back({event, pick_int(rng, 0, 9) > 1});
      }
      if (!rule.body.empty()) c.rules.push_back(rule);
    }
    pool.push_back(name);
  }

  int effect_rules = pick_int(rng, 1, 3);
  for (int r = 0; r < effect_rules; ++r) {
    Rule rule;
    rule.head = "z";
    std::set<std::string> used;
    int body = pick_int(rng, 1, 3);
    for (int b = 0; b < body; ++b) {
      const std::string& event = pool[pick_int(rng, 0, int(pool.size()) - 1)];
      if (!used.insert(event).second) continue;
      rule.body.push_back({event, pick_int(rng, 0, 9) > 1});
    }
    if (!rule.body.empty()) c.rules.push_back(rule);
  }
  return c;
}

// ---- decision problems ------------------------------------------------------

inline DecisionProblem random_problem(Rng& rng, int max_horizon = 3,
                                      int max_acts = 3, int max_outcomes = 4) {
  static const std::vector<std::string> kActs{"a", "b", "c"};
  static const std::vector<std::string> kOutcomes{"w", "x", "y", "z"};
  DecisionProblem p;
  p.horizon = pick_int(rng, 1, max_horizon);
  for (int t = 0; t < p.horizon; ++t) {
    int acts = pick_int(rng, 1, max_acts);
    int outcomes = pick_int(rng, 1, max_outcomes);
    p.acts.emplace_back(kActs.begin(), kActs.begin() + acts);
    p.outcomes.emplace_back(kOutcomes.begin(), kOutcomes.begin() + outcomes);
  }
  for (int t = 0; t < p.horizon; ++t) {
    for (const auto& act : p.acts[t]) {
      std::vector<int> weights;
      int total = 0;
      for (std::size_t i = 0; i < p.outcomes[t].size(); ++i) {
        weights.push_back(pick_int(rng, 1, 9));
        total += weights.back();
      }
      for (std::size_t i = 0; i < p.outcomes[t].size(); ++i) {
        const auto& outcome = p.outcomes[t][i];
        auto key = std::make_tuple(t, act, outcome);
        p.utility[key] =
            Rational(pick_int(rng, -100, 100), pick_int(rng, 1, 10));
        p.prob[key] = Rational(weights[i], total);
        if (t + 1 < p.horizon) {
          p.transition[key] =
              p.outcomes[t + 1][pick_int(rng, 0, int(p.outcomes[t + 1].size()) - 1)];
        }
      }
    }
  }
  return p;
}

// Exhaustive enumeration of act sequences with its own EU summation; returns
// the lexicographically first maximizer.
inline Plan brute_force_plan(const DecisionProblem& p) {
  std::vector<std::size_t> index(p.horizon, 0);
  Plan best;
  bool have_best = false;
  while (true) {
    Rational total = 0;
    std::vector<std::string> acts;
    for (int t = 0; t < p.horizon; ++t) {
      const auto& act = p.acts[t][index[t]];
      acts.push_back(act);
      for (const auto& outcome : p.outcomes[t]) {
        auto key = std::make_tuple(t, act, outcome);
        total += p.utility.at(key) * p.prob.at(key);
      }
    }
    if (!have_best || total > best.total_eu) {
      best = Plan{acts, total};
      have_best = true;
    }
    int t = p.horizon - 1;
    while (t >= 0 && ++index[t] == p.acts[t].size()) index[t--] = 0;
    if (t < 0) break;
  }
  return best;
}

// ---- rule bases for regression ---------------------------------------------

struct RegressionCase {
  std::vector<Rule> rules;
  std::string goal;
};

// Layered positive rule base; the goal sits in the top layer.
inline RegressionCase random_regression_case(Rng& rng, int max_rules = 12) {
  RegressionCase c;
  std::vector<std::vector<std::string>> layers(3);
  int name = 0;
  for (int layer = 0; layer < 3; ++layer) {
    int width = pick_int(rng, 1, 3);
    for (int i = 0; i < width; ++i) {
      layers[layer].push_back("e" + std::to_string(name++));
    }
  }
  int rule_count = pick_int(rng, 1, max_rules);
  for (int r = 0; r < rule_count; ++r) {
    int head_layer = pick_int(rng, 1, 2);
    Rule rule;
    rule.head =
        layers[head_layer][pick_int(rng, 0, int(layers[head_layer].size()) - 1)];
    std::vector<std::string> pool;
    for (int l = 0; l < head_layer; ++l) {
      pool.insert(pool.end(), layers[l].begin(), layers[l].end());
    }
    std::set<std::string> used;
    int body = pick_int(rng, 1, 3);
    for (int b = 0; b < body; ++b) {
      const std::string& event = pool[pick_int(rng, 0, int(pool.size()) - 1)];
      if (used.insert(event).second) rule.body.push_back({event, true});
    }
    c.rules.push_back(rule);
  }
  c.goal = layers[2][pick_int(rng, 0, int(layers[2].size()) - 1)];
  return c;
}

// Naive forward chaining from asserted facts (positive bodies only fire when
// satisfied; negative literals hold when the event was never derived).
inline bool forward_chains(const std::string& goal,
                           const std::vector<Rule>& rules,
                           const std::set<std::string>& facts) {
  std::set<std::string> derived = facts;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : rules) {
      if (derived.count(rule.head)) continue;
      bool fires = true;
      for (const auto& lit : rule.body) {
        if (derived.count(lit.event) != lit.positive) {
          fires = false;
          break;
        }
      }
      if (fires) {
        derived.insert(rule.head);
        changed = true;
      }
    }
  }
  return derived.count(goal) != 0;
}

// ---- random knowledge bases (round-trip property) ---------------------------

inline KnowledgeBase random_kb(Rng& rng) {
  KnowledgeBase kb;
  int events = pick_int(rng, 1, 10);
  for (int i = 0; i < events; ++i) {
    EventSymbol e;
    e.name = "ev" + std::to_string(i);
    if (pick_int(rng, 0, 1)) e.time_index = pick_int(rng, 0, 9);
    if (pick_int(rng, 0, 3) == 0) e.place = "loc" + std::to_string(pick_int(rng, 0, 2));
    kb.events.push_back(e);
  }
  auto event_name = [&](int i) { return kb.events[i].name; };

  for (int i = 0; i < events; ++i) {
    if (pick_int(rng, 0, 1)) {
      auto cls = static_cast<Classification>(pick_int(rng, 0, 3));
      kb.classifications.emplace_back(event_name(i), cls);
    }
  }

  int rules = pick_int(rng, 0, 4);
  for (int r = 0; r < rules; ++r) {
    Rule rule;
    int head = pick_int(rng, 0, events - 1);
    rule.head = event_name(head);
    std::set<std::string> used{rule.head};
    int body = pick_int(rng, 1, 3);
    for (int b = 0; b < body; ++b) {
      int pick = pick_int(rng, 0, events - 1);
      if (used.insert(event_name(pick)).second) {
        rule.body.push_back({event_name(pick), pick_int(rng, 0, 3) > 0});
      }
    }
    if (!rule.body.empty()) kb.rules.push_back(rule);
  }

  for (int i = 0; i < events; ++i) {
    if (pick_int(rng, 0, 2) == 0) {
      kb.bindings.emplace_back(
          event_name(i), Rational(pick_int(rng, -50, 50), pick_int(rng, 1, 20)));
    }
  }

  int dists = pick_int(rng, 0, 2);
  for (int d = 0; d < dists; ++d) {
    int k = pick_int(rng, 1, std::min(3, events));
    std::vector<std::string> vars;
    std::set<int> picked;
    while (static_cast<int>(vars.size()) < k) {
      int pick = pick_int(rng, 0, events - 1);
      if (picked.insert(pick).second) vars.push_back(event_name(pick));
    }
    std::size_t cells = std::size_t{1} << k;
    std::vector<int> weights(cells);
    Integer total = 0;
    for (auto& w : weights) {
      w = pick_int(rng, 0, 9);
      total += w;
    }
    if (total == 0) {
      weights[0] = 1;
      total = 1;
    }
    std::vector<Rational> table(cells);
    for (std::size_t i = 0; i < cells; ++i) {
      table[i] = Rational(weights[i], 1) / Rational(total, 1);
    }
    kb.distributions.emplace_back("dist" + std::to_string(d), vars, table);
  }

  if (pick_int(rng, 0, 2) == 0) kb.decision = random_problem(rng, 2, 2, 2);

  // Edges only between events with strictly increasing time indices.
  for (int a = 0; a < events; ++a) {
    for (int b = 0; b < events; ++b) {
      if (a == b || pick_int(rng, 0, 9) > 0) continue;
      const auto& ea = kb.events[a];
      const auto& eb = kb.events[b];
      if (ea.time_index && eb.time_index && *ea.time_index < *eb.time_index) {
        kb.process_edges.emplace_back(ea.name, eb.name);
      }
    }
  }
  return kb;
}

}  // namespace causatum::testing
