#include "causatum/inus.hpp"

#include <algorithm>

#include "causatum/errors.hpp"

namespace causatum {

Context make_context(const KnowledgeBase& kb, const std::string& effect) {
  if (!kb.has_event(effect)) {
    throw DomainError("effect '" + effect + "' is not a declared event");
  }
  Context ctx;
  ctx.effect = effect;
  for (const auto& e : kb.events) {
    auto cls = kb.classification_of(e.name);
    if (cls == Classification::FieldMember) {
      ctx.field.insert(e.name);
    } else if (e.name != effect && (cls == Classification::CandidateCause ||
                                    cls == Classification::StandingCondition)) {
      ctx.scenario_candidates.insert(e.name);
    }
  }
  if (ctx.field.count(effect)) {
    throw DomainError("effect '" + effect + "' cannot sit in the field");
  }
  return ctx;
}

bool Scenario::contains(const std::string& event) const {
  return std::binary_search(conjuncts.begin(), conjuncts.end(), event);
}

std::string cause_classification_name(CauseClassification c) {
  switch (c) {
    case CauseClassification::Inus: return "inus";
    case CauseClassification::SufficientOnly: return "sufficient_only";
    case CauseClassification::NecessaryOnly: return "necessary_only";
    case CauseClassification::NecessaryAndSufficient:
      return "necessary_and_sufficient";
    case CauseClassification::NonCause: return "non_cause";
  }
  return "non_cause";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Caused: return "caused";
    case Verdict::NotCaused: return "not_caused";
    case Verdict::Overdetermined: return "overdetermined";
    case Verdict::ProbableCause: return "probable_cause";
  }
  return "not_caused";
}

namespace {

// Evaluates the effect for one assignment of the candidates. Candidates are
// inputs (their rules, if any, are cut), field events are true, rule heads
// are an OR over their rules, and anything else is absent.
class Evaluator {
 public:
  Evaluator(const Context& ctx, const std::vector<Rule>& rules,
            const std::vector<std::string>& candidate_order)
      : ctx_(ctx) {
    for (std::size_t i = 0; i < candidate_order.size(); ++i) {
      candidate_index_[candidate_order[i]] = i;
    }
    for (const auto& rule : rules) rules_by_head_[rule.head].push_back(&rule);
  }

  bool effect_value(std::uint32_t assignment) {
    assignment_ = assignment;
    cache_.clear();
    on_stack_.clear();
    return value(ctx_.effect);
  }

 private:
  bool value(const std::string& event) {
    auto candidate = candidate_index_.find(event);
    if (candidate != candidate_index_.end()) {
      return (assignment_ >> candidate->second) & 1;
    }
    if (ctx_.field.count(event)) return true;
    auto cached = cache_.find(event);
    if (cached != cache_.end()) return cached->second;
    auto rules = rules_by_head_.find(event);
    if (rules == rules_by_head_.end()) return false;
    if (!on_stack_.insert(event).second) {
      throw CycleError("rules for '" + event + "' are circular");
    }
    bool result = false;
    for (const auto* rule : rules->second) {
      bool body = true;
      for (const auto& lit : rule->body) {
        if (value(lit.event) != lit.positive) {
          body = false;
          break;
        }
      }
      if (body) {
        result = true;
        break;
      }
    }
    on_stack_.erase(event);
    cache_[event] = result;
    return result;
  }

  const Context& ctx_;
  std::map<std::string, std::size_t> candidate_index_;
  std::map<std::string, std::vector<const Rule*>> rules_by_head_;
  std::uint32_t assignment_ = 0;
  std::map<std::string, bool> cache_;
  std::set<std::string> on_stack_;
};

}  // namespace

std::vector<Scenario> minimally_sufficient_scenarios(
    const Context& ctx, const std::vector<Rule>& rules, unsigned limit) {
  std::vector<std::string> candidates(ctx.scenario_candidates.begin(),
                                      ctx.scenario_candidates.end());
  auto k = static_cast<unsigned>(candidates.size());
  if (k > limit) {
    throw CapacityError("scenario search over " + std::to_string(k) +
                        " candidates exceeds the limit of " +
                        std::to_string(limit));
  }

  const std::size_t table_size = std::size_t{1} << k;
  std::vector<char> sufficient(table_size);
  Evaluator eval(ctx, rules, candidates);
  for (std::size_t mask = 0; mask < table_size; ++mask) {
    sufficient[mask] = eval.effect_value(static_cast<std::uint32_t>(mask));
  }

  // sufficient[S] becomes "the conjunction of S entails the effect":
  // AND of the truth table over every assignment extending S.
  for (unsigned j = 0; j < k; ++j) {
    for (std::size_t mask = 0; mask < table_size; ++mask) {
      if (!(mask & (std::size_t{1} << j))) {
        sufficient[mask] =
            sufficient[mask] && sufficient[mask | (std::size_t{1} << j)];
      }
    }
  }

  if (sufficient[0]) {
    throw DegenerateEffectError("the field alone entails '" + ctx.effect +
                                "'; no scenario is needed");
  }

  std::vector<Scenario> scenarios;
  for (std::size_t mask = 1; mask < table_size; ++mask) {
    if (!sufficient[mask]) continue;
    bool minimal = true;
    for (unsigned j = 0; j < k && minimal; ++j) {
      if ((mask & (std::size_t{1} << j)) &&
          sufficient[mask & ~(std::size_t{1} << j)]) {
        minimal = false;
      }
    }
    if (!minimal) continue;
    Scenario scenario;
    for (unsigned j = 0; j < k; ++j) {
      if (mask & (std::size_t{1} << j)) scenario.conjuncts.push_back(candidates[j]);
    }
    scenarios.push_back(std::move(scenario));
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

CauseClassification classify_factor(const std::string& factor,
                                    const Context& ctx,
                                    const std::vector<Scenario>& scenarios) {
  (void)ctx;
  if (scenarios.empty()) {
    throw DomainError("classification requires a nonempty scenario set");
  }
  bool in_some = false;
  bool in_all = true;
  bool singleton = false;  // {factor} is itself a scenario
  for (const auto& s : scenarios) {
    bool member = s.contains(factor);
    in_some = in_some || member;
    in_all = in_all && member;
    if (member && s.conjuncts.size() == 1) singleton = true;
  }
  if (!in_some) return CauseClassification::NonCause;
  if (singleton) {
    return scenarios.size() == 1 ? CauseClassification::NecessaryAndSufficient
                                 : CauseClassification::SufficientOnly;
  }
  if (in_all) return CauseClassification::NecessaryOnly;
  return CauseClassification::Inus;
}

CausalJudgment attribute_cause(const std::string& factor, const Context& ctx,
                               const OccurrenceRecord& occ,
                               const std::vector<Scenario>& scenarios) {
  if (scenarios.empty()) {
    throw DomainError("attribution requires a nonempty scenario set");
  }
  auto occurrence = [&occ](const std::string& event) {
    auto it = occ.find(event);
    return it == occ.end() ? Occurrence::Unknown : it->second;
  };

  bool at_least_inus =
      classify_factor(factor, ctx, scenarios) != CauseClassification::NonCause;
  bool factor_occurred = occurrence(factor) == Occurrence::Occurred;
  bool some_scenario_realized = false;  // all co-conjuncts of the factor occurred
  for (const auto& s : scenarios) {
    if (!s.contains(factor)) continue;
    bool others_occurred = true;
    for (const auto& c : s.conjuncts) {
      if (c != factor && occurrence(c) != Occurrence::Occurred) {
        others_occurred = false;
        break;
      }
    }
    if (others_occurred) {
      some_scenario_realized = true;
      break;
    }
  }

  if (!at_least_inus || !factor_occurred || !some_scenario_realized) {
    return CausalJudgment{Verdict::NotCaused, {}};
  }

  // A rival scenario is ruled out only by an absent conjunct.
  std::vector<Scenario> live;
  bool any_fully_occurred = false;
  for (const auto& s : scenarios) {
    if (s.contains(factor)) continue;
    bool any_absent = false;
    bool all_occurred = true;
    for (const auto& c : s.conjuncts) {
      auto o = occurrence(c);
      if (o == Occurrence::Absent) any_absent = true;
      if (o != Occurrence::Occurred) all_occurred = false;
    }
    if (any_absent) continue;
    live.push_back(s);
    if (all_occurred) any_fully_occurred = true;
  }

  if (live.empty()) return CausalJudgment{Verdict::Caused, {}};
  return CausalJudgment{
      any_fully_occurred ? Verdict::Overdetermined : Verdict::ProbableCause,
      std::move(live)};
}

}  // namespace causatum
