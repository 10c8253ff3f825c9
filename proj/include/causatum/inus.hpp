#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "causatum/kb.hpp"

namespace causatum {

// The triple that situates a causal question: the effect, the events eligible
// to appear in scenarios, and the field held true in the background.
struct Context {
  std::string effect;
  std::set<std::string> scenario_candidates;
  std::set<std::string> field;
};

// Derives the context from the KB's classifications: candidates are the
// events classified cause or condition (minus the effect), the field is the
// FieldMember set. Throws DomainError when the effect sits in the field.
Context make_context(const KnowledgeBase& kb, const std::string& effect);

// A minimally sufficient conjunction for the effect, given the field: the
// conjuncts entail the effect and dropping any single one breaks that.
struct Scenario {
  std::vector<std::string> conjuncts;  // sorted

  bool contains(const std::string& event) const;
  bool operator==(const Scenario& other) const = default;
};

enum class CauseClassification {
  Inus,
  SufficientOnly,
  NecessaryOnly,
  NecessaryAndSufficient,
  NonCause,
};
std::string cause_classification_name(CauseClassification c);

enum class Occurrence { Occurred, Absent, Unknown };
// Missing events read as Unknown.
using OccurrenceRecord = std::map<std::string, Occurrence>;

enum class Verdict { Caused, NotCaused, Overdetermined, ProbableCause };
std::string verdict_name(Verdict v);

struct CausalJudgment {
  Verdict verdict = Verdict::NotCaused;
  // Scenarios without the factor that are not ruled out on the occasion;
  // empty unless the verdict is Overdetermined or ProbableCause.
  std::vector<Scenario> live_alternatives;
};

inline constexpr unsigned kDefaultScenarioLimit = 16;

// All minimally sufficient scenarios over the candidates: the prime
// implicants (positive literals only) of the effect's boolean function with
// field events fixed true. Canonical order: size, then lexicographic.
// Throws CapacityError past the candidate limit, DegenerateEffectError when
// the field alone entails the effect, CycleError on circular rules.
std::vector<Scenario> minimally_sufficient_scenarios(
    const Context& ctx, const std::vector<Rule>& rules,
    unsigned limit = kDefaultScenarioLimit);

// Exactly one label per factor given a nonempty scenario set.
CauseClassification classify_factor(const std::string& factor,
                                    const Context& ctx,
                                    const std::vector<Scenario>& scenarios);

// The four-condition attribution test: the factor must be at least inus,
// have occurred, sit in a fully occurred scenario, and every rival scenario
// must be ruled out by an absent conjunct. Rivals with unknown conjuncts
// downgrade the verdict to ProbableCause; fully occurred rivals make the
// effect Overdetermined.
CausalJudgment attribute_cause(const std::string& factor, const Context& ctx,
                               const OccurrenceRecord& occ,
                               const std::vector<Scenario>& scenarios);

}  // namespace causatum
