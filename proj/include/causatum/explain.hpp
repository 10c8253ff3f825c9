#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "causatum/kb.hpp"
#include "causatum/worlds.hpp"

namespace causatum {

// ---- Abduction over decision worlds ----------------------------------------

struct WorldCandidate {
  PossibleWorld world;
  Rational prior;
  Rational likelihood;
};

struct DecisionWorldPosterior {
  std::vector<WorldCandidate> candidates;
  PossibleWorld winner;  // argmax prior*likelihood, ties to lower binary order
};

// Inference to the best explanation: picks the decision world at t-1 that
// best explains the evidence at t. Priors must sum to 1; throws
// NoExplanationError when every posterior is zero.
DecisionWorldPosterior abduce(const WorldMatrix& worlds,
                              const std::vector<Rational>& priors,
                              const std::vector<Rational>& likelihoods,
                              const Observation& evidence);

// ---- Explanation structures -------------------------------------------------

using Bindings = std::map<std::string, Rational>;
using Thresholds = std::map<std::string, Rational>;

// One ground proposition in a derivation. Before abstraction a node carries
// either a raw numeric value (bound leaves) or a boolean; afterwards every
// node is boolean. Internal nodes hold the conjunction of the body literals
// of the rule the derivation applied.
struct StructureNode {
  std::string event;
  std::vector<Literal> inputs;  // empty for leaves
  std::optional<Rational> numeric;
  std::optional<bool> qualitative;

  bool is_leaf() const { return inputs.empty(); }
  bool operator==(const StructureNode& other) const = default;
};

struct ExplanationStructure {
  std::string goal;
  std::map<std::string, StructureNode> nodes;

  const StructureNode& node(const std::string& event) const;
};

// Counts attempted rule-head matches. One run context per pipeline; never
// shared across concurrent runs.
struct OpCounter {
  std::uint64_t unifications = 0;
};

// How much causal knowledge the pipeline honors. Each step masks one more
// classification out of the search.
//   0: everything is treated as a candidate cause
//   1: irrelevant events drop out (rules touching them are never tried)
//   2: field members are assumed true, not regressed
//   3: standing conditions are read from bindings, not regressed
using AnnotationLevel = int;

// Backward chaining from the goal to its leaf preconditions; the returned
// leaves, asserted true, forward-chain to the goal. Throws CycleError naming
// the cycle on circular rules.
std::set<std::string> goal_regress(const std::string& goal,
                                   const std::vector<Rule>& rules,
                                   OpCounter* counter = nullptr);

// Builds the derivation DAG for the goal: leaves carry bindings, internal
// nodes the conjunction of their children under the applied rule. Throws
// DomainError naming any required leaf the bindings miss.
ExplanationStructure build_structure(const KnowledgeBase& kb,
                                     const std::string& goal,
                                     const Bindings& bindings,
                                     OpCounter* counter = nullptr);

// Thresholds numeric nodes (strictly-greater-than; default threshold 0) and
// recomputes internal values, leaving the topology unchanged.
ExplanationStructure abstract_qualitative(const ExplanationStructure& structure,
                                          const Thresholds& thresholds = {});

struct DiffReport {
  // Ground (leaf) propositions whose qualitative values differ, protected
  // events excluded; internal nodes only restate their leaves.
  std::set<std::string> differing;
  // Protected events that differ anyway; reported separately, never causes.
  std::set<std::string> protected_violations;
};

// Node-by-node comparison of two abstracted structures over the same
// topology. Throws StructureError listing missing/extra nodes otherwise.
DiffReport diff_structures(const ExplanationStructure& success,
                           const ExplanationStructure& failure,
                           const std::set<std::string>& protected_events);

struct ExplanationOutcome {
  std::set<std::string> cause;       // the differing ground propositions
  std::set<std::string> conditions;  // standing conditions in the structures
  std::set<std::string> field;       // field members in the structures
  std::uint64_t op_count = 0;
  DiffReport diff;
};

// The full postmortem pipeline: regress, build the success and failure
// structures, abstract both, and diff with standing conditions protected.
// The annotation level only prunes the search; it never changes the answer.
ExplanationOutcome explain_failure(const KnowledgeBase& kb,
                                   const std::string& goal,
                                   const Bindings& success_bindings,
                                   const Bindings& failure_bindings,
                                   AnnotationLevel level = 3);

}  // namespace causatum
