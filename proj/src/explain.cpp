#include "causatum/explain.hpp"

#include <algorithm>
#include <sstream>

#include "causatum/errors.hpp"

namespace causatum {

DecisionWorldPosterior abduce(const WorldMatrix& worlds,
                              const std::vector<Rational>& priors,
                              const std::vector<Rational>& likelihoods,
                              const Observation& evidence) {
  const auto& rows = worlds.rows();
  if (priors.size() != rows.size() || likelihoods.size() != rows.size()) {
    throw DomainError("abduce needs one prior and one likelihood per world");
  }
  Rational prior_sum = 0;
  for (const auto& p : priors) prior_sum += p;
  if (prior_sum != 1) {
    throw DomainError("priors sum to " + format_rational(prior_sum) +
                      ", expected 1");
  }
  for (const auto& [event, value] : evidence) {
    (void)value;
    worlds.column(event);  // throws on undeclared evidence keys
  }

  DecisionWorldPosterior posterior;
  posterior.candidates.reserve(rows.size());
  bool any_positive = false;
  std::size_t best = 0;
  Rational best_score = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    posterior.candidates.push_back({rows[i], priors[i], likelihoods[i]});
    Rational score = priors[i] * likelihoods[i];
    if (score > best_score) {  // strict: ties keep the lower binary order
      best_score = score;
      best = i;
      any_positive = true;
    }
  }
  if (!any_positive) {
    throw NoExplanationError("every decision world has posterior zero");
  }
  posterior.winner = rows[best];
  return posterior;
}

const StructureNode& ExplanationStructure::node(const std::string& event) const {
  auto it = nodes.find(event);
  if (it == nodes.end()) {
    throw DomainError("structure has no node '" + event + "'");
  }
  return it->second;
}

namespace {

enum class Treatment { Open, AssumeTrue, ProtectedLeaf, Excluded };

// Classification-driven search pruning for one annotation level.
class Mask {
 public:
  Mask() = default;  // everything open
  Mask(const KnowledgeBase& kb, AnnotationLevel level) {
    for (const auto& e : kb.events) {
      auto cls = kb.classification_of(e.name);
      if (level >= 1 && cls == Classification::Irrelevant) {
        treatment_[e.name] = Treatment::Excluded;
      } else if (level >= 2 && cls == Classification::FieldMember) {
        treatment_[e.name] = Treatment::AssumeTrue;
      } else if (level >= 3 && cls == Classification::StandingCondition) {
        treatment_[e.name] = Treatment::ProtectedLeaf;
      }
    }
  }

  Treatment of(const std::string& event) const {
    auto it = treatment_.find(event);
    return it == treatment_.end() ? Treatment::Open : it->second;
  }

 private:
  std::map<std::string, Treatment> treatment_;
};

// Shared backward-chaining core for regression and structure building. The
// rule choice is purely syntactic (first declared rule not touching an
// excluded event), so the derivation topology is identical for any two
// binding sets.
class Deriver {
 public:
  Deriver(const std::vector<Rule>& rules, const Mask& mask, OpCounter* counter)
      : rules_(rules), mask_(mask), counter_(counter) {}

  // event -> body literals of the chosen rule; empty vector for leaves.
  const std::map<std::string, std::vector<Literal>>& derivation() const {
    return derivation_;
  }
  // Leaves that must be covered by bindings: open leaves required positively,
  // plus protected (standing-condition) leaves.
  const std::set<std::string>& required_leaves() const { return required_; }
  // Open leaves with a positive occurrence; the goal-regression answer.
  const std::set<std::string>& positive_open_leaves() const {
    return positive_open_leaves_;
  }
  const std::set<std::string>& assumed_true() const { return assumed_; }

  void expand(const std::string& event, bool positive_occurrence) {
    auto treatment = mask_.of(event);
    if (treatment == Treatment::Excluded) {
      throw DomainError("event '" + event +
                        "' is annotated irrelevant and cannot be derived");
    }
    if (treatment == Treatment::AssumeTrue) {
      derivation_.emplace(event, std::vector<Literal>{});
      assumed_.insert(event);
      return;
    }
    if (treatment == Treatment::ProtectedLeaf) {
      derivation_.emplace(event, std::vector<Literal>{});
      required_.insert(event);
      return;
    }
    if (derivation_.count(event)) {
      // Re-encountered through another rule body; a leaf first reached
      // negatively may now be required positively.
      if (positive_occurrence && derivation_.at(event).empty() &&
          !assumed_.count(event)) {
        positive_open_leaves_.insert(event);
        required_.insert(event);
      }
      return;
    }
    if (!stack_.insert(event).second) {
      throw CycleError("rules form a cycle through '" + event + "': " +
                       stack_trace(event));
    }
    stack_order_.push_back(event);

    // Every rule head is tried against the subgoal; that scan is the unit of
    // work the benchmark counts.
    if (counter_) counter_->unifications += rules_.size();
    const Rule* chosen = nullptr;
    for (const auto& rule : rules_) {
      if (rule.head != event) continue;
      bool applicable = true;
      for (const auto& lit : rule.body) {
        if (mask_.of(lit.event) == Treatment::Excluded) {
          applicable = false;
          break;
        }
      }
      if (applicable) {
        chosen = &rule;
        break;
      }
    }

    if (!chosen) {
      derivation_.emplace(event, std::vector<Literal>{});
      if (positive_occurrence) {
        positive_open_leaves_.insert(event);
        required_.insert(event);
      }
    } else {
      derivation_.emplace(event, chosen->body);
      for (const auto& lit : chosen->body) expand(lit.event, lit.positive);
    }
    stack_.erase(event);
    stack_order_.pop_back();
  }

 private:
  std::string stack_trace(const std::string& event) const {
    std::ostringstream os;
    auto it = std::find(stack_order_.begin(), stack_order_.end(), event);
    for (; it != stack_order_.end(); ++it) os << *it << " -> ";
    os << event;
    return os.str();
  }

  const std::vector<Rule>& rules_;
  const Mask& mask_;
  OpCounter* counter_;
  std::map<std::string, std::vector<Literal>> derivation_;
  std::set<std::string> required_;
  std::set<std::string> positive_open_leaves_;
  std::set<std::string> assumed_;
  std::set<std::string> stack_;
  std::vector<std::string> stack_order_;
};

bool truth_of(const StructureNode& node, const Thresholds& thresholds) {
  if (node.qualitative) return *node.qualitative;
  auto it = thresholds.find(node.event);
  Rational threshold = it == thresholds.end() ? Rational(0) : it->second;
  return *node.numeric > threshold;
}

// Internal values are the conjunction of the applied rule's literals,
// computed leaves-up.
void compute_internal_values(ExplanationStructure& structure,
                             const Thresholds& thresholds) {
  // Nodes form a DAG; iterate until settled (small structures, no need for a
  // topological sort).
  bool changed = true;
  std::set<std::string> done;
  while (changed) {
    changed = false;
    for (auto& [name, node] : structure.nodes) {
      if (node.is_leaf() || done.count(name)) continue;
      bool ready = true;
      bool value = true;
      for (const auto& lit : node.inputs) {
        const auto& child = structure.nodes.at(lit.event);
        if (!child.is_leaf() && !done.count(lit.event)) {
          ready = false;
          break;
        }
        if (truth_of(child, thresholds) != lit.positive) value = false;
      }
      if (!ready) continue;
      node.qualitative = value;
      node.numeric.reset();
      done.insert(name);
      changed = true;
    }
  }
}

ExplanationStructure build_with_mask(const KnowledgeBase& kb,
                                     const std::string& goal,
                                     const Bindings& bindings, const Mask& mask,
                                     OpCounter* counter) {
  if (!kb.has_event(goal)) {
    throw DomainError("goal '" + goal + "' is not a declared event");
  }
  Deriver deriver(kb.rules, mask, counter);
  deriver.expand(goal, true);

  ExplanationStructure structure;
  structure.goal = goal;
  for (const auto& [event, inputs] : deriver.derivation()) {
    StructureNode node;
    node.event = event;
    node.inputs = inputs;
    if (node.is_leaf()) {
      auto bound = bindings.find(event);
      if (deriver.assumed_true().count(event)) {
        node.qualitative = true;
      } else if (bound != bindings.end()) {
        node.numeric = bound->second;
      } else if (deriver.required_leaves().count(event)) {
        throw DomainError("bindings do not cover leaf '" + event + "'");
      } else {
        node.qualitative = false;  // absent by closed-world reading
      }
    }
    structure.nodes.emplace(event, std::move(node));
  }
  compute_internal_values(structure, {});
  return structure;
}

}  // namespace

std::set<std::string> goal_regress(const std::string& goal,
                                   const std::vector<Rule>& rules,
                                   OpCounter* counter) {
  Mask open;
  Deriver deriver(rules, open, counter);
  deriver.expand(goal, true);
  return deriver.positive_open_leaves();
}

ExplanationStructure build_structure(const KnowledgeBase& kb,
                                     const std::string& goal,
                                     const Bindings& bindings,
                                     OpCounter* counter) {
  return build_with_mask(kb, goal, bindings, Mask{}, counter);
}

ExplanationStructure abstract_qualitative(const ExplanationStructure& structure,
                                          const Thresholds& thresholds) {
  ExplanationStructure abstracted;
  abstracted.goal = structure.goal;
  for (const auto& [name, node] : structure.nodes) {
    StructureNode out = node;
    if (node.is_leaf()) {
      out.qualitative = truth_of(node, thresholds);
      out.numeric.reset();
    }
    abstracted.nodes.emplace(name, std::move(out));
  }
  compute_internal_values(abstracted, thresholds);
  return abstracted;
}

DiffReport diff_structures(const ExplanationStructure& success,
                           const ExplanationStructure& failure,
                           const std::set<std::string>& protected_events) {
  std::vector<std::string> missing;
  std::vector<std::string> extra;
  for (const auto& [name, node] : success.nodes) {
    auto it = failure.nodes.find(name);
    if (it == failure.nodes.end()) {
      missing.push_back(name);
    } else if (it->second.inputs != node.inputs) {
      missing.push_back(name + " (links differ)");
    }
  }
  for (const auto& [name, node] : failure.nodes) {
    (void)node;
    if (!success.nodes.count(name)) extra.push_back(name);
  }
  if (!missing.empty() || !extra.empty()) {
    std::ostringstream os;
    os << "structures do not share a topology;";
    if (!missing.empty()) {
      os << " missing from failure:";
      for (const auto& name : missing) os << ' ' << name;
    }
    if (!extra.empty()) {
      os << " extra in failure:";
      for (const auto& name : extra) os << ' ' << name;
    }
    throw StructureError(os.str());
  }

  DiffReport report;
  for (const auto& [name, node] : success.nodes) {
    const auto& other = failure.nodes.at(name);
    if (!node.qualitative || !other.qualitative) {
      throw DomainError("diff requires abstracted structures; node '" + name +
                        "' still carries a numeric value");
    }
    if (*node.qualitative == *other.qualitative) continue;
    if (protected_events.count(name)) {
      report.protected_violations.insert(name);
    } else if (node.is_leaf()) {
      report.differing.insert(name);
    }
    // Differing internal nodes are consequences of their leaves; the report
    // names ground causes only.
  }
  return report;
}

ExplanationOutcome explain_failure(const KnowledgeBase& kb,
                                   const std::string& goal,
                                   const Bindings& success_bindings,
                                   const Bindings& failure_bindings,
                                   AnnotationLevel level) {
  if (level < 0 || level > 3) {
    throw DomainError("annotation level must be 0..3");
  }
  Mask mask(kb, level);
  OpCounter counter;

  // Stage 1: regression (cost counted even though the builds retraverse).
  {
    Deriver deriver(kb.rules, mask, &counter);
    deriver.expand(goal, true);
  }

  auto success = build_with_mask(kb, goal, success_bindings, mask, &counter);
  auto failure = build_with_mask(kb, goal, failure_bindings, mask, &counter);
  auto success_q = abstract_qualitative(success);
  auto failure_q = abstract_qualitative(failure);

  // Standing conditions are protected whatever the annotation level; the
  // level governs search effort, not the verdict.
  std::set<std::string> protected_events;
  std::set<std::string> field_events;
  for (const auto& e : kb.events) {
    if (!success_q.nodes.count(e.name)) continue;
    auto cls = kb.classification_of(e.name);
    if (cls == Classification::StandingCondition) protected_events.insert(e.name);
    if (cls == Classification::FieldMember) field_events.insert(e.name);
  }

  ExplanationOutcome outcome;
  outcome.diff = diff_structures(success_q, failure_q, protected_events);
  outcome.cause = outcome.diff.differing;
  outcome.conditions = protected_events;
  outcome.field = field_events;
  outcome.op_count = counter.unifications;
  return outcome;
}

}  // namespace causatum
