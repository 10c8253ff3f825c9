#include "causatum/kb.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "causatum/errors.hpp"

namespace causatum {

std::string classification_name(Classification c) {
  switch (c) {
    case Classification::Irrelevant: return "irrelevant";
    case Classification::FieldMember: return "field";
    case Classification::StandingCondition: return "condition";
    case Classification::CandidateCause: return "cause";
  }
  return "cause";
}

std::optional<Classification> classification_from_name(const std::string& s) {
  if (s == "irrelevant") return Classification::Irrelevant;
  if (s == "field") return Classification::FieldMember;
  if (s == "condition") return Classification::StandingCondition;
  if (s == "cause") return Classification::CandidateCause;
  return std::nullopt;
}

bool KnowledgeBase::has_event(const std::string& name) const {
  return find_event(name) != nullptr;
}

const EventSymbol* KnowledgeBase::find_event(const std::string& name) const {
  for (const auto& e : events) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

Classification KnowledgeBase::classification_of(const std::string& name) const {
  for (const auto& [event, cls] : classifications) {
    if (event == name) return cls;
  }
  return Classification::CandidateCause;
}

std::optional<Rational> KnowledgeBase::binding_of(const std::string& name) const {
  for (const auto& [event, value] : bindings) {
    if (event == name) return value;
  }
  return std::nullopt;
}

const JointDistribution* KnowledgeBase::find_distribution(
    const std::string& name) const {
  for (const auto& d : distributions) {
    if (d.name() == name) return &d;
  }
  return nullptr;
}

ProcessGraph KnowledgeBase::process_graph() const {
  ProcessGraph graph;
  for (const auto& e : events) graph.add_node(e.name, e.time_index, e.place);
  for (const auto& [from, to] : process_edges) graph.add_edge(from, to);
  return graph;
}

namespace {

bool valid_event_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

std::vector<std::string> validate_kb(const KnowledgeBase& kb) {
  std::vector<std::string> violations;
  std::set<std::string> names;
  for (const auto& e : kb.events) {
    if (!valid_event_name(e.name)) {
      violations.push_back("event '" + e.name + "' violates the name grammar");
    }
    if (!names.insert(e.name).second) {
      violations.push_back("event '" + e.name + "' declared more than once");
    }
  }

  std::set<std::string> classified;
  for (const auto& [event, cls] : kb.classifications) {
    (void)cls;
    if (!names.count(event)) {
      violations.push_back("classification of undeclared event '" + event + "'");
    }
    if (!classified.insert(event).second) {
      violations.push_back("event '" + event + "' classified more than once");
    }
  }

  for (const auto& rule : kb.rules) {
    if (!names.count(rule.head)) {
      violations.push_back("rule head '" + rule.head + "' is undeclared");
    }
    if (rule.body.empty()) {
      violations.push_back("rule for '" + rule.head + "' has an empty body");
    }
    std::set<Literal> seen;
    for (const auto& lit : rule.body) {
      if (!names.count(lit.event)) {
        violations.push_back("rule for '" + rule.head +
                             "' references undeclared event '" + lit.event + "'");
      }
      if (lit.event == rule.head) {
        violations.push_back("rule for '" + rule.head +
                             "' mentions its own head in the body");
      }
      if (!seen.insert(lit).second) {
        violations.push_back("rule for '" + rule.head +
                             "' repeats literal '" + lit.event + "'");
      }
    }
  }

  std::set<std::string> bound;
  for (const auto& [event, value] : kb.bindings) {
    (void)value;
    if (!names.count(event)) {
      violations.push_back("binding of undeclared event '" + event + "'");
    }
    if (!bound.insert(event).second) {
      violations.push_back("event '" + event + "' bound more than once");
    }
  }

  std::set<std::string> dist_names;
  for (const auto& dist : kb.distributions) {
    if (!dist_names.insert(dist.name()).second) {
      violations.push_back("distribution '" + dist.name() +
                           "' declared more than once");
    }
    for (const auto& var : dist.vars()) {
      if (!names.count(var)) {
        violations.push_back("distribution '" + dist.name() +
                             "' uses undeclared event '" + var + "'");
      }
    }
    auto dist_violations = dist.validate();
    violations.insert(violations.end(), dist_violations.begin(),
                      dist_violations.end());
  }

  if (kb.decision) {
    auto problem_violations = validate_problem(*kb.decision);
    violations.insert(violations.end(), problem_violations.begin(),
                      problem_violations.end());
  }

  for (const auto& [from, to] : kb.process_edges) {
    if (!names.count(from) || !names.count(to)) {
      violations.push_back("process edge references undeclared event: " + from +
                           " -> " + to);
      continue;
    }
    const auto* a = kb.find_event(from);
    const auto* b = kb.find_event(to);
    if (!a->time_index || !b->time_index || *a->time_index >= *b->time_index) {
      violations.push_back("process edge " + from + " -> " + to +
                           " does not run forward in time");
    }
  }

  return violations;
}

std::vector<Rational> default_priors(std::size_t k) {
  if (k == 0) throw DomainError("default_priors requires k >= 1");
  return std::vector<Rational>(k, Rational(1, static_cast<unsigned>(1) * k));
}

}  // namespace causatum
