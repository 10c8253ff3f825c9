#include <sstream>

#include "causatum/kb.hpp"

namespace causatum {

namespace {

void write_events(std::ostream& os, const KnowledgeBase& kb) {
  os << "#EVENTS\n";
  for (const auto& e : kb.events) {
    os << e.name;
    if (e.time_index) os << " @t=" << *e.time_index;
    if (e.place) os << " @loc=" << *e.place;
    os << '\n';
  }
}

void write_decision(std::ostream& os, const DecisionProblem& p) {
  os << "#DECISION\n";
  os << "horizon: " << p.horizon << '\n';
  for (int t = 0; t < p.horizon; ++t) {
    os << "acts " << t << ":";
    for (const auto& a : p.acts[t]) os << ' ' << a;
    os << '\n';
    os << "outcomes " << t << ":";
    for (const auto& x : p.outcomes[t]) os << ' ' << x;
    os << '\n';
  }
  for (const auto& [key, value] : p.utility) {
    const auto& [t, act, outcome] = key;
    os << "utility " << t << ' ' << act << ' ' << outcome << " : "
       << format_rational(value) << '\n';
  }
  for (const auto& [key, value] : p.prob) {
    const auto& [t, act, outcome] = key;
    os << "prob " << t << ' ' << act << ' ' << outcome << " : "
       << format_rational(value) << '\n';
  }
  for (const auto& [key, target] : p.transition) {
    const auto& [t, act, outcome] = key;
    os << "trans " << t << ' ' << act << ' ' << outcome << " -> " << target
       << '\n';
  }
}

}  // namespace

std::string serialize_kb(const KnowledgeBase& kb) {
  std::ostringstream os;
  write_events(os, kb);
  if (!kb.classifications.empty()) {
    os << "#CLASSIFY\n";
    for (const auto& [event, cls] : kb.classifications) {
      os << event << " : " << classification_name(cls) << '\n';
    }
  }
  if (!kb.rules.empty()) {
    os << "#RULES\n";
    for (const auto& rule : kb.rules) {
      os << rule.head << " <- ";
      for (std::size_t i = 0; i < rule.body.size(); ++i) {
        if (i) os << " & ";
        if (!rule.body[i].positive) os << '!';
        os << rule.body[i].event;
      }
      os << '\n';
    }
  }
  if (!kb.bindings.empty()) {
    os << "#BIND\n";
    for (const auto& [event, value] : kb.bindings) {
      os << event << " = " << format_rational(value) << '\n';
    }
  }
  for (const auto& dist : kb.distributions) {
    os << "#DIST " << dist.name() << '\n';
    os << "vars:";
    for (const auto& v : dist.vars()) os << ' ' << v;
    os << '\n';
    for (std::size_t cell = 0; cell < dist.cells(); ++cell) {
      for (std::size_t j = 0; j < dist.vars().size(); ++j) {
        if (j) os << ' ';
        os << ((cell >> (dist.vars().size() - 1 - j)) & 1);
      }
      os << " : " << format_rational(dist.table()[cell]) << '\n';
    }
  }
  if (kb.decision) write_decision(os, *kb.decision);
  if (!kb.process_edges.empty()) {
    os << "#PROCESS\n";
    for (const auto& [from, to] : kb.process_edges) {
      os << from << " -> " << to << '\n';
    }
  }
  return os.str();
}

}  // namespace causatum
