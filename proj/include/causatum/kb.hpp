#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "causatum/decide.hpp"
#include "causatum/distribution.hpp"
#include "causatum/process_graph.hpp"
#include "causatum/rational.hpp"

namespace causatum {

// One declared event sentence. The declaration order of events fixes the bit
// order of possible worlds, so KnowledgeBase keeps events in a vector.
struct EventSymbol {
  std::string name;
  std::optional<int> time_index;
  std::optional<std::string> place;

  bool operator==(const EventSymbol& other) const = default;
};

struct Literal {
  std::string event;
  bool positive = true;

  bool operator==(const Literal& other) const = default;
  auto operator<=>(const Literal& other) const = default;
};

// Definite rule: head holds when every body literal does.
struct Rule {
  std::string head;
  std::vector<Literal> body;

  bool operator==(const Rule& other) const = default;
};

// Causal annotation of one event. Irrelevant events have nothing to do with
// the problem; field members are background held true but never nominated as
// causes; standing conditions sit in scenarios but are protected during
// explanation; candidate causes are the default.
enum class Classification { Irrelevant, FieldMember, StandingCondition, CandidateCause };

std::string classification_name(Classification c);
std::optional<Classification> classification_from_name(const std::string& s);

struct KnowledgeBase {
  std::vector<EventSymbol> events;
  std::vector<Rule> rules;
  // Declaration order preserved; parse rejects duplicates, validate reports
  // them on mutated values.
  std::vector<std::pair<std::string, Classification>> classifications;
  std::vector<std::pair<std::string, Rational>> bindings;
  std::vector<JointDistribution> distributions;
  std::optional<DecisionProblem> decision;
  std::vector<std::pair<std::string, std::string>> process_edges;

  bool has_event(const std::string& name) const;
  const EventSymbol* find_event(const std::string& name) const;
  // CandidateCause unless declared otherwise.
  Classification classification_of(const std::string& name) const;
  std::optional<Rational> binding_of(const std::string& name) const;
  const JointDistribution* find_distribution(const std::string& name) const;
  // Graph over all declared events with the #PROCESS edges.
  ProcessGraph process_graph() const;

  bool operator==(const KnowledgeBase& other) const = default;
};

// Parses the line-oriented KB file format (see README). Throws ParseError
// with the offending line on malformed input, undeclared symbols, duplicate
// declarations, and probability tables that do not sum to 1.
KnowledgeBase parse_kb(const std::string& text);

// Canonical text form; parse_kb(serialize_kb(kb)) == kb.
std::string serialize_kb(const KnowledgeBase& kb);

// Re-checks every structural invariant on a possibly mutated value.
// Violations are data, not failures; parse_kb output always yields none.
std::vector<std::string> validate_kb(const KnowledgeBase& kb);

// Uniform prior over k outcomes: each entry exactly 1/k.
std::vector<Rational> default_priors(std::size_t k);

// Helper shared with the CLI: parses "name = value" lines (values are
// rationals, decimals, or true/false).
std::map<std::string, Rational> parse_bindings(const std::string& text);

}  // namespace causatum
