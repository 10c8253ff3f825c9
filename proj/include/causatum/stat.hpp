#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "causatum/distribution.hpp"
#include "causatum/process_graph.hpp"
#include "causatum/rational.hpp"

namespace causatum {

// Exact conditional probability P(event | given). Throws
// NullConditioningError when the condition has zero mass. A contradictory
// event-given pair is simply probability 0.
Rational cond_prob(const JointDistribution& dist, const Predicate& event,
                   const Predicate& given);

// C is statistically relevant to B in context A when conditioning on C moves
// B's probability: (1) P(B|AC) != P(B|A), (2) P(B|AC) != P(B|A,not-C).
// The two clauses agree whenever 0 < P(C|A) < 1.
struct SRReport {
  bool condition1_holds = false;
  bool condition2_holds = false;
  bool equivalent = false;         // 0 < P(C|A) < 1
  bool relevant = false;           // clause (1)
  bool null_conditioning = false;  // a clause conditioned on zero mass
  Rational p_b_given_a;
  Rational p_b_given_ac;       // meaningful unless null_conditioning
  Rational p_b_given_a_not_c;  // meaningful unless null_conditioning
  Rational p_c_given_a;
};

SRReport statistical_relevance(const JointDistribution& dist,
                               const Predicate& c, const Predicate& b,
                               const Predicate& a,
                               const Rational& epsilon = Rational(0));

// One evaluated (in)equality of the fork definition.
struct ForkCondition {
  Rational lhs;
  Rational rhs;
  bool holds = false;
  bool defined = true;  // false when a conditional had zero mass
};

// Reichenbach's conjunctive fork: necessary conditions (1)-(4) over a common
// cause C, which entail non-independence (5) and screening off (6)-(7).
struct ForkReport {
  ForkCondition conditions[7];
  bool is_fork = false;  // (1)-(4) all hold

  const ForkCondition& condition(int number) const {
    return conditions[number - 1];
  }
};

// Requires 0 < P(C) < 1; throws DomainError otherwise. The epsilon widens
// every equality and strict inequality for measured (inexact) data; the
// default 0 keeps the arithmetic exact.
ForkReport conjunctive_fork_check(const JointDistribution& dist,
                                  const std::string& x, const std::string& y,
                                  const std::string& c,
                                  const Rational& epsilon = Rational(0));

// True iff P(X|C) = P(X|YC) and P(Y|C) = P(Y|XC) exactly.
bool screens_off(const JointDistribution& dist, const std::string& c,
                 const std::string& x, const std::string& y,
                 const Rational& epsilon = Rational(0));

// Why a statistically perfect fork was rejected as a causal explanation.
enum class ForkRejection { OpenToFuture, NoProcess };

struct FilterDecision {
  bool accepted = false;
  std::optional<ForkRejection> reason;
  std::string detail;
};

// A fork vertex explains X and Y only when it strictly precedes both in time
// (the asymmetry conjectures bar common-effect vertices) and the process
// graph connects it to each by a directed path.
FilterDecision causal_fork_filter(const ForkReport& report,
                                  const std::string& vertex,
                                  const std::string& x_event,
                                  const std::string& y_event,
                                  const ProcessGraph& graph);

// True iff no available attribute splits the class: no V with
// P(E|C,V=v) != P(E|C) on a positive-mass branch.
bool homogeneous_check(const JointDistribution& dist, const Predicate& c,
                       const Predicate& e,
                       const std::set<std::string>& partitions);

struct ReferenceClassExplanation {
  std::string circumstances;  // canonical rendering of the class C
  std::string outcome;
  Rational probability;
  bool homogeneous = true;
};

// Salmon-style explanation: the same homogeneous circumstances C explain both
// the occurrence and the nonoccurrence of E; only the probability differs.
// Refuses (DomainError naming the attribute) when C is not homogeneous.
ReferenceClassExplanation reference_class_explain(
    const JointDistribution& dist, const Predicate& c, const Predicate& e,
    const std::set<std::string>& partitions);

}  // namespace causatum
