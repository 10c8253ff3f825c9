#include "causatum/stat.hpp"

#include "causatum/errors.hpp"

namespace causatum {

namespace {

Rational abs(const Rational& r) { return r < 0 ? -r : r; }

bool eq(const Rational& a, const Rational& b, const Rational& epsilon) {
  return abs(a - b) <= epsilon;
}

bool gt(const Rational& a, const Rational& b, const Rational& epsilon) {
  return a - b > epsilon;
}

Predicate single(const std::string& var, bool value) {
  return Predicate{{var, value}};
}

}  // namespace

Rational cond_prob(const JointDistribution& dist, const Predicate& event,
                   const Predicate& given) {
  Rational denom = dist.mass(given);
  if (denom == 0) {
    throw NullConditioningError("conditioning on zero-probability event " +
                                format_predicate(given));
  }
  auto joint = merge(event, given);
  if (joint.contradictory) return Rational(0);
  return dist.mass(joint.literals) / denom;
}

SRReport statistical_relevance(const JointDistribution& dist,
                               const Predicate& c, const Predicate& b,
                               const Predicate& a, const Rational& epsilon) {
  SRReport report;
  Rational p_a = dist.mass(a);
  if (p_a == 0) {
    throw NullConditioningError("context " + format_predicate(a) +
                                " has probability 0");
  }
  auto ac = merge(a, c);
  Rational p_ac = ac.contradictory ? Rational(0) : dist.mass(ac.literals);
  report.p_c_given_a = p_ac / p_a;
  report.p_b_given_a = cond_prob(dist, b, a);

  auto abc = merge(b, ac.literals);
  Rational p_abc =
      ac.contradictory || abc.contradictory ? Rational(0) : dist.mass(abc.literals);
  auto ab = merge(a, b);
  Rational p_ab = ab.contradictory ? Rational(0) : dist.mass(ab.literals);

  // P(A, not-C) and P(A, B, not-C) by complement, so C may be any predicate.
  Rational p_a_not_c = p_a - p_ac;
  Rational p_ab_not_c = p_ab - p_abc;

  if (p_ac == 0) {
    report.null_conditioning = true;  // clause probabilities are unevaluable
  } else {
    report.p_b_given_ac = p_abc / p_ac;
    report.condition1_holds =
        !eq(report.p_b_given_ac, report.p_b_given_a, epsilon);
    if (p_a_not_c == 0) {
      report.null_conditioning = true;
    } else {
      report.p_b_given_a_not_c = p_ab_not_c / p_a_not_c;
      report.condition2_holds =
          !eq(report.p_b_given_ac, report.p_b_given_a_not_c, epsilon);
    }
  }
  report.equivalent = report.p_c_given_a > 0 && report.p_c_given_a < 1;
  report.relevant = report.condition1_holds;
  return report;
}

ForkReport conjunctive_fork_check(const JointDistribution& dist,
                                  const std::string& x, const std::string& y,
                                  const std::string& c,
                                  const Rational& epsilon) {
  Rational p_c = dist.mass(single(c, true));
  if (p_c == 0 || p_c == 1) {
    throw DomainError("fork vertex " + c + " has degenerate probability " +
                      format_rational(p_c));
  }
  ForkReport report;

  auto conditional = [&](bool want_x, bool want_y, bool given_c) {
    Predicate event;
    if (want_x) event.emplace(x, true);
    if (want_y) event.emplace(y, true);
    return cond_prob(dist, event, single(c, given_c));
  };

  Rational x_c = conditional(true, false, true);
  Rational y_c = conditional(false, true, true);
  Rational xy_c = conditional(true, true, true);
  Rational x_nc = conditional(true, false, false);
  Rational y_nc = conditional(false, true, false);
  Rational xy_nc = conditional(true, true, false);

  report.conditions[0] = {xy_c, x_c * y_c, eq(xy_c, x_c * y_c, epsilon), true};
  report.conditions[1] = {xy_nc, x_nc * y_nc, eq(xy_nc, x_nc * y_nc, epsilon),
                          true};
  report.conditions[2] = {x_c, x_nc, gt(x_c, x_nc, epsilon), true};
  report.conditions[3] = {y_c, y_nc, gt(y_c, y_nc, epsilon), true};

  Rational p_x = dist.mass(single(x, true));
  Rational p_y = dist.mass(single(y, true));
  Rational p_xy = dist.mass(Predicate{{x, true}, {y, true}});
  report.conditions[4] = {p_xy, p_x * p_y, gt(p_xy, p_x * p_y, epsilon), true};

  auto conditional_on = [&](const std::string& var, const Predicate& given) {
    return cond_prob(dist, single(var, true), given);
  };
  Predicate yc{{y, true}, {c, true}};
  Predicate xc{{x, true}, {c, true}};
  if (dist.mass(yc) == 0) {
    report.conditions[5] = {x_c, Rational(0), false, false};
  } else {
    Rational x_yc = conditional_on(x, yc);
    report.conditions[5] = {x_c, x_yc, eq(x_c, x_yc, epsilon), true};
  }
  if (dist.mass(xc) == 0) {
    report.conditions[6] = {y_c, Rational(0), false, false};
  } else {
    Rational y_xc = conditional_on(y, xc);
    report.conditions[6] = {y_c, y_xc, eq(y_c, y_xc, epsilon), true};
  }

  report.is_fork = report.conditions[0].holds && report.conditions[1].holds &&
                   report.conditions[2].holds && report.conditions[3].holds;
  return report;
}

bool screens_off(const JointDistribution& dist, const std::string& c,
                 const std::string& x, const std::string& y,
                 const Rational& epsilon) {
  Predicate just_c = single(c, true);
  Predicate yc{{y, true}, {c, true}};
  Predicate xc{{x, true}, {c, true}};
  if (dist.mass(just_c) == 0 || dist.mass(yc) == 0 || dist.mass(xc) == 0) {
    throw NullConditioningError("screening-off check conditions on zero mass");
  }
  Rational x_c = cond_prob(dist, single(x, true), just_c);
  Rational y_c = cond_prob(dist, single(y, true), just_c);
  Rational x_yc = cond_prob(dist, single(x, true), yc);
  Rational y_xc = cond_prob(dist, single(y, true), xc);
  return eq(x_c, x_yc, epsilon) && eq(y_c, y_xc, epsilon);
}

FilterDecision causal_fork_filter(const ForkReport& report,
                                  const std::string& vertex,
                                  const std::string& x_event,
                                  const std::string& y_event,
                                  const ProcessGraph& graph) {
  if (!report.is_fork) {
    throw DomainError("filter requires a report with conditions (1)-(4)");
  }
  const auto& v = graph.node(vertex);
  const auto& nx = graph.node(x_event);
  const auto& ny = graph.node(y_event);
  if (!v.time_index || !nx.time_index || !ny.time_index) {
    throw DomainError("fork filter needs @t time indices on all three events");
  }
  FilterDecision decision;
  if (!(*v.time_index < *nx.time_index && *v.time_index < *ny.time_index)) {
    // S-asymmetry: a common-effect vertex never explains, common cause or not.
    decision.reason = ForkRejection::OpenToFuture;
    decision.detail = "vertex " + vertex +
                      " does not precede both effects (S-asymmetry)";
    return decision;
  }
  if (!graph.reachable(vertex, x_event) || !graph.reachable(vertex, y_event)) {
    decision.reason = ForkRejection::NoProcess;
    decision.detail = "no causal process connects " + vertex + " to both " +
                      x_event + " and " + y_event;
    return decision;
  }
  decision.accepted = true;
  decision.detail = "vertex precedes both effects and processes connect it";
  return decision;
}

bool homogeneous_check(const JointDistribution& dist, const Predicate& c,
                       const Predicate& e,
                       const std::set<std::string>& partitions) {
  Rational baseline = cond_prob(dist, e, c);
  for (const auto& attribute : partitions) {
    for (bool value : {false, true}) {
      auto refined = merge(c, single(attribute, value));
      if (refined.contradictory) continue;
      if (dist.mass(refined.literals) == 0) continue;
      if (cond_prob(dist, e, refined.literals) != baseline) return false;
    }
  }
  return true;
}

ReferenceClassExplanation reference_class_explain(
    const JointDistribution& dist, const Predicate& c, const Predicate& e,
    const std::set<std::string>& partitions) {
  for (const auto& attribute : partitions) {
    Rational baseline = cond_prob(dist, e, c);
    for (bool value : {false, true}) {
      auto refined = merge(c, single(attribute, value));
      if (refined.contradictory) continue;
      if (dist.mass(refined.literals) == 0) continue;
      if (cond_prob(dist, e, refined.literals) != baseline) {
        throw DomainError("reference class " + format_predicate(c) +
                          " is not homogeneous: '" + attribute +
                          "' is statistically relevant");
      }
    }
  }
  ReferenceClassExplanation explanation;
  explanation.circumstances = dist.name() + ":" + format_predicate(c);
  explanation.outcome = format_predicate(e);
  explanation.probability = cond_prob(dist, e, c);
  explanation.homogeneous = true;
  return explanation;
}

}  // namespace causatum
