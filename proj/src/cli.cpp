#include "causatum/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "causatum/errors.hpp"
#include "causatum/explain.hpp"
#include "causatum/inus.hpp"
#include "causatum/kb.hpp"
#include "causatum/stat.hpp"
#include "causatum/worlds.hpp"

namespace causatum {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

KnowledgeBase load_kb(const std::string& path) {
  return parse_kb(read_file(path));
}

const JointDistribution& distribution(const KnowledgeBase& kb,
                                      const std::string& name) {
  const auto* dist = kb.find_distribution(name);
  if (!dist) throw DomainError("KB has no distribution '" + name + "'");
  return *dist;
}

// Literal syntax: `name` or `!name`, comma separated; `true` or `*` is the
// empty (always true) predicate.
Predicate parse_predicate(const std::string& text) {
  Predicate p;
  if (text == "true" || text == "*" || text.empty()) return p;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) throw DomainError("empty literal in predicate '" + text + "'");
    bool value = item[0] != '!';
    std::string name = value ? item : item.substr(1);
    if (name.empty()) throw DomainError("empty literal in predicate '" + text + "'");
    auto [it, inserted] = p.emplace(name, value);
    if (!inserted && it->second != value) {
      throw DomainError("contradictory literals for '" + name + "'");
    }
  }
  return p;
}

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ',';
    out += item;
  }
  return out;
}

std::string join_scenarios(const std::vector<Scenario>& scenarios) {
  std::string out;
  for (const auto& s : scenarios) {
    if (!out.empty()) out += ';';
    for (std::size_t i = 0; i < s.conjuncts.size(); ++i) {
      if (i) out += '&';
      out += s.conjuncts[i];
    }
  }
  return out;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

unsigned world_limit(unsigned flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("CAUSATUM_WORLD_LIMIT")) {
    try {
      int parsed = std::stoi(env);
      if (parsed < 0) throw std::invalid_argument("negative");
      return static_cast<unsigned>(parsed);
    } catch (const std::exception&) {
      throw DomainError("CAUSATUM_WORLD_LIMIT must be a nonnegative integer");
    }
  }
  return kDefaultWorldLimit;
}

void cmd_worlds(std::ostream& os, const std::string& kb_path,
                unsigned limit_flag, bool limit_given) {
  auto kb = load_kb(kb_path);
  auto matrix = enumerate_worlds(kb, world_limit(limit_flag, limit_given));
  auto report = combinatorics(matrix.m());
  os << "m=" << report.m << '\n';
  os << "n=" << report.n << '\n';
  os << "transition_relation_log2=" << report.transition_relation_log2 << '\n';
  if (report.generality_histogram) {
    os << "histogram=";
    const auto& h = *report.generality_histogram;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (i) os << ',';
      os << h[i];
    }
    os << '\n';
  }
}

void cmd_plan(std::ostream& os, const std::string& kb_path) {
  auto kb = load_kb(kb_path);
  if (!kb.decision) throw DomainError("KB has no #DECISION section");
  auto plan = solve_plan(*kb.decision);
  os << "acts=";
  for (std::size_t i = 0; i < plan.acts.size(); ++i) {
    if (i) os << ',';
    os << plan.acts[i];
  }
  os << '\n';
  os << "total_eu=" << format_rational(plan.total_eu) << '\n';
}

void cmd_explain(std::ostream& os, const std::string& kb_path,
                 const std::string& goal, const std::string& success_path,
                 const std::string& failure_path, int level) {
  auto kb = load_kb(kb_path);
  auto outcome = explain_failure(kb, goal, parse_bindings(read_file(success_path)),
                                 parse_bindings(read_file(failure_path)), level);
  os << "level=" << level << '\n';
  os << "cause=" << join(outcome.cause) << '\n';
  os << "conditions=" << join(outcome.conditions) << '\n';
  os << "field=" << join(outcome.field) << '\n';
  os << "protected_violations=" << join(outcome.diff.protected_violations) << '\n';
  os << "op_count=" << outcome.op_count << '\n';
}

void cmd_bench(std::ostream& os, const std::string& kb_path,
               const std::string& goal, const std::string& success_path,
               const std::string& failure_path) {
  auto kb = load_kb(kb_path);
  auto success = parse_bindings(read_file(success_path));
  auto failure = parse_bindings(read_file(failure_path));
  std::set<std::string> cause;
  for (int level = 0; level <= 3; ++level) {
    auto outcome = explain_failure(kb, goal, success, failure, level);
    os << "level" << level << '=' << outcome.op_count << '\n';
    cause = outcome.cause;
  }
  os << "---\n";
  os << "cause at every level: " << join(cause) << '\n';
}

void cmd_inus(std::ostream& os, const std::string& kb_path,
              const std::string& effect, const std::string& factor) {
  auto kb = load_kb(kb_path);
  auto ctx = make_context(kb, effect);
  auto scenarios = minimally_sufficient_scenarios(ctx, kb.rules);
  os << "effect=" << effect << '\n';
  os << "factor=" << factor << '\n';
  os << "scenarios=" << join_scenarios(scenarios) << '\n';
  if (scenarios.empty()) return;
  os << "classification="
     << cause_classification_name(classify_factor(factor, ctx, scenarios))
     << '\n';
  // Occurrences on the occasion come from the KB's numeric bindings:
  // positive means the event occurred, nonpositive that it was absent,
  // unbound that it is unknown.
  OccurrenceRecord occ;
  for (const auto& [event, value] : kb.bindings) {
    occ[event] = value > 0 ? Occurrence::Occurred : Occurrence::Absent;
  }
  auto judgment = attribute_cause(factor, ctx, occ, scenarios);
  os << "verdict=" << verdict_name(judgment.verdict) << '\n';
  os << "alternatives=" << join_scenarios(judgment.live_alternatives) << '\n';
}

void cmd_fork(std::ostream& os, const std::string& kb_path,
              const std::string& dist_name, const std::string& x,
              const std::string& y, const std::string& c) {
  auto kb = load_kb(kb_path);
  auto report = conjunctive_fork_check(distribution(kb, dist_name), x, y, c);
  for (int i = 1; i <= 7; ++i) {
    os << "cond" << i << '=' << bool_text(report.condition(i).holds) << '\n';
  }
  os << "is_fork=" << bool_text(report.is_fork) << '\n';
  os << "---\n";
  static const char* kLabels[7] = {
      "P(XY|C) vs P(X|C)P(Y|C)",  "P(XY|~C) vs P(X|~C)P(Y|~C)",
      "P(X|C) vs P(X|~C)",        "P(Y|C) vs P(Y|~C)",
      "P(XY) vs P(X)P(Y)",        "P(X|C) vs P(X|YC)",
      "P(Y|C) vs P(Y|XC)"};
  for (int i = 1; i <= 7; ++i) {
    const auto& cond = report.condition(i);
    os << "cond" << i << ": " << kLabels[i - 1] << " = "
       << format_rational(cond.lhs) << " vs " << format_rational(cond.rhs);
    if (!cond.defined) os << " (undefined)";
    os << '\n';
  }
}

void cmd_srel(std::ostream& os, const std::string& kb_path,
              const std::string& dist_name, const std::string& a,
              const std::string& b, const std::string& c) {
  auto kb = load_kb(kb_path);
  auto report = statistical_relevance(distribution(kb, dist_name),
                                      parse_predicate(c), parse_predicate(b),
                                      parse_predicate(a));
  os << "cond1=" << bool_text(report.condition1_holds) << '\n';
  os << "cond2=" << bool_text(report.condition2_holds) << '\n';
  os << "equivalent=" << bool_text(report.equivalent) << '\n';
  os << "relevant=" << bool_text(report.relevant) << '\n';
  os << "null_conditioning=" << bool_text(report.null_conditioning) << '\n';
  os << "---\n";
  os << "P(B|A)=" << format_rational(report.p_b_given_a) << '\n';
  if (!report.null_conditioning) {
    os << "P(B|AC)=" << format_rational(report.p_b_given_ac) << '\n';
    os << "P(B|A,~C)=" << format_rational(report.p_b_given_a_not_c) << '\n';
  }
  os << "P(C|A)=" << format_rational(report.p_c_given_a) << '\n';
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
  std::ostringstream out;

  CLI::App app{"decision structures and causal explanations from a declarative KB"};
  app.require_subcommand(1);

  std::string kb_path, goal, success_path, failure_path, effect, factor;
  std::string dist_name, x_name, y_name, c_pred, a_pred, b_pred;
  unsigned limit = kDefaultWorldLimit;
  int level = 3;

  auto* worlds_cmd = app.add_subcommand("worlds", "enumerate possible worlds");
  worlds_cmd->add_option("kb", kb_path)->required();
  auto* limit_opt = worlds_cmd->add_option("--limit", limit);

  auto* plan_cmd = app.add_subcommand("plan", "solve the KB's decision problem");
  plan_cmd->add_option("kb", kb_path)->required();

  auto* explain_cmd = app.add_subcommand("explain", "postmortem of a failed goal");
  explain_cmd->add_option("kb", kb_path)->required();
  explain_cmd->add_option("--goal", goal)->required();
  explain_cmd->add_option("--success", success_path)->required();
  explain_cmd->add_option("--failure", failure_path)->required();
  explain_cmd->add_option("--level", level)->check(CLI::Range(0, 3));

  auto* inus_cmd = app.add_subcommand("inus", "scenario analysis for an effect");
  inus_cmd->add_option("kb", kb_path)->required();
  inus_cmd->add_option("--effect", effect)->required();
  inus_cmd->add_option("--factor", factor)->required();

  auto* fork_cmd = app.add_subcommand("fork", "conjunctive fork conditions");
  fork_cmd->add_option("kb", kb_path)->required();
  fork_cmd->add_option("--dist", dist_name)->required();
  fork_cmd->add_option("--x", x_name)->required();
  fork_cmd->add_option("--y", y_name)->required();
  fork_cmd->add_option("--c", c_pred)->required();

  auto* srel_cmd = app.add_subcommand("srel", "statistical relevance of C to B in A");
  srel_cmd->add_option("kb", kb_path)->required();
  srel_cmd->add_option("--dist", dist_name)->required();
  srel_cmd->add_option("--a", a_pred)->required();
  srel_cmd->add_option("--b", b_pred)->required();
  srel_cmd->add_option("--c", c_pred)->required();

  auto* bench_cmd = app.add_subcommand("bench", "unification counts per annotation level");
  bench_cmd->add_option("kb", kb_path)->required();
  bench_cmd->add_option("--goal", goal)->required();
  bench_cmd->add_option("--success", success_path)->required();
  bench_cmd->add_option("--failure", failure_path)->required();

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return CommandResult{2, std::string("error=usage\n---\n") + e.what() + "\n"};
  }

  try {
    if (worlds_cmd->parsed()) {
      cmd_worlds(out, kb_path, limit, limit_opt->count() > 0);
    } else if (plan_cmd->parsed()) {
      cmd_plan(out, kb_path);
    } else if (explain_cmd->parsed()) {
      cmd_explain(out, kb_path, goal, success_path, failure_path, level);
    } else if (inus_cmd->parsed()) {
      cmd_inus(out, kb_path, effect, factor);
    } else if (fork_cmd->parsed()) {
      cmd_fork(out, kb_path, dist_name, x_name, y_name, c_pred);
    } else if (srel_cmd->parsed()) {
      cmd_srel(out, kb_path, dist_name, a_pred, b_pred, c_pred);
    } else if (bench_cmd->parsed()) {
      cmd_bench(out, kb_path, goal, success_path, failure_path);
    }
  } catch (const std::exception& e) {
    return CommandResult{1, std::string("error=domain\n---\n") + e.what() + "\n"};
  }
  return CommandResult{0, out.str()};
}

}  // namespace causatum
