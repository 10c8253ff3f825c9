#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

#include "causatum/errors.hpp"
#include "causatum/kb.hpp"

namespace causatum {

namespace {

// The format is line oriented: `;` starts a comment, sections start with
// `#`, blank lines separate nothing.

std::string strip_comment(const std::string& line) {
  auto pos = line.find(';');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string token;
  while (is >> token) out.push_back(token);
  return out;
}

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

struct DistDraft {
  int header_line = 0;
  std::string name;
  std::vector<std::string> vars;
  std::vector<Rational> table;
  std::vector<bool> filled;
};

struct DecisionDraft {
  int header_line = 0;
  bool present = false;
  int horizon = -1;
  std::map<int, std::vector<std::string>> acts;
  std::map<int, std::vector<std::string>> outcomes;
  std::map<std::tuple<int, std::string, std::string>, Rational> utility;
  std::map<std::tuple<int, std::string, std::string>, Rational> prob;
  std::map<std::tuple<int, std::string, std::string>, std::string> transition;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : input_(text) {}

  KnowledgeBase run() {
    std::istringstream stream(input_);
    std::string raw;
    while (std::getline(stream, raw)) {
      ++line_;
      std::string line = trim(strip_comment(raw));
      if (line.empty()) continue;
      if (line[0] == '#') {
        start_section(line);
      } else {
        content_line(line);
      }
    }
    finish_dist();
    finish_decision();
    finish();
    return std::move(kb_);
  }

 private:
  enum class Section { None, Events, Classify, Rules, Bind, Dist, Decision, Process };

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, message);
  }

  void require_event(const std::string& name) const {
    if (!kb_.has_event(name)) fail("undeclared symbol '" + name + "'");
  }

  void start_section(const std::string& line) {
    finish_dist();
    auto tokens = split_ws(line);
    const std::string& tag = tokens[0];
    if (tag == "#EVENTS") {
      section_ = Section::Events;
    } else if (tag == "#CLASSIFY") {
      section_ = Section::Classify;
    } else if (tag == "#RULES") {
      section_ = Section::Rules;
    } else if (tag == "#BIND") {
      section_ = Section::Bind;
    } else if (tag == "#DIST") {
      if (tokens.size() != 2) fail("#DIST needs a name");
      section_ = Section::Dist;
      dist_ = DistDraft{};
      dist_.header_line = line_;
      dist_.name = tokens[1];
      if (!valid_name(dist_.name)) fail("bad distribution name '" + dist_.name + "'");
      for (const auto& d : kb_.distributions) {
        if (d.name() == dist_.name) {
          fail("duplicate declaration of distribution '" + dist_.name + "'");
        }
      }
    } else if (tag == "#DECISION") {
      if (decision_.present) fail("duplicate #DECISION section");
      section_ = Section::Decision;
      decision_.present = true;
      decision_.header_line = line_;
    } else if (tag == "#PROCESS") {
      section_ = Section::Process;
    } else {
      fail("unknown section '" + tag + "'");
    }
    if (section_ != Section::Dist && tag != "#DIST" && split_ws(line).size() > 1) {
      fail("unexpected text after section tag");
    }
  }

  void content_line(const std::string& line) {
    switch (section_) {
      case Section::None: fail("content before any section tag");
      case Section::Events: return event_line(line);
      case Section::Classify: return classify_line(line);
      case Section::Rules: return rule_line(line);
      case Section::Bind: return bind_line(line);
      case Section::Dist: return dist_line(line);
      case Section::Decision: return decision_line(line);
      case Section::Process: return process_line(line);
    }
  }

  void event_line(const std::string& line) {
    auto tokens = split_ws(line);
    EventSymbol event;
    event.name = tokens[0];
    if (!valid_name(event.name)) fail("bad event name '" + event.name + "'");
    if (kb_.has_event(event.name)) {
      fail("duplicate declaration of event '" + event.name + "'");
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const std::string& tok = tokens[i];
      if (tok.rfind("@t=", 0) == 0) {
        try {
          event.time_index = std::stoi(tok.substr(3));
        } catch (const std::exception&) {
          fail("bad time index '" + tok + "'");
        }
      } else if (tok.rfind("@loc=", 0) == 0) {
        event.place = tok.substr(5);
      } else {
        fail("unexpected event attribute '" + tok + "'");
      }
    }
    kb_.events.push_back(std::move(event));
  }

  void classify_line(const std::string& line) {
    auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected '<event> : <class>'");
    std::string event = trim(line.substr(0, colon));
    std::string label = trim(line.substr(colon + 1));
    require_event(event);
    for (const auto& [existing, cls] : kb_.classifications) {
      (void)cls;
      if (existing == event) fail("duplicate classification of '" + event + "'");
    }
    auto cls = classification_from_name(label);
    if (!cls) fail("unknown classification '" + label + "'");
    kb_.classifications.emplace_back(event, *cls);
  }

  void rule_line(const std::string& line) {
    auto arrow = line.find("<-");
    if (arrow == std::string::npos) fail("expected '<head> <- <lit> & ...'");
    Rule rule;
    rule.head = trim(line.substr(0, arrow));
    require_event(rule.head);
    std::string body = line.substr(arrow + 2);
    std::set<Literal> seen;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      auto amp = body.find('&', pos);
      std::string part = trim(amp == std::string::npos ? body.substr(pos)
                                                       : body.substr(pos, amp - pos));
      if (part.empty()) fail("empty literal in rule body");
      Literal lit;
      if (part[0] == '!') {
        lit.positive = false;
        part = trim(part.substr(1));
      }
      lit.event = part;
      require_event(lit.event);
      if (lit.event == rule.head) fail("rule head '" + rule.head + "' appears in its body");
      if (!seen.insert(lit).second) fail("duplicate literal '" + lit.event + "' in rule body");
      rule.body.push_back(lit);
      if (amp == std::string::npos) break;
      pos = amp + 1;
    }
    if (rule.body.empty()) fail("rule body must be nonempty");
    kb_.rules.push_back(std::move(rule));
  }

  void bind_line(const std::string& line) {
    auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected '<event> = <value>'");
    std::string event = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    require_event(event);
    for (const auto& [existing, v] : kb_.bindings) {
      (void)v;
      if (existing == event) fail("duplicate binding of '" + event + "'");
    }
    try {
      kb_.bindings.emplace_back(event, parse_value(value));
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }

  Rational parse_value(const std::string& text) const {
    if (text == "true") return Rational(1);
    if (text == "false") return Rational(0);
    return parse_rational(text);
  }

  void dist_line(const std::string& line) {
    if (dist_.vars.empty()) {
      if (line.rfind("vars:", 0) != 0) fail("expected 'vars: v1 v2 ...'");
      auto vars = split_ws(trim(line.substr(5)));
      if (vars.empty()) fail("distribution needs at least one variable");
      std::set<std::string> seen;
      for (const auto& v : vars) {
        require_event(v);
        if (!seen.insert(v).second) fail("duplicate variable '" + v + "'");
      }
      dist_.vars = vars;
      dist_.table.assign(std::size_t{1} << vars.size(), Rational(0));
      dist_.filled.assign(dist_.table.size(), false);
      return;
    }
    auto colon = line.rfind(':');
    if (colon == std::string::npos) fail("expected 'b1 ... bk : <probability>'");
    auto bits = split_ws(line.substr(0, colon));
    if (bits.size() != dist_.vars.size()) {
      fail("row has " + std::to_string(bits.size()) + " bits, expected " +
           std::to_string(dist_.vars.size()));
    }
    std::size_t cell = 0;
    for (const auto& b : bits) {
      if (b != "0" && b != "1") fail("row bits must be 0 or 1");
      cell = (cell << 1) | (b == "1" ? 1 : 0);
    }
    if (dist_.filled[cell]) fail("duplicate row in distribution '" + dist_.name + "'");
    Rational p;
    try {
      p = parse_rational(trim(line.substr(colon + 1)));
    } catch (const DomainError& e) {
      fail(e.what());
    }
    if (p < 0) fail("negative probability in distribution '" + dist_.name + "'");
    dist_.table[cell] = p;
    dist_.filled[cell] = true;
  }

  void finish_dist() {
    if (section_ != Section::Dist) return;
    section_ = Section::None;
    auto missing = std::count(dist_.filled.begin(), dist_.filled.end(), false);
    if (missing != 0) {
      throw ParseError(dist_.header_line,
                       "distribution '" + dist_.name + "' is missing " +
                           std::to_string(missing) + " rows");
    }
    Rational sum = 0;
    for (const auto& p : dist_.table) sum += p;
    if (sum != 1) {
      throw ParseError(dist_.header_line,
                       "distribution '" + dist_.name + "' rows sum to " +
                           format_rational(sum) + ", expected 1");
    }
    kb_.distributions.emplace_back(dist_.name, dist_.vars, dist_.table);
    dist_ = DistDraft{};
  }

  // #DECISION grammar:
  //   horizon: <T>
  //   acts <t>: <label> ...
  //   outcomes <t>: <label> ...
  //   utility <t> <act> <outcome> : <rational>
  //   prob <t> <act> <outcome> : <rational>
  //   trans <t> <act> <outcome> -> <outcome'>
  // Act and outcome labels live in their own namespaces.
  void decision_line(const std::string& line) {
    auto tokens = split_ws(line);
    const std::string& kind = tokens[0];
    if (kind == "horizon:") {
      if (tokens.size() != 2) fail("expected 'horizon: <T>'");
      decision_.horizon = parse_int(tokens[1]);
      if (decision_.horizon <= 0) fail("horizon must be positive");
      return;
    }
    if (kind == "acts" || kind == "outcomes") {
      auto colon = line.find(':');
      if (colon == std::string::npos) fail("expected '" + kind + " <t>: <labels>'");
      auto head = split_ws(line.substr(0, colon));
      if (head.size() != 2) fail("expected '" + kind + " <t>: <labels>'");
      int tick = parse_int(head[1]);
      auto labels = split_ws(line.substr(colon + 1));
      if (labels.empty()) fail(kind + " set must be nonempty");
      std::set<std::string> seen;
      for (const auto& label : labels) {
        if (!valid_name(label)) fail("bad label '" + label + "'");
        if (!seen.insert(label).second) fail("duplicate label '" + label + "'");
      }
      std::sort(labels.begin(), labels.end());
      auto& target = kind == "acts" ? decision_.acts : decision_.outcomes;
      if (!target.emplace(tick, labels).second) {
        fail("duplicate " + kind + " declaration for tick " + std::to_string(tick));
      }
      return;
    }
    if (kind == "utility" || kind == "prob") {
      auto colon = line.rfind(':');
      if (colon == std::string::npos) {
        fail("expected '" + kind + " <t> <act> <outcome> : <value>'");
      }
      auto head = split_ws(line.substr(0, colon));
      if (head.size() != 4) {
        fail("expected '" + kind + " <t> <act> <outcome> : <value>'");
      }
      auto key = decision_key(head[1], head[2], head[3]);
      Rational value;
      try {
        value = parse_rational(trim(line.substr(colon + 1)));
      } catch (const DomainError& e) {
        fail(e.what());
      }
      auto& target = kind == "utility" ? decision_.utility : decision_.prob;
      if (!target.emplace(key, value).second) {
        fail("duplicate " + kind + " row");
      }
      return;
    }
    if (kind == "trans") {
      auto arrow = line.find("->");
      if (arrow == std::string::npos) {
        fail("expected 'trans <t> <act> <outcome> -> <outcome>'");
      }
      auto head = split_ws(line.substr(0, arrow));
      if (head.size() != 4) {
        fail("expected 'trans <t> <act> <outcome> -> <outcome>'");
      }
      auto key = decision_key(head[1], head[2], head[3]);
      std::string target = trim(line.substr(arrow + 2));
      int tick = std::get<0>(key);
      auto next = decision_.outcomes.find(tick + 1);
      if (next == decision_.outcomes.end() ||
          std::find(next->second.begin(), next->second.end(), target) ==
              next->second.end()) {
        fail("transition target '" + target + "' is not an outcome at tick " +
             std::to_string(tick + 1));
      }
      if (!decision_.transition.emplace(key, target).second) {
        fail("duplicate trans row");
      }
      return;
    }
    fail("unknown decision line '" + kind + "'");
  }

  std::tuple<int, std::string, std::string> decision_key(
      const std::string& tick_text, const std::string& act,
      const std::string& outcome) {
    int tick = parse_int(tick_text);
    auto acts = decision_.acts.find(tick);
    if (acts == decision_.acts.end() ||
        std::find(acts->second.begin(), acts->second.end(), act) ==
            acts->second.end()) {
      fail("act '" + act + "' is not declared at tick " + tick_text);
    }
    auto outcomes = decision_.outcomes.find(tick);
    if (outcomes == decision_.outcomes.end() ||
        std::find(outcomes->second.begin(), outcomes->second.end(), outcome) ==
            outcomes->second.end()) {
      fail("outcome '" + outcome + "' is not declared at tick " + tick_text);
    }
    return {tick, act, outcome};
  }

  int parse_int(const std::string& text) {
    try {
      std::size_t used = 0;
      int value = std::stoi(text, &used);
      if (used != text.size()) fail("bad integer '" + text + "'");
      return value;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      fail("bad integer '" + text + "'");
    }
  }

  void finish_decision() {
    if (!decision_.present) return;
    if (decision_.horizon <= 0) {
      throw ParseError(decision_.header_line, "#DECISION needs 'horizon: <T>'");
    }
    DecisionProblem problem;
    problem.horizon = decision_.horizon;
    for (int t = 0; t < decision_.horizon; ++t) {
      auto acts = decision_.acts.find(t);
      auto outcomes = decision_.outcomes.find(t);
      if (acts == decision_.acts.end() || outcomes == decision_.outcomes.end()) {
        throw ParseError(decision_.header_line,
                         "#DECISION is missing acts/outcomes for tick " +
                             std::to_string(t));
      }
      problem.acts.push_back(acts->second);
      problem.outcomes.push_back(outcomes->second);
    }
    problem.utility = decision_.utility;
    problem.prob = decision_.prob;
    problem.transition = decision_.transition;
    auto violations = validate_problem(problem);
    if (!violations.empty()) {
      throw ParseError(decision_.header_line,
                       "#DECISION invalid: " + violations.front());
    }
    kb_.decision = std::move(problem);
  }

  void process_line(const std::string& line) {
    auto arrow = line.find("->");
    if (arrow == std::string::npos) fail("expected '<event> -> <event>'");
    std::string from = trim(line.substr(0, arrow));
    std::string to = trim(line.substr(arrow + 2));
    require_event(from);
    require_event(to);
    const auto* a = kb_.find_event(from);
    const auto* b = kb_.find_event(to);
    if (!a->time_index || !b->time_index) {
      fail("process edge endpoints need @t time indices: " + from + " -> " + to);
    }
    if (*a->time_index >= *b->time_index) {
      fail("process edge " + from + " -> " + to + " does not run forward in time");
    }
    kb_.process_edges.emplace_back(from, to);
  }

  void finish() const {
    // Everything is checked inline; the final pass guards invariants that
    // depend on the whole document.
    auto violations = validate_kb(kb_);
    if (!violations.empty()) {
      throw ParseError(0, violations.front());
    }
  }

  const std::string& input_;
  int line_ = 0;
  Section section_ = Section::None;
  KnowledgeBase kb_;
  DistDraft dist_;
  DecisionDraft decision_;
};

}  // namespace

KnowledgeBase parse_kb(const std::string& text) {
  return Parser(text).run();
}

std::map<std::string, Rational> parse_bindings(const std::string& text) {
  std::map<std::string, Rational> bindings;
  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    std::string line = trim(strip_comment(raw));
    if (line.empty() || line == "#BIND") continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line_no, "expected '<name> = <value>'");
    }
    std::string name = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!valid_name(name)) throw ParseError(line_no, "bad name '" + name + "'");
    if (bindings.count(name)) {
      throw ParseError(line_no, "duplicate binding of '" + name + "'");
    }
    try {
      if (value == "true") {
        bindings.emplace(name, Rational(1));
      } else if (value == "false") {
        bindings.emplace(name, Rational(0));
      } else {
        bindings.emplace(name, parse_rational(value));
      }
    } catch (const DomainError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return bindings;
}

}  // namespace causatum
