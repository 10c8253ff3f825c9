#include <doctest.h>

#include <fstream>
#include <sstream>

#include "causatum/errors.hpp"
#include "causatum/kb.hpp"
#include "support.hpp"

using namespace causatum;
using namespace causatum::testing;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_SUITE("kb") {

TEST_CASE("minimal document declares one event with default classification") {
  auto kb = parse_kb("#EVENTS\nalpha\n");
  REQUIRE(kb.events.size() == 1);
  CHECK(kb.events[0].name == "alpha");
  CHECK(kb.classification_of("alpha") == Classification::CandidateCause);
  CHECK(validate_kb(kb).empty());
}

TEST_CASE("cereal fixture binds the tax rate to 2/5") {
  auto kb = parse_kb(slurp(fixture_path("cereal.kb")));
  auto tax = kb.binding_of("tax_rate");
  REQUIRE(tax.has_value());
  CHECK(*tax == Rational(2, 5));
  CHECK(kb.events.size() == 5);
  CHECK(validate_kb(kb).empty());
}

TEST_CASE("rule referencing an undeclared event is a parse error") {
  CHECK_THROWS_AS(parse_kb("#EVENTS\na\n#RULES\na <- ghost\n"), ParseError);
}

TEST_CASE("duplicate declarations are parse errors") {
  CHECK_THROWS_AS(parse_kb("#EVENTS\na\na\n"), ParseError);
  CHECK_THROWS_AS(parse_kb("#EVENTS\na\n#CLASSIFY\na : field\na : cause\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_kb("#EVENTS\na\n#BIND\na = 1\na = 2\n"), ParseError);
}

TEST_CASE("event names obey the identifier grammar") {
  CHECK_THROWS_AS(parse_kb("#EVENTS\n9lives\n"), ParseError);
  CHECK_NOTHROW(parse_kb("#EVENTS\n_ok_9\n"));
}

TEST_CASE("distribution rows must sum to one") {
  const char* text = "#EVENTS\na\n#DIST d\nvars: a\n0 : 49/100\n1 : 1/2\n";
  CHECK_THROWS_WITH_AS(parse_kb(text), doctest::Contains("rows sum to 99/100"),
                       ParseError);
}

TEST_CASE("validate_kb reports mutations the parser can never produce") {
  auto kb = parse_kb("#EVENTS\na\nb\n#CLASSIFY\na : field\n");

  SUBCASE("a second classification for the same event") {
    kb.classifications.emplace_back("a", Classification::CandidateCause);
    auto violations = validate_kb(kb);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0] == "event 'a' classified more than once");
  }
  SUBCASE("a distribution whose rows sum to 99/100") {
    kb.distributions.emplace_back(
        "d", std::vector<std::string>{"a"},
        std::vector<Rational>{Rational(49, 100), Rational(1, 2)});
    auto violations = validate_kb(kb);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0] == "distribution 'd': cells sum to 99/100, expected 1");
  }
  SUBCASE("a dangling rule") {
    kb.rules.push_back(Rule{"ghost", {{"a", true}}});
    CHECK(validate_kb(kb).size() == 1);
  }
}

TEST_CASE("default_priors is the exact uniform distribution") {
  auto quarter = default_priors(4);
  REQUIRE(quarter.size() == 4);
  for (const auto& p : quarter) CHECK(p == Rational(1, 4));

  CHECK(default_priors(1) == std::vector<Rational>{Rational(1)});
  CHECK(default_priors(52)[0] == Rational(1, 52));
  CHECK_THROWS_AS(default_priors(0), DomainError);
}

TEST_CASE("default_priors sums to exactly one up to k = 10^4") {
  for (std::size_t k : {std::size_t{1}, std::size_t{2}, std::size_t{7},
                        std::size_t{997}, std::size_t{10000}}) {
    auto priors = default_priors(k);
    Rational sum = 0;
    for (const auto& p : priors) sum += p;
    CHECK(sum == 1);
  }
}

TEST_CASE("parse after serialize is the identity on random KBs") {
  Rng rng(20260810);
  for (int trial = 0; trial < 100; ++trial) {
    auto kb = random_kb(rng);
    REQUIRE(validate_kb(kb).empty());
    auto text = serialize_kb(kb);
    KnowledgeBase reparsed;
    CAPTURE(text);
    REQUIRE_NOTHROW(reparsed = parse_kb(text));
    CHECK(reparsed == kb);
  }
}

TEST_CASE("every bundled fixture parses, validates, and round-trips") {
  for (const char* name : {"cereal.kb", "deck.kb", "rover.kb", "fork8.kb"}) {
    CAPTURE(name);
    auto kb = parse_kb(slurp(fixture_path(name)));
    CHECK(validate_kb(kb).empty());
    CHECK(parse_kb(serialize_kb(kb)) == kb);
  }
}

TEST_CASE("binding files accept decimals, rationals, and booleans") {
  auto bindings = parse_bindings("a = 0.4\nb = 7/2\nc = true\nd = false\n");
  CHECK(bindings.at("a") == Rational(2, 5));
  CHECK(bindings.at("b") == Rational(7, 2));
  CHECK(bindings.at("c") == 1);
  CHECK(bindings.at("d") == 0);
  CHECK_THROWS_AS(parse_bindings("oops\n"), ParseError);
}

TEST_CASE("process edges must run forward in time") {
  CHECK_THROWS_AS(parse_kb("#EVENTS\na @t=2\nb @t=1\n#PROCESS\na -> b\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_kb("#EVENTS\na\nb @t=1\n#PROCESS\na -> b\n"),
                  ParseError);
  CHECK_NOTHROW(parse_kb("#EVENTS\na @t=0\nb @t=1\n#PROCESS\na -> b\n"));
}

}  // TEST_SUITE
