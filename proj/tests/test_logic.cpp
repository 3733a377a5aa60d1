#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "helpers.hpp"
#include "ocf/errors.hpp"
#include "ocf/logic.hpp"

using namespace ocf;
using ocf::testing::make_vocab;

TEST_CASE("vocabulary validates its atoms") {
  CHECK_THROWS_AS(Vocabulary(std::vector<std::string>{}),
                  InvalidArgumentError);
  CHECK_THROWS_AS(Vocabulary({"a", "a"}), InvalidArgumentError);
  CHECK_THROWS_AS(Vocabulary({"2x"}), InvalidArgumentError);
  CHECK_THROWS_AS(Vocabulary({"a b"}), InvalidArgumentError);
  CHECK_THROWS_AS(Vocabulary({"else"}), InvalidArgumentError);
  CHECK_THROWS_AS(Vocabulary({"true"}), InvalidArgumentError);
  CHECK_THROWS_AS(Vocabulary({"false"}), InvalidArgumentError);

  std::vector<std::string> many;
  for (int i = 0; i < 21; ++i) many.push_back("a" + std::to_string(i));
  CHECK_THROWS_AS(Vocabulary{many}, InvalidArgumentError);
  many.pop_back();
  CHECK(Vocabulary(many).state_count() == 1u << 20);
}

TEST_CASE("states index atoms by bit position") {
  auto v = make_vocab({"heavy", "fly"});
  CHECK(v->state_count() == 4);
  CHECK(v->index_of("heavy") == 0);
  CHECK(v->index_of("fly") == 1);
  CHECK(!v->index_of("hollow").has_value());
  CHECK(state_has(0b10, 1));
  CHECK(!state_has(0b10, 0));
  CHECK(state_to_string(0, *v) == "{}");
  CHECK(state_to_string(0b01, *v) == "{heavy}");
  CHECK(state_to_string(0b11, *v) == "{heavy, fly}");
}

TEST_CASE("parser honours precedence ! > & > | > ->") {
  auto a = Formula::atom("a");
  auto b = Formula::atom("b");
  auto c = Formula::atom("c");
  CHECK(parse_formula("a | b & c") ==
        Formula::disj(a, Formula::conj(b, c)));
  CHECK(parse_formula("!a & b") == Formula::conj(Formula::negate(a), b));
  CHECK(parse_formula("a & b -> c") ==
        Formula::implies(Formula::conj(a, b), c));
  CHECK(parse_formula("(a | b) & c") ==
        Formula::conj(Formula::disj(a, b), c));
  CHECK(parse_formula("!(a -> b)") ==
        Formula::negate(Formula::implies(a, b)));
  CHECK(parse_formula("!!a") == Formula::negate(Formula::negate(a)));
}

TEST_CASE("implication is right associative") {
  auto a = Formula::atom("a");
  auto b = Formula::atom("b");
  auto c = Formula::atom("c");
  CHECK(parse_formula("a -> b -> c") ==
        Formula::implies(a, Formula::implies(b, c)));
  CHECK(parse_formula("a -> b -> c") != parse_formula("(a -> b) -> c"));
}

TEST_CASE("printing and parsing are mutually inverse") {
  for (auto text : {"true", "false", "a", "!a", "a & b", "a | b & !c",
                    "a -> b -> c", "!(a | b) & (c -> false)"}) {
    Formula f = parse_formula(text);
    CHECK(parse_formula(to_string(f)) == f);
  }
}

TEST_CASE("parse errors carry the offending position") {
  auto position_of = [](std::string_view text) {
    try {
      parse_formula(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected ParseError");
    return std::size_t{0};
  };
  CHECK(position_of("a &") == 3);
  CHECK(position_of("a ! b") == 2);
  CHECK(position_of(")") == 0);
  CHECK(position_of("(a | b") == 6);
  CHECK(position_of("a - b") == 2);
  CHECK(position_of("a @ b") == 2);
  CHECK(position_of("") == 0);
}

TEST_CASE("sat evaluates the classical semantics") {
  auto v = make_vocab({"a", "b"});
  Formula imp = parse_formula("a -> b");
  CHECK(sat(0b00, imp, *v));
  CHECK(!sat(0b01, imp, *v));
  CHECK(sat(0b10, imp, *v));
  CHECK(sat(0b11, imp, *v));
  CHECK(sat(0b01, parse_formula("a & !b"), *v));
  CHECK(sat(0b00, Formula::truth(), *v));
  CHECK(!sat(0b00, Formula::falsity(), *v));
}

TEST_CASE("models and its complement partition the state space") {
  auto v = make_vocab({"a", "b", "c"});
  for (auto text : {"a", "a & b", "a | !b", "a -> (b & c)", "false"}) {
    Formula f = parse_formula(text);
    auto pos = models(*v, f);
    auto neg = models(*v, Formula::negate(f));
    CHECK(pos.size() + neg.size() == v->state_count());
    for (State s : pos) CHECK(sat(s, f, *v));
    for (State s : neg) CHECK(!sat(s, f, *v));
  }
  CHECK(models(*v, parse_formula("a & b")).size() == 2);
  CHECK(models(*v, parse_formula("a | !a")).size() == 8);
  CHECK(models(*v, parse_formula("false")).empty());
}

TEST_CASE("unknown atoms are reported even when truth would not need them") {
  auto v = make_vocab({"a"});
  CHECK_THROWS_AS(models(*v, parse_formula("x | !x")), UnknownAtomError);
  CHECK_THROWS_AS(sat(0, parse_formula("x"), *v), UnknownAtomError);
  CHECK_NOTHROW(models(*v, parse_formula("true")));
}
