#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "ocf/errors.hpp"
#include "ocf/ranking.hpp"

using namespace ocf;
using ocf::testing::make_vocab;
using ocf::testing::ords;
using ocf::testing::rk;

TEST_CASE("a ranking needs a vocabulary and one value per state") {
  auto v = make_vocab({"a", "b"});
  CHECK_THROWS_AS(Ranking(nullptr, ords({"0"})), InvalidArgumentError);
  CHECK_THROWS_AS(Ranking(v, ords({"0", "1"})), InvalidArgumentError);
  CHECK_NOTHROW(Ranking(v, ords({"0", "1", "2", "3"})));

  CHECK(Ranking::constant(v, Ord2::zero()).is_cf());
  CHECK(!Ranking::constant(v, Ord2::omega()).is_cf());
  CHECK(rk(v, {"0", "1", "w", "w"}).is_cf());
  CHECK(!rk(v, {"1", "1", "w", "w"}).is_cf());
}

TEST_CASE("equality compares vocabulary contents, not pointers") {
  auto v1 = make_vocab({"a", "b"});
  auto v2 = make_vocab({"a", "b"});
  auto v3 = make_vocab({"b", "a"});
  CHECK(rk(v1, {"0", "1", "2", "3"}) == rk(v2, {"0", "1", "2", "3"}));
  CHECK(rk(v1, {"0", "1", "2", "3"}) != rk(v1, {"0", "1", "2", "4"}));
  CHECK(rk(v1, {"0", "1", "2", "3"}) != rk(v3, {"0", "1", "2", "3"}));
}

TEST_CASE("renormalization keeps each state's own finite part") {
  CHECK(zero_values(ords({"2", "2", "w", "w+1"})) ==
        ords({"0", "0", "w", "w+1"}));
  CHECK(zero_values(ords({"2", "12", "w", "w"})) ==
        ords({"0", "10", "w", "w"}));
  // Infinite minimum: the bottom level subtracts shifts, higher levels only
  // drop their degree.
  CHECK(zero_values(ords({"w+3", "w+5", "w*2+9"})) == ords({"0", "2", "w+9"}));
  CHECK(zero_values(ords({"w*2", "w*3+4"})) == ords({"0", "w+4"}));
}

TEST_CASE("renormalization is idempotent") {
  for (auto values :
       {ords({"0", "4", "w", "w+2"}), ords({"3", "7", "w*2", "w+2"}),
        ords({"w", "w", "w*5+1", "w*2"})}) {
    auto once = zero_values(values);
    CHECK(min_of(once) == Ord2::zero());
    CHECK(zero_values(once) == once);
  }
}

TEST_CASE("minimum accessors split degree and shift") {
  auto v = make_vocab({"a", "b"});
  auto r = rk(v, {"w+3", "w+5", "w*2", "w+4"});
  CHECK(min_value(r) == parse_ordinal("w+3"));
  CHECK(deg(r) == 1);
  CHECK(fin(r) == 3);
  CHECK(finite_zeroing(r) == rk(v, {"0", "2", "w", "1"}));
}

TEST_CASE("belief is the set of states at exactly zero") {
  auto v = make_vocab({"a", "b"});
  CHECK(bel(rk(v, {"0", "0", "w", "2"})) == std::vector<State>{0, 1});
  CHECK(bel(rk(v, {"1", "2", "w", "w"})).empty());

  CHECK(degree_of_strength(rk(v, {"0", "2", "w", "w"})) == parse_ordinal("2"));
  CHECK(degree_of_strength(rk(v, {"0", "0", "w", "w+1"})) ==
        parse_ordinal("w"));
  CHECK(!degree_of_strength(Ranking::constant(v, Ord2::zero())).has_value());
}

TEST_CASE("equivalence means the same strict order on states") {
  auto v = make_vocab({"a", "b"});
  auto r = rk(v, {"0", "1", "2", "3"});
  CHECK(equivalent(r, rk(v, {"0", "5", "6", "99"})));
  CHECK(equivalent(r, rk(v, {"0", "w", "w+1", "w*2"})));
  CHECK(!equivalent(rk(v, {"0", "0", "1", "1"}), rk(v, {"0", "1", "1", "2"})));
  CHECK(!equivalent(rk(v, {"0", "1", "w", "w"}), rk(v, {"0", "1", "w", "w+1"})));

  // An equivalence relation on the samples.
  auto a = rk(v, {"0", "0", "w", "w"});
  auto b = rk(v, {"1", "1", "5", "5"});
  auto c = rk(v, {"0", "0", "w*2", "w*2"});
  CHECK(equivalent(a, a));
  CHECK(equivalent(a, b));
  CHECK(equivalent(b, a));
  CHECK(equivalent(b, c));
  CHECK(equivalent(a, c));

  CHECK(equivalent(r, finite_zeroing(r)));
  CHECK_THROWS_AS(equivalent(r, rk(make_vocab({"x", "y"}), {"0", "1", "2", "3"})),
                  VocabularyMismatchError);
}

TEST_CASE("level slices expose the finite parts at one degree") {
  auto v = make_vocab({"a", "b"});
  auto r = rk(v, {"0", "3", "w+1", "w"});
  auto bottom = level(r, 0);
  REQUIRE(bottom.has_value());
  CHECK(bottom->parts ==
        std::vector<std::pair<State, std::uint64_t>>{{0, 0}, {1, 3}});
  CHECK(bottom->min_part() == 0);
  CHECK(bottom->minimizers() == std::vector<State>{0});

  auto first = level(r, 1);
  REQUIRE(first.has_value());
  CHECK(first->min_part() == 0);
  CHECK(first->minimizers() == std::vector<State>{3});

  CHECK(!level(r, 2).has_value());
}

TEST_CASE("poss lists the degrees where a formula is possible") {
  auto v = make_vocab({"heavy", "fly", "hollow"});
  auto rp = rk(v, {"0", "10", "w", "w", "1", "11", "w+1", "w+1"});
  CHECK(poss(rp, parse_formula("fly")) == std::vector<std::uint64_t>{1});
  CHECK(poss(rp, parse_formula("hollow")) == std::vector<std::uint64_t>{0, 1});
  CHECK(poss(rp, parse_formula("false")).empty());
}

TEST_CASE("believed_at_level asks the minimizers of one level") {
  auto v = make_vocab({"heavy", "fly", "hollow"});
  auto rp = rk(v, {"0", "10", "w", "w", "1", "11", "w+1", "w+1"});
  CHECK(believed_at_level(rp, 0, parse_formula("!heavy & !fly & !hollow")));
  CHECK(!believed_at_level(rp, 0, parse_formula("hollow")));
  CHECK(believed_at_level(rp, 1, parse_formula("fly & !hollow")));
  CHECK_THROWS_AS(believed_at_level(rp, 2, parse_formula("fly")),
                  EmptyLevelError);
}

TEST_CASE("decompose splits a conditional function by level") {
  auto v = make_vocab({"a", "b"});
  auto r = rk(v, {"0", "3", "w+2", "w+5"});
  auto comps = decompose(r);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].level == 0);
  CHECK(comps[0].base_shift == 0);
  CHECK(comps[0].parts ==
        std::vector<std::pair<State, std::uint64_t>>{{0, 0}, {1, 3}});
  CHECK(comps[1].level == 1);
  CHECK(comps[1].base_shift == 2);
  CHECK(comps[1].parts ==
        std::vector<std::pair<State, std::uint64_t>>{{2, 0}, {3, 3}});

  // Reassembly: value(s) = w*level + base + part.
  for (const auto& comp : comps) {
    for (const auto& [s, p] : comp.parts) {
      CHECK(r.at(s) == Ord2{comp.level, comp.base_shift + p});
    }
  }

  CHECK_THROWS_AS(decompose(rk(v, {"1", "2", "w", "w"})), NotCFError);
}

TEST_CASE("ranking rules parse a guard and an ordinal") {
  auto rule = parse_ranking_rule("heavy & !fly => w*2+1");
  REQUIRE(rule.guard.has_value());
  CHECK(*rule.guard == parse_formula("heavy & !fly"));
  CHECK(rule.value == parse_ordinal("w*2+1"));

  auto fallback = parse_ranking_rule("  else  =>  4 ");
  CHECK(!fallback.guard.has_value());
  CHECK(fallback.value == Ord2::finite(4));

  CHECK_THROWS_AS(parse_ranking_rule("heavy w"), ParseError);
  CHECK_THROWS_AS(parse_ranking_rule("heavy => banana"), ParseError);
  CHECK_THROWS_AS(parse_ranking_rule("hea vy => 1"), ParseError);
}

TEST_CASE("ranking blocks use first-match semantics") {
  auto v = make_vocab({"heavy", "fly"});
  std::vector<RankingRule> rules = {
      parse_ranking_rule("fly => w"),
      parse_ranking_rule("heavy => 3"),  // only reaches heavy & !fly
      parse_ranking_rule("else => 0"),
  };
  CHECK(ranking_from_rules(v, rules) == rk(v, {"0", "3", "w", "w"}));

  CHECK_THROWS_AS(
      ranking_from_rules(v, {parse_ranking_rule("fly => w")}), ParseError);
  CHECK_THROWS_AS(ranking_from_rules(
                      v, {parse_ranking_rule("else => 0"),
                          parse_ranking_rule("fly => w"),
                          parse_ranking_rule("else => 1")}),
                  ParseError);
  CHECK_THROWS_AS(ranking_from_rules(
                      v, {parse_ranking_rule("hollow => 1"),
                          parse_ranking_rule("else => 0")}),
                  UnknownAtomError);
}

TEST_CASE("ranking tables sort by value and break ties by state index") {
  auto v = make_vocab({"heavy", "fly"});
  CHECK(ranking_table(rk(v, {"0", "0", "w", "w"})) ==
        "{} => 0\n"
        "{heavy} => 0\n"
        "{fly} => w\n"
        "{heavy, fly} => w\n");
  CHECK(ranking_table(rk(v, {"w+8", "2", "0", "w"})) ==
        "{fly} => 0\n"
        "{heavy} => 2\n"
        "{heavy, fly} => w\n"
        "{} => w+8\n");
}
