#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ocf/errors.hpp"
#include "ocf/ranking.hpp"

namespace ocf {

// (consequent | antecedent), read "consequent, given antecedent".
struct Conditional {
  Formula consequent;
  Formula antecedent;
};

// Pointwise sum of two rankings, renormalized by subtracting the minimum m.
// Fails whenever m is infinite: x + m = v then has either no solution or
// infinitely many at every state, so the subtraction has no unique meaning.
class BarPlusUndefinedError : public Error {
 public:
  BarPlusUndefinedError(State state, Ord2 state_value, Ord2 minimum,
                        std::uint32_t offending_count);
  State state() const noexcept { return state_; }
  Ord2 state_value() const noexcept { return state_value_; }
  Ord2 minimum() const noexcept { return minimum_; }
  std::uint32_t offending_count() const noexcept { return offending_count_; }

 private:
  State state_;
  Ord2 state_value_;
  Ord2 minimum_;
  std::uint32_t offending_count_;
};

Ranking bar_plus(const Ranking& a, const Ranking& b);

// The revision operator: pointwise ordinal sum (left operand first), then
// renormalization. Both operands must be conditional functions.
Ranking star(const Ranking& r, const Ranking& obs);

// Left fold of star with the same observation, n times.
Ranking iterate_star(const Ranking& r, const Ranking& obs, std::uint64_t n);

// Two-valued ranking: models of f at 0, everything else at n.
Ranking strengthening(std::shared_ptr<const Vocabulary> vocab,
                      const Formula& f, Ord2 n);

// star with a finite two-valued observation (f, d); the finitely-valued
// special case. Requires a finite-valued CF and d >= 1.
Ranking conditionalize(const Ranking& r, const Formula& f, std::uint64_t d);

// A formula is nearly counterfactual when no state of degree 0 satisfies it;
// equivalently, no sequence of finite-strength observations can ever make it
// believed.
bool is_nearly_cf(const Ranking& r, const Formula& f);

// Conditional strengthening: at every level where the antecedent is possible,
// states violating the consequent move up by n within the level and the level
// is renormalized so its minimum stays where it was. Degrees never change,
// levels without the antecedent are untouched. The antecedent must be nearly
// counterfactual.
Ranking cond_strengthen(const Ranking& r, std::uint64_t n,
                        const Conditional& c);

// Conditional revision: per antecedent-level, apply cond_strengthen's level
// transform with the least n that makes the consequent believed among the
// antecedent's states of that level. Levels with no antecedent-and-consequent
// state cannot reach belief for any n and are skipped (reported in levels).
struct CondReviseResult {
  struct LevelOutcome {
    std::uint64_t level = 0;
    std::optional<std::uint64_t> applied_n;  // empty: level skipped
  };
  Ranking result;
  std::vector<LevelOutcome> levels;
};

CondReviseResult cond_revise(const Ranking& r, const Conditional& c);

// Modified Ramsey check: revise by the conditional, push in the report, and
// ask whether every believed state satisfies the consequent.
bool ramsey_holds(const Ranking& r, const Conditional& c,
                  const Ranking& report);

// Least n <= bound such that bel(iterate_star(r, obs, n)) satisfies f.
// obs must believe exactly models(f). Empty when the bound is exhausted.
std::optional<std::uint64_t> istar_index(const Ranking& r, const Ranking& obs,
                                         const Formula& f, std::uint64_t bound);

// Total preorder over states, as an ordered partition into nonempty tiers.
class Preorder {
 public:
  Preorder(std::shared_ptr<const Vocabulary> vocab,
           std::vector<std::vector<State>> tiers);

  static Preorder from_ranking(const Ranking& r);

  // Tier index as a finite rank.
  Ranking canonical_ranking() const;

  const std::vector<std::vector<State>>& tiers() const noexcept {
    return tiers_;
  }
  const std::shared_ptr<const Vocabulary>& vocabulary_ptr() const noexcept {
    return vocab_;
  }

  friend bool operator==(const Preorder& a, const Preorder& b);

 private:
  std::shared_ptr<const Vocabulary> vocab_;
  std::vector<std::vector<State>> tiers_;
};

// One improvement step of strength n >= 1: canonical ranking, star with
// (f, n), regroup into tiers.
Preorder improvement_op(const Preorder& p, const Formula& f, std::uint64_t n);

// Conditional revision for strictly finite rankings: states satisfying both
// antecedent and consequent drop by the conditional rank, states satisfying
// the antecedent but not the consequent move up one step, others keep their
// rank; the result is renormalized.
Ranking kern_isberner_revise(const Ranking& r, const Conditional& c);

}  // namespace ocf
