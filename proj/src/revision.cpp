#include "ocf/revision.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace ocf {

namespace {

void require_same_vocabulary(const Ranking& a, const Ranking& b) {
  if (a.vocabulary() != b.vocabulary()) {
    throw VocabularyMismatchError("rankings use different vocabularies");
  }
}

void require_known_atoms(const Formula& f, const Vocabulary& v) {
  // models() validates every atom of f, result discarded.
  (void)models(v, f);
}

std::vector<Ord2> pointwise_sum(const Ranking& a, const Ranking& b) {
  std::vector<Ord2> sums(a.state_count());
  for (State s = 0; s < a.state_count(); ++s) {
    sums[s] = add(a.at(s), b.at(s));
  }
  return sums;
}

}  // namespace

BarPlusUndefinedError::BarPlusUndefinedError(State state, Ord2 state_value,
                                             Ord2 minimum,
                                             std::uint32_t offending_count)
    : Error("pointwise sum has an infinite minimum (" + to_string(minimum) +
            " at " + std::to_string(state) +
            "); subtracting it is not uniquely defined at any of the " +
            std::to_string(offending_count) + " states"),
      state_(state),
      state_value_(state_value),
      minimum_(minimum),
      offending_count_(offending_count) {}

Ranking bar_plus(const Ranking& a, const Ranking& b) {
  require_same_vocabulary(a, b);
  std::vector<Ord2> sums = pointwise_sum(a, b);
  const Ord2 m = min_of(sums);
  if (!m.is_finite()) {
    State witness = 0;
    while (sums[witness] != m) ++witness;
    throw BarPlusUndefinedError(witness, sums[witness], m,
                                static_cast<std::uint32_t>(sums.size()));
  }
  for (Ord2& v : sums) v = *left_sub(v, m);
  return Ranking(a.vocabulary_ptr(), std::move(sums));
}

Ranking star(const Ranking& r, const Ranking& obs) {
  require_same_vocabulary(r, obs);
  if (!r.is_cf() || !obs.is_cf()) {
    throw NotCFError("star requires conditional functions on both sides");
  }
  return Ranking(r.vocabulary_ptr(), zero_values(pointwise_sum(r, obs)));
}

Ranking iterate_star(const Ranking& r, const Ranking& obs, std::uint64_t n) {
  Ranking cur = r;
  for (std::uint64_t i = 0; i < n; ++i) cur = star(cur, obs);
  return cur;
}

Ranking strengthening(std::shared_ptr<const Vocabulary> vocab,
                      const Formula& f, Ord2 n) {
  require_known_atoms(f, *vocab);
  std::vector<Ord2> values(vocab->state_count());
  for (State s = 0; s < values.size(); ++s) {
    values[s] = sat(s, f, *vocab) ? Ord2::zero() : n;
  }
  return Ranking(std::move(vocab), std::move(values));
}

Ranking conditionalize(const Ranking& r, const Formula& f, std::uint64_t d) {
  if (d == 0) {
    throw InvalidArgumentError("conditionalize requires strength >= 1");
  }
  for (State s = 0; s < r.state_count(); ++s) {
    if (!r.at(s).is_finite()) {
      throw InfiniteValuesError(
          "conditionalize requires a finite-valued ranking");
    }
  }
  return star(r, strengthening(r.vocabulary_ptr(), f, Ord2::finite(d)));
}

bool is_nearly_cf(const Ranking& r, const Formula& f) {
  if (!r.is_cf()) {
    throw NotCFError("near-counterfactual test requires a conditional function");
  }
  require_known_atoms(f, r.vocabulary());
  for (State s = 0; s < r.state_count(); ++s) {
    if (r.at(s).degree == 0 && sat(s, f, r.vocabulary())) return false;
  }
  return true;
}

namespace {

// Shared level transform: within the degree-k slice, states violating psi
// move up by n; afterwards the slice is shifted so its minimum part is back
// where it started. Degrees are untouched.
void shift_level(std::vector<Ord2>& values, const LevelSlice& slice,
                 const Formula& psi, const Vocabulary& v, std::uint64_t n) {
  std::uint64_t old_min = slice.min_part();
  std::uint64_t new_min = 0;
  bool first = true;
  std::vector<std::pair<State, std::uint64_t>> adjusted;
  adjusted.reserve(slice.parts.size());
  for (const auto& [s, p] : slice.parts) {
    const std::uint64_t q = sat(s, psi, v) ? p : p + n;
    adjusted.emplace_back(s, q);
    new_min = first ? q : std::min(new_min, q);
    first = false;
  }
  const std::uint64_t delta = new_min - old_min;
  for (const auto& [s, q] : adjusted) {
    values[s] = Ord2{slice.level, q - delta};
  }
}

}  // namespace

Ranking cond_strengthen(const Ranking& r, std::uint64_t n,
                        const Conditional& c) {
  if (!is_nearly_cf(r, c.antecedent)) {
    throw NotNearlyCounterfactualError(
        "antecedent is not nearly counterfactual: some state of degree 0 "
        "satisfies it");
  }
  require_known_atoms(c.consequent, r.vocabulary());
  std::vector<Ord2> values = r.values();
  for (std::uint64_t k : poss(r, c.antecedent)) {
    shift_level(values, *level(r, k), c.consequent, r.vocabulary(), n);
  }
  return Ranking(r.vocabulary_ptr(), std::move(values));
}

CondReviseResult cond_revise(const Ranking& r, const Conditional& c) {
  if (!is_nearly_cf(r, c.antecedent)) {
    throw NotNearlyCounterfactualError(
        "antecedent is not nearly counterfactual: some state of degree 0 "
        "satisfies it");
  }
  require_known_atoms(c.consequent, r.vocabulary());
  std::vector<Ord2> values = r.values();
  std::vector<CondReviseResult::LevelOutcome> outcomes;
  for (std::uint64_t k : poss(r, c.antecedent)) {
    const LevelSlice slice = *level(r, k);
    // Least n that makes the consequent believed among the antecedent's
    // states of this level: their violating minimum must end up strictly
    // above their satisfying minimum.
    std::optional<std::uint64_t> min_with;     // antecedent & consequent
    std::optional<std::uint64_t> min_without;  // antecedent & !consequent
    for (const auto& [s, p] : slice.parts) {
      if (!sat(s, c.antecedent, r.vocabulary())) continue;
      auto& bucket =
          sat(s, c.consequent, r.vocabulary()) ? min_with : min_without;
      bucket = bucket ? std::min(*bucket, p) : p;
    }
    if (!min_with) {
      outcomes.push_back({k, std::nullopt});
      continue;
    }
    std::uint64_t n = 0;
    if (min_without && *min_with >= *min_without) {
      n = *min_with - *min_without + 1;
    }
    shift_level(values, slice, c.consequent, r.vocabulary(), n);
    outcomes.push_back({k, n});
  }
  return CondReviseResult{Ranking(r.vocabulary_ptr(), std::move(values)),
                          std::move(outcomes)};
}

bool ramsey_holds(const Ranking& r, const Conditional& c,
                  const Ranking& report) {
  const Ranking revised = cond_revise(r, c).result;
  const Ranking after = star(revised, report);
  for (State s : bel(after)) {
    if (!sat(s, c.consequent, after.vocabulary())) return false;
  }
  return true;
}

std::optional<std::uint64_t> istar_index(const Ranking& r, const Ranking& obs,
                                         const Formula& f,
                                         std::uint64_t bound) {
  require_same_vocabulary(r, obs);
  if (bel(obs) != models(r.vocabulary(), f)) {
    throw NotStrengtheningError(
        "observation does not believe exactly the target formula");
  }
  Ranking cur = r;
  for (std::uint64_t n = 0;; ++n) {
    bool believed = true;
    for (State s : bel(cur)) {
      if (!sat(s, f, cur.vocabulary())) {
        believed = false;
        break;
      }
    }
    if (believed) return n;
    if (n == bound) return std::nullopt;
    cur = star(cur, obs);
  }
}

Preorder::Preorder(std::shared_ptr<const Vocabulary> vocab,
                   std::vector<std::vector<State>> tiers)
    : vocab_(std::move(vocab)), tiers_(std::move(tiers)) {
  if (!vocab_) throw InvalidArgumentError("preorder requires a vocabulary");
  std::vector<bool> seen(vocab_->state_count(), false);
  std::size_t total = 0;
  for (const auto& tier : tiers_) {
    if (tier.empty()) throw InvalidArgumentError("preorder tier is empty");
    for (State s : tier) {
      if (s >= vocab_->state_count() || seen[s]) {
        throw InvalidArgumentError("preorder is not a partition of the states");
      }
      seen[s] = true;
      ++total;
    }
  }
  if (total != vocab_->state_count()) {
    throw InvalidArgumentError("preorder must cover every state");
  }
}

Preorder Preorder::from_ranking(const Ranking& r) {
  std::map<Ord2, std::vector<State>> groups;
  for (State s = 0; s < r.state_count(); ++s) groups[r.at(s)].push_back(s);
  std::vector<std::vector<State>> tiers;
  tiers.reserve(groups.size());
  for (auto& [v, states] : groups) tiers.push_back(std::move(states));
  return Preorder(r.vocabulary_ptr(), std::move(tiers));
}

Ranking Preorder::canonical_ranking() const {
  std::vector<Ord2> values(vocab_->state_count());
  for (std::size_t i = 0; i < tiers_.size(); ++i) {
    for (State s : tiers_[i]) values[s] = Ord2::finite(i);
  }
  return Ranking(vocab_, std::move(values));
}

bool operator==(const Preorder& a, const Preorder& b) {
  return *a.vocab_ == *b.vocab_ && a.tiers_ == b.tiers_;
}

Preorder improvement_op(const Preorder& p, const Formula& f, std::uint64_t n) {
  if (n == 0) {
    throw InvalidArgumentError("improvement requires strength >= 1");
  }
  const Ranking canonical = p.canonical_ranking();
  const Ranking moved = star(
      canonical,
      strengthening(p.vocabulary_ptr(), f, Ord2::finite(n)));
  return Preorder::from_ranking(moved);
}

Ranking kern_isberner_revise(const Ranking& r, const Conditional& c) {
  for (State s = 0; s < r.state_count(); ++s) {
    if (!r.at(s).is_finite()) {
      throw InfiniteValuesError(
          "conditional revision on finite rankings requires finite values");
    }
  }
  const Vocabulary& v = r.vocabulary();
  const Formula both = Formula::conj(c.antecedent, c.consequent);
  const std::vector<State> both_states = models(v, both);
  if (both_states.empty()) {
    throw UnsatisfiableError(
        "antecedent and consequent are jointly unsatisfiable");
  }
  auto rank_of = [&](const std::vector<State>& states) {
    std::uint64_t m = r.at(states.front()).shift;
    for (State s : states) m = std::min(m, r.at(s).shift);
    return m;
  };
  const std::uint64_t rank_both = rank_of(both_states);
  const std::uint64_t rank_ante = rank_of(models(v, c.antecedent));
  // models(antecedent & consequent) is a subset of models(antecedent), so the
  // first branch cannot fire; the rule is kept in its two-case form.
  const std::int64_t alpha = rank_both < rank_ante ? -1 : 0;
  const std::uint64_t conditional_rank = rank_both - rank_ante;

  std::vector<Ord2> values(r.state_count());
  for (State s = 0; s < r.state_count(); ++s) {
    const std::uint64_t p = r.at(s).shift;
    if (!sat(s, c.antecedent, v)) {
      values[s] = Ord2::finite(p);
    } else if (sat(s, c.consequent, v)) {
      values[s] = Ord2::finite(p - conditional_rank);
    } else {
      values[s] =
          Ord2::finite(static_cast<std::uint64_t>(p + alpha + 1));
    }
  }
  return finite_zeroing(Ranking(r.vocabulary_ptr(), std::move(values)));
}

}  // namespace ocf
