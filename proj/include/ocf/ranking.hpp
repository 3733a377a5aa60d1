#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ocf/logic.hpp"
#include "ocf/ordinal.hpp"

namespace ocf {

// A ranking assigns an ordinal below w^2 to every state of a vocabulary.
// Immutable value type; a ranking with some state at 0 is a conditional
// function (CF), otherwise it is free.
class Ranking {
 public:
  Ranking(std::shared_ptr<const Vocabulary> vocab, std::vector<Ord2> values);

  static Ranking constant(std::shared_ptr<const Vocabulary> vocab, Ord2 value);

  Ord2 at(State s) const { return values_[s]; }
  State state_count() const {
    return static_cast<State>(values_.size());
  }
  const std::vector<Ord2>& values() const noexcept { return values_; }
  const Vocabulary& vocabulary() const noexcept { return *vocab_; }
  const std::shared_ptr<const Vocabulary>& vocabulary_ptr() const noexcept {
    return vocab_;
  }

  bool is_cf() const;

  // Same vocabulary contents and identical values at every state.
  friend bool operator==(const Ranking& a, const Ranking& b);

 private:
  std::shared_ptr<const Vocabulary> vocab_;
  std::vector<Ord2> values_;
};

// ----- raw value-tuple helpers -------------------------------------------
// The algebra of rankings is pointwise; these operate on bare value tuples so
// that exhaustive scanners can drive the very same arithmetic on universes
// whose size is not a power of two.

Ord2 min_of(std::span<const Ord2> values);

// Renormalization: with (k, c) the minimum, a state at w*m + p maps to
// w*(m-k) + p when m > k and to p - c when m == k. Each state keeps its own
// finite part when its degree drops; only the new bottom level is shifted.
std::vector<Ord2> zero_values(std::vector<Ord2> values);

// ----- ranking operations -------------------------------------------------

Ord2 min_value(const Ranking& r);
std::uint64_t deg(const Ranking& r);  // degree of the minimum
std::uint64_t fin(const Ranking& r);  // shift of the minimum

Ranking finite_zeroing(const Ranking& r);

// States at exactly rank 0, ascending. Empty for free rankings.
std::vector<State> bel(const Ranking& r);

// Least value among states outside bel(r); empty when everything is believed.
std::optional<Ord2> degree_of_strength(const Ranking& r);

// Same strict order on all state pairs.
bool equivalent(const Ranking& a, const Ranking& b);

// The finite parts of the states sitting at degree k.
struct LevelSlice {
  std::uint64_t level = 0;
  std::vector<std::pair<State, std::uint64_t>> parts;  // ascending by state

  std::uint64_t min_part() const;
  std::vector<State> minimizers() const;
};

// Empty optional when no state sits at degree k.
std::optional<LevelSlice> level(const Ranking& r, std::uint64_t k);

// All degrees k such that some state of degree k satisfies f, ascending.
std::vector<std::uint64_t> poss(const Ranking& r, const Formula& f);

// True iff every minimizer of the level-k slice satisfies f.
// Throws EmptyLevelError when level k is unoccupied.
bool believed_at_level(const Ranking& r, std::uint64_t k, const Formula& f);

// One finite CF per occupied level: parts shifted down by the slice minimum,
// with that minimum recorded so the original ranking can be reassembled.
struct LevelComponent {
  std::uint64_t level = 0;
  std::uint64_t base_shift = 0;
  std::vector<std::pair<State, std::uint64_t>> parts;
};

std::vector<LevelComponent> decompose(const Ranking& r);  // requires a CF

// ----- text format ---------------------------------------------------------

// One line of a ranking block: "FORMULA => ORD", or "else => ORD" (no guard).
struct RankingRule {
  std::optional<Formula> guard;
  Ord2 value;
};

RankingRule parse_ranking_rule(std::string_view line);

// First-match rule semantics. The final rule must be the (mandatory) "else".
Ranking ranking_from_rules(std::shared_ptr<const Vocabulary> vocab,
                           const std::vector<RankingRule>& rules);

// One "STATE => ORD" line per state, sorted by (value, state index).
std::string ranking_table(const Ranking& r);

}  // namespace ocf
