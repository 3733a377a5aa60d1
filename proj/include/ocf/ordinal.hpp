#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ocf {

// An ordinal below w^2, i.e. w*degree + shift. Comparison is lexicographic
// (degree, then shift), which is exactly the ordinal order.
struct Ord2 {
  std::uint64_t degree = 0;
  std::uint64_t shift = 0;

  friend constexpr auto operator<=>(const Ord2&, const Ord2&) = default;

  constexpr bool is_finite() const noexcept { return degree == 0; }
  static constexpr Ord2 zero() noexcept { return Ord2{0, 0}; }
  static constexpr Ord2 finite(std::uint64_t c) noexcept { return Ord2{0, c}; }
  static constexpr Ord2 omega() noexcept { return Ord2{1, 0}; }
};

// Ordinal addition. Not commutative: a finite left addend is absorbed by an
// infinite right addend (1 + w = w), while w + 1 > w. Throws OverflowError
// when degree or shift would exceed the word size.
Ord2 add(Ord2 a, Ord2 b);

// Least x with add(b, x) == a; empty when a < b (no solution exists).
// Below w^2 this x is in fact the only solution.
std::optional<Ord2> left_sub(Ord2 a, Ord2 b);

std::strong_ordering compare(Ord2 a, Ord2 b) noexcept;

// Literals: "C", "w", "w+C", "w*K", "w*K+C". Printing is canonical (degree 1
// prints as "w"/"w+C") and parse(to_string(v)) == v for every value.
std::string to_string(Ord2 v);
Ord2 parse_ordinal(std::string_view text);

}  // namespace ocf
