#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ocf/ranking.hpp"
#include "ocf/revision.hpp"

// Self-audit machinery: a second reading of the renormalization step, an
// exhaustive search over tiny universes for the algebraic laws the revision
// operator does and does not satisfy, and an independent decision procedure
// for near-counterfactuality. Everything here is deterministic so that scan
// output can be committed and diffed.

namespace ocf {

// Alternative renormalization: with (k, c) the minimum, a state at w*m + p
// maps to w*(m-k) + c when m > k -- every level above the new bottom is
// flattened onto the old minimum's finite part -- and to p - c when m == k.
// Coincides with zero_values exactly on finite tuples.
std::vector<Ord2> zero_values_flat(std::vector<Ord2> values);

// Revision on bare value tuples (no CF validation; scanners enumerate CFs by
// construction). star_values renormalizes with zero_values, star_values_flat
// with zero_values_flat.
std::vector<Ord2> star_values(const std::vector<Ord2>& a,
                              const std::vector<Ord2>& b);
std::vector<Ord2> star_values_flat(const std::vector<Ord2>& a,
                                   const std::vector<Ord2>& b);

// star with the flattening renormalization; same operand checks as star.
Ranking star_flat(const Ranking& r, const Ranking& obs);

// Decides near-counterfactuality by brute force over observations instead of
// by inspecting degrees: f is nearly counterfactual iff no finite-strength
// observation makes f believed in one step. Searches two families (single
// surviving state, and every state subset at every strength up to one past
// the largest bottom-level part) and insists they agree. Vocabularies of more
// than four atoms are rejected with UniverseTooLargeError.
bool oracle_nearly_cf(const Ranking& r, const Formula& f);

// An x with star(r, x) constantly zero: the pointwise sums all land on
// w*K + C, where K is the largest degree in r and C the largest finite part
// among the degree-K states. The result is itself a CF. Verified on the way
// out; failure would be a library bug and raises Error.
Ranking right_inverse(const Ranking& r);
std::vector<Ord2> right_inverse_values(const std::vector<Ord2>& values);

// "[0, w+1, w*2]" -- bracketed, comma-separated ordinal literals. The scan
// reports print witnesses in this shape; parse_values_literal reads them back
// so counterexamples can be replayed from a committed report.
std::string values_literal(std::span<const Ord2> values);
std::vector<Ord2> parse_values_literal(std::string_view text);

struct ScanCheck {
  std::string variant;  // "keep-parts" / "flatten-parts"; empty for agreement
  std::string name;
  bool holds = false;
  std::uint64_t cases = 0;  // instances evaluated (stops at first failure)
  std::string detail;       // rendered: counts when ok, witness when not
  std::vector<std::vector<Ord2>> witness;  // offending tuples, in check order
};

struct ScanReport {
  std::vector<std::string> header;
  std::vector<ScanCheck> checks;

  // Header lines, then one "VARIANT NAME: ok|fail (DETAIL)" line per check.
  // Newline-terminated; byte-identical across runs.
  std::string to_text() const;
};

// Enumerates every value tuple over `states` states with degree <= dbound and
// finite part <= sbound (ascending odometer, state 0 most significant), keeps
// the conditional functions, and checks closure, identity, associativity,
// commutativity, right inverses and two-sided inverses for both
// renormalization variants. Each failed check records the first
// counterexample in enumeration order. Bounds: states <= 3, dbound <= 2,
// sbound <= 2 (UniverseTooLargeError beyond).
ScanReport axiom_scan(std::uint32_t states, std::uint64_t dbound,
                      std::uint64_t sbound);

// Enumerates finite CF tuples with parts <= vbound and confirms that star
// agrees with the sum-then-subtract reading on every ordered pair, and that
// both renormalization variants coincide there. Bounds: states <= 3,
// vbound <= 3.
ScanReport agreement_scan(std::uint32_t states, std::uint64_t vbound);

}  // namespace ocf
