#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ocf {

// A state is an index into the truth-table of the vocabulary: bit i of the
// index gives the value of atom i.
using State = std::uint32_t;

// An ordered list of distinct atom names (1..20, identifier syntax). The atom
// order is fixed at construction and determines state indexing everywhere.
class Vocabulary {
 public:
  explicit Vocabulary(std::vector<std::string> atoms);

  std::size_t size() const noexcept { return atoms_.size(); }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  State state_count() const noexcept {
    return static_cast<State>(1u << atoms_.size());
  }

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<std::string> atoms_;
};

constexpr bool state_has(State s, std::size_t atom_index) noexcept {
  return (s >> atom_index) & 1u;
}

// "{heavy, fly}"; atoms listed in vocabulary order, "{}" for the empty state.
std::string state_to_string(State s, const Vocabulary& v);

// Immutable propositional formula. Implication is kept as a node but always
// evaluates as !lhs | rhs.
class Formula {
 public:
  enum class Kind : std::uint8_t { True, False, Atom, Not, And, Or, Implies };

  static Formula truth();
  static Formula falsity();
  static Formula atom(std::string name);
  static Formula negate(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);

  Kind kind() const noexcept;
  const std::string& atom_name() const;  // Atom only
  Formula child() const;                 // Not only
  Formula lhs() const;                   // And/Or/Implies
  Formula rhs() const;

  // Structural equality (same shape, same atom names).
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Grammar: atoms, "true", "false", "!", "&", "|", "->" (right associative),
// parentheses. Precedence: ! > & > | > ->. Throws ParseError with the
// character position of the offending token.
Formula parse_formula(std::string_view text);

// Fully parenthesized canonical form; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

// Truth at a state. Throws UnknownAtomError for atoms outside the vocabulary.
bool sat(State s, const Formula& f, const Vocabulary& v);

// All satisfying states, ascending. Unknown atoms are reported even when the
// formula would be decidable without them.
std::vector<State> models(const Vocabulary& v, const Formula& f);

}  // namespace ocf
