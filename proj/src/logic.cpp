#include "ocf/logic.hpp"

#include <cctype>
#include <set>

#include "ocf/errors.hpp"

namespace ocf {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(head) && s[0] != '_') return false;
  for (char c : s.substr(1)) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_') return false;
  }
  return true;
}

bool is_reserved(std::string_view s) {
  return s == "true" || s == "false" || s == "else";
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty() || atoms_.size() > 20) {
    throw InvalidArgumentError("vocabulary must have between 1 and 20 atoms");
  }
  std::set<std::string_view> seen;
  for (const auto& a : atoms_) {
    if (!is_identifier(a)) {
      throw InvalidArgumentError("atom name '" + a + "' is not an identifier");
    }
    if (is_reserved(a)) {
      throw InvalidArgumentError("atom name '" + a + "' is reserved");
    }
    if (!seen.insert(a).second) {
      throw InvalidArgumentError("duplicate atom name '" + a + "'");
    }
  }
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == name) return i;
  }
  return std::nullopt;
}

std::string state_to_string(State s, const Vocabulary& v) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!state_has(s, i)) continue;
    if (!first) out += ", ";
    out += v.atoms()[i];
    first = false;
  }
  out += "}";
  return out;
}

struct Formula::Node {
  Kind kind;
  std::string name;                 // Atom
  std::shared_ptr<const Node> a;    // Not child / binary lhs
  std::shared_ptr<const Node> b;    // binary rhs
};

Formula Formula::truth() {
  return Formula(std::make_shared<Node>(Node{Kind::True, {}, nullptr, nullptr}));
}

Formula Formula::falsity() {
  return Formula(std::make_shared<Node>(Node{Kind::False, {}, nullptr, nullptr}));
}

Formula Formula::atom(std::string name) {
  return Formula(
      std::make_shared<Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
}

Formula Formula::negate(Formula f) {
  return Formula(
      std::make_shared<Node>(Node{Kind::Not, {}, std::move(f.node_), nullptr}));
}

Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<Node>(
      Node{Kind::And, {}, std::move(a.node_), std::move(b.node_)}));
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<Node>(
      Node{Kind::Or, {}, std::move(a.node_), std::move(b.node_)}));
}

Formula Formula::implies(Formula a, Formula b) {
  return Formula(std::make_shared<Node>(
      Node{Kind::Implies, {}, std::move(a.node_), std::move(b.node_)}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::atom_name() const { return node_->name; }

Formula Formula::child() const { return Formula(node_->a); }
Formula Formula::lhs() const { return Formula(node_->a); }
Formula Formula::rhs() const { return Formula(node_->b); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return true;
    case Formula::Kind::Atom:
      return a.atom_name() == b.atom_name();
    case Formula::Kind::Not:
      return a.child() == b.child();
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

namespace {

enum class TokKind { Ident, True, False, Not, And, Or, Implies, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex_formula(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    auto u = static_cast<unsigned char>(s[i]);
    if (std::isspace(u)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (s[i] == '!') {
      out.push_back({TokKind::Not, "!", start});
      ++i;
    } else if (s[i] == '&') {
      out.push_back({TokKind::And, "&", start});
      ++i;
    } else if (s[i] == '|') {
      out.push_back({TokKind::Or, "|", start});
      ++i;
    } else if (s[i] == '(') {
      out.push_back({TokKind::LParen, "(", start});
      ++i;
    } else if (s[i] == ')') {
      out.push_back({TokKind::RParen, ")", start});
      ++i;
    } else if (s[i] == '-') {
      if (i + 1 >= s.size() || s[i + 1] != '>') {
        throw ParseError("expected '->'", start);
      }
      out.push_back({TokKind::Implies, "->", start});
      i += 2;
    } else if (std::isalpha(u) || s[i] == '_') {
      std::size_t end = i;
      while (end < s.size()) {
        auto c = static_cast<unsigned char>(s[end]);
        if (!std::isalnum(c) && s[end] != '_') break;
        ++end;
      }
      std::string word(s.substr(i, end - i));
      if (word == "true") {
        out.push_back({TokKind::True, std::move(word), start});
      } else if (word == "false") {
        out.push_back({TokKind::False, std::move(word), start});
      } else {
        out.push_back({TokKind::Ident, std::move(word), start});
      }
      i = end;
    } else {
      throw ParseError(std::string("unexpected character '") + s[i] +
                           "' in formula",
                       start);
    }
  }
  out.push_back({TokKind::End, "", s.size()});
  return out;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula parse() {
    Formula f = implies_expr();
    if (peek().kind != TokKind::End) {
      throw ParseError("unexpected token '" + peek().text + "' in formula",
                       peek().pos);
    }
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  bool eat(TokKind k) {
    if (peek().kind == k) {
      ++i_;
      return true;
    }
    return false;
  }

  Formula implies_expr() {
    Formula lhs = or_expr();
    if (eat(TokKind::Implies)) {
      return Formula::implies(std::move(lhs), implies_expr());
    }
    return lhs;
  }

  Formula or_expr() {
    Formula f = and_expr();
    while (eat(TokKind::Or)) f = Formula::disj(std::move(f), and_expr());
    return f;
  }

  Formula and_expr() {
    Formula f = unary_expr();
    while (eat(TokKind::And)) f = Formula::conj(std::move(f), unary_expr());
    return f;
  }

  Formula unary_expr() {
    if (eat(TokKind::Not)) return Formula::negate(unary_expr());
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::True:
        take();
        return Formula::truth();
      case TokKind::False:
        take();
        return Formula::falsity();
      case TokKind::Ident:
        return Formula::atom(take().text);
      case TokKind::LParen: {
        take();
        Formula f = implies_expr();
        if (!eat(TokKind::RParen)) {
          throw ParseError("expected ')' in formula", peek().pos);
        }
        return f;
      }
      default:
        throw ParseError("unexpected token '" + t.text + "' in formula", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

bool is_leaf(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Atom:
      return true;
    default:
      return false;
  }
}

std::string wrapped(const Formula& f) {
  if (is_leaf(f)) return to_string(f);
  return "(" + to_string(f) + ")";
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return;
    case Formula::Kind::Atom:
      out.insert(f.atom_name());
      return;
    case Formula::Kind::Not:
      collect_atoms(f.child(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  return FormulaParser(lex_formula(text)).parse();
}

std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return "true";
    case Formula::Kind::False:
      return "false";
    case Formula::Kind::Atom:
      return f.atom_name();
    case Formula::Kind::Not:
      return "!" + wrapped(f.child());
    case Formula::Kind::And:
      return wrapped(f.lhs()) + " & " + wrapped(f.rhs());
    case Formula::Kind::Or:
      return wrapped(f.lhs()) + " | " + wrapped(f.rhs());
    case Formula::Kind::Implies:
      return wrapped(f.lhs()) + " -> " + wrapped(f.rhs());
  }
  return {};
}

bool sat(State s, const Formula& f, const Vocabulary& v) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom: {
      auto idx = v.index_of(f.atom_name());
      if (!idx) {
        throw UnknownAtomError("unknown atom '" + f.atom_name() + "'");
      }
      return state_has(s, *idx);
    }
    case Formula::Kind::Not:
      return !sat(s, f.child(), v);
    case Formula::Kind::And:
      return sat(s, f.lhs(), v) && sat(s, f.rhs(), v);
    case Formula::Kind::Or:
      return sat(s, f.lhs(), v) || sat(s, f.rhs(), v);
    case Formula::Kind::Implies:
      return !sat(s, f.lhs(), v) || sat(s, f.rhs(), v);
  }
  return false;
}

std::vector<State> models(const Vocabulary& v, const Formula& f) {
  std::set<std::string> names;
  collect_atoms(f, names);
  for (const auto& n : names) {
    if (!v.index_of(n)) throw UnknownAtomError("unknown atom '" + n + "'");
  }
  std::vector<State> out;
  for (State s = 0; s < v.state_count(); ++s) {
    if (sat(s, f, v)) out.push_back(s);
  }
  return out;
}

}  // namespace ocf
