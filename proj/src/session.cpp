#include "ocf/session.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ocf/errors.hpp"
#include "ocf/verify.hpp"

namespace ocf {

namespace {

constexpr std::string_view kSpace = " \t\r\n";

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

bool is_ident_start(char c) {
  return c == '_' || std::isalpha(static_cast<unsigned char>(c));
}

bool is_ident_char(char c) {
  return c == '_' || std::isalnum(static_cast<unsigned char>(c));
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

// Leading whitespace-delimited word; advances rest past it.
std::string_view take_word(std::string_view& rest) {
  auto b = rest.find_first_not_of(kSpace);
  if (b == std::string_view::npos) {
    rest = {};
    return {};
  }
  auto e = rest.find_first_of(kSpace, b);
  auto word = rest.substr(b, e == std::string_view::npos ? e : e - b);
  rest = e == std::string_view::npos ? std::string_view{} : rest.substr(e);
  return word;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  while (true) {
    auto w = take_word(s);
    if (w.empty()) return words;
    words.push_back(w);
  }
}

// Leading expression token: ends at the first whitespace outside parentheses,
// so call forms with internal spaces stay in one piece.
std::string_view take_expr_token(std::string_view& rest) {
  auto b = rest.find_first_not_of(kSpace);
  if (b == std::string_view::npos)
    throw ParseError("expected a ranking expression", 0);
  std::size_t depth = 0;
  std::size_t i = b;
  for (; i < rest.size(); ++i) {
    char c = rest[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (depth == 0) throw ParseError("unbalanced ')' in expression", i);
      --depth;
    } else if (depth == 0 && kSpace.find(c) != std::string_view::npos) {
      break;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in expression", b);
  auto token = rest.substr(b, i - b);
  rest = rest.substr(i);
  return token;
}

// Splits "a, star(b, c), d" at the commas outside parentheses.
std::vector<std::string_view> split_top_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  if (trim(s).empty()) return parts;
  std::size_t depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (depth == 0) throw ParseError("unbalanced ')' in arguments", i);
      --depth;
    } else if (c == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(s.substr(start)));
  for (auto part : parts)
    if (part.empty()) throw ParseError("empty argument", 0);
  return parts;
}

std::uint64_t parse_nat(std::string_view text, std::string_view what) {
  auto t = trim(text);
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec == std::errc::result_out_of_range)
    throw OverflowError(std::string(what) + " is out of range");
  if (ec != std::errc() || p != t.data() + t.size())
    throw ParseError(
        "expected a number for " + std::string(what) + ", got '" +
            std::string(t) + "'",
        0);
  return v;
}

// "PSI | PHI", split at the last '|' outside parentheses so that PHI, which
// is usually the simpler side, never needs extra brackets.
Conditional parse_conditional(std::string_view text) {
  std::size_t depth = 0;
  std::size_t bar = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    else if (c == ')' && depth > 0) --depth;
    else if (c == '|' && depth == 0) bar = i;
  }
  if (bar == std::string_view::npos)
    throw ParseError("conditional must look like 'PSI | PHI'", 0);
  auto psi = trim(text.substr(0, bar));
  auto phi = trim(text.substr(bar + 1));
  if (psi.empty() || phi.empty())
    throw ParseError("conditional must look like 'PSI | PHI'", bar);
  return Conditional{parse_formula(psi), parse_formula(phi)};
}

void validate_name(std::string_view name) {
  bool ok = !name.empty() && is_ident_start(name[0]) &&
            std::all_of(name.begin(), name.end(), is_ident_char);
  if (!ok)
    throw ParseError("'" + std::string(name) + "' is not a valid name", 0);
  if (name == "true" || name == "false" || name == "else")
    throw ParseError("'" + std::string(name) + "' is a reserved word", 0);
}

std::string minterm_text(State s, const Vocabulary& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!out.empty()) out += " & ";
    if (!state_has(s, i)) out += '!';
    out += v.atoms()[i];
  }
  return out;
}

std::string joined_states(const std::vector<State>& states,
                          const Vocabulary& v) {
  std::string out;
  for (State s : states) {
    if (!out.empty()) out += ' ';
    out += state_to_string(s, v);
  }
  return out;
}

const char* bool_text(bool b) { return b ? "true\n" : "false\n"; }

}  // namespace

const std::vector<CommandSpec>& command_table() {
  static const std::vector<CommandSpec> table = {
      {"atoms: NAME...", "declare the vocabulary and reset the session", {}},
      {"ranking NAME { FORMULA => ORD ... else => ORD }",
       "define a ranking by first-match rules (block form)", {}},
      {"let NAME = EXPR", "bind the value of a ranking expression", {}},
      {"let NAME = star(A, B)", "revise A by observation B",
       {RevisionOp::Star}},
      {"let NAME = barplus(A, B)",
       "pointwise sum renormalized by its minimum", {RevisionOp::BarPlus}},
      {"let NAME = zero(A)", "subtract the finite part of the minimum", {}},
      {"let NAME = iterstar(A, B, N)",
       "apply star with the same observation N times",
       {RevisionOp::IterateStar}},
      {"let NAME = strengthen(PHI, ORD)",
       "two-valued ranking: models of PHI at 0, everything else at ORD",
       {RevisionOp::Strengthening}},
      {"let NAME = conditionalize(A, PHI, D)",
       "finite two-valued revision by (PHI, D)",
       {RevisionOp::Conditionalize}},
      {"let NAME = improve(A, PHI, N)",
       "one improvement step of strength N on the induced preorder",
       {RevisionOp::ImprovementOp}},
      {"let NAME = condstrengthen(A, N, PSI | PHI)",
       "push states violating PSI up by N inside every PHI level",
       {RevisionOp::CondStrengthen}},
      {"let NAME = condrevise(A, PSI | PHI)",
       "least level-wise strengthening that makes PSI believed where PHI is "
       "possible",
       {RevisionOp::CondRevise}},
      {"let NAME = ki(A, PSI | PHI)",
       "conditional revision for strictly finite rankings",
       {RevisionOp::KernIsberner}},
      {"show EXPR", "print the ranking as a table", {}},
      {"bel EXPR", "print the believed states", {}},
      {"rank EXPR FORMULA", "least value over the formula's models", {}},
      {"degstrength EXPR", "least value outside the believed states", {}},
      {"nearlycf EXPR FORMULA",
       "whether no state of rank 0 satisfies the formula",
       {RevisionOp::IsNearlyCF}},
      {"poss EXPR FORMULA", "degrees at which the formula is possible", {}},
      {"istar EXPR FORMULA N [BOUND]",
       "least repetition count after which the formula is believed",
       {RevisionOp::IstarIndex}},
      {"ramsey EXPR (PSI | PHI) EXPR",
       "revise by the conditional, add the report, test belief in PSI",
       {RevisionOp::RamseyHolds}},
      {"equiv EXPR EXPR", "same strict order on all state pairs", {}},
      {"equal EXPR EXPR", "identical values at every state", {}},
      {"decompose EXPR", "per-level finite components with base shifts", {}},
      {"scan axioms STATES DEGREE SHIFT",
       "exhaustive algebraic-law scan over a small universe", {}},
      {"scan agreement STATES BOUND",
       "compare renormalization variants on finite universes", {}},
      {"save PATH", "write the vocabulary and rankings to a session file", {}},
      {"load PATH", "replace the session with a saved file", {}},
      {"quit", "end the session", {}},
  };
  return table;
}

std::string usage_text() {
  std::string out = "commands:\n";
  for (const auto& spec : command_table()) {
    out += "  ";
    out += spec.form;
    out += "\n      ";
    out += spec.summary;
    out += '\n';
  }
  return out;
}

Session::Session() = default;

void Session::require_vocab() const {
  if (!vocab_) throw Error("no vocabulary declared (start with 'atoms: ...')");
}

const Ranking& Session::named(std::string_view name) const {
  auto it = rankings_.find(std::string(name));
  if (it == rankings_.end())
    throw Error("unknown ranking '" + std::string(name) + "'");
  return it->second;
}

std::string Session::execute_line(std::string_view line) {
  if (finished_) return {};
  auto t = trim(line);
  std::string out = in_block_ ? block_line(t) : dispatch(t);
  if (!t.empty() && t[0] != '#') transcript_.emplace_back(t);
  return out;
}

std::string Session::block_line(std::string_view t) {
  if (t.empty() || t[0] == '#') return {};
  try {
    if (t == "}") {
      Ranking r = ranking_from_rules(vocab_, block_rules_);
      in_block_ = false;
      block_rules_.clear();
      rankings_.insert_or_assign(block_name_, std::move(r));
      return {};
    }
    block_rules_.push_back(parse_ranking_rule(t));
    return {};
  } catch (...) {
    in_block_ = false;
    block_rules_.clear();
    throw;
  }
}

Ranking Session::eval_expr(std::string_view text) const {
  auto t = trim(text);
  if (t.empty()) throw ParseError("expected a ranking expression", 0);
  if (!is_ident_start(t[0]))
    throw ParseError("expected a ranking name or operation", 0);
  std::size_t i = 1;
  while (i < t.size() && is_ident_char(t[i])) ++i;
  auto name = t.substr(0, i);
  auto rest = trim(t.substr(i));
  if (rest.empty()) return named(name);
  if (rest[0] != '(')
    throw ParseError("unexpected text after '" + std::string(name) + "'", i);
  std::size_t depth = 0;
  std::size_t close = std::string_view::npos;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    if (rest[j] == '(') {
      ++depth;
    } else if (rest[j] == ')') {
      if (--depth == 0) {
        close = j;
        break;
      }
    }
  }
  if (close == std::string_view::npos)
    throw ParseError("unbalanced '(' in expression", 0);
  if (!trim(rest.substr(close + 1)).empty())
    throw ParseError("unexpected text after ')'", close + 1);
  return eval_call(name, rest.substr(1, close - 1));
}

Ranking Session::eval_call(std::string_view name,
                           std::string_view args_text) const {
  auto args = split_top_commas(args_text);
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw ParseError(std::string(name) + " takes " + std::to_string(n) +
                           (n == 1 ? " argument" : " arguments"),
                       0);
  };
  if (name == "star") {
    need(2);
    return star(eval_expr(args[0]), eval_expr(args[1]));
  }
  if (name == "barplus") {
    need(2);
    return bar_plus(eval_expr(args[0]), eval_expr(args[1]));
  }
  if (name == "zero") {
    need(1);
    return finite_zeroing(eval_expr(args[0]));
  }
  if (name == "iterstar") {
    need(3);
    return iterate_star(eval_expr(args[0]), eval_expr(args[1]),
                        parse_nat(args[2], "iterstar count"));
  }
  if (name == "strengthen") {
    need(2);
    require_vocab();
    return strengthening(vocab_, parse_formula(args[0]),
                         parse_ordinal(args[1]));
  }
  if (name == "conditionalize") {
    need(3);
    return conditionalize(eval_expr(args[0]), parse_formula(args[1]),
                          parse_nat(args[2], "conditionalize strength"));
  }
  if (name == "improve") {
    need(3);
    auto p = Preorder::from_ranking(eval_expr(args[0]));
    return improvement_op(p, parse_formula(args[1]),
                          parse_nat(args[2], "improve strength"))
        .canonical_ranking();
  }
  if (name == "condstrengthen") {
    need(3);
    return cond_strengthen(eval_expr(args[0]),
                           parse_nat(args[1], "condstrengthen strength"),
                           parse_conditional(args[2]));
  }
  if (name == "condrevise") {
    need(2);
    return cond_revise(eval_expr(args[0]), parse_conditional(args[1])).result;
  }
  if (name == "ki") {
    need(2);
    return kern_isberner_revise(eval_expr(args[0]),
                                parse_conditional(args[1]));
  }
  throw ParseError("unknown operation '" + std::string(name) + "'", 0);
}

std::string Session::dispatch(std::string_view t) {
  if (t.empty() || t[0] == '#') return {};
  std::string_view rest = t;
  auto cmd = take_word(rest);
  rest = trim(rest);

  if (cmd == "atoms:") {
    auto words = split_words(rest);
    if (words.empty())
      throw ParseError("atoms: requires at least one atom name", 0);
    std::vector<std::string> names(words.begin(), words.end());
    auto fresh = std::make_shared<const Vocabulary>(std::move(names));
    vocab_ = std::move(fresh);
    rankings_.clear();
    return {};
  }

  if (cmd == "ranking") {
    require_vocab();
    std::string_view tail = rest;
    auto name = take_word(tail);
    validate_name(name);
    if (trim(tail) != "{")
      throw ParseError("ranking block must open with '{' on the same line", 0);
    in_block_ = true;
    block_name_ = std::string(name);
    block_rules_.clear();
    return {};
  }

  if (cmd == "let") {
    auto eq = rest.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("let requires 'let NAME = EXPR'", 0);
    auto name = trim(rest.substr(0, eq));
    auto expr = trim(rest.substr(eq + 1));
    validate_name(name);
    if (expr.empty()) throw ParseError("let requires an expression", eq);
    Ranking r = eval_expr(expr);
    rankings_.insert_or_assign(std::string(name), std::move(r));
    return {};
  }

  if (cmd == "show") return ranking_table(eval_expr(rest));

  if (cmd == "bel") {
    Ranking r = eval_expr(rest);
    auto states = bel(r);
    if (states.empty()) return "(none)\n";
    return joined_states(states, r.vocabulary()) + "\n";
  }

  if (cmd == "rank") {
    auto expr = take_expr_token(rest);
    auto f_text = trim(rest);
    if (f_text.empty())
      throw ParseError("rank requires 'rank EXPR FORMULA'", 0);
    Ranking r = eval_expr(expr);
    auto ms = models(r.vocabulary(), parse_formula(f_text));
    if (ms.empty()) return "(no models)\n";
    Ord2 best = r.at(ms[0]);
    for (State s : ms) best = std::min(best, r.at(s));
    return to_string(best) + "\n";
  }

  if (cmd == "degstrength") {
    auto d = degree_of_strength(eval_expr(rest));
    return d ? to_string(*d) + "\n" : "(none)\n";
  }

  if (cmd == "nearlycf") {
    auto expr = take_expr_token(rest);
    auto f_text = trim(rest);
    if (f_text.empty())
      throw ParseError("nearlycf requires 'nearlycf EXPR FORMULA'", 0);
    Ranking r = eval_expr(expr);
    return bool_text(is_nearly_cf(r, parse_formula(f_text)));
  }

  if (cmd == "poss") {
    auto expr = take_expr_token(rest);
    auto f_text = trim(rest);
    if (f_text.empty())
      throw ParseError("poss requires 'poss EXPR FORMULA'", 0);
    Ranking r = eval_expr(expr);
    auto degrees = poss(r, parse_formula(f_text));
    std::string out = "{";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(degrees[i]);
    }
    return out + "}\n";
  }

  if (cmd == "istar") {
    auto expr = take_expr_token(rest);
    auto words = split_words(rest);
    std::size_t numeric = 0;
    while (numeric < 2 && numeric < words.size() &&
           all_digits(words[words.size() - 1 - numeric]))
      ++numeric;
    if (numeric == 0 || words.size() == numeric)
      throw ParseError("istar requires 'istar EXPR FORMULA N [BOUND]'", 0);
    std::uint64_t bound = 10000;
    std::uint64_t n = 0;
    if (numeric == 2) {
      n = parse_nat(words[words.size() - 2], "istar strength");
      bound = parse_nat(words[words.size() - 1], "istar bound");
    } else {
      n = parse_nat(words[words.size() - 1], "istar strength");
    }
    std::string f_text;
    for (std::size_t i = 0; i + numeric < words.size(); ++i) {
      if (i) f_text += ' ';
      f_text += words[i];
    }
    Ranking r = eval_expr(expr);
    Formula f = parse_formula(f_text);
    Ranking obs = strengthening(r.vocabulary_ptr(), f, Ord2::finite(n));
    auto idx = istar_index(r, obs, f, bound);
    return idx ? std::to_string(*idx) + "\n" : "(none)\n";
  }

  if (cmd == "ramsey") {
    auto a_text = take_expr_token(rest);
    rest = trim(rest);
    if (rest.empty() || rest[0] != '(')
      throw ParseError("ramsey requires 'ramsey EXPR (PSI | PHI) EXPR'", 0);
    std::size_t depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == '(') {
        ++depth;
      } else if (rest[i] == ')') {
        if (--depth == 0) {
          close = i;
          break;
        }
      }
    }
    if (close == std::string_view::npos)
      throw ParseError("unbalanced '(' in conditional", 0);
    Conditional c = parse_conditional(rest.substr(1, close - 1));
    auto b_part = rest.substr(close + 1);
    auto b_text = take_expr_token(b_part);
    if (!trim(b_part).empty())
      throw ParseError("unexpected text after ramsey arguments", close + 1);
    return bool_text(ramsey_holds(eval_expr(a_text), c, eval_expr(b_text)));
  }

  if (cmd == "equiv" || cmd == "equal") {
    auto a_text = take_expr_token(rest);
    auto b_text = take_expr_token(rest);
    if (!trim(rest).empty())
      throw ParseError(
          "unexpected text after '" + std::string(cmd) + "' arguments", 0);
    Ranking a = eval_expr(a_text);
    Ranking b = eval_expr(b_text);
    return bool_text(cmd == "equiv" ? equivalent(a, b) : a == b);
  }

  if (cmd == "decompose") {
    Ranking r = eval_expr(rest);
    std::string out;
    for (const auto& comp : decompose(r)) {
      out += "level " + std::to_string(comp.level) + " (base " +
             std::to_string(comp.base_shift) + ")\n";
      auto parts = comp.parts;
      std::sort(parts.begin(), parts.end(),
                [](const auto& a, const auto& b) {
                  return a.second != b.second ? a.second < b.second
                                              : a.first < b.first;
                });
      for (const auto& [s, p] : parts)
        out += "  " + state_to_string(s, r.vocabulary()) + " => " +
               std::to_string(p) + "\n";
    }
    return out;
  }

  if (cmd == "scan") {
    std::string_view tail = rest;
    auto kind = take_word(tail);
    auto nums = split_words(tail);
    if (kind == "axioms") {
      if (nums.size() != 3)
        throw ParseError("scan axioms requires 'scan axioms STATES DEGREE "
                         "SHIFT'",
                         0);
      return axiom_scan(parse_nat(nums[0], "state count"),
                        parse_nat(nums[1], "degree bound"),
                        parse_nat(nums[2], "shift bound"))
          .to_text();
    }
    if (kind == "agreement") {
      if (nums.size() != 2)
        throw ParseError(
            "scan agreement requires 'scan agreement STATES BOUND'", 0);
      return agreement_scan(parse_nat(nums[0], "state count"),
                            parse_nat(nums[1], "value bound"))
          .to_text();
    }
    throw ParseError(
        "scan requires 'scan axioms S D H' or 'scan agreement S V'", 0);
  }

  if (cmd == "save") {
    if (rest.empty()) throw ParseError("save requires a path", 0);
    save(std::string(rest));
    return {};
  }

  if (cmd == "load") {
    if (rest.empty()) throw ParseError("load requires a path", 0);
    load(std::string(rest));
    return {};
  }

  if (cmd == "quit") {
    if (!rest.empty())
      throw ParseError("unexpected text after 'quit'", 0);
    finished_ = true;
    return {};
  }

  throw ParseError("unknown command '" + std::string(cmd) + "'\n" +
                       usage_text(),
                   0);
}

void Session::save(const std::string& path) const {
  require_vocab();
  std::string body = "atoms:";
  for (const auto& atom : vocab_->atoms()) {
    body += ' ';
    body += atom;
  }
  body += '\n';
  for (const auto& [name, r] : rankings_) {
    body += "\nranking " + name + " {\n";
    for (State s = 0; s < r.state_count(); ++s)
      body += "  " + minterm_text(s, *vocab_) + " => " + to_string(r.at(s)) +
              "\n";
    body += "  else => 0\n}\n";
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << body;
  out.flush();
  if (!out) throw IoError("cannot write '" + path + "'");
}

void Session::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");

  Session fresh;
  std::size_t lineno = 0;
  auto located = [&](const std::string& msg) {
    return path + " line " + std::to_string(lineno) + ": " + msg;
  };
  try {
    std::istringstream lines(buf.str());
    std::string line;
    while (std::getline(lines, line)) {
      ++lineno;
      if (!fresh.in_block_) {
        auto t = trim(line);
        if (!t.empty() && t[0] != '#') {
          std::string_view tail = t;
          auto head = take_word(tail);
          if (head != "atoms:" && head != "ranking")
            throw ParseError(
                "'" + std::string(head) + "' is not allowed in a session file",
                0);
        }
      }
      fresh.execute_line(line);
    }
    if (fresh.in_block_)
      throw ParseError("unterminated ranking block", 0);
  } catch (const ParseError& e) {
    throw ParseError(located(e.what()), e.position());
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    throw Error(located(e.what()));
  }

  vocab_ = fresh.vocab_;
  rankings_ = std::move(fresh.rankings_);
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e) != nullptr) return 1;
  if (dynamic_cast<const IoError*>(&e) != nullptr) return 3;
  return 2;
}

ScriptOutcome run_script(std::string_view text) {
  ScriptOutcome outcome;
  Session session;
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      if (i == text.size() && start == i) break;
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  std::size_t block_open_line = 0;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    bool was_in_block = session.in_block();
    try {
      outcome.output += session.execute_line(lines[k]);
    } catch (const Error& e) {
      outcome.exit_code = exit_code_for(e);
      outcome.error_line = k + 1;
      outcome.error_message = e.what();
      return outcome;
    }
    if (!was_in_block && session.in_block()) block_open_line = k + 1;
    if (session.finished()) return outcome;
  }
  if (session.in_block()) {
    outcome.exit_code = 1;
    outcome.error_line = block_open_line;
    outcome.error_message = "unterminated ranking block";
  }
  return outcome;
}

int repl(std::istream& in, std::ostream& out, std::ostream& err,
         bool interactive) {
  Session session;
  std::string line;
  while (true) {
    if (interactive)
      out << (session.in_block() ? "... " : "ocf> ") << std::flush;
    if (!std::getline(in, line)) break;
    try {
      out << session.execute_line(line);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
    }
    if (session.finished()) break;
  }
  return 0;
}

}  // namespace ocf
