#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ocf/ranking.hpp"
#include "ocf/revision.hpp"

namespace ocf {

// The operators of the revision layer. The command table tags each command
// with the operators it reaches; a test asserts the union covers this whole
// enum, so no operator can silently lose its command-line surface.
enum class RevisionOp {
  BarPlus,
  Star,
  IterateStar,
  Strengthening,
  Conditionalize,
  IsNearlyCF,
  CondStrengthen,
  CondRevise,
  RamseyHolds,
  IstarIndex,
  ImprovementOp,
  KernIsberner,
};
inline constexpr int kRevisionOpCount = 12;

struct CommandSpec {
  std::string_view form;     // "let NAME = star(A, B)"
  std::string_view summary;  // one-line description for the usage message
  std::vector<RevisionOp> covers;
};

// One entry per concrete command form; `let` expression shapes are separate
// entries. Drives the usage message and the coverage test.
const std::vector<CommandSpec>& command_table();

// The command table rendered as a help text (also shown on unknown commands).
std::string usage_text();

// A vocabulary plus named rankings, mutated one command line at a time.
//
// Command language (one command per line; `#` starts a comment):
//   atoms: a b c              declare the vocabulary (resets the session)
//   ranking NAME {            open a rule block; FORMULA => ORD lines;
//     ...                     mandatory final `else => ORD`; `}` closes
//   }
//   let NAME = EXPR           bind the value of a ranking expression
//   show|bel|degstrength|decompose EXPR
//   rank|nearlycf|poss EXPR FORMULA
//   istar EXPR FORMULA N [BOUND]
//   ramsey EXPR (PSI | PHI) EXPR
//   equiv|equal EXPR EXPR
//   scan axioms S D H | scan agreement S V
//   save PATH | load PATH
//   quit
// where EXPR is a ranking name or one of: star(A,B), barplus(A,B), zero(A),
// iterstar(A,B,N), strengthen(PHI,ORD), conditionalize(A,PHI,D),
// improve(A,PHI,N), condstrengthen(A,N,PSI|PHI), condrevise(A,PSI|PHI),
// ki(A,PSI|PHI); arguments nest. Conditional arguments split at the last
// '|' outside parentheses.
class Session {
 public:
  Session();

  // Executes one physical line and returns whatever it prints. Throws Error
  // subclasses on failure; the committed session state is untouched by a
  // failing line (a failing rule line discards the whole open block).
  std::string execute_line(std::string_view line);

  bool in_block() const noexcept { return in_block_; }
  bool finished() const noexcept { return finished_; }

  const std::shared_ptr<const Vocabulary>& vocabulary_ptr() const noexcept {
    return vocab_;
  }
  const std::map<std::string, Ranking>& rankings() const noexcept {
    return rankings_;
  }
  const std::vector<std::string>& transcript() const noexcept {
    return transcript_;
  }

  // Session files hold an `atoms:` line followed by `ranking` blocks (one
  // exact-value rule per state). load replaces the whole session atomically;
  // a file that fails to parse leaves the session unchanged.
  void save(const std::string& path) const;
  void load(const std::string& path);

 private:
  std::string dispatch(std::string_view line);
  std::string block_line(std::string_view line);
  Ranking eval_expr(std::string_view text) const;
  Ranking eval_call(std::string_view name, std::string_view args_text) const;
  const Ranking& named(std::string_view name) const;
  void require_vocab() const;

  std::shared_ptr<const Vocabulary> vocab_;
  std::map<std::string, Ranking> rankings_;
  std::vector<std::string> transcript_;
  bool finished_ = false;

  bool in_block_ = false;
  std::string block_name_;
  std::vector<RankingRule> block_rules_;
};

struct ScriptOutcome {
  std::string output;
  int exit_code = 0;           // 0 ok, 1 parse, 2 semantic, 3 IO
  std::size_t error_line = 0;  // 1-based; 0 when exit_code == 0
  std::string error_message;
};

// Runs a script against a fresh session, stopping at `quit` or the first
// error. output collects everything printed before the stop and is
// byte-identical across runs for the same text.
ScriptOutcome run_script(std::string_view text);

// ParseError -> 1, IoError -> 3, any other Error -> 2.
int exit_code_for(const Error& e);

// Interactive loop: errors are reported on `err` and the session continues.
// Prompts ("ocf> ", "... " inside blocks) appear only when `interactive`.
// Returns 0; ends at `quit` or end of input.
int repl(std::istream& in, std::ostream& out, std::ostream& err,
         bool interactive);

}  // namespace ocf
