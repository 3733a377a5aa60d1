#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "ocf/errors.hpp"
#include "ocf/session.hpp"
#include "ocf/verify.hpp"

using namespace ocf;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open ", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

// A populated session shared by the save/load tests.
Session sample_session() {
  Session s;
  s.execute_line("atoms: heavy fly");
  s.execute_line("ranking r {");
  s.execute_line("  heavy & !fly => 10");
  s.execute_line("  fly => w");
  s.execute_line("  else => 0");
  s.execute_line("}");
  s.execute_line("let obs = strengthen(heavy, 2)");
  s.execute_line("let next = star(r, obs)");
  return s;
}

struct TempFile {
  std::string path;
  explicit TempFile(const char* name) : path(std::string("/tmp/") + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("every revision operator is reachable from some command") {
  std::set<int> covered;
  for (const CommandSpec& spec : command_table()) {
    for (RevisionOp op : spec.covers) covered.insert(static_cast<int>(op));
  }
  CHECK(covered.size() == kRevisionOpCount);
  CHECK(!usage_text().empty());
}

TEST_CASE("the example scripts reproduce their recorded output") {
  for (const char* name :
       {"flying_dog_reports", "order_of_reports", "hollow_bones"}) {
    std::string script =
        slurp(std::string(OCF_SCRIPTS_DIR) + "/" + name + ".ocf");
    std::string golden =
        slurp(std::string(OCF_GOLDEN_DIR) + "/" + name + ".out");
    ScriptOutcome first = run_script(script);
    ScriptOutcome second = run_script(script);
    CHECK_MESSAGE(first.exit_code == 0, name, ": ", first.error_message);
    CHECK(first.output == golden);
    CHECK(second.output == first.output);
  }
}

TEST_CASE("scripts stop at the first error with a located message") {
  auto unknown = run_script("shw r\n");
  CHECK(unknown.exit_code == 1);
  CHECK(unknown.error_line == 1);
  CHECK(unknown.error_message.find("unknown command 'shw'") !=
        std::string::npos);

  auto missing = run_script("atoms: a\nshow zzz\n");
  CHECK(missing.exit_code == 2);
  CHECK(missing.error_line == 2);

  auto truncated = run_script("atoms: a\n# comment\nranking r {\n  else => 0\n");
  CHECK(truncated.exit_code == 1);
  CHECK(truncated.error_line == 3);  // the line that opened the block
  CHECK(truncated.error_message == "unterminated ranking block");
}

TEST_CASE("scripts end quietly at quit and tolerate a missing final newline") {
  auto stopped = run_script("atoms: a\nquit\nshw bogus\n");
  CHECK(stopped.exit_code == 0);
  CHECK(stopped.output.empty());

  auto empty = run_script("");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.empty());

  auto bare = run_script("atoms: a\nranking r {\n  else => 3\n}\nrank r a");
  CHECK(bare.exit_code == 0);
  CHECK(bare.output == "3\n");
}

TEST_CASE("expression shapes are validated before evaluation") {
  Session s = sample_session();
  CHECK_THROWS_AS(s.execute_line("show star(r)"), ParseError);
  CHECK_THROWS_AS(s.execute_line("show frobnicate(r)"), ParseError);
  CHECK_THROWS_AS(s.execute_line("show star(r, obs"), ParseError);
  CHECK_THROWS_AS(s.execute_line("show star(r, obs)x"), ParseError);
  CHECK_THROWS_AS(s.execute_line("show r extra"), ParseError);
  CHECK_THROWS_AS(s.execute_line("let else = r"), ParseError);
  CHECK_THROWS_AS(s.execute_line("ranking true {"), ParseError);
  CHECK_THROWS_AS(s.execute_line("condrevise oops"), ParseError);

  // The failed lines left no trace: the bindings still evaluate.
  CHECK(s.execute_line("equal next star(r, obs)") == "true\n");
}

TEST_CASE("commands before a vocabulary are rejected") {
  Session s;
  CHECK_THROWS_AS(s.execute_line("ranking r {"), Error);
  CHECK_THROWS_AS(s.execute_line("let x = strengthen(a, 1)"), Error);
}

TEST_CASE("declaring atoms resets the whole session") {
  Session s = sample_session();
  REQUIRE(s.rankings().count("r") == 1);
  s.execute_line("atoms: x y z");
  CHECK(s.rankings().empty());
  CHECK(s.vocabulary_ptr()->state_count() == 8);
  CHECK_THROWS_AS(s.execute_line("show r"), Error);
}

TEST_CASE("a failing block discards the block but not the session") {
  Session s;
  s.execute_line("atoms: a b");

  // Unknown atoms only surface when the block is committed.
  s.execute_line("ranking r {");
  s.execute_line("  bogus => 1");
  s.execute_line("  else => 0");
  REQUIRE(s.in_block());
  CHECK_THROWS_AS(s.execute_line("}"), UnknownAtomError);
  CHECK(!s.in_block());
  CHECK(s.rankings().count("r") == 0);

  // A malformed rule aborts immediately.
  s.execute_line("ranking q {");
  CHECK_THROWS_AS(s.execute_line("  a =>"), ParseError);
  CHECK(!s.in_block());
  CHECK_THROWS_AS(s.execute_line("}"), ParseError);  // nothing left to close

  // A block missing its else rule cannot commit.
  s.execute_line("ranking m {");
  s.execute_line("  a => 1");
  CHECK_THROWS_AS(s.execute_line("}"), ParseError);

  // The session still accepts a clean definition afterwards.
  s.execute_line("ranking r {");
  s.execute_line("  else => 0");
  s.execute_line("}");
  CHECK(s.rankings().count("r") == 1);
}

TEST_CASE("the transcript records successful command lines only") {
  Session s;
  s.execute_line("atoms: a");
  s.execute_line("# a comment");
  CHECK_THROWS_AS(s.execute_line("show zzz"), Error);
  s.execute_line("let one = strengthen(a, 1)");
  CHECK(s.transcript() ==
        std::vector<std::string>{"atoms: a", "let one = strengthen(a, 1)"});
}

TEST_CASE("sessions save and load byte for byte") {
  TempFile first("ocf_session_roundtrip_1.ocfs");
  TempFile second("ocf_session_roundtrip_2.ocfs");

  Session s = sample_session();
  s.save(first.path);

  Session t;
  t.load(first.path);
  t.save(second.path);

  CHECK(slurp(first.path) == slurp(second.path));
  CHECK(t.rankings() == s.rankings());
  CHECK(t.vocabulary_ptr()->state_count() ==
        s.vocabulary_ptr()->state_count());

  std::string text = slurp(first.path);
  CHECK(text.find("atoms: heavy fly\n") == 0);
  CHECK(text.find("ranking next {") != std::string::npos);
  CHECK(text.find("  else => 0\n") != std::string::npos);
}

TEST_CASE("loading validates strictly and leaves the session intact on failure") {
  Session s = sample_session();
  const auto before = s.rankings();

  TempFile bad("ocf_session_bad.ocfs");
  spit(bad.path, "atoms: a\n\nshow r\n");
  try {
    s.load(bad.path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find(bad.path + " line 3:") != std::string::npos);
    CHECK(msg.find("'show' is not allowed in a session file") !=
          std::string::npos);
  }
  CHECK(s.rankings() == before);

  TempFile cut("ocf_session_cut.ocfs");
  spit(cut.path, "atoms: a\n\nranking r {\n  !a => 1\n");
  CHECK_THROWS_AS(s.load(cut.path), ParseError);
  CHECK(s.rankings() == before);

  CHECK_THROWS_AS(s.load("/tmp/ocf_no_such_session_file.ocfs"), IoError);
  CHECK_THROWS_AS(s.save("/tmp/ocf_no_such_dir/x.ocfs"), IoError);
  CHECK(s.rankings() == before);
}

TEST_CASE("scan commands print the report text verbatim") {
  Session s;
  CHECK(s.execute_line("scan axioms 2 1 1") == axiom_scan(2, 1, 1).to_text());
  CHECK(s.execute_line("scan agreement 2 2") == agreement_scan(2, 2).to_text());
  CHECK_THROWS_AS(s.execute_line("scan axioms 9 9 9"), UniverseTooLargeError);
  CHECK_THROWS_AS(s.execute_line("scan gizmos 1 1"), ParseError);
}

TEST_CASE("the piped repl reports errors and keeps going without prompts") {
  std::istringstream in(
      "atoms: a\n"
      "ranking r {\n"
      "  a => 2\n"
      "  else => 0\n"
      "}\n"
      "bogus\n"
      "rank r a\n"
      "quit\n");
  std::ostringstream out;
  std::ostringstream err;
  CHECK(repl(in, out, err, /*interactive=*/false) == 0);
  CHECK(out.str().find("ocf> ") == std::string::npos);
  CHECK(out.str().find("2\n") != std::string::npos);
  CHECK(err.str().find("error: unknown command 'bogus'") != std::string::npos);
}

TEST_CASE("the interactive repl prompts per line and inside blocks") {
  std::istringstream in("atoms: a\nranking r {\n  else => 0\n}\nquit\n");
  std::ostringstream out;
  std::ostringstream err;
  CHECK(repl(in, out, err, /*interactive=*/true) == 0);
  CHECK(out.str().find("ocf> ") != std::string::npos);
  CHECK(out.str().find("... ") != std::string::npos);
  CHECK(err.str().empty());
}
