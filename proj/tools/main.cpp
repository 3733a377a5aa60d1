#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "ocf/embedded_scripts.hpp"
#include "ocf/session.hpp"

namespace {

int run_script_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return 3;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  auto outcome = ocf::run_script(buf.str());
  std::cout << outcome.output;
  if (outcome.exit_code != 0)
    std::cerr << "error: line " << outcome.error_line << ": "
              << outcome.error_message << '\n';
  return outcome.exit_code;
}

int run_check() {
  bool all_ok = true;
  for (const auto& entry : ocf::embedded::kCheckScripts) {
    auto outcome = ocf::run_script(entry.script);
    bool ok = outcome.exit_code == 0 && outcome.output == entry.expected;
    std::cout << (ok ? "PASS " : "FAIL ") << entry.name << '\n';
    if (ok) continue;
    all_ok = false;
    if (outcome.exit_code != 0)
      std::cerr << entry.name << ": exit " << outcome.exit_code << " at line "
                << outcome.error_line << ": " << outcome.error_message << '\n';
    else
      std::cerr << entry.name << ": output differs from the recorded text\n"
                << "--- recorded ---\n"
                << entry.expected << "--- actual ---\n"
                << outcome.output;
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ocf: a calculator for ranking-based belief revision"};
  app.footer(ocf::usage_text());
  std::string script_path;
  auto* script_opt =
      app.add_option("--script", script_path, "run a command script and exit");
  bool check = false;
  app.add_flag("--check", check,
               "replay the built-in example scripts against their recorded "
               "outputs")
      ->excludes(script_opt);
  CLI11_PARSE(app, argc, argv);

  if (check) return run_check();
  if (!script_path.empty()) return run_script_file(script_path);
  return ocf::repl(std::cin, std::cout, std::cerr, isatty(STDIN_FILENO) != 0);
}
