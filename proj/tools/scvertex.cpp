// scvertex: batch evaluator and verification suite runner for lambda-bracket
// calculus in (SUSY) vertex algebras.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scvertex/engine.hpp"
#include "scvertex/suite.hpp"

namespace {

int run_session(scv::Session& sess, const std::string& text) {
  try {
    for (auto& r : sess.run_text(text)) {
      if (sess.format == "json") {
        std::cout << r.json.dump() << "\n";
      } else {
        std::cout << "% " << r.command << "\n" << r.text << "\n";
      }
      if (!r.ok && sess.format != "json") std::cerr << r.json.dump() << "\n";
    }
  } catch (const scv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return sess.any_check_failed() ? 1 : 0;
}

void apply_sets(scv::Session& sess, const std::vector<std::string>& sets) {
  for (auto& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--set expects name=value");
    std::string name = s.substr(0, eq);
    std::string val = s.substr(eq + 1);
    auto slash = val.find('/');
    long num = std::stol(slash == std::string::npos ? val : val.substr(0, slash));
    long den = slash == std::string::npos ? 1 : std::stol(val.substr(slash + 1));
    sess.set_param(name, scv::GaussRat::rational(num, den));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic lambda-bracket calculus for SUSY vertex algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t seed = 0x5c7e57;
  int jobs = 1;
  std::vector<std::string> algebra_files, sets;
  app.add_option("--format", format, "output format: text|latex|json")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  app.add_option("--algebra", algebra_files, "preload an algebra definition file (JSON)");
  app.add_option("--set", sets, "assign a parameter, e.g. --set t_a=1/2");
  app.add_option("--seed", seed, "seed for the randomized property suites");
  app.add_option("--jobs", jobs, "parallel jobs for suite commands");

  std::string run_file, eval_text, suite_name = "paper";
  auto* run = app.add_subcommand("run", "execute a script file");
  run->add_option("file", run_file, "script file")->required();
  auto* evalc = app.add_subcommand("eval", "execute statements given on the command line");
  evalc->add_option("text", eval_text, "script text")->required();
  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("--suite", suite_name, "suite name (paper)");
  auto* repl = app.add_subcommand("repl", "line-oriented interactive session");

  CLI11_PARSE(app, argc, argv);

  scv::Session sess;
  sess.format = format;
  sess.seed = seed;
  sess.jobs = jobs;
  try {
    apply_sets(sess, sets);
    for (auto& f : algebra_files) sess.load_algebra_file(f);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (run->parsed()) {
    std::ifstream in(run_file);
    if (!in) {
      std::cerr << "error: cannot open " << run_file << "\n";
      return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return run_session(sess, ss.str());
  }
  if (evalc->parsed()) return run_session(sess, eval_text);
  if (check->parsed()) {
    if (suite_name != "paper") {
      std::cerr << "error: unknown suite '" << suite_name << "'\n";
      return 2;
    }
    return run_session(sess, "suite paper;");
  }
  if (repl->parsed()) {
    std::string line;
    int status = 0;
    std::cout << "scvertex repl; statements end with ';', empty line quits\n";
    while (true) {
      std::cout << ">> " << std::flush;
      if (!std::getline(std::cin, line) || line.empty()) break;
      int rc = run_session(sess, line);
      if (rc == 1) status = 1;
    }
    return status;
  }
  return 0;
}
