// qtorus: command-line front end for the quantum torus invariants library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qtorus/cli.hpp"

namespace {

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QTORUS_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    } catch (const std::exception&) {
      std::cerr << "qtorus: ignoring invalid QTORUS_THREADS\n";
    }
  }
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of quantum tori over closed surfaces"};
  app.require_subcommand(1);

  std::string input_path;
  qtorus::cli::RunOptions options;
  for (const char* name : {"local", "surface", "global", "bunt", "selfcheck"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", input_path, "Job spec (JSON); read from stdin when omitted");
    sub->add_option("--format", options.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", options.seed, "Seed for randomized checks");
  }
  CLI11_PARSE(app, argc, argv);

  const std::string task = app.get_subcommands().front()->get_name();
  std::string input;
  if (task != "selfcheck") {
    std::ostringstream buf;
    if (input_path.empty() || input_path == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "qtorus: cannot open " << input_path << "\n";
        return qtorus::cli::ValidationFailure;
      }
      buf << in.rdbuf();
    }
    input = buf.str();
  }

  options.threads = thread_cap();
  const qtorus::cli::RunResult result = qtorus::cli::run(task, input, options);
  (result.exit_code == 0 ? std::cout : std::cerr) << result.output;
  return result.exit_code;
}
