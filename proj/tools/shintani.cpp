#include <iostream>

#include <CLI11.hpp>
#include "shintani/cli/run.hpp"

int main(int argc, char** argv) {
  using namespace shintani;
  CLI::App app{"Cone decompositions, test-function pairings and L-values at negative integers"};
  app.require_subcommand(1);

  std::string input;
  unsigned long seed = 0;
  int dmax = 0;
  long trials = 0;
  bool pretty = false, compact = false;

  for (const auto& name : cli::commands()) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " job");
    sub->add_option("-i,--input", input, "JSON document path, or inline JSON starting with '{'")->required();
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--dmax", dmax, "Laurent degree tracked exactly");
    sub->add_option("--trials", trials, "number of random trials");
    sub->add_flag("--pretty", pretty, "indented output");
    sub->add_flag("--json", compact, "single-line output (default)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : cli::exit_schema;
  }

  CLI::App* sub = app.get_subcommands().front();
  cli::JobSpec job;
  job.command = sub->get_name();
  job.pretty = pretty && !compact;
  if (sub->count("--seed")) job.seed = seed;
  if (sub->count("--dmax")) job.dmax = dmax;
  if (sub->count("--trials")) job.trials = trials;
  try {
    job.input = cli::load_input(input);
  } catch (const io::SchemaError& e) {
    std::cout << cli::Json{{"error", {{"code", "SchemaViolation"}, {"message", e.what()}, {"context", e.path()}}}}.dump()
              << '\n';
    return cli::exit_schema;
  }
  return cli::run(job, std::cout);
}
