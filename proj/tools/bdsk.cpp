#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "bdsk/commands.hpp"
#include "bdsk/io.hpp"

namespace {

const char* const kFooter = R"(Exit codes:
  0  success; the property holds or the listing was produced
  1  the property fails (check-l, check-k, strong-k); still a successful run
  2  input error: unreadable file, schema violation, undeclared id,
     non-functional map, infinite boundary path space
  3  size limit: enumeration above 20 atoms
  4  internal disagreement between independent deciders or checks

Environment:
  BDSK_SEED  default seed for oracle-compare when --seed is not given)";

}  // namespace

int main(int argc, char** argv) {
  bdsk::CommandOptions options;
  if (const char* env = std::getenv("BDSK_SEED")) {
    try {
      options.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "input error: BDSK_SEED is not an unsigned integer\n";
      return bdsk::kExitInputError;
    }
  }

  CLI::App app{"Condition (L) and Condition (K) for finite Boolean dynamical systems"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Report rendering")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", options.timing, "Add elapsed time to the report");

  auto add_input = [&](CLI::App* sub, bool required, const char* what) {
    auto* opt = sub->add_option("input", options.input, what);
    if (required) opt->required();
  };
  add_input(app.add_subcommand("check-l", "Decide Condition (L)"), true, "BDS JSON file");
  add_input(app.add_subcommand("check-k", "Decide Condition (K) with witness and corner data"), true, "BDS JSON file");
  add_input(app.add_subcommand("strong-k", "Decide the strong form of Condition (K)"), true, "BDS JSON file");
  add_input(app.add_subcommand("ideals", "List hereditary saturated ideals"), true, "BDS JSON file");
  for (auto [name, help] : {std::pair{"tails", "List maximal tails"}, std::pair{"prim", "Tail space and prim report"},
                            std::pair{"lattice", "Lattice of hereditary saturated ideals"}}) {
    auto* sub = app.add_subcommand(name, help);
    add_input(sub, true, "BDS JSON file");
    sub->add_option("--dot", options.dot, "Write a DOT graph to this path");
  }
  auto* fg = app.add_subcommand("from-graph", "Build a BDS from a directed graph");
  add_input(fg, true, "Graph JSON file");
  fg->add_option("--construction", options.construction, "vertex or boundary")
      ->check(CLI::IsMember({"vertex", "boundary"}));
  fg->add_option("-o,--output", options.output, "Write the BDS JSON document here");
  auto* oc = app.add_subcommand("oracle-compare", "Cross-check the Condition (K) deciders");
  add_input(oc, false, "Optional BDS JSON file; random specs when absent");
  oc->add_option("--count", options.count, "Number of random specs")->check(CLI::PositiveNumber);
  oc->add_option("--seed", options.seed, "Seed (default from BDSK_SEED or built in)");
  oc->add_option("--jobs", options.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? bdsk::kExitOk : bdsk::kExitInputError;
  }
  options.command = app.get_subcommands().front()->get_name();

  try {
    const auto report = bdsk::run_command(options);
    std::cout << (format == "json" ? report.json.dump(2) + "\n" : report.text());
    return report.exit_code;
  } catch (...) {
    const auto [code, message] = bdsk::describe_current_exception();
    std::cerr << message << "\n";
    return code;
  }
}
