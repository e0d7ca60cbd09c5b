#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"tp — a finite-state workbench for programs as <post, Pre> pairs"};
  app.require_subcommand(1);

  // run
  std::vector<std::string> files;
  std::string run_format = "text";
  CLI::App* run = app.add_subcommand("run", "parse, elaborate, and execute .tp files");
  run->add_option("files", files, "input files")->required()->expected(-1);
  run->add_option("--format", run_format, "output format")
      ->check(CLI::IsMember({"text", "json-lines"}));

  // laws
  tp::cli::LawsOptions laws;
  CLI::App* laws_cmd = app.add_subcommand("laws", "check the registered algebraic laws");
  laws_cmd->add_option("--law", laws.filter, "law ids to check (default: all)");
  laws_cmd->add_option("--size", laws.size, "number of atoms in the state space")
      ->check(CLI::Range(1, 16));
  laws_cmd->add_option("--mode", laws.mode, "case generation mode")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  laws_cmd->add_option("--samples", laws.samples, "random samples per law");
  laws_cmd->add_option("--seed", laws.seed, "random seed");
  laws_cmd->add_option("--format", laws.format, "output format")
      ->check(CLI::IsMember({"text", "json-lines"}));

  // eval
  std::string eval_file;
  std::string expression;
  std::string query = "post";
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one expression");
  eval_cmd->add_option("file", eval_file, "optional .tp file providing the scope");
  eval_cmd->add_option("--expr", expression, "expression to evaluate")->required();
  eval_cmd->add_option("--print", query, "facet to print")
      ->check(CLI::IsMember({"post", "pre", "range", "dom", "classify"}));

  // enumerate
  int size = 2;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "list every program over a small space");
  enum_cmd->add_option("--size", size, "number of atoms in the state space");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return tp::cli::cmd_run(files, run_format, std::cout);
  if (laws_cmd->parsed()) return tp::cli::cmd_laws(laws, std::cout);
  if (eval_cmd->parsed()) {
    std::optional<std::string> file;
    if (!eval_file.empty()) file = eval_file;
    return tp::cli::cmd_eval(file, expression, query, std::cout);
  }
  if (enum_cmd->parsed()) return tp::cli::cmd_enumerate(size, std::cout);
  return 2;
}
