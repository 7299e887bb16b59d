// uj: joint measurability of unsharp observables and CHSH bounds.

#include <iostream>

#include <CLI11.hpp>

#include "uj/cli.hpp"

int main(int argc, char** argv) {
  using uj::cli::Command;
  using uj::cli::RunConfig;

  CLI::App app{"Joint measurability of unsharp dichotomic observables and CHSH bounds"};
  app.require_subcommand(1);

  RunConfig config;
  config.threads = uj::cli::threads_from_env();

  auto add_output = [&](CLI::App* sub) { sub->add_option("--out,-o", config.output, "Report file (default stdout)"); };
  auto add_lambda = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option_function<double>("--lambda", [&](double v) { config.lambda = v; },
                                                 "Unsharpness parameter in (0, 1]");
    if (required) opt->required();
  };

  auto* smear = app.add_subcommand("smear", "Smear a dichotomic observable");
  smear->add_option("--obs", config.obs, "Observable JSON")->required();
  add_lambda(smear, true);
  add_output(smear);

  auto* blocks = app.add_subcommand("blocks", "Block decomposition of two projectors");
  blocks->add_option("--p", config.p, "First projector JSON")->required();
  blocks->add_option("--q", config.q, "Second projector JSON")->required();
  add_output(blocks);

  auto* dilate = app.add_subcommand("dilate", "Neumark dilation of a dichotomic POVM");
  dilate->add_option("--obs", config.obs, "Observable JSON")->required();
  add_output(dilate);

  auto* joint = app.add_subcommand("jointly-measurable", "Decide joint measurability at a given lambda");
  joint->add_option("--o1", config.o1, "First observable JSON")->required();
  joint->add_option("--o2", config.o2, "Second observable JSON")->required();
  add_lambda(joint, true);
  joint->add_flag("--oracle", config.oracle, "Also run the alternating projection oracle");
  joint->add_flag("--expect-feasible", config.expect_feasible, "Exit with status 2 unless feasible");
  add_output(joint);

  auto* lopt = app.add_subcommand("lambda-opt", "Largest jointly measurable lambda");
  lopt->add_option("--mode", config.mode, "worst-case or pair")->check(CLI::IsMember({"worst-case", "pair"}));
  lopt->add_option("--tol", config.tol, "Bisection tolerance");
  lopt->add_option("--mesh", config.mesh, "Fibonacci mesh size (worst-case)");
  lopt->add_option("--seed", config.seed, "Mesh rotation seed");
  lopt->add_option("--o1", config.o1, "First observable JSON (pair)");
  lopt->add_option("--o2", config.o2, "Second observable JSON (pair)");
  add_output(lopt);

  auto* chsh = app.add_subcommand("chsh", "CHSH value of a state and settings");
  chsh->add_option("--state", config.state, "State JSON (default singlet)");
  chsh->add_option("--settings", config.settings, "Settings JSON (default optimal qubit settings)");
  add_lambda(chsh, false);
  add_output(chsh);

  auto* box = app.add_subcommand("box-chsh", "CHSH value of a no-signaling box");
  box->add_option("--box", config.box, "Box JSON")->required();
  add_output(box);

  auto* sweep = app.add_subcommand("sweep", "Verdict and smeared CHSH over a lambda grid");
  sweep->add_option("--state", config.state, "State JSON (default singlet)");
  sweep->add_option("--settings", config.settings, "Settings JSON (default optimal qubit settings)");
  sweep->add_option("--start", config.start, "First lambda");
  sweep->add_option("--stop", config.stop, "Last lambda");
  sweep->add_option("--step", config.step, "Grid step");
  std::string format = "csv";
  sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_output(sweep);

  auto* accept = app.add_subcommand("acceptance", "Run the acceptance criteria");
  add_output(accept);

  CLI11_PARSE(app, argc, argv);

  if (smear->parsed()) config.command = Command::Smear;
  if (blocks->parsed()) config.command = Command::Blocks;
  if (dilate->parsed()) config.command = Command::Dilate;
  if (joint->parsed()) config.command = Command::JointlyMeasurable;
  if (lopt->parsed()) config.command = Command::LambdaOpt;
  if (chsh->parsed()) config.command = Command::Chsh;
  if (box->parsed()) config.command = Command::BoxChsh;
  if (sweep->parsed()) config.command = Command::Sweep;
  if (accept->parsed()) config.command = Command::Acceptance;
  config.format = format == "json" ? uj::cli::Format::Json : uj::cli::Format::Csv;

  return uj::cli::run(config, std::cout, std::cerr);
}
