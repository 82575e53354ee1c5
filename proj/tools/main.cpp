#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "koszul/errors.hpp"
#include "koszul/version.hpp"

using koszul::cli::Command;

int main(int argc, char** argv) {
  CLI::App app{"Koszulity checks for finite graded categories, posets and toric collections", "koszulcat"};
  app.set_version_flag("--version", std::string(koszul::kVersion));
  app.require_subcommand(1);

  koszul::cli::RunConfig config;
  std::uint32_t characteristic = 0;
  std::string output = "json";

  struct Entry {
    Command command;
    const char* help;
  };
  const Entry entries[] = {
      {Command::Validate, "check category axioms and grading"},
      {Command::Ext, "dimensions of Ext between simple modules"},
      {Command::Koszul, "locally bouquet check of every factorization space"},
      {Command::Quadratic, "degree-one generation and quadratic relations"},
      {Command::Cm, "local Cohen-Macaulay check of a poset"},
      {Command::RsVerify, "check the interval relation axioms"},
      {Command::RsQuotient, "quotient category of an interval relation"},
      {Command::Fibration, "discrete and almost discrete fibration checks"},
      {Command::Toric, "Koszulity and strongness report for a toric collection"},
      {Command::EmitFixtures, "write the bundled examples to a directory"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(std::string(koszul::cli::command_name(e.command)), e.help);
    subs.emplace_back(sub, e.command);
    const bool emit = e.command == Command::EmitFixtures;
    sub->add_option(emit ? "directory" : "input", config.input_path, emit ? "output directory" : "input file (.json or .toml)")
        ->required();
    if (emit) continue;
    sub->add_option("--char", characteristic, "field characteristic, 0 for the rationals")->default_val(0);
    sub->add_option("--output", output, "json or table")->check(CLI::IsMember({"json", "table"}))->default_val("json");
    sub->add_option("--witness-limit", config.witness_limit, "witnesses kept per report")->default_val(10);
    sub->add_option("--max-length", config.max_length, "only examine morphisms up to this length")->check(CLI::Range(1, 1 << 20));
    if (e.command == Command::Ext) {
      sub->add_option("--from", config.ext_from, "first simple: Ext(S_from, S_to)");
      sub->add_option("--to", config.ext_to, "second simple");
      sub->add_option("--degree", config.ext_degree, "internal degree (morphism length)")->check(CLI::NonNegativeNumber);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : koszul::cli::kInputError;
  }

  for (auto [sub, command] : subs) {
    if (!sub->parsed()) continue;
    config.command = command;
  }
  config.output = output == "table" ? koszul::cli::OutputFormat::Table : koszul::cli::OutputFormat::Json;
  try {
    config.field = koszul::Field::of_characteristic(characteristic);
  } catch (const koszul::Error& e) {
    std::cerr << "--char: " << e.what() << '\n';
    return koszul::cli::kInputError;
  }
  return koszul::cli::run(config, std::cout, std::cerr);
}
