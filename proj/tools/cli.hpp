#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "koszul/field.hpp"
#include "koszul/io.hpp"

namespace koszul::cli {

enum class Command { Validate, Ext, Koszul, Quadratic, Cm, RsVerify, RsQuotient, Fibration, Toric, EmitFixtures };
enum class OutputFormat { Json, Table };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

struct RunConfig {
  Command command = Command::Validate;
  // input document, or the target directory for emit-fixtures
  std::filesystem::path input_path;
  Field field = Field::rationals();
  std::optional<int> max_length;
  OutputFormat output = OutputFormat::Json;
  std::size_t witness_limit = 10;
  // ext: Ext(S_from, S_to) in internal degree -degree
  std::optional<std::string> ext_from;
  std::optional<std::string> ext_to;
  std::optional<int> ext_degree;
};

enum ExitCode : int { kVerdict = 0, kInputError = 2, kInternalError = 3 };

// Computes the report for a parsed document. Throws koszul::Error.
Json report(const RunConfig& config, const Json& document);

// Loads the input, dispatches, prints the report to out and diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Two-column rendering of a report.
std::string render_table(const Json& report);

}  // namespace koszul::cli
