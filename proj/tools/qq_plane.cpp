// qq-plane: checks, constructions and finite-plane surveys for
// quadrangle-quadrilateral configurations. Reports go to stdout as JSON,
// diagnostics to stderr.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qqplane.hpp"

namespace {

using namespace qqplane;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::MalformedJson, "cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const CommandResult& result) {
  std::cout << result.report.dump(2) << '\n';
  for (const auto& d : result.report["diagnostics"]) {
    std::cerr << "qq-plane: " << d["error"].get<std::string>() << ": " << d["message"].get<std::string>() << '\n';
  }
  return result.exit_code;
}

// Flag beats environment beats the built-in default.
std::uint64_t resolve_max_p(const std::optional<std::uint64_t>& flag) { return flag ? *flag : max_p_from_env(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadrangle-quadrilateral configurations over Q and GF(p)"};
  app.require_subcommand(1);

  std::string input;
  std::string field_flag;
  std::string check_kind;
  std::string direction;
  std::uint64_t p = 0;
  std::optional<std::uint64_t> max_p;
  unsigned workers = 1;
  std::string mode = "configuration";

  const std::map<std::string, CheckKind> check_kinds{
      {"diagonals", CheckKind::Diagonals}, {"qq", CheckKind::QQ}, {"mated", CheckKind::Mated}};
  const std::map<std::string, ConstructDirection> directions{
      {"to-quadrilateral", ConstructDirection::ToQuadrilateral}, {"to-quadrangle", ConstructDirection::ToQuadrangle}};
  const std::map<std::string, WitnessMode> modes{{"configuration", WitnessMode::Configuration},
                                                 {"mated", WitnessMode::Mated}};

  auto* check = app.add_subcommand("check", "Evaluate a verdict on a figure document");
  check->add_option("which", check_kind, "diagonals | qq | mated")
      ->required()
      ->check(CLI::IsMember({"diagonals", "qq", "mated"}));
  check->add_option("--input", input, "Figure document path (default: stdin)");
  check->add_option("--field", field_flag, "rational | prime:<p>, used when the document has no field");

  auto* construct = app.add_subcommand("construct", "Build the companion figure");
  construct->add_option("direction", direction, "to-quadrilateral | to-quadrangle")
      ->required()
      ->check(CLI::IsMember({"to-quadrilateral", "to-quadrangle"}));
  construct->add_option("--input", input, "Figure document path (default: stdin)");
  construct->add_option("--field", field_flag, "rational | prime:<p>, used when the document has no field");

  auto* survey = app.add_subcommand("survey", "Exhaustively classify the quadrangles of PG(2,p)");
  survey->add_option("p", p, "Prime order")->required();
  survey->add_option("--max-p", max_p, "Exhaustion guard (default 13, or QQ_PLANE_MAX_P)");
  survey->add_option("--workers", workers, "Concurrent enumeration tasks")->check(CLI::PositiveNumber);

  auto* witness = app.add_subcommand("witness", "Find a quadrangle-quadrilateral configuration in PG(2,p)");
  witness->add_option("p", p, "Prime order")->required();
  witness->add_option("--mode", mode, "configuration | mated")->check(CLI::IsMember({"configuration", "mated"}));
  witness->add_option("--max-p", max_p, "Exhaustion guard (default 13, or QQ_PLANE_MAX_P)");

  auto* fano = app.add_subcommand("fano-demo", "Canonical quadrangle over Q next to GF(2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  const auto load = [&](Json command) -> std::optional<FigureDocument> {
    try {
      std::optional<FieldSpec> fallback;
      if (!field_flag.empty()) fallback = parse_field_flag(field_flag);
      return parse_figure(read_input(input), fallback);
    } catch (const Error& e) {
      emit(fail(new_report(std::move(command)), e));
      return std::nullopt;
    }
  };

  if (check->parsed()) {
    const auto doc = load(Json{{"name", "check"}, {"which", check_kind}});
    return doc ? emit(cmd_check(*doc, check_kinds.at(check_kind))) : kExitError;
  }
  if (construct->parsed()) {
    const auto doc = load(Json{{"name", "construct"}, {"direction", direction}});
    return doc ? emit(cmd_construct(*doc, directions.at(direction))) : kExitError;
  }
  if (survey->parsed()) {
    return emit(cmd_survey(p, SurveyOptions{resolve_max_p(max_p), workers}));
  }
  if (witness->parsed()) {
    return emit(cmd_witness(p, modes.at(mode), resolve_max_p(max_p)));
  }
  if (fano->parsed()) {
    return emit(cmd_fano_demo());
  }
  return kExitError;
}
