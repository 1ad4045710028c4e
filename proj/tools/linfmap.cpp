#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "linfmap/cli.hpp"

using namespace linfmap;

namespace {

cli::CommandResult read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {cli::kParseError, "", "cannot read '" + path + "'\n"};
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return {};
}

int finish(const cli::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact L-infinity models of mapping spaces"};
  app.require_subcommand(1);
  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "records"}));

  std::string file, direction, name, emit_path;
  bool pointed = false, cover = false;
  int flip = 0;

  auto* validate = app.add_subcommand("validate", "Check every axiom of a problem file");
  validate->add_option("file", file)->required();

  auto* model = app.add_subcommand("model", "Mapping-space model, homotopy dimensions and nilpotency");
  model->add_option("file", file)->required();
  model->add_flag("--pointed", pointed, "Use the reduced coalgebra");
  model->add_flag("--cover", cover, "Truncate at degree 1 (universal cover)");

  auto* dualize = app.add_subcommand("dualize", "L-infinity algebra <-> Sullivan algebra");
  dualize->add_option("file", file)->required();
  dualize->add_option("--direction", direction)->required()->check(CLI::IsMember({"l2a", "a2l"}));

  auto* crosscheck = app.add_subcommand("crosscheck", "Compare with the derivation model");
  crosscheck->add_option("file", file)->required();
  crosscheck->add_option("--inject-sign-flip", flip, "Negate the derivation side at this arity")->group("");

  auto* example = app.add_subcommand("example", "Emit a builtin problem file");
  example->add_option("name", name)->required();
  example->add_option("--emit", emit_path, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsage;
  }
  const auto format = format_name == "records" ? cli::Format::records : cli::Format::table;

  if (example->parsed()) {
    ProblemFile p;
    try {
      p = builtin_problem(name);
    } catch (const std::out_of_range& e) {
      std::cerr << e.what() << "; known:";
      for (const auto& n : builtin_names()) std::cerr << " " << n;
      std::cerr << "\n";
      return cli::kUsage;
    }
    const std::string text = emit_problem(p);
    if (emit_path.empty()) {
      std::cout << text;
      return 0;
    }
    std::ofstream out(emit_path, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "cannot write '" << emit_path << "'\n";
      return cli::kUsage;
    }
    return 0;
  }

  std::string text;
  if (auto r = read_file(file, text); r.exit_code) return finish(r);
  return finish(cli::with_problem(text, [&](const ProblemFile& p) {
    if (validate->parsed()) return cli::validate(p, format);
    if (model->parsed()) return cli::model(p, pointed, cover, format);
    if (dualize->parsed())
      return cli::dualize(p, direction == "l2a" ? cli::Direction::l2a : cli::Direction::a2l, format);
    return cli::crosscheck(p, format, flip);
  }));
}
