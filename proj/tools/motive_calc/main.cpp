#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "motive/dsl.hpp"
#include "motive/errors.hpp"
#include "motive/report.hpp"

namespace {

using motive::report::Json;

struct Options {
  int level = 0;
  int max_level = 12;
  bool threefold = false;
  std::string format = "json";
  std::string output;
  std::string expression;
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw std::runtime_error("cannot open " + o.output);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump(2)); }

class LevelAboveMax : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_level(const Options& o) {
  motive::require_level(o.level);
  if (o.level > o.max_level)
    throw LevelAboveMax("level " + std::to_string(o.level) + " exceeds --max-level " + std::to_string(o.max_level));
}

int run(const std::string& cmd, const Options& o) {
  check_level(o);
  namespace r = motive::report;
  bool text = o.format == "text";
  if (cmd == "invariants") {
    text ? emit(o, r::invariants_text(o.level)) : emit_json(o, r::invariants_json(o.level));
  } else if (cmd == "lattice") {
    text ? emit(o, r::lattice_text(o.level)) : emit_json(o, r::lattice_json(o.level));
  } else if (cmd == "decompose") {
    text ? emit(o, r::decompose_text(o.level, o.threefold)) : emit_json(o, r::decompose_json(o.level, o.threefold));
  } else if (cmd == "filtration") {
    text ? emit(o, r::filtration_text(o.level, o.threefold))
         : emit_json(o, r::filtration_json(o.level, o.threefold));
  } else if (cmd == "eval") {
    using motive::dsl::Mode;
    Mode mode = o.threefold ? Mode::Threefold : Mode::Surface;
    auto expr = motive::dsl::parse_expr(o.expression);
    auto value = motive::dsl::eval_expr(*expr, o.level, mode);
    std::string rendered = motive::dsl::render_value(value);
    if (text)
      emit(o, rendered);
    else
      emit_json(o, Json{{"level", o.level},
                        {"mode", o.threefold ? "threefold" : "surface"},
                        {"expression", motive::dsl::print_expr(*expr)},
                        {"value", rendered},
                        {"is_zero", motive::dsl::is_zero(value)}});
  } else if (cmd == "report") {
    auto res = r::run_report(o.level);
    text ? emit(o, r::certificate_text(res.json)) : emit_json(o, res.json);
    return res.failures == 0 ? 0 : 1;
  } else if (cmd == "verify") {
    auto res = r::run_verify(o.level, o.threefold);
    text ? emit(o, r::certificate_text(res.json)) : emit_json(o, res.json);
    return res.failures == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact correspondence calculus for elliptic modular surfaces and their fibre squares"};
  app.set_version_flag("--version", std::string(motive::report::kToolVersion));
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub, bool threefold_flag) {
    sub->add_option("--level,-N", o.level, "level N >= 3")->required();
    sub->add_option("--max-level", o.max_level, "refuse levels above this")->capture_default_str();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("-o,--output", o.output, "write to file instead of stdout");
    if (threefold_flag) sub->add_flag("--threefold", o.threefold, "work on the fibre square");
  };

  std::vector<std::pair<std::string, std::string>> commands = {
      {"invariants", "cusp count, Euler number, genus and cusp form dimensions"},
      {"lattice", "Neron intersection matrix and the inverse of its reduced block"},
      {"decompose", "Chow motive decomposition, Chow-Kunneth table and Betti numbers"},
      {"filtration", "filtration on Chow groups induced by the decomposition"},
      {"eval", "evaluate a correspondence expression"},
      {"report", "full JSON report with certificates"},
      {"verify", "run the certificates and summarize"},
  };
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    add_common(sub, name != "invariants" && name != "lattice" && name != "report");
    if (name == "eval") sub->add_option("expression", o.expression, "expression in the correspondence DSL")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, o);
  } catch (const motive::LevelTooSmall& e) {
    std::cerr << "error: LevelTooSmall: " << e.what() << "\n";
    return 2;
  } catch (const LevelAboveMax& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const motive::ParseError& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 2;
  } catch (const motive::UnknownAtom& e) {
    std::cerr << "error: UnknownAtom: " << e.what() << "\n";
    return 2;
  } catch (const motive::dsl::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
