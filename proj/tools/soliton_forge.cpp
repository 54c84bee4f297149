#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "soliton/acceptance.hpp"
#include "soliton/error.hpp"
#include "soliton/report.hpp"

namespace {

constexpr int kUsage = 2;

struct Output {
  std::optional<std::string> path;
  bool pretty = false;
};

// Either the whole report is written or nothing is.
int emit(const soliton::CommandResult& r, const Output& out) {
  if (out.path) {
    std::ofstream f(*out.path, std::ios::binary | std::ios::trunc);
    if (!f) throw soliton::IoError("cannot open " + *out.path + " for writing");
    f << r.json << '\n';
    f.close();
    if (!f) throw soliton::IoError("failed writing " + *out.path);
  }
  if (out.pretty) {
    std::cout << r.summary;
  } else if (!out.path) {
    std::cout << r.json << '\n';
  }
  std::cout.flush();
  return r.exit_code;
}

// "min:max:count"
soliton::Range parse_range(const std::string& text) {
  const auto a = text.find(':');
  const auto b = text.rfind(':');
  if (a == std::string::npos || a == b) throw CLI::ValidationError("range", "expected min:max:count, got " + text);
  try {
    soliton::Range r;
    r.min = std::stod(text.substr(0, a));
    r.max = std::stod(text.substr(a + 1, b - a - 1));
    r.count = std::stoi(text.substr(b + 1));
    return r;
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected min:max:count, got " + text);
  }
}

template <class Convert>
CLI::Validator enum_check(Convert convert, const std::string& name) {
  return CLI::Validator(
      [convert](std::string& s) -> std::string {
        try {
          convert(s);
          return {};
        } catch (const soliton::Error& e) {
          return e.what();
        }
      },
      name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"soliton_forge: exact and numeric checks for KP-II soliton phases", "soliton_forge"};
  app.set_version_flag("--version", soliton::version());
  app.require_subcommand(1);

  Output out;
  std::string expr;
  std::string model_name = "kp";
  int dim = 2;
  std::vector<std::string> expect_zero, expect_nonzero;

  auto add_output = [&](CLI::App* cmd, const std::string& out_help) {
    cmd->add_option("--out", out.path, out_help);
    cmd->add_flag("--pretty", out.pretty, "print a human-readable summary");
  };
  auto add_expectations = [&](CLI::App* cmd) {
    cmd->add_option("--expect-zero", expect_zero, "operators that must vanish")->delimiter(',');
    cmd->add_option("--expect-nonzero", expect_nonzero, "operators that must not vanish")->delimiter(',');
  };

  auto* check = app.add_subcommand("check", "apply operators to a phase");
  std::vector<std::string> ops;
  check->add_option("expr", expr, "phase expression")->required();
  check->add_option("--ops", ops, "comma-separated operator names")->delimiter(',');
  check->add_option("--model", model_name, "kp, kdv, mkdv, zk, mzk")
      ->check(enum_check(soliton::model_from_string, "MODEL"))
      ->capture_default_str();
  check->add_option("--dim", dim, "spatial dimension for zk/mzk")->capture_default_str();
  add_expectations(check);
  add_output(check, "write the JSON report to a file");

  auto* classify = app.add_subcommand("classify", "run the theorem classification");
  classify->add_option("expr", expr, "phase expression")->required();
  add_output(classify, "write the JSON report to a file");

  auto* reconstruct = app.add_subcommand("reconstruct", "recover resonant (k, a) from Theta W_y");
  int m = 0;
  reconstruct->add_option("expr", expr, "phase expression")->required();
  reconstruct->add_option("--m", m, "number of exponentials; 0 infers it")->capture_default_str();
  add_output(reconstruct, "write the JSON report to a file");

  auto* grid = app.add_subcommand("grid", "sample u on a grid");
  grid->set_help_flag("--help", "print this help and exit");
  soliton::GridOptions gopt;
  std::string profile_name = "log";
  std::optional<std::string> grid_range, x_range, y_range;
  grid->add_option("expr", gopt.expr, "phase expression")->required();
  grid->add_option("--profile", profile_name, "log or arctan2")
      ->check(enum_check(soliton::profile_from_string, "PROFILE"))
      ->capture_default_str();
  grid->add_option("--model", model_name, "kp, kdv, mkdv")
      ->check(enum_check(soliton::model_from_string, "MODEL"))
      ->capture_default_str();
  grid->add_option("--grid", grid_range, "min:max:count for both axes (default -10:10:201)");
  grid->add_option("--x", x_range, "min:max:count for x");
  grid->add_option("--y", y_range, "min:max:count for y (time for kdv/mkdv)");
  grid->add_option("--t0", gopt.grid.t0, "time slice")->capture_default_str();
  grid->add_flag("--residual", gopt.residual, "also compute the finite-difference residual");
  grid->add_option("--h", gopt.h, "residual step")->capture_default_str();
  grid->add_option("--tol", gopt.tol, "residual tolerance (default max(1e-6, C h^2))");
  grid->add_option("--out", gopt.out, "write u values as CSV");
  grid->add_option("--report", out.path, "write the JSON report to a file");
  grid->add_flag("--pretty", out.pretty, "print a human-readable summary");

  auto* sweep = app.add_subcommand("sweep", "check a templated phase over parameter values");
  soliton::SweepOptions sopt;
  std::vector<std::string> params;
  sweep->add_option("template", sopt.templ, "phase template with {name} placeholders")->required();
  sweep->add_option("--param", params, "name=start:stop:step or name=v1,v2,...")->required();
  add_expectations(sweep);
  add_output(sweep, "write the JSON report to a file");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  std::optional<std::uint64_t> seed;
  selftest->add_option("--seed", seed, "seed (default SOLITON_FORGE_SEED or built-in)");
  add_output(selftest, "write the JSON report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    soliton::CommandResult result;
    if (*check) {
      soliton::CheckOptions o;
      o.expr = expr;
      o.ops = ops;
      o.model = soliton::model_from_string(model_name);
      o.dimension = dim;
      o.expect_zero = expect_zero;
      o.expect_nonzero = expect_nonzero;
      result = soliton::run_check(o);
    } else if (*classify) {
      result = soliton::run_classify(expr);
    } else if (*reconstruct) {
      result = soliton::run_reconstruct(expr, m);
    } else if (*grid) {
      gopt.profile = soliton::profile_from_string(profile_name);
      gopt.model = soliton::model_from_string(model_name);
      if (grid_range) gopt.grid.x = gopt.grid.y = parse_range(*grid_range);
      if (x_range) gopt.grid.x = parse_range(*x_range);
      if (y_range) gopt.grid.y = parse_range(*y_range);
      result = soliton::run_grid(gopt);
    } else if (*sweep) {
      for (const auto& p : params) sopt.params.push_back(soliton::parse_sweep_param(p));
      sopt.expect_zero = expect_zero;
      sopt.expect_nonzero = expect_nonzero;
      result = soliton::run_sweep(sopt);
    } else if (*selftest) {
      result = soliton::run_selftest(seed.value_or(soliton::seed_from_env(soliton::kDefaultSeed)));
    }
    return emit(result, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const soliton::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
