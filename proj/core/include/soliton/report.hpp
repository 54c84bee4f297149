#pragma once

// Machine-readable command reports shared by the CLI and the acceptance suite.
// Every report is a JSON object with a schema tag and the library version;
// identical inputs give byte-identical output.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soliton/expalg.hpp"
#include "soliton/numeric.hpp"
#include "soliton/operators.hpp"

namespace soliton {

inline constexpr const char* kReportSchema = "soliton_forge.report/1";

const char* version();

struct CommandResult {
  std::string json;
  /// Human-readable summary lines.
  std::string summary;
  /// 0 all checks passed, 1 a check failed.
  int exit_code = 0;
};

/// Phase resolved for a model: DSL phase expressions are built over (t, x, y)
/// and projected (KdV/mKdV: y = 0) or renamed (ZK/mZK: x -> x1, y -> x2);
/// canonical ExpPoly text is read directly over the model's variables.
struct ResolvedPhase {
  std::string echo;
  std::string kind;
  ExpPoly theta;
};

VarSet model_vars(Model model, int dimension);
ResolvedPhase resolve_phase(const std::string& text, Model model = Model::KP, int dimension = 2);

struct CheckOptions {
  std::string expr;
  std::vector<std::string> ops;
  Model model = Model::KP;
  int dimension = 2;
  std::vector<std::string> expect_zero;
  std::vector<std::string> expect_nonzero;
};

CommandResult run_check(const CheckOptions& options);

CommandResult run_classify(const std::string& expr);

/// `m` = 0 infers M from the entry count when it is triangular.
CommandResult run_reconstruct(const std::string& expr, int m = 0);

struct GridOptions {
  std::string expr;
  Profile profile = Profile::Log;
  Model model = Model::KP;
  Grid grid;
  std::optional<std::string> out;
  bool residual = false;
  double h = 0.05;
  std::optional<double> tol;
};

CommandResult run_grid(const GridOptions& options);

/// One swept parameter: either an inclusive start:stop:step range or a list.
struct SweepParam {
  std::string name;
  std::vector<Rational> values;
};

/// "name=start:stop:step" or "name=v1,v2,...".
SweepParam parse_sweep_param(const std::string& text);

struct SweepOptions {
  std::string templ;
  std::vector<SweepParam> params;
  std::vector<std::string> expect_zero;
  std::vector<std::string> expect_nonzero;
};

CommandResult run_sweep(const SweepOptions& options);

CommandResult run_selftest(std::uint64_t seed);

}  // namespace soliton
