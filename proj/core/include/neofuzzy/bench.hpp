#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "neofuzzy/dataset.hpp"
#include "neofuzzy/mlp.hpp"
#include "neofuzzy/nfn.hpp"
#include "neofuzzy/opcount.hpp"

namespace neofuzzy {

/// sin(t)/t with the removable singularity filled in: exactly 1 at t == 0,
/// and a short series below |t| = 1e-8 to dodge the cancellation in sin(t)/t.
/// Even in t by construction.
double sinc(double t);

/// The benchmark target surface: sinc(x1) * sinc(x2). Symmetric in both
/// arguments and bounded by 1 in magnitude.
double mexican_hat(double x1, double x2);

/// Inclusive n-per-axis grid over [min, max] squared, row-major in x1, with
/// y = mexican_hat(x1, x2). n >= 2. Grid points are computed as
/// min + (j * span) / (n - 1), which lands exactly on 0 for symmetric odd
/// grids and exactly on the endpoints.
Dataset gen_grid(int n_per_axis, double domain_min, double domain_max);

/// Arithmetic profile of one fuzzy-estimator evaluation. The weighted output
/// sum is tallied apart from the membership evaluations because published
/// cost figures for this model family are ambiguous about whether membership
/// arithmetic is included; keeping both readings lets reports show either.
struct NfnEvalProfile {
  OpCounter weighted_sum;
  OpCounter membership;
  int function_evals = 0;  // membership-curve evaluations

  OpCounter total() const {
    OpCounter t = weighted_sum;
    t += membership;
    return t;
  }
};

struct MlpEvalProfile {
  OpCounter forward;
  int function_evals = 0;  // activation evaluations
};

/// Profile one evaluation at x. The weighted-sum tally for a two-input model
/// is always 4 multiplies + 3 adds; the membership tally depends on where x
/// falls (vertex and saturation branches cost nothing).
NfnEvalProfile count_eval_ops(const NfnModel& model, std::span<const double> x);
MlpEvalProfile count_eval_ops(const MlpModel& model, double x1, double x2);

/// A representative interior point for profiling: per input, the midpoint of
/// the widest segment, which is never a vertex for any non-degenerate
/// partition. Falls back to the domain midpoint if every segment is empty.
std::vector<double> generic_probe_point(const NfnModel& model);

/// One line of the model-comparison table.
struct ComparisonRow {
  std::string model;
  std::uint64_t ops = 0;              // arithmetic per evaluation (+, -, x)
  std::uint64_t ops_per_function = 0; // function evaluations per model output
  double mqe = 0.0;
  // Breakdown of `ops`, present for fuzzy-estimator rows only.
  std::optional<std::uint64_t> ops_weighted_sum;
  std::optional<std::uint64_t> ops_membership;
};

/// Published results for this benchmark, kept for context in reports and
/// comparison tables.
const ComparisonRow& reference_nfn_mk();  // 8 ops, 2 per function, MQE 0.0426
const ComparisonRow& reference_nfhq();    // 168 ops, 21 per function, MQE 0.0150
const ComparisonRow& reference_fsom();    // 200 ops, 101 per function, MQE 0.0314
const ComparisonRow& reference_nn();      // 42 ops, 8 per function, MQE 0.1037

struct ComparisonTable {
  std::vector<ComparisonRow> rows;

  std::string to_text() const;
  std::string to_csv() const;
};

/// Measured rows followed by the NFHQ and FSOM reference rows. Rows must
/// carry a non-empty model name; MQE is rendered at 4 decimals.
ComparisonTable compare_models(const std::vector<ComparisonRow>& measured);

}  // namespace neofuzzy
