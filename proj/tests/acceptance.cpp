// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "neofuzzy/io.hpp"
#include "neofuzzy/pipeline.hpp"

using namespace neofuzzy;
namespace fs = std::filesystem;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// --- 1. Experiment reproduction -------------------------------------------

Check experiment_reproduction() {
  Check c;
  const auto start = std::chrono::steady_clock::now();

  const Dataset data = gen_grid(15, -10.0, 10.0);
  const PipelineResult nfn = run_pipeline(PipelineConfig{}, data);
  const MlpBaselineResult mlp = run_mlp_baseline(MlpBaselineConfig{}, data);

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  c.require(nfn.report.final_mqe <= 0.08,
            "training MQE " + fmt(nfn.report.final_mqe) + " exceeds 0.08");
  c.require(nfn.report.final_mqe < mlp.report.final_mqe,
            "estimator MQE " + fmt(nfn.report.final_mqe) +
                " not below baseline MQE " + fmt(mlp.report.final_mqe));
  c.require(elapsed < 5.0, "runtime " + fmt(elapsed) + "s exceeds 5s");
  if (c.ok) {
    c.detail = "MQE " + fmt(nfn.report.final_mqe) + " <= 0.08, beats baseline " +
               fmt(mlp.report.final_mqe) + ", " + fmt(elapsed) + "s";
  }
  return c;
}

// --- 2. Partition of unity -------------------------------------------------

Check partition_of_unity() {
  Check c;
  const FuzzyPartition uniform = FuzzyPartition::uniform(-10.0, 10.0);
  const FuzzyPartition learned = FuzzyPartition::from_vertices(
      {-10.0, -3.5, -0.2, 3.2, 6.5, 10.0, 10.0}, -10.0, 10.0);

  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> pick(-10.0, 10.0);
  double worst = 0.0;
  for (const FuzzyPartition* p : {&uniform, &learned}) {
    for (int i = 0; i < 1000; ++i) {
      const double x = pick(rng);
      double sum = 0.0;
      int nonzero = 0;
      for (int k = 0; k < kCurveCount; ++k) {
        const double mu = p->membership(k, x);
        sum += mu;
        if (mu > 0.0) ++nonzero;
      }
      worst = std::max(worst, std::abs(sum - 1.0));
      c.require(std::abs(sum - 1.0) < 1e-9,
                "membership sum off by " + fmt(std::abs(sum - 1.0)) + " at x=" + fmt(x));
      c.require(nonzero <= 2, std::to_string(nonzero) + " curves active at x=" + fmt(x));
    }
  }
  if (c.ok) c.detail = "2000 points, worst |sum-1| = " + fmt(worst);
  return c;
}

// --- 3. Oracle equivalence ---------------------------------------------------

Check oracle_equivalence() {
  Check c;
  std::mt19937 rng(2025);
  std::uniform_real_distribution<double> in_domain(-10.0, 10.0);
  std::uniform_real_distribution<double> weight(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<FuzzyPartition> partitions;
    for (int i = 0; i < 2; ++i) {
      std::array<double, kCurveCount> vertices{};
      for (double& v : vertices) v = in_domain(rng);
      std::sort(vertices.begin(), vertices.end());
      partitions.push_back(FuzzyPartition::from_vertices(vertices, -10.0, 10.0));
    }
    NfnModel model = NfnModel::zeros(std::move(partitions));
    for (auto& input : model.inputs) {
      for (double& w : input.weights) w = weight(rng);
    }
    const std::array<double, 2> x = {in_domain(rng), in_domain(rng)};

    double full = 0.0;  // all 14 (label, input) terms; inactive ones are 0
    for (std::size_t i = 0; i < 2; ++i) {
      for (int k = 0; k < kCurveCount; ++k) {
        full += model.inputs[i].partition.membership(k, x[i]) *
                model.inputs[i].weights[static_cast<std::size_t>(k)];
      }
    }
    const double diff = std::abs(nfn_eval(model, x) - full);
    worst = std::max(worst, diff);
    c.require(diff <= 1e-12, "active-pair vs full sum differ by " + fmt(diff));
  }
  if (c.ok) c.detail = "1000 models/points, worst |diff| = " + fmt(worst);
  return c;
}

// --- 4. Gradient checks ------------------------------------------------------

double nfn_half_sq_error(NfnModel model, std::size_t input, std::size_t k, double w,
                         std::span<const double> x, double y_desired) {
  model.inputs[input].weights[k] = w;
  const double e = y_desired - nfn_eval(model, x);
  return 0.5 * e * e;
}

double& mlp_param(MlpModel& m, int idx) {
  if (idx < 14) return m.hidden_weights[idx / 2][idx % 2];
  if (idx < 21) return m.hidden_bias[idx - 14];
  if (idx < 28) return m.output_weights[idx - 21];
  return m.output_bias;
}

double mlp_half_sq_error(MlpModel m, int idx, double value, double x1, double x2,
                         double y_desired) {
  mlp_param(m, idx) = value;
  const double e = y_desired - mlp_forward(m, x1, x2);
  return 0.5 * e * e;
}

Check gradient_checks() {
  Check c;
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> pick(-10.0, 10.0);
  const double h = 1e-6;

  // Fuzzy-estimator update vs central differences, away from the kinks.
  int checked = 0;
  double worst_rel = 0.0;
  while (checked < 25) {
    NfnModel model = NfnModel::zeros({FuzzyPartition::uniform(-10.0, 10.0),
                                      FuzzyPartition::uniform(-10.0, 10.0)});
    std::uniform_real_distribution<double> weight(-1.0, 1.0);
    for (auto& input : model.inputs) {
      for (double& w : input.weights) w = weight(rng);
    }
    const std::array<double, 2> x = {pick(rng), pick(rng)};
    double kink = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 2; ++i) {
      for (double v : model.inputs[i].partition.vertices()) {
        kink = std::min(kink, std::abs(x[i] - v));
      }
    }
    if (kink < 1e-3) continue;
    const double y_desired = pick(rng);
    const double lr = 0.1;
    const NfnModel updated = lms_step(model, x, y_desired, lr);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t k = 0; k < kCurveCount; ++k) {
        const double w = model.inputs[i].weights[k];
        const double delta = updated.inputs[i].weights[k] - w;
        const double grad = (nfn_half_sq_error(model, i, k, w + h, x, y_desired) -
                             nfn_half_sq_error(model, i, k, w - h, x, y_desired)) /
                            (2.0 * h);
        const double expected = -lr * grad;
        if (delta == 0.0 && std::abs(expected) < 1e-12) continue;
        const double rel =
            std::abs(delta - expected) / std::max(std::abs(expected), 1e-12);
        worst_rel = std::max(worst_rel, rel);
        c.require(rel < 1e-6, "estimator weight delta off by rel " + fmt(rel));
      }
    }
    ++checked;
  }

  // Baseline backprop vs central differences, 10 random parameter points.
  double worst_mlp = 0.0;
  std::uniform_real_distribution<double> small(-3.0, 3.0);
  for (int point = 0; point < 10; ++point) {
    const MlpModel m = mlp_init(static_cast<std::uint32_t>(7000 + point));
    const double x1 = small(rng), x2 = small(rng), y_desired = small(rng);
    TrainConfig cfg;
    cfg.learning_rate = 0.1;
    cfg.epochs = 1;
    MlpModel stepped = mlp_train(m, Dataset{Sample{x1, x2, y_desired}}, cfg);
    for (int idx = 0; idx < 29; ++idx) {
      MlpModel base = m;
      const double w = mlp_param(base, idx);
      MlpModel after = stepped;
      const double delta = mlp_param(after, idx) - w;
      const double grad = (mlp_half_sq_error(m, idx, w + h, x1, x2, y_desired) -
                           mlp_half_sq_error(m, idx, w - h, x1, x2, y_desired)) /
                          (2.0 * h);
      const double expected = -0.1 * grad;
      const double rel = std::abs(delta - expected) /
                         std::max({std::abs(expected), std::abs(delta), 1e-10});
      worst_mlp = std::max(worst_mlp, rel);
      c.require(rel < 1e-5, "baseline weight delta off by rel " + fmt(rel));
    }
  }
  if (c.ok) {
    c.detail = "estimator worst rel " + fmt(worst_rel) + ", baseline worst rel " +
               fmt(worst_mlp);
  }
  return c;
}

// --- 5. Learned-vertex breakpoint fixture -----------------------------------

Check breakpoint_fixture() {
  Check c;
  const FuzzyPartition p = FuzzyPartition::from_vertices(
      {-10.0, -3.5, -0.2, 3.2, 6.5, 10.0, 10.0}, -10.0, 10.0);
  const struct {
    double left, vertex, right;
  } expected[kCurveCount] = {
      {-10.0, -10.0, -3.5}, {-10.0, -3.5, -0.2}, {-3.5, -0.2, 3.2}, {-0.2, 3.2, 6.5},
      {3.2, 6.5, 10.0},     {6.5, 10.0, 10.0},   {10.0, 10.0, 10.0},
  };
  for (int k = 0; k < kCurveCount; ++k) {
    const TriangularMf& mf = p.curve(k);
    std::ostringstream label;
    label << "curve " << to_string(static_cast<FuzzyLabel>(k));
    c.require(mf.left() == expected[k].left, label.str() + " left mismatch");
    c.require(mf.vertex() == expected[k].vertex, label.str() + " vertex mismatch");
    c.require(mf.right() == expected[k].right, label.str() + " right mismatch");
  }
  if (c.ok) c.detail = "all 21 breakpoint cells exact";
  return c;
}

// --- 6. Competitive-layer properties ----------------------------------------

Check som_properties() {
  Check c;

  // Fixed point on a repeated sample.
  SomSchedule fp;
  fp.initial_rate = 0.5;
  fp.final_rate = 0.1;
  fp.initial_radius = 0;
  fp.epochs = 120;
  const double target = 4.2;
  const SomState converged =
      som_train(som_init(-10.0, 10.0), std::vector<double>(1, target), fp, 0);
  const double winner_p = converged.prototypes[winner(converged, target)];
  c.require(std::abs(winner_p - target) < 1e-6,
            "winner prototype " + fmt(winner_p) + " not at " + fmt(target));

  // Sorted and clamped output.
  std::mt19937 rng(2027);
  std::uniform_real_distribution<double> pick(-10.0, 10.0);
  std::vector<double> samples(200);
  for (double& s : samples) s = pick(rng);
  const SomState trained = som_train(som_init(-10.0, 10.0), samples, SomSchedule{}, 9);
  c.require(std::is_sorted(trained.prototypes.begin(), trained.prototypes.end()),
            "prototypes not sorted");
  for (double p : trained.prototypes) {
    c.require(p >= -10.0 && p <= 10.0, "prototype " + fmt(p) + " outside the domain");
  }

  // Mirrored stream -> mirrored prototypes.
  std::vector<double> mirrored(samples.size());
  std::transform(samples.begin(), samples.end(), mirrored.begin(),
                 [](double x) { return -x; });
  const SomState flipped = som_train(som_init(-10.0, 10.0), mirrored, SomSchedule{}, 9);
  for (int k = 0; k < kCurveCount; ++k) {
    const double diff = std::abs(flipped.prototypes[static_cast<std::size_t>(k)] +
                                 trained.prototypes[static_cast<std::size_t>(6 - k)]);
    c.require(diff < 1e-6, "mirror asymmetry " + fmt(diff) + " at index " +
                               std::to_string(k));
  }

  // Determinism.
  const SomState again = som_train(som_init(-10.0, 10.0), samples, SomSchedule{}, 9);
  c.require(again.prototypes == trained.prototypes, "repeat run differed");

  if (c.ok) c.detail = "fixed point, sort/clamp, mirror symmetry, determinism";
  return c;
}

// --- 7. Train-command determinism -------------------------------------------

int run_quiet(const std::string& args, const fs::path& dir) {
  const std::string cmd = std::string(NEOFUZZY_CLI_PATH) + " " + args + " > " +
                          (dir / "out.txt").string() + " 2> " +
                          (dir / "err.txt").string();
  const int status = std::system(cmd.c_str());
  return (status == -1) ? -1 : WEXITSTATUS(status);
}

Check train_determinism() {
  Check c;
  const fs::path dir = "acceptance_scratch";
  fs::create_directories(dir);

  c.require(run_quiet("gen-data --n 15 --min -10 --max 10 --out " +
                          (dir / "data.csv").string(),
                      dir) == 0,
            "gen-data failed");
  write_text_file(dir / "cfg.json",
                  R"({"model": "nfn-mk", "dataset": ")" + (dir / "data.csv").string() +
                      "\"}");
  const std::string base = "train --config " + (dir / "cfg.json").string();
  c.require(run_quiet(base + " --model-out " + (dir / "model_a.json").string() +
                          " --report-out " + (dir / "report_a.json").string(),
                      dir) == 0,
            "first train run failed");
  c.require(run_quiet(base + " --model-out " + (dir / "model_b.json").string() +
                          " --report-out " + (dir / "report_b.json").string(),
                      dir) == 0,
            "second train run failed");
  if (c.ok) {
    const std::string a = read_text_file(dir / "model_a.json");
    const std::string b = read_text_file(dir / "model_b.json");
    c.require(!a.empty() && a == b, "model files differ between identical runs");
    if (c.ok) c.detail = "model files byte-identical (" + std::to_string(a.size()) + " bytes)";
  }
  return c;
}

// --- 8. Arithmetic accounting ------------------------------------------------

Check op_accounting() {
  Check c;
  NfnModel model = NfnModel::zeros({FuzzyPartition::uniform(-10.0, 10.0),
                                    FuzzyPartition::uniform(-10.0, 10.0)});
  const NfnEvalProfile profile = count_eval_ops(model, generic_probe_point(model));
  c.require(profile.weighted_sum.muls == 4,
            "weighted sum multiplies = " + std::to_string(profile.weighted_sum.muls));
  c.require(profile.weighted_sum.adds == 3,
            "weighted sum adds = " + std::to_string(profile.weighted_sum.adds));
  c.require(profile.weighted_sum.subs == 0,
            "weighted sum subtractions = " + std::to_string(profile.weighted_sum.subs));

  ComparisonRow ours;
  ours.model = "NFN-MK";
  ours.ops = profile.total().total();
  ours.ops_per_function = static_cast<std::uint64_t>(profile.function_evals);
  ours.mqe = 0.0152;
  ours.ops_weighted_sum = profile.weighted_sum.total();
  ours.ops_membership = profile.membership.total();
  const std::string text = compare_models({ours}).to_text();
  for (const char* cell : {"NFHQ", "168", "21", "0.0150", "FSOM", "200", "101",
                           "0.0314"}) {
    c.require(text.find(cell) != std::string::npos,
              std::string("reference cell '") + cell + "' missing from table");
  }
  if (c.ok) c.detail = "weighted sum = 4 muls + 3 adds; reference rows verbatim";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"experiment reproduction (MQE <= 0.08, beats baseline, < 5 s)",
       experiment_reproduction},
      {"partition of unity and two-curve sparsity", partition_of_unity},
      {"active-pair evaluation equals the full-sum oracle", oracle_equivalence},
      {"update deltas match central finite differences", gradient_checks},
      {"learned-vertex breakpoint fixture is exact", breakpoint_fixture},
      {"competitive-layer convergence, ordering and determinism", som_properties},
      {"train command is byte-deterministic", train_determinism},
      {"arithmetic accounting and reference rows", op_accounting},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %zu. %s%s%s\n", result.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), result.detail.empty() ? "" : " -- ",
                result.detail.c_str());
    if (!result.ok) ++failures;
  }
  return failures;
}
