#include "neofuzzy/pipeline.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace neofuzzy {

namespace {

void check_config(const PipelineConfig& cfg, const Dataset& data) {
  if (cfg.domains.size() != 2) {
    throw std::invalid_argument("run_pipeline: exactly two input domains expected");
  }
  for (const Domain& d : cfg.domains) {
    if (!(d.min < d.max)) {
      throw std::invalid_argument("run_pipeline: invalid input domain");
    }
  }
  if (data.empty()) {
    throw std::invalid_argument("run_pipeline: empty dataset");
  }
}

std::vector<double> input_coordinates(const Dataset& data, std::size_t input) {
  std::vector<double> xs;
  xs.reserve(data.size());
  for (const Sample& s : data) {
    xs.push_back(input == 0 ? s.x1 : s.x2);
  }
  return xs;
}

std::pair<double, double> target_range(const Dataset& data) {
  double lo = data.front().y;
  double hi = data.front().y;
  for (const Sample& s : data) {
    lo = std::min(lo, s.y);
    hi = std::max(hi, s.y);
  }
  return {lo, hi};
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& cfg, const Dataset& data) {
  check_config(cfg, data);

  PipelineReport report;
  report.reference_mqe = reference_nfn_mk().mqe;
  std::tie(report.target_min, report.target_max) = target_range(data);

  // Phase 1: place the vertices by competitive learning, one layer per input.
  // No weights exist yet.
  std::vector<FuzzyPartition> partitions;
  partitions.reserve(cfg.domains.size());
  for (std::size_t i = 0; i < cfg.domains.size(); ++i) {
    const Domain& domain = cfg.domains[i];
    const SomState initial = som_init(domain.min, domain.max);
    report.initial_vertices.push_back(initial.prototypes);

    const std::vector<double> xs = input_coordinates(data, i);
    std::array<double, kCurveCount> raw{};
    const SomState learned = som_train(initial, xs, cfg.som_schedule, cfg.som_seed, &raw);
    report.learned_vertices.push_back(learned.prototypes);

    if (raw != learned.prototypes) {
      std::ostringstream oss;
      oss << "input " << i << ": prototypes required sorting or clamping";
      report.warnings.push_back(oss.str());
    }
    for (int k = 0; k + 1 < kCurveCount; ++k) {
      if (learned.prototypes[static_cast<std::size_t>(k)] ==
          learned.prototypes[static_cast<std::size_t>(k) + 1]) {
        std::ostringstream oss;
        oss << "input " << i << ": coincident prototypes at index " << k
            << " produce a degenerate triangle side";
        report.warnings.push_back(oss.str());
      }
    }

    partitions.push_back(
        FuzzyPartition::from_vertices(learned.prototypes, domain.min, domain.max));
  }

  // Phase 2: fit the weights on the rebuilt partitions. Vertices are frozen.
  NfnModel model = NfnModel::zeros(std::move(partitions));
  TrainTrace trace;
  model = train_weights(model, data, cfg.train_config, &trace);

  report.epochs.reserve(trace.epoch_mqe.size());
  for (std::size_t e = 0; e < trace.epoch_mqe.size(); ++e) {
    report.epochs.push_back(EpochRecord{trace.epoch_mqe[e], trace.ops_after_epoch[e]});
  }
  report.final_mqe = trace.epoch_mqe.empty() ? 0.0 : trace.epoch_mqe.back();
  report.training_ops = trace.total_ops;
  for (const auto& input : model.inputs) {
    report.final_weights.push_back(input.weights);
  }
  report.eval_ops = count_eval_ops(model, generic_probe_point(model));

  return PipelineResult{std::move(model), std::move(report)};
}

MlpBaselineResult run_mlp_baseline(const MlpBaselineConfig& cfg, const Dataset& data) {
  if (data.empty()) {
    throw std::invalid_argument("run_mlp_baseline: empty dataset");
  }

  MlpBaselineReport report;
  report.reference_mqe = reference_nn().mqe;
  std::tie(report.target_min, report.target_max) = target_range(data);

  MlpModel model = mlp_init(cfg.init_seed);
  TrainTrace trace;
  model = mlp_train(model, data, cfg.train_config, &trace);

  report.epochs.reserve(trace.epoch_mqe.size());
  for (std::size_t e = 0; e < trace.epoch_mqe.size(); ++e) {
    report.epochs.push_back(EpochRecord{trace.epoch_mqe[e], trace.ops_after_epoch[e]});
  }
  report.final_mqe = trace.epoch_mqe.empty() ? 0.0 : trace.epoch_mqe.back();
  report.training_ops = trace.total_ops;
  report.eval_ops = count_eval_ops(model, 0.5, 0.5);

  return MlpBaselineResult{model, std::move(report)};
}

}  // namespace neofuzzy
