#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "neofuzzy/bench.hpp"
#include "neofuzzy/dataset.hpp"
#include "neofuzzy/mlp.hpp"
#include "neofuzzy/nfn.hpp"
#include "neofuzzy/som.hpp"

namespace neofuzzy {

struct Domain {
  double min;
  double max;
};

/// Settings for the two-phase run: competitive vertex placement first, then
/// weight fitting on the rebuilt partitions.
struct PipelineConfig {
  std::vector<Domain> domains = {{-10.0, 10.0}, {-10.0, 10.0}};
  SomSchedule som_schedule;
  std::uint32_t som_seed = 0;
  TrainConfig train_config;
};

struct EpochRecord {
  double mqe;
  std::uint64_t ops_cumulative;
};

struct PipelineReport {
  std::string model_name = "NFN-MK";
  std::vector<std::array<double, kCurveCount>> initial_vertices;  // per input
  std::vector<std::array<double, kCurveCount>> learned_vertices;  // per input
  std::vector<std::array<double, kCurveCount>> final_weights;     // per input
  std::vector<EpochRecord> epochs;
  double final_mqe = 0.0;
  double target_min = 0.0;  // actual range of the training targets, unclipped
  double target_max = 0.0;
  NfnEvalProfile eval_ops;
  OpCounter training_ops;
  double reference_mqe = 0.0;  // published result for this model name
  std::vector<std::string> warnings;
};

struct PipelineResult {
  NfnModel model;
  PipelineReport report;
};

/// Two phases, run once each in order: (1) per input, initialise and train
/// the competitive layer on that input's coordinates and rebuild the
/// partition from the sorted prototypes; (2) fit the weights by online
/// gradient descent on the rebuilt model. Weights do not exist during phase
/// 1 and vertices are frozen during phase 2. Coincident learned prototypes
/// are legal (they yield degenerate triangle sides) but are flagged in the
/// report warnings.
PipelineResult run_pipeline(const PipelineConfig& cfg, const Dataset& data);

/// The classical-network baseline trained under the identical protocol.
struct MlpBaselineConfig {
  TrainConfig train_config;
  std::uint32_t init_seed = 0;
};

struct MlpBaselineReport {
  std::string model_name = "NN";
  std::vector<EpochRecord> epochs;
  double final_mqe = 0.0;
  double target_min = 0.0;
  double target_max = 0.0;
  MlpEvalProfile eval_ops;
  OpCounter training_ops;
  double reference_mqe = 0.0;
};

struct MlpBaselineResult {
  MlpModel model;
  MlpBaselineReport report;
};

MlpBaselineResult run_mlp_baseline(const MlpBaselineConfig& cfg, const Dataset& data);

}  // namespace neofuzzy
