#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "neofuzzy/bench.hpp"
#include "neofuzzy/dataset.hpp"
#include "neofuzzy/membership.hpp"
#include "neofuzzy/mlp.hpp"
#include "neofuzzy/nfn.hpp"
#include "neofuzzy/pipeline.hpp"

namespace neofuzzy {

// Partition document: {"domain": [min, max], "curves": [{"label", "left",
// "vertex", "right"}, ...]} with the curves and their fields in fixed order,
// so exports diff cleanly.
std::string partition_to_json(const FuzzyPartition& partition, int indent = 2);
FuzzyPartition partition_from_json(const std::string& text);

// Model files carry a "kind" discriminator ("nfn" or "mlp"). The fuzzy model
// stores one partition block per input plus a "weights" array of arrays.
std::string nfn_model_to_json(const NfnModel& model);
std::string mlp_model_to_json(const MlpModel& model);

using AnyModel = std::variant<NfnModel, MlpModel>;
AnyModel model_from_json(const std::string& text);

void save_model_file(const std::filesystem::path& path, const NfnModel& model);
void save_model_file(const std::filesystem::path& path, const MlpModel& model);
AnyModel load_model_file(const std::filesystem::path& path);

// Dataset CSV: header "x1,x2,y", one sample per row, round-trip-exact decimal.
void write_dataset_csv(const std::filesystem::path& path, const Dataset& data);
Dataset read_dataset_csv(const std::filesystem::path& path);

// Prediction CSV for plotting: header "x1,x2,y_true,y_pred".
void write_predictions_csv(const std::filesystem::path& path, const Dataset& data,
                           std::span<const double> predictions);

// Training reports. config_json is embedded verbatim under "config" so every
// report names the exact settings that produced it; pass "{}" when there is
// no surrounding configuration.
std::string pipeline_report_to_json(const PipelineReport& report,
                                    const std::string& config_json = "{}");
std::string mlp_report_to_json(const MlpBaselineReport& report,
                               const std::string& config_json = "{}");

// A comparison-table row recovered from a report file written by either
// writer above.
ComparisonRow comparison_row_from_report(const std::string& text);
ComparisonRow load_comparison_row(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace neofuzzy
