// Command-line front end: dataset generation, two-phase training, model
// evaluation, the comparison table and partition export. Data goes to files
// or standard output; diagnostics and the resolved-config banner go to the
// error stream. Exit status is nonzero on any failure.

#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "neofuzzy/io.hpp"
#include "neofuzzy/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace neofuzzy;

namespace {

struct TrainOptions {
  std::string config_path;
  std::string model_out;
  std::string report_out;
  std::optional<std::string> dataset_override;
  std::optional<double> learning_rate;
  std::optional<int> epochs;
  std::optional<std::uint32_t> shuffle_seed;
  std::optional<double> som_initial_rate;
  std::optional<double> som_final_rate;
  std::optional<int> som_initial_radius;
  std::optional<int> som_epochs;
  std::optional<std::uint32_t> som_seed;
  std::optional<std::uint32_t> init_seed;
};

struct ResolvedTrainConfig {
  std::string model_kind = "nfn-mk";
  std::string dataset_path;
  PipelineConfig pipeline;
  MlpBaselineConfig mlp;
};

double json_number(const ordered_json& doc, const char* key, double fallback) {
  return doc.contains(key) ? doc.at(key).get<double>() : fallback;
}

ResolvedTrainConfig resolve_train_config(const TrainOptions& opt) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(read_text_file(opt.config_path));
  } catch (const std::exception& e) {
    throw std::runtime_error("config '" + opt.config_path + "': " + e.what());
  }

  ResolvedTrainConfig cfg;
  if (doc.contains("model")) cfg.model_kind = doc.at("model").get<std::string>();
  if (cfg.model_kind != "nfn-mk" && cfg.model_kind != "mlp") {
    throw std::runtime_error("config: model must be 'nfn-mk' or 'mlp', got '" +
                             cfg.model_kind + "'");
  }
  if (doc.contains("dataset")) cfg.dataset_path = doc.at("dataset").get<std::string>();

  if (doc.contains("domains")) {
    const auto& domains = doc.at("domains");
    if (domains.size() != 2) {
      throw std::runtime_error("config: expected 2 domains");
    }
    cfg.pipeline.domains.clear();
    for (const auto& d : domains) {
      cfg.pipeline.domains.push_back(Domain{d.at(0).get<double>(), d.at(1).get<double>()});
    }
  }
  if (doc.contains("som")) {
    const auto& som = doc.at("som");
    cfg.pipeline.som_schedule.initial_rate =
        json_number(som, "initial_rate", cfg.pipeline.som_schedule.initial_rate);
    cfg.pipeline.som_schedule.final_rate =
        json_number(som, "final_rate", cfg.pipeline.som_schedule.final_rate);
    if (som.contains("initial_radius")) {
      cfg.pipeline.som_schedule.initial_radius = som.at("initial_radius").get<int>();
    }
    if (som.contains("epochs")) {
      cfg.pipeline.som_schedule.epochs = som.at("epochs").get<int>();
    }
    if (som.contains("seed")) {
      cfg.pipeline.som_seed = som.at("seed").get<std::uint32_t>();
    }
  }
  TrainConfig train;
  if (doc.contains("train")) {
    const auto& t = doc.at("train");
    train.learning_rate = json_number(t, "learning_rate", train.learning_rate);
    if (t.contains("epochs")) train.epochs = t.at("epochs").get<int>();
    if (t.contains("shuffle_seed")) {
      train.shuffle_seed = t.at("shuffle_seed").get<std::uint32_t>();
    }
  }
  if (doc.contains("mlp") && doc.at("mlp").contains("init_seed")) {
    cfg.mlp.init_seed = doc.at("mlp").at("init_seed").get<std::uint32_t>();
  }

  // Command-line overrides win over file values.
  if (opt.dataset_override) cfg.dataset_path = *opt.dataset_override;
  if (opt.learning_rate) train.learning_rate = *opt.learning_rate;
  if (opt.epochs) train.epochs = *opt.epochs;
  if (opt.shuffle_seed) train.shuffle_seed = *opt.shuffle_seed;
  if (opt.som_initial_rate) cfg.pipeline.som_schedule.initial_rate = *opt.som_initial_rate;
  if (opt.som_final_rate) cfg.pipeline.som_schedule.final_rate = *opt.som_final_rate;
  if (opt.som_initial_radius) {
    cfg.pipeline.som_schedule.initial_radius = *opt.som_initial_radius;
  }
  if (opt.som_epochs) cfg.pipeline.som_schedule.epochs = *opt.som_epochs;
  if (opt.som_seed) cfg.pipeline.som_seed = *opt.som_seed;
  if (opt.init_seed) cfg.mlp.init_seed = *opt.init_seed;

  cfg.pipeline.train_config = train;
  cfg.mlp.train_config = train;

  if (cfg.dataset_path.empty()) {
    throw std::runtime_error("config: no dataset path given");
  }
  return cfg;
}

// Every run echoes the settings it actually used, so any output can be
// reproduced from its own log.
ordered_json config_echo(const ResolvedTrainConfig& cfg) {
  ordered_json doc;
  doc["model"] = cfg.model_kind;
  doc["dataset"] = cfg.dataset_path;
  ordered_json domains = ordered_json::array();
  for (const Domain& d : cfg.pipeline.domains) domains.push_back({d.min, d.max});
  doc["domains"] = std::move(domains);
  ordered_json som;
  som["initial_rate"] = cfg.pipeline.som_schedule.initial_rate;
  som["final_rate"] = cfg.pipeline.som_schedule.final_rate;
  som["initial_radius"] = cfg.pipeline.som_schedule.initial_radius;
  som["epochs"] = cfg.pipeline.som_schedule.epochs;
  som["seed"] = cfg.pipeline.som_seed;
  doc["som"] = std::move(som);
  ordered_json train;
  train["learning_rate"] = cfg.pipeline.train_config.learning_rate;
  train["epochs"] = cfg.pipeline.train_config.epochs;
  train["shuffle_seed"] = cfg.pipeline.train_config.shuffle_seed;
  doc["train"] = std::move(train);
  if (cfg.model_kind == "mlp") {
    ordered_json mlp;
    mlp["init_seed"] = cfg.mlp.init_seed;
    doc["mlp"] = std::move(mlp);
  }
  return doc;
}

int cmd_gen_data(int n, double domain_min, double domain_max, const std::string& out) {
  std::cerr << "gen-data: n=" << n << " domain=[" << domain_min << ", " << domain_max
            << "] out=" << out << "\n";
  const Dataset data = gen_grid(n, domain_min, domain_max);
  write_dataset_csv(out, data);
  std::printf("%zu rows written to %s\n", data.size(), out.c_str());
  return 0;
}

int cmd_train(const TrainOptions& opt) {
  const ResolvedTrainConfig cfg = resolve_train_config(opt);
  const ordered_json echo = config_echo(cfg);
  std::cerr << "train: " << echo.dump() << "\n";

  const Dataset data = read_dataset_csv(cfg.dataset_path);

  double final_mqe = 0.0;
  if (cfg.model_kind == "nfn-mk") {
    const PipelineResult result = run_pipeline(cfg.pipeline, data);
    save_model_file(opt.model_out, result.model);
    write_text_file(opt.report_out,
                    pipeline_report_to_json(result.report, echo.dump()) + "\n");
    for (const std::string& w : result.report.warnings) {
      std::cerr << "warning: " << w << "\n";
    }
    final_mqe = result.report.final_mqe;
  } else {
    const MlpBaselineResult result = run_mlp_baseline(cfg.mlp, data);
    save_model_file(opt.model_out, result.model);
    write_text_file(opt.report_out,
                    mlp_report_to_json(result.report, echo.dump()) + "\n");
    final_mqe = result.report.final_mqe;
  }
  std::printf("final MQE: %.4f\n", final_mqe);
  return 0;
}

int cmd_eval(const std::string& model_path, const std::string& data_path,
             const std::string& out_path) {
  std::cerr << "eval: model=" << model_path << " data=" << data_path
            << " out=" << out_path << "\n";
  const AnyModel model = load_model_file(model_path);
  const Dataset data = read_dataset_csv(data_path);
  if (data.empty()) {
    throw std::runtime_error(data_path + ": no samples");
  }

  std::vector<double> predictions;
  predictions.reserve(data.size());
  std::size_t violations = 0;
  if (const NfnModel* nfn = std::get_if<NfnModel>(&model)) {
    if (nfn->num_inputs() != 2) {
      throw std::runtime_error(model_path + ": expected a 2-input model, found " +
                               std::to_string(nfn->num_inputs()) + " inputs");
    }
    // Check the whole file first so every bad row is reported, not just the
    // first one hit.
    for (std::size_t i = 0; i < data.size(); ++i) {
      for (std::size_t input = 0; input < 2; ++input) {
        const FuzzyPartition& p = nfn->inputs[input].partition;
        const double x = input == 0 ? data[i].x1 : data[i].x2;
        if (x < p.domain_min() || x > p.domain_max()) {
          std::cerr << data_path << ": row " << i + 1 << ": x" << input + 1 << "=" << x
                    << " outside model domain [" << p.domain_min() << ", "
                    << p.domain_max() << "]\n";
          ++violations;
        }
      }
    }
    if (violations > 0) {
      throw std::runtime_error(std::to_string(violations) +
                               " sample(s) outside the model domain");
    }
    for (const Sample& s : data) {
      predictions.push_back(nfn_eval(*nfn, std::array{s.x1, s.x2}));
    }
  } else {
    const MlpModel& mlp = std::get<MlpModel>(model);
    for (const Sample& s : data) {
      predictions.push_back(mlp_forward(mlp, s.x1, s.x2));
    }
  }

  write_predictions_csv(out_path, data, predictions);
  std::vector<double> targets;
  targets.reserve(data.size());
  for (const Sample& s : data) targets.push_back(s.y);
  std::printf("MQE: %.4f\n", mqe(predictions, targets));
  return 0;
}

int cmd_compare(const std::vector<std::string>& report_paths,
                const std::string& csv_out) {
  std::cerr << "compare: " << report_paths.size() << " report(s)\n";
  std::vector<ComparisonRow> rows;
  rows.reserve(report_paths.size());
  for (const std::string& path : report_paths) {
    rows.push_back(load_comparison_row(path));
  }
  const ComparisonTable table = compare_models(rows);
  std::fputs(table.to_text().c_str(), stdout);
  if (!csv_out.empty()) {
    write_text_file(csv_out, table.to_csv());
  }
  return 0;
}

int cmd_export(const std::string& model_path, const std::string& partitions_out) {
  std::cerr << "export: model=" << model_path << " partitions-out=" << partitions_out
            << "\n";
  const AnyModel model = load_model_file(model_path);
  const NfnModel* nfn = std::get_if<NfnModel>(&model);
  if (nfn == nullptr) {
    throw std::runtime_error("model '" + model_path +
                             "' has no partitions to export (kind 'mlp')");
  }
  std::string text = "input,label,left,vertex,right\n";
  char buf[128];
  for (std::size_t i = 0; i < nfn->inputs.size(); ++i) {
    for (FuzzyLabel label : kAllLabels) {
      const TriangularMf& mf = nfn->inputs[i].partition.curve(label);
      std::snprintf(buf, sizeof(buf), "%zu,%s,%.17g,%.17g,%.17g\n", i,
                    std::string(to_string(label)).c_str(), mf.left(), mf.vertex(),
                    mf.right());
      text += buf;
    }
  }
  write_text_file(partitions_out, text);
  std::printf("%zu curves written to %s\n", nfn->inputs.size() * kCurveCount,
              partitions_out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive neo-fuzzy estimator with competitive vertex placement"};
  app.require_subcommand(1);

  // gen-data
  auto* gen = app.add_subcommand("gen-data", "Generate a benchmark grid dataset CSV");
  int gen_n = 15;
  double gen_min = -10.0, gen_max = 10.0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "Points per axis (n^2 samples)");
  gen->add_option("--min", gen_min, "Domain minimum");
  gen->add_option("--max", gen_max, "Domain maximum");
  gen->add_option("--out", gen_out, "Output CSV path")->required();

  // train
  auto* train = app.add_subcommand("train", "Train a model from a JSON config");
  TrainOptions topt;
  train->add_option("--config", topt.config_path, "JSON config path")->required();
  train->add_option("--model-out", topt.model_out, "Model JSON output path")->required();
  train->add_option("--report-out", topt.report_out, "Report JSON output path")
      ->required();
  train->add_option("--dataset", topt.dataset_override, "Override the dataset path");
  train->add_option("--learning-rate", topt.learning_rate, "Override learning rate");
  train->add_option("--epochs", topt.epochs, "Override training epochs");
  train->add_option("--shuffle-seed", topt.shuffle_seed, "Override shuffle seed");
  train->add_option("--som-initial-rate", topt.som_initial_rate,
                    "Override initial competitive rate");
  train->add_option("--som-final-rate", topt.som_final_rate,
                    "Override final competitive rate");
  train->add_option("--som-initial-radius", topt.som_initial_radius,
                    "Override initial neighbourhood radius");
  train->add_option("--som-epochs", topt.som_epochs, "Override competitive epochs");
  train->add_option("--som-seed", topt.som_seed, "Override competitive shuffle seed");
  train->add_option("--init-seed", topt.init_seed, "Override MLP weight init seed");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a model over a dataset CSV");
  std::string eval_model, eval_data, eval_out;
  eval->add_option("--model", eval_model, "Model JSON path")->required();
  eval->add_option("--data", eval_data, "Dataset CSV path")->required();
  eval->add_option("--out", eval_out, "Prediction CSV output path")->required();

  // compare
  auto* compare = app.add_subcommand("compare", "Render the model-comparison table");
  std::vector<std::string> compare_reports;
  std::string compare_csv;
  compare->add_option("reports", compare_reports, "Report JSON path(s)")
      ->required()
      ->expected(-1);
  compare->add_option("--csv", compare_csv, "Also write the table as CSV");

  // export
  auto* exp = app.add_subcommand("export", "Export partition breakpoints as CSV");
  std::string export_model, export_partitions;
  exp->add_option("--model", export_model, "Model JSON path")->required();
  exp->add_option("--partitions-out", export_partitions, "Breakpoint CSV output path")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen_data(gen_n, gen_min, gen_max, gen_out);
    if (train->parsed()) return cmd_train(topt);
    if (eval->parsed()) return cmd_eval(eval_model, eval_data, eval_out);
    if (compare->parsed()) return cmd_compare(compare_reports, compare_csv);
    if (exp->parsed()) return cmd_export(export_model, export_partitions);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
