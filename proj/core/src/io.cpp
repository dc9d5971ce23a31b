#include "neofuzzy/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace neofuzzy {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ordered_json partition_to_ordered(const FuzzyPartition& p) {
  ordered_json doc;
  doc["domain"] = {p.domain_min(), p.domain_max()};
  ordered_json curves = ordered_json::array();
  for (FuzzyLabel label : kAllLabels) {
    const TriangularMf& mf = p.curve(label);
    ordered_json curve;
    curve["label"] = std::string(to_string(label));
    curve["left"] = mf.left();
    curve["vertex"] = mf.vertex();
    curve["right"] = mf.right();
    curves.push_back(std::move(curve));
  }
  doc["curves"] = std::move(curves);
  return doc;
}

FuzzyPartition partition_from_ordered(const ordered_json& doc) {
  const auto& domain = doc.at("domain");
  const double domain_min = domain.at(0).get<double>();
  const double domain_max = domain.at(1).get<double>();
  const auto& curves = doc.at("curves");
  if (curves.size() != static_cast<std::size_t>(kCurveCount)) {
    throw std::runtime_error("partition: expected 7 curves");
  }
  std::array<double, kCurveCount> vertices{};
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const auto& curve = curves.at(k);
    const auto label = fuzzy_label_from_string(curve.at("label").get<std::string>());
    if (!label || static_cast<std::size_t>(*label) != k) {
      throw std::runtime_error("partition: curve labels out of order");
    }
    vertices[k] = curve.at("vertex").get<double>();
  }
  FuzzyPartition p = FuzzyPartition::from_vertices(vertices, domain_min, domain_max);
  // Stored breakpoints must agree with the sharing rule the partition
  // enforces; a mismatch means the file was edited inconsistently.
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const auto& curve = curves.at(k);
    const TriangularMf& mf = p.curve(static_cast<int>(k));
    if (curve.at("left").get<double>() != mf.left() ||
        curve.at("right").get<double>() != mf.right()) {
      throw std::runtime_error("partition: curve '" +
                               curve.at("label").get<std::string>() +
                               "' has edges inconsistent with its neighbours");
    }
  }
  return p;
}

ordered_json op_counter_to_ordered(const OpCounter& c) {
  ordered_json doc;
  doc["adds"] = c.adds;
  doc["subs"] = c.subs;
  doc["muls"] = c.muls;
  doc["total"] = c.total();
  return doc;
}

ordered_json nfn_model_to_ordered(const NfnModel& model) {
  ordered_json doc;
  doc["kind"] = "nfn";
  ordered_json partitions = ordered_json::array();
  ordered_json weights = ordered_json::array();
  for (const auto& input : model.inputs) {
    partitions.push_back(partition_to_ordered(input.partition));
    weights.push_back(input.weights);
  }
  doc["partitions"] = std::move(partitions);
  doc["weights"] = std::move(weights);
  return doc;
}

ordered_json mlp_model_to_ordered(const MlpModel& model) {
  ordered_json doc;
  doc["kind"] = "mlp";
  doc["hidden_weights"] = model.hidden_weights;
  doc["hidden_bias"] = model.hidden_bias;
  doc["output_weights"] = model.output_weights;
  doc["output_bias"] = model.output_bias;
  return doc;
}

NfnModel nfn_model_from_ordered(const ordered_json& doc) {
  const auto& partitions = doc.at("partitions");
  const auto& weights = doc.at("weights");
  if (partitions.size() != weights.size()) {
    throw std::runtime_error("model: partitions/weights size mismatch");
  }
  NfnModel model;
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    NfnModel::Input input{partition_from_ordered(partitions.at(i)),
                          weights.at(i).get<std::array<double, kCurveCount>>()};
    model.inputs.push_back(std::move(input));
  }
  return model;
}

MlpModel mlp_model_from_ordered(const ordered_json& doc) {
  MlpModel model{};
  model.hidden_weights =
      doc.at("hidden_weights").get<std::array<std::array<double, 2>, 7>>();
  model.hidden_bias = doc.at("hidden_bias").get<std::array<double, 7>>();
  model.output_weights = doc.at("output_weights").get<std::array<double, 7>>();
  model.output_bias = doc.at("output_bias").get<double>();
  return model;
}

ordered_json epochs_to_ordered(const std::vector<EpochRecord>& epochs) {
  ordered_json arr = ordered_json::array();
  for (const EpochRecord& e : epochs) {
    ordered_json rec;
    rec["mqe"] = e.mqe;
    rec["ops_cumulative"] = e.ops_cumulative;
    arr.push_back(std::move(rec));
  }
  return arr;
}

[[noreturn]] void fail_csv(const std::filesystem::path& path, std::size_t line,
                           const std::string& what) {
  std::ostringstream oss;
  oss << path.string() << ":" << line << ": " << what;
  throw std::runtime_error(oss.str());
}

double parse_field(const std::string& field, const std::filesystem::path& path,
                   std::size_t line) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0' || errno == ERANGE) {
    fail_csv(path, line, "cannot parse number '" + field + "'");
  }
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream iss(line);
  while (std::getline(iss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

std::string partition_to_json(const FuzzyPartition& partition, int indent) {
  return partition_to_ordered(partition).dump(indent);
}

FuzzyPartition partition_from_json(const std::string& text) {
  return partition_from_ordered(ordered_json::parse(text));
}

std::string nfn_model_to_json(const NfnModel& model) {
  return nfn_model_to_ordered(model).dump(2);
}

std::string mlp_model_to_json(const MlpModel& model) {
  return mlp_model_to_ordered(model).dump(2);
}

AnyModel model_from_json(const std::string& text) {
  const ordered_json doc = ordered_json::parse(text);
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "nfn") return nfn_model_from_ordered(doc);
  if (kind == "mlp") return mlp_model_from_ordered(doc);
  throw std::runtime_error("model: unknown kind '" + kind + "'");
}

void save_model_file(const std::filesystem::path& path, const NfnModel& model) {
  write_text_file(path, nfn_model_to_json(model) + "\n");
}

void save_model_file(const std::filesystem::path& path, const MlpModel& model) {
  write_text_file(path, mlp_model_to_json(model) + "\n");
}

AnyModel load_model_file(const std::filesystem::path& path) {
  return model_from_json(read_text_file(path));
}

void write_dataset_csv(const std::filesystem::path& path, const Dataset& data) {
  std::ostringstream oss;
  oss << "x1,x2,y\n";
  for (const Sample& s : data) {
    oss << format_double(s.x1) << ',' << format_double(s.x2) << ','
        << format_double(s.y) << '\n';
  }
  write_text_file(path, oss.str());
}

Dataset read_dataset_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) {
    fail_csv(path, 1, "missing header");
  }
  ++line_no;
  if (line == "x1,x2,y\r") line.pop_back();
  if (line != "x1,x2,y") {
    fail_csv(path, line_no, "expected header 'x1,x2,y', got '" + line + "'");
  }
  Dataset data;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 3) {
      fail_csv(path, line_no, "expected 3 comma-separated fields");
    }
    data.push_back(Sample{parse_field(fields[0], path, line_no),
                          parse_field(fields[1], path, line_no),
                          parse_field(fields[2], path, line_no)});
  }
  return data;
}

void write_predictions_csv(const std::filesystem::path& path, const Dataset& data,
                           std::span<const double> predictions) {
  if (predictions.size() != data.size()) {
    throw std::invalid_argument("write_predictions_csv: size mismatch");
  }
  std::ostringstream oss;
  oss << "x1,x2,y_true,y_pred\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    oss << format_double(data[i].x1) << ',' << format_double(data[i].x2) << ','
        << format_double(data[i].y) << ',' << format_double(predictions[i]) << '\n';
  }
  write_text_file(path, oss.str());
}

std::string pipeline_report_to_json(const PipelineReport& report,
                                    const std::string& config_json) {
  ordered_json doc;
  doc["model"] = report.model_name;
  doc["config"] = ordered_json::parse(config_json);
  doc["initial_vertices"] = report.initial_vertices;
  doc["learned_vertices"] = report.learned_vertices;
  doc["weights"] = report.final_weights;
  doc["epochs"] = epochs_to_ordered(report.epochs);
  doc["final_mqe"] = report.final_mqe;
  doc["target_range"] = {report.target_min, report.target_max};
  ordered_json eval_ops;
  eval_ops["weighted_sum"] = op_counter_to_ordered(report.eval_ops.weighted_sum);
  eval_ops["membership"] = op_counter_to_ordered(report.eval_ops.membership);
  eval_ops["total"] = report.eval_ops.total().total();
  eval_ops["function_evals"] = report.eval_ops.function_evals;
  doc["eval_ops"] = std::move(eval_ops);
  doc["training_ops"] = op_counter_to_ordered(report.training_ops);
  doc["reference_mqe"] = report.reference_mqe;
  doc["warnings"] = report.warnings;
  return doc.dump(2);
}

std::string mlp_report_to_json(const MlpBaselineReport& report,
                               const std::string& config_json) {
  ordered_json doc;
  doc["model"] = report.model_name;
  doc["config"] = ordered_json::parse(config_json);
  doc["epochs"] = epochs_to_ordered(report.epochs);
  doc["final_mqe"] = report.final_mqe;
  doc["target_range"] = {report.target_min, report.target_max};
  ordered_json eval_ops;
  eval_ops["forward"] = op_counter_to_ordered(report.eval_ops.forward);
  eval_ops["total"] = report.eval_ops.forward.total();
  eval_ops["function_evals"] = report.eval_ops.function_evals;
  doc["eval_ops"] = std::move(eval_ops);
  doc["training_ops"] = op_counter_to_ordered(report.training_ops);
  doc["reference_mqe"] = report.reference_mqe;
  return doc.dump(2);
}

ComparisonRow comparison_row_from_report(const std::string& text) {
  const ordered_json doc = ordered_json::parse(text);
  ComparisonRow row;
  row.model = doc.at("model").get<std::string>();
  row.mqe = doc.at("final_mqe").get<double>();
  const auto& eval_ops = doc.at("eval_ops");
  row.ops = eval_ops.at("total").get<std::uint64_t>();
  row.ops_per_function = eval_ops.at("function_evals").get<std::uint64_t>();
  if (eval_ops.contains("weighted_sum")) {
    row.ops_weighted_sum =
        eval_ops.at("weighted_sum").at("total").get<std::uint64_t>();
    row.ops_membership = eval_ops.at("membership").at("total").get<std::uint64_t>();
  }
  return row;
}

ComparisonRow load_comparison_row(const std::filesystem::path& path) {
  return comparison_row_from_report(read_text_file(path));
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed for '" + path.string() + "'");
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

}  // namespace neofuzzy
