#include "neofuzzy/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace neofuzzy {

double sinc(double t) {
  if (t == 0.0) return 1.0;
  t = std::abs(t);  // keeps evenness exact
  if (t < 1e-8) {
    // sin(t)/t loses digits to cancellation here; two series terms are
    // already below double precision.
    return 1.0 - t * t / 6.0;
  }
  return std::sin(t) / t;
}

double mexican_hat(double x1, double x2) { return sinc(x1) * sinc(x2); }

Dataset gen_grid(int n_per_axis, double domain_min, double domain_max) {
  if (n_per_axis < 2) {
    throw std::invalid_argument("gen_grid: need at least 2 points per axis");
  }
  if (!(domain_min < domain_max)) {
    throw std::invalid_argument("gen_grid: domain min must be below max");
  }
  const double span = domain_max - domain_min;
  const int n = n_per_axis;
  Dataset data;
  data.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x1 = domain_min + (i * span) / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double x2 = domain_min + (j * span) / (n - 1);
      data.push_back(Sample{x1, x2, mexican_hat(x1, x2)});
    }
  }
  return data;
}

NfnEvalProfile count_eval_ops(const NfnModel& model, std::span<const double> x) {
  if (x.size() != model.num_inputs()) {
    throw std::invalid_argument("count_eval_ops: input dimension mismatch");
  }
  NfnEvalProfile profile;
  std::vector<ActivePair> pairs;
  pairs.reserve(model.inputs.size());
  for (std::size_t i = 0; i < model.inputs.size(); ++i) {
    pairs.push_back(model.inputs[i].partition.active_pair_with(
        x[i], detail::CountingOps(profile.membership)));
    profile.function_evals += 2;  // the two active curves per input
  }
  detail::nfn_weighted_sum(model, pairs, detail::CountingOps(profile.weighted_sum));
  return profile;
}

MlpEvalProfile count_eval_ops(const MlpModel& model, double x1, double x2) {
  MlpEvalProfile profile;
  mlp_forward_counted(model, x1, x2, profile.forward, profile.function_evals);
  return profile;
}

std::vector<double> generic_probe_point(const NfnModel& model) {
  std::vector<double> probe;
  probe.reserve(model.num_inputs());
  for (const auto& input : model.inputs) {
    const auto& v = input.partition.vertices();
    int widest = 0;
    double width = 0.0;
    for (int k = 0; k + 1 < kCurveCount; ++k) {
      const double w = v[static_cast<std::size_t>(k) + 1] - v[static_cast<std::size_t>(k)];
      if (w > width) {
        width = w;
        widest = k;
      }
    }
    if (width > 0.0) {
      probe.push_back(0.5 * (v[static_cast<std::size_t>(widest)] +
                             v[static_cast<std::size_t>(widest) + 1]));
    } else {
      probe.push_back(0.5 * (input.partition.domain_min() + input.partition.domain_max()));
    }
  }
  return probe;
}

namespace {

ComparisonRow make_reference(std::string name, std::uint64_t ops,
                             std::uint64_t per_function, double mqe_value) {
  ComparisonRow row;
  row.model = std::move(name);
  row.ops = ops;
  row.ops_per_function = per_function;
  row.mqe = mqe_value;
  return row;
}

std::string format_mqe(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

}  // namespace

const ComparisonRow& reference_nfn_mk() {
  static const ComparisonRow row = make_reference("NFN-MK", 8, 2, 0.0426);
  return row;
}

const ComparisonRow& reference_nfhq() {
  static const ComparisonRow row = make_reference("NFHQ", 168, 21, 0.0150);
  return row;
}

const ComparisonRow& reference_fsom() {
  static const ComparisonRow row = make_reference("FSOM", 200, 101, 0.0314);
  return row;
}

const ComparisonRow& reference_nn() {
  static const ComparisonRow row = make_reference("NN", 42, 8, 0.1037);
  return row;
}

ComparisonTable compare_models(const std::vector<ComparisonRow>& measured) {
  for (const ComparisonRow& row : measured) {
    if (row.model.empty()) {
      throw std::invalid_argument("compare_models: row with empty model name rejected");
    }
  }
  ComparisonTable table;
  table.rows = measured;
  table.rows.push_back(reference_nfhq());
  table.rows.push_back(reference_fsom());
  return table;
}

std::string ComparisonTable::to_text() const {
  const std::array<std::string, 4> headers = {"Model", "Ops (+,-,x)", "Ops/function",
                                              "MQE"};
  std::vector<std::array<std::string, 4>> cells;
  cells.reserve(rows.size());
  for (const ComparisonRow& row : rows) {
    cells.push_back({row.model, std::to_string(row.ops),
                     std::to_string(row.ops_per_function), format_mqe(row.mqe)});
  }

  std::array<std::size_t, 4> widths{};
  for (std::size_t c = 0; c < 4; ++c) {
    widths[c] = headers[c].size();
    for (const auto& line : cells) widths[c] = std::max(widths[c], line[c].size());
  }

  std::ostringstream oss;
  auto emit = [&](const std::array<std::string, 4>& line) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (c > 0) oss << "  ";
      oss << line[c];
      for (std::size_t i = line[c].size(); i < widths[c]; ++i) oss << ' ';
    }
    oss << '\n';
  };
  emit(headers);
  for (const auto& line : cells) emit(line);

  for (const ComparisonRow& row : rows) {
    if (row.ops_weighted_sum && row.ops_membership) {
      oss << '\n'
          << row.model << ": " << *row.ops_weighted_sum
          << " of " << row.ops << " ops form the weighted output sum; "
          << *row.ops_membership << " evaluate memberships.\n";
    }
  }
  return oss.str();
}

std::string ComparisonTable::to_csv() const {
  std::ostringstream oss;
  oss << "model,ops,ops_weighted_sum,ops_membership,ops_per_function,mqe\n";
  for (const ComparisonRow& row : rows) {
    oss << row.model << ',' << row.ops << ',';
    if (row.ops_weighted_sum) oss << *row.ops_weighted_sum;
    oss << ',';
    if (row.ops_membership) oss << *row.ops_membership;
    oss << ',' << row.ops_per_function << ',' << format_mqe(row.mqe) << '\n';
  }
  return oss.str();
}

}  // namespace neofuzzy
