#include "neofuzzy/nfn.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "neofuzzy/random.hpp"

namespace neofuzzy {

namespace {

void check_dimension(const NfnModel& model, std::span<const double> x) {
  if (x.size() != model.num_inputs()) {
    std::ostringstream oss;
    oss << "input dimension " << x.size() << " does not match model with "
        << model.num_inputs() << " inputs";
    throw std::invalid_argument(oss.str());
  }
}

// Shared by the public lms_step and the training loop so both follow the
// exact same arithmetic. Active pairs are computed once and reused for both
// the forward pass and the weight update.
template <class Ops>
void lms_update(NfnModel& model, std::span<const double> x, double y_desired,
                double learning_rate, Ops ops) {
  std::vector<ActivePair> pairs;
  pairs.reserve(model.inputs.size());
  for (std::size_t i = 0; i < model.inputs.size(); ++i) {
    pairs.push_back(model.inputs[i].partition.active_pair_with(x[i], ops));
  }
  const double y = detail::nfn_weighted_sum(model, pairs, ops);
  const double step = ops.mul(learning_rate, ops.sub(y_desired, y));
  for (std::size_t i = 0; i < model.inputs.size(); ++i) {
    auto& input = model.inputs[i];
    const ActivePair& pair = pairs[i];
    double& w_lower = input.weights[static_cast<std::size_t>(pair.lower)];
    double& w_upper = input.weights[static_cast<std::size_t>(pair.upper)];
    w_lower = ops.add(w_lower, ops.mul(step, pair.mu_lower));
    w_upper = ops.add(w_upper, ops.mul(step, pair.mu_upper));
  }
}

}  // namespace

NfnModel NfnModel::zeros(std::vector<FuzzyPartition> partitions) {
  NfnModel model;
  model.inputs.reserve(partitions.size());
  for (auto& partition : partitions) {
    model.inputs.push_back(Input{std::move(partition), {}});
  }
  return model;
}

double nfn_eval(const NfnModel& model, std::span<const double> x) {
  check_dimension(model, x);
  return detail::nfn_eval_with(model, x, detail::PlainOps{}, detail::PlainOps{});
}

NfnModel lms_step(const NfnModel& model, std::span<const double> x, double y_desired,
                  double learning_rate, OpCounter* ops) {
  check_dimension(model, x);
  NfnModel updated = model;
  if (ops != nullptr) {
    lms_update(updated, x, y_desired, learning_rate, detail::CountingOps(*ops));
  } else {
    lms_update(updated, x, y_desired, learning_rate, detail::PlainOps{});
  }
  return updated;
}

NfnModel train_weights(const NfnModel& model, const Dataset& data,
                       const TrainConfig& cfg, TrainTrace* trace) {
  if (data.empty()) {
    throw std::invalid_argument("train_weights: empty dataset");
  }
  if (model.num_inputs() != 2) {
    throw std::invalid_argument("train_weights: dataset samples carry 2 inputs");
  }
  if (cfg.learning_rate < 0.0) {
    throw std::invalid_argument("train_weights: learning rate must be >= 0");
  }
  if (cfg.epochs < 1) {
    throw std::invalid_argument("train_weights: epochs must be >= 1");
  }

  NfnModel current = model;
  OpCounter ops;
  std::mt19937 rng(cfg.shuffle_seed);
  std::vector<std::size_t> order = index_order(data.size());

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    deterministic_shuffle(order, rng);
    for (const std::size_t idx : order) {
      const Sample& s = data[idx];
      const std::array<double, 2> x = {s.x1, s.x2};
      lms_update(current, x, s.y, cfg.learning_rate, detail::CountingOps(ops));
    }
    if (trace != nullptr) {
      double sum = 0.0;
      for (const Sample& s : data) {
        const std::array<double, 2> x = {s.x1, s.x2};
        const double e = nfn_eval(current, x) - s.y;
        sum += e * e;
      }
      trace->epoch_mqe.push_back(sum / static_cast<double>(data.size()));
      trace->ops_after_epoch.push_back(ops.total());
    }
  }
  if (trace != nullptr) {
    trace->total_ops = ops;
  }
  return current;
}

}  // namespace neofuzzy
