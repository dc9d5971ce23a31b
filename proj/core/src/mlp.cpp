#include "neofuzzy/mlp.hpp"

#include <cmath>
#include <stdexcept>

#include "neofuzzy/random.hpp"

namespace neofuzzy {

namespace {

double sigmoid(double t) { return 1.0 / (1.0 + std::exp(-t)); }

// Forward pass shared by the plain, counted and training paths. Writes the
// hidden activations so backprop can reuse them.
template <class Ops>
double forward_impl(const MlpModel& m, double x1, double x2, Ops ops,
                    std::array<double, 7>& hidden, int* function_evals) {
  for (std::size_t j = 0; j < 7; ++j) {
    const double pre = ops.add(
        ops.add(ops.mul(m.hidden_weights[j][0], x1), ops.mul(m.hidden_weights[j][1], x2)),
        m.hidden_bias[j]);
    hidden[j] = sigmoid(pre);
    if (function_evals != nullptr) ++*function_evals;
  }
  double y = m.output_bias;
  for (std::size_t j = 0; j < 7; ++j) {
    y = ops.add(y, ops.mul(m.output_weights[j], hidden[j]));
  }
  if (function_evals != nullptr) ++*function_evals;  // identity output unit
  return y;
}

template <class Ops>
void backprop_update(MlpModel& m, double x1, double x2, double y_desired,
                     double learning_rate, Ops ops) {
  std::array<double, 7> hidden{};
  const double y = forward_impl(m, x1, x2, ops, hidden, nullptr);
  const double step = ops.mul(learning_rate, ops.sub(y_desired, y));
  for (std::size_t j = 0; j < 7; ++j) {
    // d(sigmoid)/dt = h * (1 - h)
    const double delta =
        ops.mul(ops.mul(ops.mul(step, m.output_weights[j]), hidden[j]),
                ops.sub(1.0, hidden[j]));
    m.output_weights[j] = ops.add(m.output_weights[j], ops.mul(step, hidden[j]));
    m.hidden_weights[j][0] = ops.add(m.hidden_weights[j][0], ops.mul(delta, x1));
    m.hidden_weights[j][1] = ops.add(m.hidden_weights[j][1], ops.mul(delta, x2));
    m.hidden_bias[j] = ops.add(m.hidden_bias[j], delta);
  }
  m.output_bias = ops.add(m.output_bias, step);
}

}  // namespace

MlpModel mlp_init(std::uint32_t seed) {
  std::mt19937 rng(seed);
  MlpModel m{};
  for (std::size_t j = 0; j < 7; ++j) {
    m.hidden_weights[j][0] = uniform_in(rng, -0.5, 0.5);
    m.hidden_weights[j][1] = uniform_in(rng, -0.5, 0.5);
  }
  for (std::size_t j = 0; j < 7; ++j) m.hidden_bias[j] = uniform_in(rng, -0.5, 0.5);
  for (std::size_t j = 0; j < 7; ++j) m.output_weights[j] = uniform_in(rng, -0.5, 0.5);
  m.output_bias = uniform_in(rng, -0.5, 0.5);
  return m;
}

double mlp_forward(const MlpModel& model, double x1, double x2) {
  std::array<double, 7> hidden{};
  return forward_impl(model, x1, x2, detail::PlainOps{}, hidden, nullptr);
}

double mlp_forward_counted(const MlpModel& model, double x1, double x2,
                           OpCounter& ops, int& function_evals) {
  std::array<double, 7> hidden{};
  function_evals = 0;
  return forward_impl(model, x1, x2, detail::CountingOps(ops), hidden, &function_evals);
}

MlpModel mlp_train(const MlpModel& model, const Dataset& data, const TrainConfig& cfg,
                   TrainTrace* trace) {
  if (data.empty()) {
    throw std::invalid_argument("mlp_train: empty dataset");
  }
  if (cfg.learning_rate < 0.0) {
    throw std::invalid_argument("mlp_train: learning rate must be >= 0");
  }
  if (cfg.epochs < 1) {
    throw std::invalid_argument("mlp_train: epochs must be >= 1");
  }

  MlpModel current = model;
  OpCounter ops;
  std::mt19937 rng(cfg.shuffle_seed);
  std::vector<std::size_t> order = index_order(data.size());

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    deterministic_shuffle(order, rng);
    for (const std::size_t idx : order) {
      const Sample& s = data[idx];
      backprop_update(current, s.x1, s.x2, s.y, cfg.learning_rate,
                      detail::CountingOps(ops));
    }
    if (trace != nullptr) {
      double sum = 0.0;
      for (const Sample& s : data) {
        const double e = mlp_forward(current, s.x1, s.x2) - s.y;
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
