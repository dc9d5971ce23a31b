#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "neofuzzy/dataset.hpp"
#include "neofuzzy/membership.hpp"
#include "neofuzzy/opcount.hpp"

namespace neofuzzy {

/// Additive fuzzy estimator: each input owns a partition and seven output
/// weights; the model output is the sum over inputs of the two active
/// memberships times their weights.
struct NfnModel {
  struct Input {
    FuzzyPartition partition;
    std::array<double, kCurveCount> weights;
  };

  std::vector<Input> inputs;

  std::size_t num_inputs() const { return inputs.size(); }

  /// Model over the given partitions with all weights zero.
  static NfnModel zeros(std::vector<FuzzyPartition> partitions);
};

/// Gradient-descent settings shared by the fuzzy estimator and the MLP
/// baseline. A learning rate of 0 makes training a no-op.
struct TrainConfig {
  double learning_rate = 0.1;
  int epochs = 10;
  std::uint32_t shuffle_seed = 0;
};

/// Per-epoch training diagnostics. epoch_mqe[e] is the mean quadratic error
/// of the post-epoch model over the training set in dataset order;
/// ops_after_epoch[e] is the cumulative arithmetic spent on evaluation and
/// updates through epoch e (the diagnostic sweep itself is not billed).
struct TrainTrace {
  std::vector<double> epoch_mqe;
  std::vector<std::uint64_t> ops_after_epoch;
  OpCounter total_ops;
};

namespace detail {

/// The two-term defuzzification sum, given the active pairs: per input two
/// multiplies and one add, plus one add to join each further input
/// (4 multiplies + 3 adds for two inputs).
template <class Ops>
double nfn_weighted_sum(const NfnModel& model, std::span<const ActivePair> pairs,
                        Ops sum_ops) {
  double y = 0.0;
  for (std::size_t i = 0; i < model.inputs.size(); ++i) {
    const auto& weights = model.inputs[i].weights;
    const ActivePair& pair = pairs[i];
    const double contribution =
        sum_ops.add(sum_ops.mul(pair.mu_lower,
                                weights[static_cast<std::size_t>(pair.lower)]),
                    sum_ops.mul(pair.mu_upper,
                                weights[static_cast<std::size_t>(pair.upper)]));
    y = (i == 0) ? contribution : sum_ops.add(y, contribution);
  }
  return y;
}

template <class Ops>
double nfn_eval_with(const NfnModel& model, std::span<const double> x,
                     Ops membership_ops, Ops sum_ops) {
  std::vector<ActivePair> pairs;
  pairs.reserve(model.inputs.size());
  for (std::size_t i = 0; i < model.inputs.size(); ++i) {
    pairs.push_back(model.inputs[i].partition.active_pair_with(x[i], membership_ops));
  }
  return nfn_weighted_sum(model, pairs, sum_ops);
}

}  // namespace detail

/// Model output at x. Throws std::invalid_argument on a dimension mismatch
/// and std::domain_error when a coordinate leaves its partition's domain.
double nfn_eval(const NfnModel& model, std::span<const double> x);

/// One online least-mean-squares update: each input's two active weights move
/// by learning_rate * (y_desired - y) * membership; everything else is
/// untouched. Returns the updated model; the argument is not modified.
/// Arithmetic is tallied into ops when given.
NfnModel lms_step(const NfnModel& model, std::span<const double> x, double y_desired,
                  double learning_rate, OpCounter* ops = nullptr);

/// Online training: cfg.epochs passes over the dataset, each in a freshly
/// shuffled order seeded by cfg.shuffle_seed. Deterministic: identical
/// configuration and data give bit-identical weights.
NfnModel train_weights(const NfnModel& model, const Dataset& data,
                       const TrainConfig& cfg, TrainTrace* trace = nullptr);

}  // namespace neofuzzy
