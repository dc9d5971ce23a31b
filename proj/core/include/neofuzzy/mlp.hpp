#pragma once

#include <array>
#include <cstdint>

#include "neofuzzy/dataset.hpp"
#include "neofuzzy/nfn.hpp"
#include "neofuzzy/opcount.hpp"

namespace neofuzzy {

/// Fixed 2-7-1 perceptron: sigmoid hidden layer, identity output. The output
/// must reach negative values, which rules out a sigmoid output unit.
struct MlpModel {
  std::array<std::array<double, 2>, 7> hidden_weights;
  std::array<double, 7> hidden_bias;
  std::array<double, 7> output_weights;
  double output_bias;
};

/// All weights and biases drawn from seeded uniform(-0.5, 0.5).
MlpModel mlp_init(std::uint32_t seed);

double mlp_forward(const MlpModel& model, double x1, double x2);

/// Forward pass with arithmetic tallied into ops and the number of activation
/// evaluations (7 sigmoids + 1 identity) into function_evals.
double mlp_forward_counted(const MlpModel& model, double x1, double x2,
                           OpCounter& ops, int& function_evals);

/// Online backpropagation on half the squared error, one sample at a time,
/// each epoch in a freshly shuffled order seeded by cfg.shuffle_seed.
/// Deterministic given the seed.
MlpModel mlp_train(const MlpModel& model, const Dataset& data, const TrainConfig& cfg,
                   TrainTrace* trace = nullptr);

}  // namespace neofuzzy
