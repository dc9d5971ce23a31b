#pragma once

#include <span>
#include <vector>

namespace neofuzzy {

/// One training pattern: two inputs and the desired output.
struct Sample {
  double x1;
  double x2;
  double y;
};

using Dataset = std::vector<Sample>;

/// Mean quadratic error: (1/N) * sum((prediction - target)^2), summed in
/// input order so results are reproducible. Throws std::invalid_argument on
/// empty or mismatched inputs.
double mqe(std::span<const double> predictions, std::span<const double> targets);

}  // namespace neofuzzy
