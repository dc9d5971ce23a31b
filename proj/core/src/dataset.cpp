#include "neofuzzy/dataset.hpp"

#include <sstream>
#include <stdexcept>

namespace neofuzzy {

double mqe(std::span<const double> predictions, std::span<const double> targets) {
  if (predictions.size() != targets.size()) {
    std::ostringstream oss;
    oss << "mqe: length mismatch (" << predictions.size() << " predictions, "
        << targets.size() << " targets)";
    throw std::invalid_argument(oss.str());
  }
  if (predictions.empty()) {
    throw std::invalid_argument("mqe: empty input");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const double e = predictions[i] - targets[i];
    sum += e * e;
  }
  return sum / static_cast<double>(predictions.size());
}

}  // namespace neofuzzy
