#include "neofuzzy/som.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "neofuzzy/random.hpp"

namespace neofuzzy {

namespace {

void check_schedule(const SomSchedule& sched) {
  if (!(sched.initial_rate >= 0.0 && sched.initial_rate <= 1.0) ||
      !(sched.final_rate >= 0.0 && sched.final_rate <= sched.initial_rate)) {
    throw std::invalid_argument(
        "som schedule: rates must satisfy 0 <= final_rate <= initial_rate <= 1");
  }
  if (sched.initial_radius < 0 || sched.initial_radius > kCurveCount - 1) {
    throw std::invalid_argument("som schedule: radius must be in [0, 6]");
  }
  if (sched.epochs < 1) {
    throw std::invalid_argument("som schedule: epochs must be >= 1");
  }
}

}  // namespace

SomState som_init(double domain_min, double domain_max) {
  return SomState{equally_spaced_vertices(domain_min, domain_max), domain_min,
                  domain_max};
}

int winner(const SomState& state, double x) {
  int best = 0;
  double best_dist = std::abs(x - state.prototypes[0]);
  for (int k = 1; k < kCurveCount; ++k) {
    const double dist = std::abs(x - state.prototypes[static_cast<std::size_t>(k)]);
    if (dist < best_dist) {
      best_dist = dist;
      best = k;
    }
  }
  return best;
}

double som_rate_at(const SomSchedule& sched, int epoch) {
  if (sched.epochs <= 1) return sched.initial_rate;
  const double t = static_cast<double>(epoch) / static_cast<double>(sched.epochs - 1);
  return sched.initial_rate + (sched.final_rate - sched.initial_rate) * t;
}

int som_radius_at(const SomSchedule& sched, int epoch) {
  if (sched.epochs <= 1) return sched.initial_radius;
  const double t = static_cast<double>(epoch) / static_cast<double>(sched.epochs - 1);
  return static_cast<int>(std::lround(sched.initial_radius * (1.0 - t)));
}

SomState som_train(const SomState& state, std::span<const double> samples,
                   const SomSchedule& sched, std::uint32_t seed,
                   std::array<double, kCurveCount>* raw_prototypes) {
  check_schedule(sched);
  if (samples.empty()) {
    throw std::invalid_argument("som_train: empty sample stream");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i] < state.domain_min || samples[i] > state.domain_max) {
      std::ostringstream oss;
      oss << "som_train: sample[" << i << "]=" << samples[i] << " outside domain ["
          << state.domain_min << ", " << state.domain_max << "]";
      throw std::domain_error(oss.str());
    }
  }

  SomState out = state;
  std::mt19937 rng(seed);
  std::vector<std::size_t> order = index_order(samples.size());

  for (int epoch = 0; epoch < sched.epochs; ++epoch) {
    const double rate = som_rate_at(sched, epoch);
    const int radius = som_radius_at(sched, epoch);
    deterministic_shuffle(order, rng);
    for (const std::size_t idx : order) {
      const double x = samples[idx];
      const int win = winner(out, x);
      const int lo = std::max(0, win - radius);
      const int hi = std::min(kCurveCount - 1, win + radius);
      for (int k = lo; k <= hi; ++k) {
        double& p = out.prototypes[static_cast<std::size_t>(k)];
        p += rate * (x - p);
      }
    }
  }

  if (raw_prototypes != nullptr) {
    *raw_prototypes = out.prototypes;
  }
  std::sort(out.prototypes.begin(), out.prototypes.end());
  for (double& p : out.prototypes) {
    p = std::clamp(p, out.domain_min, out.domain_max);
  }
  return out;
}

}  // namespace neofuzzy
