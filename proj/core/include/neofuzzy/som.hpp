#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "neofuzzy/membership.hpp"

namespace neofuzzy {

/// One-dimensional competitive layer: seven scalar prototypes over a closed
/// domain, one per membership curve. After training the prototypes become the
/// curve vertices.
struct SomState {
  std::array<double, kCurveCount> prototypes;
  double domain_min;
  double domain_max;
};

/// Learning schedule. Rate and radius decay linearly per epoch: at epoch e of
/// E, rate = initial_rate + (final_rate - initial_rate) * e/(E-1) and
/// radius = lround(initial_radius * (1 - e/(E-1))), so the radius reaches 0
/// and the rate reaches final_rate in the last epoch. A single-epoch schedule
/// uses the initial values. Rates of 0 are legal and leave the state
/// unchanged.
struct SomSchedule {
  double initial_rate = 0.5;
  double final_rate = 0.01;
  int initial_radius = 1;
  int epochs = 50;
};

/// Prototypes equally spaced over the domain; bit-identical to the uniform
/// partition's vertices. Throws std::invalid_argument if domain_min >= domain_max.
SomState som_init(double domain_min, double domain_max);

/// Index of the prototype closest to x; ties break toward the lowest index.
int winner(const SomState& state, double x);

/// Learning rate and neighbourhood radius in effect at a given epoch.
/// Exposed so callers can reproduce the schedule exactly.
double som_rate_at(const SomSchedule& sched, int epoch);
int som_radius_at(const SomSchedule& sched, int epoch);

/// Competitive training over a scalar sample stream. Each epoch visits the
/// samples in a freshly shuffled order (one engine seeded once, advanced
/// across epochs); every prototype within the current radius of the winner
/// moves by rate * (x - p). The returned prototypes are sorted ascending and
/// clamped to the domain; the pre-sort order is written to raw_prototypes
/// when given, for diagnostics.
SomState som_train(const SomState& state, std::span<const double> samples,
                   const SomSchedule& sched, std::uint32_t seed,
                   std::array<double, kCurveCount>* raw_prototypes = nullptr);

}  // namespace neofuzzy
