#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "neofuzzy/som.hpp"

using namespace neofuzzy;

namespace {

std::vector<double> random_stream(std::mt19937& rng, std::size_t n, double lo,
                                  double hi) {
  std::uniform_real_distribution<double> pick(lo, hi);
  std::vector<double> xs(n);
  for (double& x : xs) x = pick(rng);
  return xs;
}

}  // namespace

TEST_CASE("initial prototypes are equally spaced") {
  const SomState s = som_init(-10.0, 10.0);
  const std::array<double, 7> expected = {-10.0, -6.67, -3.33, 0.0, 3.33, 6.67, 10.0};
  for (int k = 0; k < kCurveCount; ++k) {
    CHECK(s.prototypes[k] == doctest::Approx(expected[k]).epsilon(0.001));
  }

  const SomState t = som_init(0.0, 6.0);
  for (int k = 0; k < kCurveCount; ++k) {
    CHECK(t.prototypes[k] == static_cast<double>(k));
  }

  const SomState u = som_init(-1.0, 1.0);
  for (int k = 0; k < kCurveCount; ++k) {
    CHECK(u.prototypes[k] == doctest::Approx(-u.prototypes[6 - k]).epsilon(1e-15));
  }
  CHECK(u.prototypes[3] == 0.0);
}

TEST_CASE("initialisation rejects an empty domain") {
  CHECK_THROWS_AS(som_init(3.0, 3.0), std::invalid_argument);
}

TEST_CASE("winner is the nearest prototype, brute-force checked") {
  const SomState s = som_init(-10.0, 10.0);

  for (int k = 0; k < kCurveCount; ++k) {
    CHECK(winner(s, s.prototypes[k]) == k);
  }
  CHECK(winner(s, -9.0) == 0);

  std::mt19937 rng(37);
  std::uniform_real_distribution<double> pick(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double x = pick(rng);
    int best = 0;
    for (int k = 1; k < kCurveCount; ++k) {
      if (std::abs(x - s.prototypes[k]) < std::abs(x - s.prototypes[best])) best = k;
    }
    CHECK(winner(s, x) == best);
  }
}

TEST_CASE("winner ties break toward the lower index") {
  const SomState s = som_init(0.0, 6.0);  // integer prototypes
  CHECK(winner(s, 2.5) == 2);
  CHECK(winner(s, 0.5) == 0);
}

TEST_CASE("a repeated sample pulls its winner onto itself") {
  const SomState init = som_init(-10.0, 10.0);
  SomSchedule sched;
  sched.initial_rate = 0.5;
  sched.final_rate = 0.1;
  sched.initial_radius = 0;
  sched.epochs = 120;
  const double x = 4.2;
  const std::vector<double> samples(1, x);
  const SomState trained = som_train(init, samples, sched, 0);

  const int win = winner(trained, x);
  CHECK(std::abs(trained.prototypes[win] - x) < 1e-6);

  // Fixed-point oracle: p <- p + rate * (x - p) applied with the same
  // schedule, starting from the prototype the winner rule selects.
  double p = init.prototypes[winner(init, x)];
  for (int e = 0; e < sched.epochs; ++e) {
    p += som_rate_at(sched, e) * (x - p);
  }
  CHECK(trained.prototypes[win] == doctest::Approx(p).epsilon(1e-12));
}

TEST_CASE("an all-zero rate schedule changes nothing") {
  const SomState init = som_init(-10.0, 10.0);
  SomSchedule sched;
  sched.initial_rate = 0.0;
  sched.final_rate = 0.0;
  sched.epochs = 10;
  std::mt19937 rng(41);
  const std::vector<double> samples = random_stream(rng, 100, -10.0, 10.0);
  const SomState trained = som_train(init, samples, sched, 7);
  CHECK(trained.prototypes == init.prototypes);
}

TEST_CASE("a mirrored sample stream yields mirrored prototypes") {
  std::mt19937 rng(43);
  const std::vector<double> samples = random_stream(rng, 200, -10.0, 10.0);
  std::vector<double> mirrored(samples.size());
  std::transform(samples.begin(), samples.end(), mirrored.begin(),
                 [](double x) { return -x; });

  SomSchedule sched;  // defaults
  const SomState a = som_train(som_init(-10.0, 10.0), samples, sched, 5);
  const SomState b = som_train(som_init(-10.0, 10.0), mirrored, sched, 5);

  for (int k = 0; k < kCurveCount; ++k) {
    CHECK(b.prototypes[k] == doctest::Approx(-a.prototypes[6 - k]).epsilon(1e-6));
  }
}

TEST_CASE("trained prototypes are sorted and clamped to the domain") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> samples = random_stream(rng, 150, -10.0, 10.0);
    SomSchedule sched;
    sched.epochs = 15;
    const SomState trained =
        som_train(som_init(-10.0, 10.0), samples, sched, static_cast<std::uint32_t>(trial));
    CHECK(std::is_sorted(trained.prototypes.begin(), trained.prototypes.end()));
    for (double p : trained.prototypes) {
      CHECK(p >= -10.0);
      CHECK(p <= 10.0);
    }
  }
}

TEST_CASE("one update moves a prototype strictly toward the sample") {
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> pick(-10.0, 10.0);
  std::uniform_real_distribution<double> rate(0.01, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double p = pick(rng);
    const double x = pick(rng);
    const double a = rate(rng);
    const double moved = p + a * (x - p);
    CHECK(std::abs(moved - x) <= std::abs(p - x));
  }
}

TEST_CASE("training is bit-for-bit deterministic under a fixed seed") {
  std::mt19937 rng(59);
  const std::vector<double> samples = random_stream(rng, 120, -10.0, 10.0);
  SomSchedule sched;
  const SomState a = som_train(som_init(-10.0, 10.0), samples, sched, 123);
  const SomState b = som_train(som_init(-10.0, 10.0), samples, sched, 123);
  CHECK(a.prototypes == b.prototypes);
}

TEST_CASE("training validates its inputs") {
  const SomState init = som_init(-10.0, 10.0);
  CHECK_THROWS_AS(som_train(init, std::vector<double>{}, SomSchedule{}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(som_train(init, std::vector<double>{11.0}, SomSchedule{}, 0),
                  std::domain_error);
  SomSchedule bad;
  bad.final_rate = 0.9;  // above initial
  CHECK_THROWS_AS(som_train(init, std::vector<double>{1.0}, bad, 0),
                  std::invalid_argument);
}

TEST_CASE("the rate and radius schedules decay linearly to their finals") {
  SomSchedule sched;
  sched.initial_rate = 0.5;
  sched.final_rate = 0.01;
  sched.initial_radius = 1;
  sched.epochs = 50;
  CHECK(som_rate_at(sched, 0) == 0.5);
  CHECK(som_rate_at(sched, 49) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(som_radius_at(sched, 0) == 1);
  CHECK(som_radius_at(sched, 49) == 0);
  for (int e = 1; e < 50; ++e) {
    CHECK(som_rate_at(sched, e) <= som_rate_at(sched, e - 1));
    CHECK(som_radius_at(sched, e) <= som_radius_at(sched, e - 1));
  }
}
