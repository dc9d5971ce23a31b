#pragma once

#include <cstdint>

namespace neofuzzy {

/// Tally of scalar arithmetic, split by kind. Only +, - and * are tracked;
/// comparisons, branches and transcendental calls are not arithmetic in this
/// accounting scheme.
struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t subs = 0;
  std::uint64_t muls = 0;

  std::uint64_t total() const { return adds + subs + muls; }

  OpCounter& operator+=(const OpCounter& o) {
    adds += o.adds;
    subs += o.subs;
    muls += o.muls;
    return *this;
  }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

namespace detail {

// Arithmetic policies for the shared evaluation kernels. The plain policy
// compiles down to raw operators; the counting policy tallies into an
// OpCounter. Both run the exact same kernel code, so counted evaluations can
// never drift from the production path.
struct PlainOps {
  double add(double a, double b) const { return a + b; }
  double sub(double a, double b) const { return a - b; }
  double mul(double a, double b) const { return a * b; }
};

class CountingOps {
 public:
  explicit CountingOps(OpCounter& counter) : counter_(&counter) {}
  double add(double a, double b) const {
    ++counter_->adds;
    return a + b;
  }
  double sub(double a, double b) const {
    ++counter_->subs;
    return a - b;
  }
  double mul(double a, double b) const {
    ++counter_->muls;
    return a * b;
  }

 private:
  OpCounter* counter_;
};

}  // namespace detail
}  // namespace neofuzzy
