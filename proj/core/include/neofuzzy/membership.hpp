#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "neofuzzy/opcount.hpp"

namespace neofuzzy {

/// Number of membership curves per input. The seven-curve layout is fixed;
/// it is the sweet spot between resolution and cost for this model family.
inline constexpr int kCurveCount = 7;

/// Linguistic labels in ascending domain order.
enum class FuzzyLabel : int { NL = 0, NM, NS, ZE, PS, PM, PL };

inline constexpr std::array<FuzzyLabel, kCurveCount> kAllLabels = {
    FuzzyLabel::NL, FuzzyLabel::NM, FuzzyLabel::NS, FuzzyLabel::ZE,
    FuzzyLabel::PS, FuzzyLabel::PM, FuzzyLabel::PL};

std::string_view to_string(FuzzyLabel label);
std::optional<FuzzyLabel> fuzzy_label_from_string(std::string_view name);

/// Triangular membership function with precomputed reciprocal slopes, so an
/// evaluation costs at most one subtraction and one multiplication.
///
/// A degenerate side (left == vertex or vertex == right) is a step: the value
/// is 1 exactly at the vertex and 0 strictly beyond the shared point.
class TriangularMf {
 public:
  /// Requires left <= vertex <= right.
  TriangularMf(double left, double vertex, double right);

  double left() const { return left_; }
  double vertex() const { return vertex_; }
  double right() const { return right_; }

  /// Membership degree in [0, 1]. Any x is legal; values at or beyond the
  /// support edges are 0.
  double evaluate(double x) const { return evaluate_with(x, detail::PlainOps{}); }

  template <class Ops>
  double evaluate_with(double x, Ops ops) const {
    if (x == vertex_) return 1.0;
    if (x < vertex_) {
      if (x <= left_ || inv_left_ == 0.0) return 0.0;
      return ops.mul(ops.sub(x, left_), inv_left_);
    }
    if (x >= right_ || inv_right_ == 0.0) return 0.0;
    return ops.mul(ops.sub(right_, x), inv_right_);
  }

 private:
  double left_;
  double vertex_;
  double right_;
  double inv_left_;   // 1/(vertex-left), 0 when the side is degenerate
  double inv_right_;  // 1/(right-vertex), 0 when the side is degenerate
};

/// The two adjacent curves active at a point, with their membership degrees.
/// upper == lower + 1 always; mu_lower + mu_upper == 1 up to rounding.
struct ActivePair {
  int lower;
  int upper;
  double mu_lower;
  double mu_upper;
};

/// Seven vertices equally spaced over [domain_min, domain_max]. Shared by the
/// uniform partition and the competitive-layer initialisation so the two are
/// bit-identical.
std::array<double, kCurveCount> equally_spaced_vertices(double domain_min,
                                                        double domain_max);

/// Ordered set of seven complementary triangles over a closed domain.
///
/// Interior curves share breakpoints with their neighbours (left[k] =
/// vertex[k-1], right[k] = vertex[k+1]); the first curve's left edge and the
/// last curve's right edge are clamped to the domain ends. Adjacent
/// memberships sum to 1 everywhere in [vertex[0], vertex[6]]; outside that
/// span (but inside the domain) the boundary curve holds at 1.
class FuzzyPartition {
 public:
  /// Seven equally spaced vertices spanning the domain.
  static FuzzyPartition uniform(double domain_min, double domain_max);

  /// Rebuild from an explicit vertex list. Vertices must be non-decreasing
  /// and inside the domain; coincident vertices are legal and produce
  /// degenerate sides.
  static FuzzyPartition from_vertices(const std::array<double, kCurveCount>& vertices,
                                      double domain_min, double domain_max);

  double domain_min() const { return domain_min_; }
  double domain_max() const { return domain_max_; }
  const std::array<double, kCurveCount>& vertices() const { return vertices_; }
  const TriangularMf& curve(int k) const { return curves_[static_cast<std::size_t>(k)]; }
  const TriangularMf& curve(FuzzyLabel label) const {
    return curves_[static_cast<std::size_t>(label)];
  }

  /// Membership of curve k at x, with boundary saturation: below vertex[0]
  /// curve 0 holds at 1, above vertex[6] curve 6 holds at 1. Throws
  /// std::domain_error outside the domain.
  double membership(int k, double x) const;

  /// The unique active pair at x. At an interior vertex the tie breaks toward
  /// the right-hand pair with memberships (1, 0). Throws std::domain_error
  /// outside the domain.
  ActivePair active_pair(double x) const {
    return active_pair_with(x, detail::PlainOps{});
  }

  template <class Ops>
  ActivePair active_pair_with(double x, Ops ops) const {
    check_in_domain(x);
    if (x <= vertices_[0]) return {0, 1, 1.0, 0.0};
    for (int k = 1; k <= kCurveCount - 2; ++k) {
      if (x == vertices_[static_cast<std::size_t>(k)]) return {k, k + 1, 1.0, 0.0};
    }
    if (x >= vertices_[kCurveCount - 1]) {
      return {kCurveCount - 2, kCurveCount - 1, 0.0, 1.0};
    }
    int k = kCurveCount - 2;
    while (k > 0 && vertices_[static_cast<std::size_t>(k)] > x) --k;
    const double mu_lower = curves_[static_cast<std::size_t>(k)].evaluate_with(x, ops);
    const double mu_upper = curves_[static_cast<std::size_t>(k) + 1].evaluate_with(x, ops);
    return {k, k + 1, mu_lower, mu_upper};
  }

 private:
  FuzzyPartition(const std::array<double, kCurveCount>& vertices, double domain_min,
                 double domain_max);

  void check_in_domain(double x) const;

  double domain_min_;
  double domain_max_;
  std::array<double, kCurveCount> vertices_;
  std::array<TriangularMf, kCurveCount> curves_;
};

}  // namespace neofuzzy
