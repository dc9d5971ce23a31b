#include "neofuzzy/membership.hpp"

#include <sstream>
#include <stdexcept>

namespace neofuzzy {

namespace {

constexpr std::array<std::string_view, kCurveCount> kLabelNames = {
    "NL", "NM", "NS", "ZE", "PS", "PM", "PL"};

void check_domain(double domain_min, double domain_max) {
  if (!(domain_min < domain_max)) {
    std::ostringstream oss;
    oss << "invalid domain [" << domain_min << ", " << domain_max
        << "]: min must be strictly below max";
    throw std::invalid_argument(oss.str());
  }
}

}  // namespace

std::string_view to_string(FuzzyLabel label) {
  return kLabelNames[static_cast<std::size_t>(label)];
}

std::optional<FuzzyLabel> fuzzy_label_from_string(std::string_view name) {
  for (std::size_t k = 0; k < kLabelNames.size(); ++k) {
    if (kLabelNames[k] == name) return static_cast<FuzzyLabel>(k);
  }
  return std::nullopt;
}

TriangularMf::TriangularMf(double left, double vertex, double right)
    : left_(left),
      vertex_(vertex),
      right_(right),
      inv_left_(vertex > left ? 1.0 / (vertex - left) : 0.0),
      inv_right_(right > vertex ? 1.0 / (right - vertex) : 0.0) {
  if (!(left <= vertex && vertex <= right)) {
    std::ostringstream oss;
    oss << "triangle breakpoints out of order: left=" << left
        << " vertex=" << vertex << " right=" << right;
    throw std::invalid_argument(oss.str());
  }
}

std::array<double, kCurveCount> equally_spaced_vertices(double domain_min,
                                                        double domain_max) {
  check_domain(domain_min, domain_max);
  const double span = domain_max - domain_min;
  std::array<double, kCurveCount> v{};
  for (int j = 0; j < kCurveCount; ++j) {
    v[static_cast<std::size_t>(j)] = domain_min + (j * span) / (kCurveCount - 1);
  }
  return v;
}

FuzzyPartition FuzzyPartition::uniform(double domain_min, double domain_max) {
  return from_vertices(equally_spaced_vertices(domain_min, domain_max), domain_min,
                       domain_max);
}

FuzzyPartition FuzzyPartition::from_vertices(
    const std::array<double, kCurveCount>& vertices, double domain_min,
    double domain_max) {
  check_domain(domain_min, domain_max);
  for (int k = 0; k + 1 < kCurveCount; ++k) {
    if (vertices[static_cast<std::size_t>(k)] > vertices[static_cast<std::size_t>(k) + 1]) {
      std::ostringstream oss;
      oss << "vertices not sorted: vertex[" << k << "]=" << vertices[static_cast<std::size_t>(k)]
          << " > vertex[" << k + 1 << "]=" << vertices[static_cast<std::size_t>(k) + 1];
      throw std::invalid_argument(oss.str());
    }
  }
  for (int k = 0; k < kCurveCount; ++k) {
    const double v = vertices[static_cast<std::size_t>(k)];
    if (v < domain_min || v > domain_max) {
      std::ostringstream oss;
      oss << "vertex[" << k << "]=" << v << " outside domain [" << domain_min << ", "
          << domain_max << "]";
      throw std::invalid_argument(oss.str());
    }
  }
  return FuzzyPartition(vertices, domain_min, domain_max);
}

FuzzyPartition::FuzzyPartition(const std::array<double, kCurveCount>& vertices,
                               double domain_min, double domain_max)
    : domain_min_(domain_min),
      domain_max_(domain_max),
      vertices_(vertices),
      // Interior breakpoints are shared with the neighbours; the outermost
      // edges clamp to the domain ends.
      curves_{TriangularMf(domain_min, vertices[0], vertices[1]),
              TriangularMf(vertices[0], vertices[1], vertices[2]),
              TriangularMf(vertices[1], vertices[2], vertices[3]),
              TriangularMf(vertices[2], vertices[3], vertices[4]),
              TriangularMf(vertices[3], vertices[4], vertices[5]),
              TriangularMf(vertices[4], vertices[5], vertices[6]),
              TriangularMf(vertices[5], vertices[6], domain_max)} {}

void FuzzyPartition::check_in_domain(double x) const {
  if (x < domain_min_ || x > domain_max_) {
    std::ostringstream oss;
    oss << "x=" << x << " outside domain [" << domain_min_ << ", " << domain_max_ << "]";
    throw std::domain_error(oss.str());
  }
}

double FuzzyPartition::membership(int k, double x) const {
  check_in_domain(x);
  if (k == 0 && x <= vertices_.front()) return 1.0;
  if (k == kCurveCount - 1 && x >= vertices_.back()) return 1.0;
  return curves_[static_cast<std::size_t>(k)].evaluate(x);
}

}  // namespace neofuzzy
