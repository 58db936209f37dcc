// OWA aggregation and the comparative measure, which fuses dissimilarity
// (1 - Jaccard) with the normalised directional alpha-cut distance.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "fuzzcmp/core.hpp"
#include "fuzzcmp/measures.hpp"

namespace fuzzcmp {

/// OWA weights: each in [0, 1], summing to 1.
class WeightVector {
 public:
  WeightVector(std::initializer_list<double> w) : WeightVector(std::vector<double>(w)) {}

  explicit WeightVector(std::vector<double> w) : weights_(std::move(w)) {
    if (weights_.empty()) throw Error("weight vector is empty");
    for (double x : weights_) {
      if (!(x >= 0.0 && x <= 1.0)) throw Error("weights must lie in [0, 1]");
    }
    const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (std::abs(sum - 1.0) > kTolerance) throw Error("weights must sum to 1");
  }

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const noexcept { return weights_[i]; }
  std::span<const double> values() const noexcept { return weights_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> weights_;
};

enum class OwaOrdering {
  Standard,         // descending by value
  ByAbsoluteValue,  // descending by |value|; -0.45 outranks 0.3
};

/// Ordered weighted average: the i-th weight multiplies the i-th largest
/// value under `ordering`. Equal keys keep their input order.
inline double owa(std::span<const double> values, const WeightVector& weights,
                  OwaOrdering ordering = OwaOrdering::Standard) {
  if (values.size() != weights.size() || values.empty()) {
    throw Error("owa: values and weights must have equal, non-zero length");
  }
  std::vector<double> sorted(values.begin(), values.end());
  if (ordering == OwaOrdering::Standard) {
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<>{});
  } else {
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](double x, double y) { return std::abs(x) > std::abs(y); });
  }
  double out = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) out += weights[i] * sorted[i];
  return out;
}

/// Maps c to its complement so that identical sets score 1; the sign of c
/// is kept.
inline double comparative_complement(double c) {
  if (!(std::abs(c) <= 1.0 + kTolerance)) throw Error("comparative value outside [-1, 1]");
  return c >= 0.0 ? 1.0 - c : -1.0 - c;
}

struct ComparativeConfig {
  WeightVector weights{0.7, 0.3};
  int alpha_levels = 100;
  std::optional<double> lambda_override;
  bool directional = true;
  bool strict_convexity = false;
  GridSpec grid;

  void validate() const {
    if (weights.size() != 2) throw Error("comparative measure needs exactly 2 weights");
    if (alpha_levels < 1) throw Error("alpha levels must be positive");
    if (lambda_override && !(*lambda_override > 0.0)) throw Error("lambda must be positive");
  }
};

struct ComparisonReport {
  double similarity = 0.0;
  double distance = 0.0;
  double normalized_distance = 0.0;
  double comparative = 0.0;
  double complement = 0.0;
  double lambda = 1.0;
};

/// Fuses an already-measured similarity and (signed) distance.
///
/// The OWA inputs are (1 - s, d/lambda) when d >= 0 and (-(1 - s), d/lambda)
/// otherwise, ordered by absolute value, so the result carries the sign of d.
inline ComparisonReport fuse(double similarity, double distance, double lambda,
                             const WeightVector& weights) {
  if (!(lambda > 0.0)) throw Error("lambda must be positive");
  if (!(similarity >= 0.0 && similarity <= 1.0)) throw Error("similarity outside [0, 1]");
  if (weights.size() != 2) throw Error("comparative measure needs exactly 2 weights");
  ComparisonReport r;
  r.similarity = similarity;
  r.distance = distance;
  r.lambda = lambda;
  r.normalized_distance = distance / lambda;
  const double dissimilarity = 1.0 - similarity;
  const double inputs[2] = {distance >= 0.0 ? dissimilarity : -dissimilarity,
                            r.normalized_distance};
  r.comparative = owa(inputs, weights, OwaOrdering::ByAbsoluteValue);
  r.complement = comparative_complement(r.comparative);
  return r;
}

inline ComparisonReport comparative(const FuzzySet& a, const FuzzySet& b,
                                    const ComparativeConfig& config = {}) {
  config.validate();
  detail::require_same_universe(a, b);
  const double s = jaccard(a, b, config.grid.build(a.universe()));
  const double d =
      alpha_distance(a, b, AlphaGrid(config.alpha_levels), config.directional,
                     config.strict_convexity ? CutMode::Strict : CutMode::Span);
  const double lambda = config.lambda_override.value_or(a.universe().width());
  return fuse(s, d, lambda, config.weights);
}

}  // namespace fuzzcmp
