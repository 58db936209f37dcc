// Similarity and distance measures on fuzzy sets.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fuzzcmp/core.hpp"

namespace fuzzcmp {

/// Uniform membership levels alpha_i = i/m, i = 1..m.
class AlphaGrid {
 public:
  explicit AlphaGrid(int m) : m_(m) {
    if (m < 1) throw Error("alpha levels must be positive");
    levels_.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) levels_.push_back(static_cast<double>(i) / m);
  }

  int m() const noexcept { return m_; }
  const std::vector<double>& levels() const noexcept { return levels_; }

 private:
  int m_;
  std::vector<double> levels_;
};

/// Points along the x-axis at which the Jaccard sums are taken.
class SampleGrid {
 public:
  /// `n` points evenly spanning the universe, endpoints included.
  static SampleGrid uniform(const Universe& u, int n) {
    if (n < 2) throw Error("uniform grid needs at least 2 points");
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xs.push_back(u.min() + u.width() * i / (n - 1));
    xs.back() = u.max();
    return SampleGrid(std::move(xs));
  }

  /// Every integer inside the universe.
  static SampleGrid integers(const Universe& u) {
    std::vector<double> xs;
    for (double x = std::ceil(u.min()); x <= std::floor(u.max()); x += 1.0) xs.push_back(x);
    if (xs.empty()) throw Error("universe contains no integers");
    return SampleGrid(std::move(xs));
  }

  std::size_t n() const noexcept { return xs_.size(); }
  const std::vector<double>& xs() const noexcept { return xs_; }

 private:
  explicit SampleGrid(std::vector<double> xs) : xs_(std::move(xs)) {}
  std::vector<double> xs_;
};

/// How a SampleGrid is derived from a universe; lets configs stay
/// independent of any particular universe.
struct GridSpec {
  enum class Kind { Uniform, Integers };
  Kind kind = Kind::Uniform;
  int points = 201;

  SampleGrid build(const Universe& u) const {
    return kind == Kind::Integers ? SampleGrid::integers(u) : SampleGrid::uniform(u, points);
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

namespace detail {

inline void require_same_universe(const FuzzySet& a, const FuzzySet& b) {
  if (!(a.universe() == b.universe())) {
    throw Error("universe mismatch: '" + a.name() + "' vs '" + b.name() + "'");
  }
}

}  // namespace detail

/// Jaccard similarity: sum of point-wise minima over sum of point-wise maxima.
inline double jaccard(const FuzzySet& a, const FuzzySet& b, const SampleGrid& grid) {
  detail::require_same_universe(a, b);
  double lo = 0.0;
  double hi = 0.0;
  for (double x : grid.xs()) {
    const double ma = membership(a, x);
    const double mb = membership(b, x);
    lo += std::min(ma, mb);
    hi += std::max(ma, mb);
  }
  if (hi <= 0.0) throw Error("degenerate pair: both sets are zero on every grid point");
  return lo / hi;
}

/// Hausdorff distance between closed intervals.
inline double interval_hausdorff(const Interval& a, const Interval& b) noexcept {
  return std::max(std::abs(a.left() - b.left()), std::abs(a.right() - b.right()));
}

/// Signed interval distance: the endpoint difference of larger magnitude,
/// positive when `b` lies to the right of `a`. Ties take the right endpoint.
inline double interval_hausdorff_directional(const Interval& a, const Interval& b) noexcept {
  const double dl = b.left() - a.left();
  const double dr = b.right() - a.right();
  return std::abs(dl) > std::abs(dr) ? dl : dr;
}

/// Level-weighted mean of interval distances between the alpha-cuts of two
/// normal sets. With `directional` the signed interval distance is used.
inline double alpha_distance(const FuzzySet& a, const FuzzySet& b, const AlphaGrid& grid,
                             bool directional, CutMode mode = CutMode::Span) {
  detail::require_same_universe(a, b);
  for (const FuzzySet* s : {&a, &b}) {
    if (!is_normal(*s)) throw Error("set not normal: '" + s->name() + "'");
    if (mode == CutMode::Strict && !is_convex(*s)) {
      throw Error("set not convex: '" + s->name() + "'");
    }
  }
  double weighted = 0.0;
  double total = 0.0;
  for (double alpha : grid.levels()) {
    const Interval ca = *alpha_cut(a, alpha);
    const Interval cb = *alpha_cut(b, alpha);
    const double h =
        directional ? interval_hausdorff_directional(ca, cb) : interval_hausdorff(ca, cb);
    weighted += alpha * h;
    total += alpha;
  }
  return weighted / total;
}

}  // namespace fuzzcmp
