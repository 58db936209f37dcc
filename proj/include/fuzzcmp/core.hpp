// Fuzzy-set representation: piecewise-linear membership functions over a
// bounded universe, construction from sample data, and alpha-cuts.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fuzzcmp {

/// Tolerance used for normality and convexity checks.
inline constexpr double kTolerance = 1e-9;

/// Failure categories; the CLI maps them onto exit codes.
enum class ErrorKind { Validation, Io };

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, ErrorKind kind = ErrorKind::Validation)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Bounded universe of discourse [min, max].
class Universe {
 public:
  Universe(double min, double max) : min_(min), max_(max) {
    if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
      throw Error("invalid universe: min must be < max");
    }
  }

  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  double width() const noexcept { return max_ - min_; }
  bool contains(double x) const noexcept { return x >= min_ && x <= max_; }

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  double min_;
  double max_;
};

/// Closed interval [left, right]; a point interval is legal.
class Interval {
 public:
  Interval(double left, double right) : left_(left), right_(right) {
    if (!(left <= right)) throw Error("invalid interval: left > right");
  }

  double left() const noexcept { return left_; }
  double right() const noexcept { return right_; }
  double width() const noexcept { return right_ - left_; }

  bool contains(const Interval& other) const noexcept {
    return left_ <= other.left_ && other.right_ <= right_;
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double left_;
  double right_;
};

struct Breakpoint {
  double x;
  double mu;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// A named fuzzy set with a piecewise-linear membership function.
///
/// Membership is linearly interpolated between adjacent breakpoints and is
/// zero outside the breakpoint span. Instances are immutable and always
/// satisfy the representation invariants checked by the constructor.
class FuzzySet {
 public:
  FuzzySet(std::string name, Universe universe, std::vector<Breakpoint> points)
      : name_(std::move(name)), universe_(universe), points_(std::move(points)) {
    if (points_.empty()) throw Error("fuzzy set '" + name_ + "' has no breakpoints");
    bool any_positive = false;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const auto& p = points_[i];
      if (!std::isfinite(p.x) || !universe_.contains(p.x)) {
        throw Error("fuzzy set '" + name_ + "': breakpoint x outside universe");
      }
      if (!(p.mu >= 0.0 && p.mu <= 1.0)) {
        throw Error("fuzzy set '" + name_ + "': membership outside [0, 1]");
      }
      if (i > 0 && !(points_[i - 1].x < p.x)) {
        throw Error("fuzzy set '" + name_ + "': breakpoints must be strictly increasing");
      }
      any_positive = any_positive || p.mu > 0.0;
    }
    if (!any_positive) throw Error("fuzzy set '" + name_ + "' is empty (all memberships zero)");
  }

  const std::string& name() const noexcept { return name_; }
  const Universe& universe() const noexcept { return universe_; }
  std::span<const Breakpoint> points() const noexcept { return points_; }

  double height() const noexcept {
    double h = 0.0;
    for (const auto& p : points_) h = std::max(h, p.mu);
    return h;
  }

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;

 private:
  std::string name_;
  Universe universe_;
  std::vector<Breakpoint> points_;
};

/// Triangle with feet at `left`/`right` and peak at `peak`.
inline FuzzySet make_triangle(std::string name, Universe universe, double left, double peak,
                              double right) {
  return FuzzySet(std::move(name), universe, {{left, 0.0}, {peak, 1.0}, {right, 0.0}});
}

inline FuzzySet make_trapezoid(std::string name, Universe universe, double left, double core_left,
                               double core_right, double right) {
  return FuzzySet(std::move(name), universe,
                  {{left, 0.0}, {core_left, 1.0}, {core_right, 1.0}, {right, 0.0}});
}

inline double membership(const FuzzySet& set, double x) {
  const auto pts = set.points();
  if (x < pts.front().x || x > pts.back().x) return 0.0;
  auto it = std::lower_bound(pts.begin(), pts.end(), x,
                             [](const Breakpoint& p, double v) { return p.x < v; });
  if (it->x == x) return it->mu;
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double t = (x - lo.x) / (hi.x - lo.x);
  return lo.mu + t * (hi.mu - lo.mu);
}

/// Builds a normal fuzzy set from raw samples: a histogram over the bin
/// centres, each count divided by the largest count. Samples are assigned to
/// the nearest centre (ties go to the lower centre).
inline FuzzySet build_from_samples(std::span<const double> samples, Universe universe,
                                   std::span<const double> bins, std::string name = "built") {
  if (samples.empty()) throw Error("no data");
  if (bins.empty()) throw Error("no bins");
  for (std::size_t i = 1; i < bins.size(); ++i) {
    if (!(bins[i - 1] < bins[i])) throw Error("bins must be strictly increasing");
  }
  std::vector<std::size_t> counts(bins.size(), 0);
  for (double s : samples) {
    if (!std::isfinite(s) || !universe.contains(s)) throw Error("out of range");
    auto it = std::lower_bound(bins.begin(), bins.end(), s);
    std::size_t idx;
    if (it == bins.begin()) {
      idx = 0;
    } else if (it == bins.end()) {
      idx = bins.size() - 1;
    } else {
      const auto hi = static_cast<std::size_t>(it - bins.begin());
      idx = (*it - s) < (s - *(it - 1)) ? hi : hi - 1;
    }
    ++counts[idx];
  }
  const auto peak = static_cast<double>(*std::max_element(counts.begin(), counts.end()));
  std::vector<Breakpoint> points;
  points.reserve(bins.size());
  for (std::size_t i = 0; i < bins.size(); ++i) {
    points.push_back({bins[i], static_cast<double>(counts[i]) / peak});
  }
  return FuzzySet(std::move(name), universe, std::move(points));
}

struct SetProfile {
  double height;
  bool is_normal;
  bool is_convex;
  Interval support;
};

/// True when the breakpoint memberships rise (weakly) and then fall (weakly).
inline bool is_convex(const FuzzySet& set) {
  const auto pts = set.points();
  bool falling = false;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double step = pts[i].mu - pts[i - 1].mu;
    if (step < -kTolerance) {
      falling = true;
    } else if (step > kTolerance && falling) {
      return false;
    }
  }
  return true;
}

inline bool is_normal(const FuzzySet& set) { return std::abs(set.height() - 1.0) <= kTolerance; }

/// Closure of {x | mu(x) > 0}, taken as the enclosing interval.
inline Interval support(const FuzzySet& set) {
  const auto pts = set.points();
  std::size_t first = 0;
  while (pts[first].mu <= 0.0) ++first;
  std::size_t last = pts.size() - 1;
  while (pts[last].mu <= 0.0) --last;
  const double left = first > 0 ? pts[first - 1].x : pts[first].x;
  const double right = last + 1 < pts.size() ? pts[last + 1].x : pts[last].x;
  return {left, right};
}

inline SetProfile profile(const FuzzySet& set) {
  return {set.height(), is_normal(set), is_convex(set), support(set)};
}

enum class CutMode {
  Span,    // enclosing interval of the level set, valid for any input
  Strict,  // reject non-convex sets
};

/// Alpha-cut {x | mu(x) >= alpha} as an interval, or nullopt when alpha
/// exceeds the height. Non-convex sets yield the enclosing span of the level
/// set unless `mode` is Strict. Levels within kTolerance above the height
/// snap to the height so that nearly-normal sets have a cut at alpha = 1.
inline std::optional<Interval> alpha_cut(const FuzzySet& set, double alpha,
                                         CutMode mode = CutMode::Span) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error("invalid alpha");
  if (mode == CutMode::Strict && !is_convex(set)) {
    throw Error("set not convex: '" + set.name() + "'");
  }
  const double height = set.height();
  if (alpha > height) {
    if (alpha - height > kTolerance) return std::nullopt;
    alpha = height;
  }
  const auto pts = set.points();
  const std::size_t n = pts.size();

  std::size_t i = 0;
  while (pts[i].mu < alpha) ++i;
  double left = pts[i].x;
  if (i > 0) {
    const auto& lo = pts[i - 1];
    const auto& hi = pts[i];
    left = lo.x + (alpha - lo.mu) / (hi.mu - lo.mu) * (hi.x - lo.x);
  }

  std::size_t j = n - 1;
  while (pts[j].mu < alpha) --j;
  double right = pts[j].x;
  if (j + 1 < n) {
    const auto& hi = pts[j];
    const auto& lo = pts[j + 1];
    right = hi.x + (hi.mu - alpha) / (hi.mu - lo.mu) * (lo.x - hi.x);
  }
  return Interval(left, right);
}

}  // namespace fuzzcmp
