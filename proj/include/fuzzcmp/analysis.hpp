// Multi-set workflows on top of the comparative measure.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fuzzcmp/core.hpp"
#include "fuzzcmp/fusion.hpp"

namespace fuzzcmp {

struct ComparisonMatrix {
  std::vector<std::string> names;
  /// entries[i][j] compares names[i] (first argument) with names[j].
  std::vector<std::vector<ComparisonReport>> entries;
};

inline ComparisonMatrix matrix(const std::vector<FuzzySet>& sets,
                               const ComparativeConfig& config = {}) {
  if (sets.size() < 2) throw Error("matrix needs at least 2 sets");
  ComparisonMatrix out;
  out.names.reserve(sets.size());
  for (const auto& s : sets) out.names.push_back(s.name());
  out.entries.assign(sets.size(), std::vector<ComparisonReport>(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      out.entries[i][j] = comparative(sets[i], sets[j], config);
    }
  }
  return out;
}

struct RankedCandidate {
  std::string label;
  ComparisonReport report;
};

/// Candidates ordered closest-first by |comparative(reference, candidate)|;
/// equal magnitudes fall back to label order.
inline std::vector<RankedCandidate> rank(const FuzzySet& reference,
                                         const std::vector<FuzzySet>& candidates,
                                         const ComparativeConfig& config = {}) {
  if (candidates.empty()) throw Error("rank needs at least 1 candidate");
  std::vector<RankedCandidate> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) out.push_back({c.name(), comparative(reference, c, config)});
  std::sort(out.begin(), out.end(), [](const RankedCandidate& x, const RankedCandidate& y) {
    const double ax = std::abs(x.report.comparative);
    const double ay = std::abs(y.report.comparative);
    if (ax != ay) return ax < ay;
    return x.label < y.label;
  });
  return out;
}

struct ClassificationResult {
  std::string best_label;
  std::map<std::string, double> scores;  // complement per label
  double margin = 0.0;
};

/// Picks the label whose complement has the largest magnitude, i.e. lies
/// nearest +1 or -1. Magnitudes within kTolerance of the best are a tie and
/// raise "ambiguous classification".
inline ClassificationResult select_best(std::map<std::string, double> scores) {
  if (scores.size() < 2) throw Error("classification needs at least 2 prototypes");
  std::vector<std::pair<double, std::string>> by_strength;
  for (const auto& [label, score] : scores) by_strength.emplace_back(std::abs(score), label);
  std::stable_sort(by_strength.begin(), by_strength.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  const double best = by_strength[0].first;
  std::vector<std::string> tied;
  for (const auto& [strength, label] : by_strength) {
    if (best - strength <= kTolerance) tied.push_back(label);
  }
  if (tied.size() > 1) {
    std::string msg = "ambiguous classification:";
    for (const auto& t : tied) msg += " " + t;
    throw Error(msg);
  }
  ClassificationResult r;
  r.best_label = by_strength[0].second;
  r.margin = best - by_strength[1].first;
  r.scores = std::move(scores);
  return r;
}

/// Nearest-prototype classification. Each prototype is the first argument of
/// the comparison and the input the second.
inline ClassificationResult classify(const FuzzySet& input,
                                     const std::map<std::string, FuzzySet>& prototypes,
                                     const ComparativeConfig& config = {}) {
  if (prototypes.size() < 2) throw Error("classification needs at least 2 prototypes");
  std::map<std::string, double> scores;
  for (const auto& [label, proto] : prototypes) {
    scores[label] = comparative(proto, input, config).complement;
  }
  return select_best(std::move(scores));
}

struct SweepRow {
  double w1;
  double w2;
  double comparative;
};

/// Comparative value for fixed (similarity, normalised distance) as the first
/// weight runs 0 -> 1 in `steps` uniform increments.
inline std::vector<SweepRow> weight_sweep(double similarity, double normalized_distance,
                                          int steps = 11) {
  if (steps < 2) throw Error("weight sweep needs at least 2 steps");
  if (!(similarity >= 0.0 && similarity <= 1.0)) throw Error("similarity outside [0, 1]");
  if (!(std::abs(normalized_distance) <= 1.0)) {
    throw Error("normalized distance outside [-1, 1]");
  }
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double w1 = static_cast<double>(i) / (steps - 1);
    const double w2 = 1.0 - w1;
    const auto report = fuse(similarity, normalized_distance, 1.0, WeightVector{w1, w2});
    rows.push_back({w1, w2, report.comparative});
  }
  return rows;
}

}  // namespace fuzzcmp
