#include "alcurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "alcurve/errors.hpp"

namespace alcurve {

LearningCurve build_curve(std::vector<CurvePoint> records, std::string qm_id) {
  if (records.empty()) {
    throw EmptyInput("build_curve: no records for qm '" + qm_id + "'");
  }
  for (const auto& r : records) {
    if (!(r.performance >= 0.0 && r.performance <= 1.0)) {
      throw OutOfRangePerformance("build_curve: performance " +
                                  std::to_string(r.performance) +
                                  " outside [0,1] for qm '" + qm_id + "'");
    }
    if (!(r.x >= 0.0)) {
      throw OutOfDomain("build_curve: negative x for qm '" + qm_id + "'");
    }
  }

  std::sort(records.begin(), records.end(), [](const CurvePoint& a, const CurvePoint& b) {
    if (a.seed != b.seed) return a.seed < b.seed;
    return a.x < b.x;
  });

  std::map<int, std::vector<double>> xs_by_seed;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i > 0 && records[i].seed == records[i - 1].seed && records[i].x == records[i - 1].x) {
      throw RaggedDesign("build_curve: duplicate x=" + std::to_string(records[i].x) +
                         " for seed " + std::to_string(records[i].seed) + " in qm '" +
                         qm_id + "'");
    }
    xs_by_seed[records[i].seed].push_back(records[i].x);
  }

  const std::vector<double>& grid = xs_by_seed.begin()->second;
  for (const auto& [seed, xs] : xs_by_seed) {
    if (xs != grid) {
      throw RaggedDesign("build_curve: seed " + std::to_string(seed) +
                         " does not cover the same x set as seed " +
                         std::to_string(xs_by_seed.begin()->first) + " in qm '" + qm_id + "'");
    }
  }

  LearningCurve curve;
  curve.qm_id = std::move(qm_id);
  curve.points = std::move(records);
  curve.x_grid = grid;
  curve.n_seeds = static_cast<int>(xs_by_seed.size());

  const std::size_t g = curve.x_grid.size();
  const std::size_t n = static_cast<std::size_t>(curve.n_seeds);
  curve.mean.assign(g, 0.0);
  curve.sd.assign(g, 0.0);
  curve.sem.assign(g, 0.0);
  // points are sorted by (seed, x) and rectangular, so point s*g + i sits at
  // grid index i of seed s.
  for (std::size_t i = 0; i < g; ++i) {
    double sum = 0.0;
    for (std::size_t s = 0; s < n; ++s) sum += curve.points[s * g + i].performance;
    curve.mean[i] = sum / static_cast<double>(n);
    if (n > 1) {
      double sq = 0.0;
      for (std::size_t s = 0; s < n; ++s) {
        const double d = curve.points[s * g + i].performance - curve.mean[i];
        sq += d * d;
      }
      curve.sd[i] = std::sqrt(sq / static_cast<double>(n - 1));
      curve.sem[i] = curve.sd[i] / std::sqrt(static_cast<double>(n));
    }
  }
  return curve;
}

double connected_value(const LearningCurve& curve, double x) {
  if (x < curve.x_min() || x > curve.x_max()) {
    throw OutOfDomain("connected_value: x=" + std::to_string(x) + " outside [" +
                      std::to_string(curve.x_min()) + ", " + std::to_string(curve.x_max()) +
                      "]");
  }
  const auto& grid = curve.x_grid;
  const auto it = std::upper_bound(grid.begin(), grid.end(), x);
  if (it == grid.end()) return curve.mean.back();
  const std::size_t hi = static_cast<std::size_t>(it - grid.begin());
  if (hi == 0) return curve.mean.front();
  const std::size_t lo = hi - 1;
  const double t = (x - grid[lo]) / (grid[hi] - grid[lo]);
  return curve.mean[lo] + t * (curve.mean[hi] - curve.mean[lo]);
}

LearningCurve monotone_envelope(const LearningCurve& curve) {
  LearningCurve env = curve;
  for (std::size_t i = 1; i < env.mean.size(); ++i) {
    env.mean[i] = std::max(env.mean[i], env.mean[i - 1]);
  }
  return env;
}

double invert_connected(const LearningCurve& curve, double p) {
  const LearningCurve env = monotone_envelope(curve);
  const auto& m = env.mean;
  const auto& grid = env.x_grid;
  if (p < m.front() || p > m.back()) {
    throw Unreachable("invert_connected: p=" + std::to_string(p) +
                      " outside attained range [" + std::to_string(m.front()) + ", " +
                      std::to_string(m.back()) + "]");
  }
  if (p <= m.front()) return grid.front();
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i + 1] >= p) {
      // First segment reaching p; m[i] < p <= m[i+1], so the segment is
      // strictly increasing and the crossing is unique.
      const double t = (p - m[i]) / (m[i + 1] - m[i]);
      return grid[i] + t * (grid[i + 1] - grid[i]);
    }
  }
  return grid.back();
}

ReliabilityFlags normalized_gain(const LearningCurve& curve, double ceiling,
                                 double gain_threshold, double violation_threshold) {
  const double initial = curve.mean.front();
  const double final_p = curve.mean.back();
  if (!(ceiling > initial)) {
    throw DegenerateCeiling("normalized_gain: ceiling " + std::to_string(ceiling) +
                            " <= initial performance " + std::to_string(initial));
  }
  ReliabilityFlags flags;
  flags.normalized_gain = std::min(1.0, (final_p - initial) / (ceiling - initial));
  std::size_t violations = 0;
  for (std::size_t i = 1; i < curve.mean.size(); ++i) {
    if (curve.mean[i] < curve.mean[i - 1]) ++violations;
  }
  flags.monotone_violation_fraction =
      curve.mean.size() > 1
          ? static_cast<double>(violations) / static_cast<double>(curve.mean.size() - 1)
          : 0.0;
  flags.reliable = flags.normalized_gain >= gain_threshold &&
                   flags.monotone_violation_fraction <= violation_threshold;
  return flags;
}

LearningCurve truncate_curve(const LearningCurve& curve, double max_x) {
  std::vector<CurvePoint> kept;
  kept.reserve(curve.points.size());
  for (const auto& pt : curve.points) {
    if (pt.x <= max_x) kept.push_back(pt);
  }
  if (kept.empty()) {
    throw OutOfDomain("truncate_curve: no grid points at or below x=" + std::to_string(max_x));
  }
  return build_curve(std::move(kept), curve.qm_id);
}

}  // namespace alcurve
