#pragma once

#include <optional>
#include <string>
#include <vector>

namespace alcurve {

// One (budget, performance) observation. x counts samples added on top of
// the initial labelled set, so every run starts at x = 0.
struct CurvePoint {
  double x = 0.0;
  double performance = 0.0;
  int seed = 0;
  std::optional<double> qm_time_s;
};

// Multi-seed learning curve with per-grid-point aggregates. Requires a
// rectangular design: every seed contributes a value at every grid x.
// Immutable after build_curve; safe to share across threads.
struct LearningCurve {
  std::string qm_id;
  std::vector<CurvePoint> points;  // sorted by (seed, x)
  std::vector<double> x_grid;      // sorted distinct x values
  std::vector<double> mean;
  std::vector<double> sd;   // sample standard deviation (divisor n-1)
  std::vector<double> sem;  // sd / sqrt(n_seeds)
  int n_seeds = 0;

  double x_min() const { return x_grid.front(); }
  double x_max() const { return x_grid.back(); }
};

struct ReliabilityFlags {
  double normalized_gain = 0.0;
  double monotone_violation_fraction = 0.0;
  bool reliable = false;
};

inline constexpr double kDefaultGainThreshold = 0.25;
inline constexpr double kDefaultViolationThreshold = 0.2;

// Aggregates raw records into a curve. Throws EmptyInput,
// OutOfRangePerformance, or RaggedDesign (seeds disagreeing on the x set,
// including duplicate (seed, x) pairs).
LearningCurve build_curve(std::vector<CurvePoint> records, std::string qm_id);

// Piecewise-linear interpolation of the seed-mean curve. Exact at grid
// points; OutOfDomain outside [x_min, x_max].
double connected_value(const LearningCurve& curve, double x);

// Running maximum of the mean curve; scatter points and spread stay as-is.
LearningCurve monotone_envelope(const LearningCurve& curve);

// Smallest x where the monotone envelope's connected value reaches p
// (first-crossing rule: a plateau at p maps to its left edge). Throws
// Unreachable when p lies outside the envelope's attained range.
double invert_connected(const LearningCurve& curve, double p);

// Normalized performance gain (P_final - P_initial) / (ceiling - P_initial),
// capped at 1, plus the fraction of adjacent mean pairs that decrease.
// reliable = gain >= gain_threshold && violations <= violation_threshold.
ReliabilityFlags normalized_gain(const LearningCurve& curve, double ceiling,
                                 double gain_threshold = kDefaultGainThreshold,
                                 double violation_threshold = kDefaultViolationThreshold);

// Curve restricted to grid points with x <= max_x, re-aggregated.
LearningCurve truncate_curve(const LearningCurve& curve, double max_x);

}  // namespace alcurve
