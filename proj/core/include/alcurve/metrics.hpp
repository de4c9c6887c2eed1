#pragma once

#include <map>
#include <string>
#include <vector>

#include "alcurve/curve.hpp"
#include "alcurve/fitting.hpp"

namespace alcurve {

inline constexpr const char* kBaselineQmId = "rand";
inline constexpr int kDefaultRatioLevels = 100;
inline constexpr double kDefaultAlpha = 0.05;

// Speed-up factor S = b_qm / b_rand: the fraction of samples the query
// method needs to match random-sampling performance. S < 1 beats random.
struct SpeedUp {
  std::string qm_id;
  double s = 1.0;
  FunctionFamily family = FunctionFamily::ExpSaturating;
  double b_qm = 0.0;
  double b_rand = 0.0;
  ReliabilityFlags reliability;
};

double speed_up_factor(double b_qm, double b_rand);

// Per-performance-level ratio x_qm(p) / x_rand(p) from inverting the
// monotone envelopes of both connected curves.
struct ConnectedRatioSeries {
  std::vector<double> performance_levels;
  std::vector<double> ratios;
  double p_lo = 0.0;  // evaluated band, after endpoint trimming
  double p_hi = 0.0;
};

ConnectedRatioSeries connected_speed_up(const LearningCurve& curve_qm,
                                        const LearningCurve& curve_rand,
                                        int n_levels = kDefaultRatioLevels);

// Mean of the seed-mean performance over grid points with x <= stop_budget.
double lc_mean(const LearningCurve& curve, double stop_budget);

// Trapezoidal area of the connected mean curve over [0, stop_budget],
// normalized by the random-sampling baseline's area.
double aulc_normalized(const LearningCurve& curve_qm, const LearningCurve& curve_rand,
                       double stop_budget);

enum class CutPointVerdict { Superior, NotSuperior };

struct CutPointResult {
  CutPointVerdict verdict = CutPointVerdict::NotSuperior;
  double correlation = 0.0;  // Spearman rank correlation, average ranks on ties
  double p_value = 1.0;      // one-sided, t-distributed statistic
  int n = 0;                 // iterations compared
};

// Cut-point method: per-iteration differences mean_qm - mean_rand are ranked
// descending and correlated against the ideal descending ranking (earliest
// iteration first). Superior iff the correlation is positive and significant
// at alpha.
CutPointResult cut_point_test(const LearningCurve& curve_qm,
                              const LearningCurve& curve_rand, double stop_budget,
                              double alpha = kDefaultAlpha);

// The prior single-family metric: p(x) = a * (1 - exp(-x/b)) with a zero
// intercept, fitted to both curves; s = b_qm / b_rand.
struct FixedSpeedUp {
  double s = 1.0;
  FitOutcome qm_fit;
  FitOutcome rand_fit;
};

FixedSpeedUp speed_up_fixed(const LearningCurve& curve_qm,
                            const LearningCurve& curve_rand, double ceiling);

// Sensitivity of S to the approximation-function choice, as fractions:
// delta_rel = 2|s1-s2|/(s1+s2), delta_log = |log s1 - log s2|.
struct Sensitivity {
  double delta_rel = 0.0;
  double delta_log = 0.0;
};

Sensitivity sensitivity(double s1, double s2);

enum class StabilityMetric {
  SpeedUpFactor,
  SpeedUpFixed,
  LcMean,
  AulcNormalized,
  CutPoint,          // encoded Superior=1, NotSuperior=0
  FinalPerformance,  // ratio of final seed-mean values qm / rand
};

const char* stability_metric_name(StabilityMetric metric);

struct StabilitySeries {
  std::string metric_name;
  std::vector<double> stop_budgets;
  std::vector<double> values;  // NaN where the metric failed at that truncation
  double range_over_mean = 0.0;
  double sd_over_mean = 0.0;
};

// Everything stability_series needs beyond the curves: the target QM, the
// baseline id, and the full-data fit context. a_inf stays fixed across
// truncations (the ceiling comes from training on all samples, which
// truncation does not change); a0 and b are re-derived per truncation.
struct StabilityContext {
  std::string qm_id;
  std::string baseline_id = kBaselineQmId;
  double a_inf = 1.0;
  FunctionFamily family = FunctionFamily::ExpSaturating;
  double alpha = kDefaultAlpha;
};

StabilitySeries stability_series(StabilityMetric metric,
                                 const std::map<std::string, LearningCurve>& curves,
                                 const std::vector<double>& stop_budgets,
                                 const StabilityContext& ctx);

// Pooled x=0 intercept: grand mean over the per-QM seed means at the first
// grid point.
double pooled_initial_performance(const std::map<std::string, LearningCurve>& curves);

}  // namespace alcurve
