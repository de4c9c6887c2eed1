#include "alcurve/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "alcurve/errors.hpp"

namespace alcurve {

double speed_up_factor(double b_qm, double b_rand) {
  if (!(b_qm > 0.0) || !(b_rand > 0.0)) {
    throw NonPositiveScale("speed_up_factor: b_qm=" + std::to_string(b_qm) +
                           ", b_rand=" + std::to_string(b_rand));
  }
  return b_qm / b_rand;
}

ConnectedRatioSeries connected_speed_up(const LearningCurve& curve_qm,
                                        const LearningCurve& curve_rand, int n_levels) {
  if (n_levels < 1) {
    throw Error("connected_speed_up: n_levels must be positive");
  }
  const LearningCurve env_qm = monotone_envelope(curve_qm);
  const LearningCurve env_rand = monotone_envelope(curve_rand);

  const double band_lo = std::max(env_qm.mean.front(), env_rand.mean.front());
  const double band_hi = std::min(env_qm.mean.back(), env_rand.mean.back());
  if (!(band_lo < band_hi)) {
    throw NoOverlap("connected_speed_up: performance bands do not overlap");
  }
  // Trim 5% of the random curve's attained range off each end; inversion is
  // unstable near the endpoints where curve variance dominates.
  const double delta = env_rand.mean.back() - env_rand.mean.front();
  const double p_lo = band_lo + 0.05 * delta;
  const double p_hi = band_hi - 0.05 * delta;
  if (!(p_lo < p_hi)) {
    throw NoOverlap("connected_speed_up: overlap band vanishes after trimming");
  }

  ConnectedRatioSeries series;
  series.p_lo = p_lo;
  series.p_hi = p_hi;
  series.performance_levels.reserve(n_levels);
  series.ratios.reserve(n_levels);
  for (int i = 0; i < n_levels; ++i) {
    const double p =
        n_levels == 1 ? 0.5 * (p_lo + p_hi)
                      : p_lo + (p_hi - p_lo) * static_cast<double>(i) / (n_levels - 1);
    const double x_qm = invert_connected(env_qm, p);
    const double x_rand = invert_connected(env_rand, p);
    series.performance_levels.push_back(p);
    series.ratios.push_back(x_qm / x_rand);
  }
  return series;
}

double lc_mean(const LearningCurve& curve, double stop_budget) {
  if (stop_budget < curve.x_min()) {
    throw OutOfDomain("lc_mean: stop budget below the first grid point");
  }
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < curve.x_grid.size() && curve.x_grid[i] <= stop_budget; ++i) {
    sum += curve.mean[i];
    ++count;
  }
  return sum / static_cast<double>(count);
}

namespace {

// Exact integral of the connected mean curve over [0, stop].
double trapezoid_area(const LearningCurve& curve, double stop) {
  if (curve.x_min() != 0.0 || stop > curve.x_max() || stop < 0.0) {
    throw OutOfDomain("aulc: curve not defined over [0, " + std::to_string(stop) + "]");
  }
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < curve.x_grid.size() && curve.x_grid[i] < stop; ++i) {
    const double x1 = curve.x_grid[i];
    const double x2 = std::min(curve.x_grid[i + 1], stop);
    const double y1 = curve.mean[i];
    const double y2 = connected_value(curve, x2);
    area += 0.5 * (y1 + y2) * (x2 - x1);
  }
  return area;
}

}  // namespace

double aulc_normalized(const LearningCurve& curve_qm, const LearningCurve& curve_rand,
                       double stop_budget) {
  const double qm_area = trapezoid_area(curve_qm, stop_budget);
  const double rand_area = trapezoid_area(curve_rand, stop_budget);
  if (rand_area == 0.0) {
    throw ZeroBaselineArea("aulc_normalized: random-sampling area is zero");
  }
  return qm_area / rand_area;
}

namespace {

// Ranks with average ranks for ties; rank 1 = largest value.
std::vector<double> descending_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cov += (a[i] - ma) * (b[i] - mb);
    va += (a[i] - ma) * (a[i] - ma);
    vb += (b[i] - mb) * (b[i] - mb);
  }
  if (va == 0.0 || vb == 0.0) return 0.0;
  return cov / std::sqrt(va * vb);
}

}  // namespace

CutPointResult cut_point_test(const LearningCurve& curve_qm,
                              const LearningCurve& curve_rand, double stop_budget,
                              double alpha) {
  std::vector<double> diffs;
  for (std::size_t i = 0; i < curve_qm.x_grid.size(); ++i) {
    const double x = curve_qm.x_grid[i];
    if (x > stop_budget) break;
    const auto it =
        std::lower_bound(curve_rand.x_grid.begin(), curve_rand.x_grid.end(), x);
    if (it == curve_rand.x_grid.end() || *it != x) continue;
    const std::size_t j = static_cast<std::size_t>(it - curve_rand.x_grid.begin());
    diffs.push_back(curve_qm.mean[i] - curve_rand.mean[j]);
  }
  if (diffs.size() < 4) {
    throw TooFewIterations("cut_point_test: needs >= 4 common grid points, got " +
                           std::to_string(diffs.size()));
  }

  const std::size_t n = diffs.size();
  const std::vector<double> obtained = descending_ranks(diffs);
  std::vector<double> ideal(n);
  std::iota(ideal.begin(), ideal.end(), 1.0);

  CutPointResult result;
  result.n = static_cast<int>(n);
  result.correlation = pearson(obtained, ideal);

  const double r = result.correlation;
  const double df = static_cast<double>(n - 2);
  if (1.0 - r * r < 1e-15) {
    result.p_value = r > 0.0 ? 0.0 : 1.0;
  } else {
    const double t = r * std::sqrt(df / (1.0 - r * r));
    result.p_value = 1.0 - boost::math::cdf(boost::math::students_t(df), t);
  }
  result.verdict = (r > 0.0 && result.p_value < alpha) ? CutPointVerdict::Superior
                                                       : CutPointVerdict::NotSuperior;
  return result;
}

FixedSpeedUp speed_up_fixed(const LearningCurve& curve_qm,
                            const LearningCurve& curve_rand, double ceiling) {
  if (!(ceiling > 0.0)) {
    throw Error("speed_up_fixed: ceiling must be positive");
  }
  FixedSpeedUp out;
  out.qm_fit = fit_b(FunctionFamily::ExpSaturating, curve_qm, ceiling, 0.0);
  out.rand_fit = fit_b(FunctionFamily::ExpSaturating, curve_rand, ceiling, 0.0);
  out.s = speed_up_factor(out.qm_fit.b, out.rand_fit.b);
  return out;
}

Sensitivity sensitivity(double s1, double s2) {
  if (!(s1 > 0.0) || !(s2 > 0.0)) {
    throw NonPositiveInput("sensitivity: speed-up factors must be positive");
  }
  Sensitivity out;
  out.delta_rel = 2.0 * std::abs(s1 - s2) / (s1 + s2);
  out.delta_log = std::abs(std::log(s1) - std::log(s2));
  return out;
}

const char* stability_metric_name(StabilityMetric metric) {
  switch (metric) {
    case StabilityMetric::SpeedUpFactor: return "S";
    case StabilityMetric::SpeedUpFixed: return "S_fixed";
    case StabilityMetric::LcMean: return "lc_mean";
    case StabilityMetric::AulcNormalized: return "aulc_norm";
    case StabilityMetric::CutPoint: return "cut_point";
    case StabilityMetric::FinalPerformance: return "final_performance";
  }
  return "unknown";
}

double pooled_initial_performance(const std::map<std::string, LearningCurve>& curves) {
  if (curves.empty()) {
    throw EmptyInput("pooled_initial_performance: no curves");
  }
  double sum = 0.0;
  for (const auto& [qm, curve] : curves) sum += curve.mean.front();
  return sum / static_cast<double>(curves.size());
}

namespace {

double stability_value(StabilityMetric metric,
                       const std::map<std::string, LearningCurve>& curves, double stop,
                       const StabilityContext& ctx) {
  const LearningCurve qm = truncate_curve(curves.at(ctx.qm_id), stop);
  const LearningCurve rand = truncate_curve(curves.at(ctx.baseline_id), stop);

  switch (metric) {
    case StabilityMetric::SpeedUpFactor: {
      std::map<std::string, LearningCurve> truncated;
      for (const auto& [id, curve] : curves) truncated.emplace(id, truncate_curve(curve, stop));
      const double p0 =
          clamp_intercept(ctx.family, ctx.a_inf, pooled_initial_performance(truncated)).p0;
      const double a0 = derive_a0(ctx.family, ctx.a_inf, p0);
      const FitOutcome f_qm = fit_b(ctx.family, qm, ctx.a_inf, a0);
      const FitOutcome f_rand = fit_b(ctx.family, rand, ctx.a_inf, a0);
      return speed_up_factor(f_qm.b, f_rand.b);
    }
    case StabilityMetric::SpeedUpFixed:
      return speed_up_fixed(qm, rand, ctx.a_inf).s;
    case StabilityMetric::LcMean:
      return lc_mean(qm, stop);
    case StabilityMetric::AulcNormalized:
      return aulc_normalized(qm, rand, stop);
    case StabilityMetric::CutPoint:
      return cut_point_test(qm, rand, stop, ctx.alpha).verdict == CutPointVerdict::Superior
                 ? 1.0
                 : 0.0;
    case StabilityMetric::FinalPerformance: {
      const double denom = rand.mean.back();
      if (denom == 0.0) throw ZeroBaselineArea("final_performance: baseline is zero");
      return qm.mean.back() / denom;
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

StabilitySeries stability_series(StabilityMetric metric,
                                 const std::map<std::string, LearningCurve>& curves,
                                 const std::vector<double>& stop_budgets,
                                 const StabilityContext& ctx) {
  if (!curves.count(ctx.qm_id) || !curves.count(ctx.baseline_id)) {
    throw EmptyInput("stability_series: missing curve for '" + ctx.qm_id + "' or '" +
                     ctx.baseline_id + "'");
  }
  const double full = curves.at(ctx.qm_id).x_max();
  for (std::size_t i = 0; i < stop_budgets.size(); ++i) {
    if (i > 0 && stop_budgets[i] <= stop_budgets[i - 1]) {
      throw Error("stability_series: stop budgets must be strictly ascending");
    }
    if (stop_budgets[i] > full) {
      throw OutOfDomain("stability_series: stop budget " + std::to_string(stop_budgets[i]) +
                        " exceeds the full budget " + std::to_string(full));
    }
  }

  StabilitySeries series;
  series.metric_name = stability_metric_name(metric);
  series.stop_budgets = stop_budgets;
  series.values.reserve(stop_budgets.size());
  for (const double stop : stop_budgets) {
    // Per-truncation failures (e.g. too few iterations for the cut-point
    // test at a small stop budget) become missing values, not hard errors.
    try {
      series.values.push_back(stability_value(metric, curves, stop, ctx));
    } catch (const Error&) {
      series.values.push_back(std::numeric_limits<double>::quiet_NaN());
    }
  }

  std::vector<double> finite;
  for (const double v : series.values) {
    if (std::isfinite(v)) finite.push_back(v);
  }
  if (!finite.empty()) {
    const double mean =
        std::accumulate(finite.begin(), finite.end(), 0.0) / static_cast<double>(finite.size());
    const auto [lo, hi] = std::minmax_element(finite.begin(), finite.end());
    double var = 0.0;
    for (const double v : finite) var += (v - mean) * (v - mean);
    const double sd =
        finite.size() > 1 ? std::sqrt(var / static_cast<double>(finite.size() - 1)) : 0.0;
    series.range_over_mean = mean != 0.0 ? (*hi - *lo) / mean : 0.0;
    series.sd_over_mean = mean != 0.0 ? sd / mean : 0.0;
  } else {
    series.range_over_mean = std::numeric_limits<double>::quiet_NaN();
    series.sd_over_mean = std::numeric_limits<double>::quiet_NaN();
  }
  return series;
}

}  // namespace alcurve
