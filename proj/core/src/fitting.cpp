#include "alcurve/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alcurve/errors.hpp"

namespace alcurve {

const char* family_name(FunctionFamily family) {
  return family == FunctionFamily::ExpSaturating ? "exp_saturating" : "logistic";
}

double evaluate(const ApproxModel& model, double x) {
  const double z = std::exp(model.a0 - x / model.b);
  if (model.family == FunctionFamily::ExpSaturating) {
    return model.a_inf * (1.0 - z);
  }
  return model.a_inf / (1.0 + z);
}

double derive_a_inf(std::span<const double> ceiling_performances) {
  if (ceiling_performances.empty()) {
    throw EmptyInput("derive_a_inf: no ceiling performances");
  }
  double sum = 0.0;
  for (const double c : ceiling_performances) sum += c;
  return sum / static_cast<double>(ceiling_performances.size());
}

double derive_a0(FunctionFamily family, double a_inf, double p0) {
  if (!(p0 >= 0.0 && p0 < a_inf)) {
    throw InterceptInfeasible("derive_a0: p0=" + std::to_string(p0) +
                              " not in [0, a_inf=" + std::to_string(a_inf) + ")");
  }
  if (family == FunctionFamily::ExpSaturating) {
    return std::log(1.0 - p0 / a_inf);
  }
  if (p0 == 0.0) {
    throw InterceptInfeasible("derive_a0: logistic intercept undefined at p0=0");
  }
  return std::log(a_inf / p0 - 1.0);
}

InterceptClamp clamp_intercept(FunctionFamily family, double a_inf, double p0) {
  InterceptClamp result{p0, false};
  if (p0 >= a_inf) {
    result.p0 = 0.999 * a_inf;
    result.clamped = true;
  }
  if (family == FunctionFamily::Logistic && result.p0 <= 0.0) {
    result.p0 = 1e-6;
    result.clamped = true;
  }
  return result;
}

namespace {

double sum_squared_residuals(const ApproxModel& model,
                             const std::vector<CurvePoint>& points) {
  double sse = 0.0;
  for (const auto& pt : points) {
    const double r = evaluate(model, pt.x) - pt.performance;
    sse += r * r;
  }
  return sse;
}

}  // namespace

FitOutcome fit_b(FunctionFamily family, const LearningCurve& curve, double a_inf,
                 double a0) {
  if (curve.x_grid.size() < 2 || curve.x_max() <= 0.0) {
    throw Error("fit_b: curve needs >= 2 distinct x values with x_max > 0");
  }

  ApproxModel model{family, a_inf, a0, 1.0};
  const auto objective = [&](double log_b) {
    model.b = std::exp(log_b);
    return sum_squared_residuals(model, curve.points);
  };

  const double lo = std::log(curve.x_max() / 1e4);
  const double hi = std::log(curve.x_max() * 1e2);
  constexpr int kScanPoints = 64;

  int best = -1;
  double best_sse = std::numeric_limits<double>::infinity();
  std::vector<double> grid(kScanPoints);
  for (int i = 0; i < kScanPoints; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / (kScanPoints - 1);
    const double sse = objective(grid[i]);
    if (std::isfinite(sse) && sse < best_sse) {
      best_sse = sse;
      best = i;
    }
  }
  if (best < 0) {
    throw FitDiverged("fit_b: objective non-finite across the entire bracket");
  }

  double a = grid[std::max(0, best - 1)];
  double b = grid[std::min(kScanPoints - 1, best + 1)];

  // Golden-section on log b to relative width 1e-9.
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (b - a > 1e-9) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = objective(x2);
    }
  }

  FitOutcome out;
  const double log_b = 0.5 * (a + b);
  out.b = std::exp(log_b);
  out.rmse = std::sqrt(objective(log_b) / static_cast<double>(curve.points.size()));
  out.at_bracket_edge = best == 0 || best == kScanPoints - 1;
  return out;
}

FunctionFamily select_function(const std::map<std::string, FamilyFits>& fits) {
  if (fits.empty()) {
    throw EmptyInput("select_function: no fits");
  }
  bool exp_complete = true;
  bool logistic_complete = true;
  double exp_sum = 0.0;
  double logistic_sum = 0.0;
  for (const auto& [qm, ff] : fits) {
    if (ff.exp_saturating) {
      exp_sum += ff.exp_saturating->rmse;
    } else {
      exp_complete = false;
    }
    if (ff.logistic) {
      logistic_sum += ff.logistic->rmse;
    } else {
      logistic_complete = false;
    }
  }
  if (!exp_complete && !logistic_complete) {
    throw EmptyInput("select_function: no family is fitted for every QM");
  }
  if (!logistic_complete) return FunctionFamily::ExpSaturating;
  if (!exp_complete) return FunctionFamily::Logistic;
  const double n = static_cast<double>(fits.size());
  return logistic_sum / n < exp_sum / n ? FunctionFamily::Logistic
                                        : FunctionFamily::ExpSaturating;
}

}  // namespace alcurve
