#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "alcurve/curve.hpp"

namespace alcurve {

// The two saturating families used to approximate learning curves:
//   ExpSaturating:  p(x) = a_inf * (1 - exp(a0 - x/b))
//   Logistic:       p(x) = a_inf / (1 + exp(a0 - x/b))
// Both evaluate independently of b at x = 0, increase strictly in x for
// b > 0, and approach a_inf as x grows.
enum class FunctionFamily { ExpSaturating, Logistic };

const char* family_name(FunctionFamily family);

struct ApproxModel {
  FunctionFamily family = FunctionFamily::ExpSaturating;
  double a_inf = 1.0;  // asymptote, in (0, 1]
  double a0 = 0.0;     // intercept parameter
  double b = 1.0;      // scale in sample-count units, > 0
};

double evaluate(const ApproxModel& model, double x);

// Mean of the ceiling performances (full-data training results per QM).
double derive_a_inf(std::span<const double> ceiling_performances);

// Solves p(0) = p0 for a0. Requires 0 <= p0 < a_inf, and p0 > 0 for the
// logistic family; throws InterceptInfeasible otherwise.
double derive_a0(FunctionFamily family, double a_inf, double p0);

// Applies the intercept feasibility clamps ahead of derive_a0: p0 >= a_inf
// clamps to 0.999*a_inf, and p0 = 0 under Logistic clamps to 1e-6.
struct InterceptClamp {
  double p0 = 0.0;
  bool clamped = false;
};
InterceptClamp clamp_intercept(FunctionFamily family, double a_inf, double p0);

struct FitOutcome {
  double b = 0.0;
  double rmse = 0.0;
  // Set when the optimum sat on an edge of the search bracket (e.g. flat
  // data below the intercept pushing b toward infinity).
  bool at_bracket_edge = false;
};

// Least-squares estimate of b against every per-seed scatter point of the
// curve, holding family, a_inf and a0 fixed. 1-D search: 64-point log-spaced
// bracket scan over [x_max/1e4, 1e2*x_max] followed by golden-section
// refinement to relative width 1e-9 in log b.
FitOutcome fit_b(FunctionFamily family, const LearningCurve& curve, double a_inf,
                 double a0);

struct FamilyFits {
  std::optional<FitOutcome> exp_saturating;
  std::optional<FitOutcome> logistic;

  const std::optional<FitOutcome>& get(FunctionFamily family) const {
    return family == FunctionFamily::ExpSaturating ? exp_saturating : logistic;
  }
  std::optional<FitOutcome>& get(FunctionFamily family) {
    return family == FunctionFamily::ExpSaturating ? exp_saturating : logistic;
  }
};

// Family whose RMSE, averaged across QMs, is smallest. A family is only a
// candidate when every QM carries a fit for it. Ties and single-candidate
// maps resolve to ExpSaturating when it is available.
FunctionFamily select_function(const std::map<std::string, FamilyFits>& fits);

struct FitResult {
  std::string qm_id;
  FamilyFits per_family;
  FunctionFamily selected_family = FunctionFamily::ExpSaturating;
  double selected_b = 0.0;
};

}  // namespace alcurve
