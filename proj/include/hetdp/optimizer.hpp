#pragma once

#include <cstdint>
#include <vector>

#include "hetdp/profile.hpp"

namespace hetdp {

/// Per-record weight for one budget group. `epsilon == kInfinity` marks the
/// public group.
struct WeightEntry {
  double epsilon = 0.0;
  double weight = 0.0;
};

/// Concrete affine estimator: weights proportional to min(eps, tau_star),
/// Laplace noise of scale eta = 1 / s_{tau_star}.
///
/// For an all-public profile the infimum over tau is only approached, so
/// tau_star = +inf, eta = 0 and the plan degenerates to the noiseless
/// public mean.
struct AffinePlan {
  double tau_star = 0.0;
  std::vector<WeightEntry> weights;  // ascending epsilon, public entry last
  double eta = 0.0;
  double mse = 0.0;

  /// Weight of a record with the given budget (kInfinity for public).
  /// Throws std::invalid_argument when the budget is not in the plan.
  double weight_for(double epsilon) const;
};

/// Optimal fixed threshold and its risk.
struct ThresholdChoice {
  double eps_star = 0.0;  // may be +inf (public-only optimum)
  double mse = 0.0;
};

/// Joint summary of both optimized estimators on one profile.
struct RiskReport {
  double eps_star = 0.0;
  double mse_thr = 0.0;
  double tau_star = 0.0;
  double mse_aff = 0.0;
  double ratio = 0.0;  // mse_thr / mse_aff, >= 1 up to rounding
};

/// Minimizes 1/(4 n_eps) + 2/(eps^2 n_eps^2) exactly. n_eps is a
/// right-continuous step function of eps and the objective is strictly
/// decreasing on every interval where n_eps is constant, so only the level
/// values (plus +inf when public records exist) can attain the infimum.
/// Ties break toward the largest eps.
ThresholdChoice optimize_threshold(const PrivacyProfile& profile);

/// Exact interior stationary point of the affine objective on a segment
/// where the records below tau contribute weighted sums B = sum n*eps and
/// C = sum n*eps^2: tau = (C + 8) / B.
double segment_stationary_tau(double weighted_budget_sum,
                              double weighted_square_sum);

/// Minimizes (q_tau + 8) / (4 s_tau^2) exactly by segment decomposition.
/// Between consecutive levels the objective is smooth with a single
/// stationary point (C + 8) / B, so evaluating the clamped stationary
/// point and both endpoints of every segment covers the global optimum.
/// Ties break toward the smallest tau.
AffinePlan optimize_affine(const PrivacyProfile& profile);

/// Runs both optimizers and reports mse_thr / mse_aff.
RiskReport ratio_report(const PrivacyProfile& profile);

/// Closed-form optimal affine risk for two finite levels
/// (n1 records at eps1 < n2 records at eps2). With R = 1 + 8/(n1 eps1^2):
/// (n1 eps1^2 + n2 eps2^2 + 8) / (4 (n1 eps1 + n2 eps2)^2) when
/// eps2 <= R eps1, and R / (4 (n1 + n2 R)) otherwise.
double two_level_affine_closed_form(std::uint64_t n1, double eps1,
                                    std::uint64_t n2, double eps2);

/// Risk of the optimal combination of two independent unbiased estimators
/// with risks a and b: a*b / (a + b).
double harmonic_combination(double a, double b);

/// Optimal affine risk for n1 private records at eps1 plus n2 public
/// records: the harmonic combination of the private-only risk
/// 1/(4 n1) + 2/(n1 eps1)^2 and the public-only risk 1/(4 n2).
double public_private_affine(std::uint64_t n1, double eps1, std::uint64_t n2);

}  // namespace hetdp
