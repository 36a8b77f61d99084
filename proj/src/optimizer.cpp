#include "hetdp/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hetdp {

double AffinePlan::weight_for(double epsilon) const {
  for (const WeightEntry& entry : weights) {
    if (entry.epsilon == epsilon) return entry.weight;
  }
  throw std::invalid_argument("budget not covered by the affine plan");
}

ThresholdChoice optimize_threshold(const PrivacyProfile& profile) {
  ThresholdChoice best{0.0, kInfinity};
  // Candidates ascending; <= keeps the largest eps on ties.
  for (const Level& level : profile.levels()) {
    const double value = mse_threshold_at(profile, level.epsilon);
    if (value <= best.mse) best = {level.epsilon, value};
  }
  if (profile.public_count() > 0) {
    const double value = mse_threshold_at(profile, kInfinity);
    if (value <= best.mse) best = {kInfinity, value};
  }
  return best;
}

double segment_stationary_tau(double weighted_budget_sum,
                              double weighted_square_sum) {
  if (!(weighted_budget_sum > 0.0)) {
    throw std::invalid_argument("stationary point requires mass below tau");
  }
  return (weighted_square_sum + 8.0) / weighted_budget_sum;
}

namespace {

AffinePlan plan_for_tau(const PrivacyProfile& profile, double tau, double mse) {
  AffinePlan plan;
  plan.tau_star = tau;
  plan.mse = mse;
  if (std::isinf(tau)) {
    // All-public profile: the infimum is the noiseless public mean.
    plan.eta = 0.0;
    plan.weights.push_back(
        {kInfinity, 1.0 / static_cast<double>(profile.public_count())});
    return plan;
  }
  const ClippedStats stats = clipped_sums(profile, tau);
  plan.eta = 1.0 / stats.s_tau;
  for (const Level& level : profile.levels()) {
    plan.weights.push_back(
        {level.epsilon, std::min(level.epsilon, tau) * plan.eta});
  }
  if (profile.public_count() > 0) {
    plan.weights.push_back({kInfinity, tau * plan.eta});
  }
  return plan;
}

}  // namespace

AffinePlan optimize_affine(const PrivacyProfile& profile) {
  const auto& levels = profile.levels();
  const double pub = static_cast<double>(profile.public_count());

  if (levels.empty()) {
    // Only public records: (q+8)/(4 s^2) = 1/(4k) + 2/(k tau)^2 decreases
    // toward its tau -> inf limit.
    return plan_for_tau(profile, kInfinity, 0.25 / pub);
  }

  double best_tau = levels.front().epsilon;
  double best_mse = mse_affine_at(profile, best_tau);
  auto consider = [&](double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau)) return;
    const double value = mse_affine_at(profile, tau);
    // Strict improvement only: ties resolve to the smallest tau seen.
    if (value < best_mse || (value == best_mse && tau < best_tau)) {
      best_mse = value;
      best_tau = tau;
    }
  };

  // Scan segments [eps_j, eps_{j+1}] in ascending order, maintaining the
  // weighted sums B, C of the levels strictly below the segment. On each
  // segment the objective is (C + A tau^2 + 8) / (4 (B + A tau)^2) with a
  // single stationary point (C + 8) / B, so the clamped stationary point
  // plus the endpoints cover the segment minimum. Below eps_1 (B = 0) the
  // objective strictly decreases, so eps_1 itself is that candidate.
  double below_budget = 0.0;  // B
  double below_square = 0.0;  // C
  for (std::size_t j = 0; j < levels.size(); ++j) {
    below_budget += static_cast<double>(levels[j].count) * levels[j].epsilon;
    below_square +=
        static_cast<double>(levels[j].count) * levels[j].epsilon * levels[j].epsilon;
    const double lo = levels[j].epsilon;
    const bool has_upper = j + 1 < levels.size();
    if (!has_upper && profile.public_count() == 0) {
      consider(lo);  // objective constant beyond eps_m
      break;
    }
    const double hi = has_upper ? levels[j + 1].epsilon : kInfinity;
    consider(lo);
    if (std::isfinite(hi)) consider(hi);
    const double stationary = segment_stationary_tau(below_budget, below_square);
    consider(std::clamp(stationary, lo, hi));
  }

  return plan_for_tau(profile, best_tau, best_mse);
}

RiskReport ratio_report(const PrivacyProfile& profile) {
  const ThresholdChoice threshold = optimize_threshold(profile);
  const AffinePlan affine = optimize_affine(profile);
  RiskReport report;
  report.eps_star = threshold.eps_star;
  report.mse_thr = threshold.mse;
  report.tau_star = affine.tau_star;
  report.mse_aff = affine.mse;
  report.ratio = threshold.mse / affine.mse;
  return report;
}

double two_level_affine_closed_form(std::uint64_t n1, double eps1,
                                    std::uint64_t n2, double eps2) {
  if (!(eps1 > 0.0) || !std::isfinite(eps1) || !std::isfinite(eps2)) {
    throw std::invalid_argument("budgets must be finite and positive");
  }
  if (!(eps1 < eps2)) {
    throw std::invalid_argument("closed form requires eps1 < eps2");
  }
  if (n1 == 0 || n2 == 0) {
    throw std::invalid_argument("both level counts must be at least 1");
  }
  const double a = static_cast<double>(n1);
  const double b = static_cast<double>(n2);
  const double saturation = 1.0 + 8.0 / (a * eps1 * eps1);  // R
  if (eps2 <= saturation * eps1) {
    const double s = a * eps1 + b * eps2;
    return (a * eps1 * eps1 + b * eps2 * eps2 + 8.0) / (4.0 * s * s);
  }
  return saturation / (4.0 * (a + b * saturation));
}

double harmonic_combination(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw std::invalid_argument("risks must be non-negative");
  }
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b / (a + b);
}

double public_private_affine(std::uint64_t n1, double eps1, std::uint64_t n2) {
  if (n1 == 0 || n2 == 0) {
    throw std::invalid_argument("both counts must be at least 1");
  }
  if (!(eps1 > 0.0) || !std::isfinite(eps1)) {
    throw std::invalid_argument("eps1 must be finite and positive");
  }
  const double a = static_cast<double>(n1);
  const double b = static_cast<double>(n2);
  const double mse_private = 0.25 / a + 2.0 / ((a * eps1) * (a * eps1));
  const double mse_public = 0.25 / b;
  return harmonic_combination(mse_private, mse_public);
}

}  // namespace hetdp
