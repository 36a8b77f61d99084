#include "hetdp/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hetdp/optimizer.hpp"

namespace hetdp {

SourceDistribution SourceDistribution::rademacher_half() {
  return {Kind::kRademacherHalf, 0.0};
}

SourceDistribution SourceDistribution::point_mass(double c) {
  if (!(c >= -0.5) || !(c <= 0.5)) {
    throw std::invalid_argument("point mass must lie in [-1/2, 1/2]");
  }
  return {Kind::kPointMass, c};
}

namespace detail {

void check_mc_preconditions(const PrivacyProfile& profile,
                            const Estimator& estimator,
                            std::uint64_t trials) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (const auto* thr = std::get_if<ThresholdEstimator>(&estimator)) {
    if (n_at_threshold(profile, thr->eps) == 0) {
      throw std::invalid_argument("threshold retains no record of the profile");
    }
  } else {
    const AffinePlan& plan = std::get<AffineEstimator>(estimator).plan;
    double total = 0.0;
    for (const Level& level : profile.levels()) {
      total += static_cast<double>(level.count) * plan.weight_for(level.epsilon);
    }
    if (profile.public_count() > 0) {
      total += static_cast<double>(profile.public_count()) *
               plan.weight_for(kInfinity);
    }
    if (std::fabs(total - 1.0) > 1e-9) {
      throw std::invalid_argument("plan weights do not match the profile");
    }
  }
}

}  // namespace detail

McResult empirical_mse(const PrivacyProfile& profile,
                       const Estimator& estimator,
                       const SourceDistribution& dist, std::uint64_t trials,
                       std::uint64_t seed) {
  if (trials < 1000) {
    throw std::invalid_argument("at least 1000 trials are required");
  }
  const Rng root(seed);
  return empirical_mse_with(profile, estimator, dist, trials,
                            [&root](std::uint64_t t) { return root.derived(t); });
}

std::pair<double, double> grid_oracle_affine(const PrivacyProfile& profile,
                                             std::uint64_t grid_points) {
  if (grid_points < 1000) {
    throw std::invalid_argument("at least 1000 grid points are required");
  }
  if (profile.level_count() == 0) {
    // Public-only: the objective decreases toward its tau -> inf limit.
    return {kInfinity, 0.25 / static_cast<double>(profile.public_count())};
  }

  // Range wide enough to contain every segment's stationary point
  // (C + 8) / B; in public-heavy profiles that point can sit far above the
  // largest budget.
  const double lo = profile.min_epsilon() / 4.0;
  double hi = profile.max_epsilon();
  double below_budget = 0.0;
  double below_square = 0.0;
  for (const Level& level : profile.levels()) {
    const double count = static_cast<double>(level.count);
    below_budget += count * level.epsilon;
    below_square += count * level.epsilon * level.epsilon;
    hi = std::max(hi, (below_square + 8.0) / below_budget);
  }
  hi *= 4.0;

  std::vector<double> taus;
  taus.reserve(grid_points + profile.level_count());
  const double log_lo = std::log(lo);
  const double log_step = (std::log(hi) - log_lo) /
                          static_cast<double>(grid_points - 1);
  for (std::uint64_t i = 0; i < grid_points; ++i) {
    taus.push_back(std::exp(log_lo + log_step * static_cast<double>(i)));
  }
  // The objective has a kink at every level; make those exact grid nodes.
  for (const Level& level : profile.levels()) taus.push_back(level.epsilon);
  std::sort(taus.begin(), taus.end());

  double best_tau = taus.front();
  double best_mse = mse_affine_at(profile, best_tau);
  for (double tau : taus) {
    const double value = mse_affine_at(profile, tau);
    if (value < best_mse) {
      best_mse = value;
      best_tau = tau;
    }
  }
  if (profile.public_count() > 0) {
    const double limit = 0.25 / static_cast<double>(profile.public_count());
    if (limit < best_mse) {
      best_mse = limit;
      best_tau = kInfinity;
    }
  }
  return {best_tau, best_mse};
}

}  // namespace hetdp
