#pragma once

#include <cstdint>
#include <utility>
#include <variant>

#include "hetdp/mechanisms.hpp"
#include "hetdp/optimizer.hpp"
#include "hetdp/profile.hpp"

namespace hetdp {

/// Empirical mean-squared error with its Monte Carlo standard error.
struct McResult {
  double empirical_mse = 0.0;
  std::uint64_t trials = 0;
  double std_error = 0.0;
};

/// Data-generating distribution on [-1/2, 1/2]. rademacher_half (uniform on
/// {-1/2, +1/2}) attains the worst-case per-point variance 1/4; point
/// masses have zero sampling variance and isolate the injected noise.
struct SourceDistribution {
  enum class Kind { kRademacherHalf, kPointMass };

  Kind kind = Kind::kRademacherHalf;
  double point = 0.0;

  static SourceDistribution rademacher_half();
  static SourceDistribution point_mass(double c);

  double mean() const noexcept {
    return kind == Kind::kPointMass ? point : 0.0;
  }

  template <typename R>
  double draw(R& rng) const {
    return kind == Kind::kPointMass ? point : (rng.coin() ? 0.5 : -0.5);
  }
};

struct ThresholdEstimator {
  double eps = 0.0;
};
struct AffineEstimator {
  AffinePlan plan;
};
using Estimator = std::variant<ThresholdEstimator, AffineEstimator>;

namespace detail {
void check_mc_preconditions(const PrivacyProfile& profile,
                            const Estimator& estimator, std::uint64_t trials);
}

/// Core Monte Carlo loop over a caller-supplied per-trial generator
/// factory, so tests can stub the stream (e.g. force zero noise). Fresh
/// data are drawn each trial; squared errors against the distribution mean
/// are accumulated streaming (Welford), which makes the result independent
/// of how trials would be batched across workers.
template <typename MakeRng>
McResult empirical_mse_with(const PrivacyProfile& profile,
                            const Estimator& estimator,
                            const SourceDistribution& dist,
                            std::uint64_t trials, MakeRng&& make_trial_rng) {
  detail::check_mc_preconditions(profile, estimator, trials);
  const std::vector<double> budgets = profile.expand_budgets();
  const double mu = dist.mean();

  std::vector<Record> records(budgets.size());
  for (std::size_t i = 0; i < budgets.size(); ++i) records[i].epsilon = budgets[i];

  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = make_trial_rng(t);
    for (auto& rec : records) rec.value = dist.draw(rng);
    const Dataset data(records);
    double out = 0.0;
    if (const auto* thr = std::get_if<ThresholdEstimator>(&estimator)) {
      out = threshold_mechanism(data, thr->eps, rng);
    } else {
      out = affine_mechanism(data, std::get<AffineEstimator>(estimator).plan, rng);
    }
    const double sq = (out - mu) * (out - mu);
    const double delta = sq - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (sq - mean);
  }

  McResult result;
  result.empirical_mse = mean;
  result.trials = trials;
  result.std_error =
      trials > 1 ? std::sqrt(m2 / static_cast<double>(trials - 1) /
                             static_cast<double>(trials))
                 : 0.0;
  return result;
}

/// Empirical MSE with per-trial streams derived from (seed, trial index).
/// Requires trials >= 1000.
McResult empirical_mse(const PrivacyProfile& profile,
                       const Estimator& estimator,
                       const SourceDistribution& dist, std::uint64_t trials,
                       std::uint64_t seed);

/// Brute-force minimizer of mse_affine_at over a log-spaced grid from
/// eps_1/4 to 4*max(eps_m, per-segment stationary points), with the level
/// breakpoints added as grid nodes (the objective is only piecewise smooth,
/// so a kink optimum would otherwise cost first-order grid error). Returns
/// (tau, mse); requires grid_points >= 1000.
std::pair<double, double> grid_oracle_affine(const PrivacyProfile& profile,
                                             std::uint64_t grid_points);

}  // namespace hetdp
