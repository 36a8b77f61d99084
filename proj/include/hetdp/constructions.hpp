#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hetdp/mechanisms.hpp"
#include "hetdp/optimizer.hpp"
#include "hetdp/profile.hpp"

namespace hetdp {

/// One finite level of n1 records at eps1 plus n2 public records: the
/// regime where the threshold estimator is a 2-approximation and the gap
/// is tight near n2 = n1 / (1 + 8/(n1 eps1^2)).
PrivacyProfile make_public_private(std::uint64_t n1, double eps1,
                                   std::uint64_t n2);

/// Equal-revenue construction with m levels: eps_i = 2^-(i-1) and
/// n_i = 2^(i-1), so n_i * eps_i = 1 at every level and eps * n_eps < 2
/// for every threshold. Valid for 2 <= m <= 30.
PrivacyProfile make_equal_revenue(int m);

/// Exact structural match against a make_equal_revenue output.
bool is_equal_revenue(const PrivacyProfile& profile);

/// n-th harmonic number, summed smallest term first.
double harmonic(std::uint64_t n);

/// Threshold selected from the clipped budgets at tau.
struct ThresholdPick {
  double eps_star = 0.0;
  double u_star = 0.0;  // max over j of (n - j + 1) * clipped_j
};

/// Sorts the clipped budgets min(eps_i, tau) ascending (public records
/// participate as value tau), computes u_j = (n - j + 1) * clipped_j and
/// returns the argmax clipped value, ties toward the larger value. The
/// returned threshold satisfies eps* . n_{eps*} >= u* >= s_tau / min{m, H_n}.
ThresholdPick select_threshold_for_tau(const PrivacyProfile& profile,
                                       double tau);

/// One verified inequality. `required` distinguishes the bound that is
/// proven for the profile's regime from informational comparisons.
struct BoundCheck {
  std::string name;
  double bound = 0.0;
  bool lower = false;
  bool required = true;
  bool satisfied = false;
  double margin = 0.0;  // bound - ratio for upper bounds, ratio - bound for lower
};

struct BoundReport {
  std::string profile_summary;
  RiskReport risk;
  std::uint64_t total_count = 0;
  /// Levels counted for the general bound; a public group counts as one.
  std::size_t effective_levels = 0;
  double applicable_bound = 0.0;
  std::optional<double> lower_bound;
  std::vector<BoundCheck> checks;
  bool all_satisfied = false;  // over required checks only
};

/// Computes the threshold/affine ratio and checks every bound that applies:
/// factor 2 for one finite level plus public data, factor 4 for exactly two
/// finite levels without public data, min{(1+log2 n)^2, m^2} always, and
/// ratio >= m^2/5 for recognized equal-revenue instances.
BoundReport verify_bounds(const PrivacyProfile& profile);

/// Random-instance generation for the verification sweeps. Budgets are
/// log-uniform, counts log-uniform, level count uniform.
struct ProfileGenOptions {
  int min_levels = 1;
  int max_levels = 12;
  double eps_lo = 1e-4;
  double eps_hi = 1e2;
  std::uint64_t count_lo = 1;
  std::uint64_t count_hi = 10'000;
  double public_probability = 0.5;
  std::uint64_t public_hi = 1'000;
};

PrivacyProfile random_profile(Rng& rng, const ProfileGenOptions& options = {});

/// Two distinct finite levels with budgets log-uniform in [1e-4, 1e2] and
/// counts log-uniform in [1, 1e6].
PrivacyProfile random_two_level(Rng& rng);

}  // namespace hetdp
