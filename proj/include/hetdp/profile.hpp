#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace hetdp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// One group of records sharing a finite privacy budget.
struct Level {
  double epsilon = 0.0;
  std::uint64_t count = 0;
};

/// Multiset of per-record privacy budgets, stored as strictly increasing
/// (epsilon, count) levels plus the number of public records (budget +inf).
///
/// Construction accepts levels in any order, merges duplicate epsilons and
/// validates that every epsilon is finite and positive, every count is
/// nonzero, and the profile holds at least one record overall. Instances
/// are immutable afterwards.
class PrivacyProfile {
 public:
  explicit PrivacyProfile(std::vector<Level> levels,
                          std::uint64_t public_count = 0);

  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::uint64_t public_count() const noexcept { return public_count_; }
  std::uint64_t total_count() const noexcept { return total_count_; }

  /// Number of distinct finite levels (m).
  std::size_t level_count() const noexcept { return levels_.size(); }

  /// Smallest / largest finite budget. Requires at least one level.
  double min_epsilon() const;
  double max_epsilon() const;

  /// Copy with every finite budget multiplied by `factor` (> 0).
  PrivacyProfile scaled(double factor) const;

  /// Per-record budgets, levels in ascending order, then +inf for each
  /// public record.
  std::vector<double> expand_budgets() const;

 private:
  std::vector<Level> levels_;
  std::uint64_t public_count_ = 0;
  std::uint64_t total_count_ = 0;
};

/// Clipped-budget sums s_tau = sum_i min(eps_i, tau) and
/// q_tau = sum_i min(eps_i, tau)^2 over all records (public records clip
/// to tau exactly).
struct ClippedStats {
  double s_tau = 0.0;
  double q_tau = 0.0;
  double tau = 0.0;
};

/// Count of records (public included) whose budget is >= eps. eps may be
/// +inf, selecting exactly the public records. Degenerate eps (<= 0, NaN)
/// yields 0.
std::uint64_t n_at_threshold(const PrivacyProfile& profile, double eps);

/// Clipped sums at tau. Throws std::invalid_argument unless tau is finite
/// and positive.
ClippedStats clipped_sums(const PrivacyProfile& profile, double tau);

/// Worst-case mean-squared error of the threshold estimator pinned at a
/// fixed eps: 1/(4 n_eps) + 2/(eps^2 n_eps^2). For eps = +inf only public
/// records are retained and no noise is needed, giving 1/(4 n_inf).
/// Returns +inf when no record qualifies.
double mse_threshold_at(const PrivacyProfile& profile, double eps);

/// Worst-case mean-squared error of the clipped-weight affine estimator at
/// a fixed clipping threshold tau: (q_tau + 8) / (4 s_tau^2).
double mse_affine_at(const PrivacyProfile& profile, double tau);

}  // namespace hetdp
