#include "hetdp/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hetdp {

PrivacyProfile::PrivacyProfile(std::vector<Level> levels,
                               std::uint64_t public_count)
    : levels_(std::move(levels)), public_count_(public_count) {
  for (const Level& level : levels_) {
    if (!(level.epsilon > 0.0) || !std::isfinite(level.epsilon)) {
      throw std::invalid_argument(
          "levels: epsilon must be finite and positive");
    }
    if (level.count == 0) {
      throw std::invalid_argument("levels: count must be at least 1");
    }
  }
  std::sort(levels_.begin(), levels_.end(),
            [](const Level& a, const Level& b) { return a.epsilon < b.epsilon; });
  // Merge duplicate budgets so callers need not canonicalize.
  std::vector<Level> merged;
  merged.reserve(levels_.size());
  for (const Level& level : levels_) {
    if (!merged.empty() && merged.back().epsilon == level.epsilon) {
      merged.back().count += level.count;
    } else {
      merged.push_back(level);
    }
  }
  levels_ = std::move(merged);

  total_count_ = public_count_;
  for (const Level& level : levels_) total_count_ += level.count;
  if (total_count_ == 0) {
    throw std::invalid_argument("profile: at least one record is required");
  }
}

double PrivacyProfile::min_epsilon() const {
  if (levels_.empty()) throw std::logic_error("profile has no finite levels");
  return levels_.front().epsilon;
}

double PrivacyProfile::max_epsilon() const {
  if (levels_.empty()) throw std::logic_error("profile has no finite levels");
  return levels_.back().epsilon;
}

PrivacyProfile PrivacyProfile::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("scale factor must be finite and positive");
  }
  std::vector<Level> scaled_levels = levels_;
  for (Level& level : scaled_levels) level.epsilon *= factor;
  return PrivacyProfile(std::move(scaled_levels), public_count_);
}

std::vector<double> PrivacyProfile::expand_budgets() const {
  std::vector<double> budgets;
  budgets.reserve(total_count_);
  for (const Level& level : levels_) {
    budgets.insert(budgets.end(), level.count, level.epsilon);
  }
  budgets.insert(budgets.end(), public_count_, kInfinity);
  return budgets;
}

std::uint64_t n_at_threshold(const PrivacyProfile& profile, double eps) {
  if (!(eps > 0.0)) return 0;
  if (std::isinf(eps)) return profile.public_count();
  std::uint64_t n = profile.public_count();
  for (const Level& level : profile.levels()) {
    if (level.epsilon >= eps) n += level.count;
  }
  return n;
}

ClippedStats clipped_sums(const PrivacyProfile& profile, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("tau must be finite and positive");
  }
  ClippedStats stats;
  stats.tau = tau;
  for (const Level& level : profile.levels()) {
    const double clipped = std::min(level.epsilon, tau);
    const double count = static_cast<double>(level.count);
    stats.s_tau += count * clipped;
    stats.q_tau += count * clipped * clipped;
  }
  const double pub = static_cast<double>(profile.public_count());
  stats.s_tau += pub * tau;
  stats.q_tau += pub * tau * tau;
  return stats;
}

double mse_threshold_at(const PrivacyProfile& profile, double eps) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("eps must be positive (or +inf)");
  }
  const std::uint64_t retained = n_at_threshold(profile, eps);
  if (retained == 0) return kInfinity;
  const double n = static_cast<double>(retained);
  if (std::isinf(eps)) return 0.25 / n;  // public mean, no noise
  return 0.25 / n + 2.0 / ((eps * n) * (eps * n));
}

double mse_affine_at(const PrivacyProfile& profile, double tau) {
  const ClippedStats stats = clipped_sums(profile, tau);
  if (!(stats.s_tau > 0.0)) return kInfinity;
  return (stats.q_tau + 8.0) / (4.0 * stats.s_tau * stats.s_tau);
}

}  // namespace hetdp
