#include "hetdp/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hetdp {

PrivacyProfile make_public_private(std::uint64_t n1, double eps1,
                                   std::uint64_t n2) {
  if (n1 == 0 || n2 == 0) {
    throw std::invalid_argument("both counts must be at least 1");
  }
  return PrivacyProfile({{eps1, n1}}, n2);
}

PrivacyProfile make_equal_revenue(int m) {
  if (m < 2 || m > 30) {
    throw std::invalid_argument("equal-revenue construction requires 2 <= m <= 30");
  }
  std::vector<Level> levels;
  levels.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    levels.push_back({std::ldexp(1.0, -i), std::uint64_t{1} << i});
  }
  return PrivacyProfile(std::move(levels));
}

bool is_equal_revenue(const PrivacyProfile& profile) {
  const std::size_t m = profile.level_count();
  if (m < 2 || profile.public_count() != 0) return false;
  for (std::size_t j = 0; j < m; ++j) {
    const int i = static_cast<int>(m - 1 - j);  // levels ascend, construction descends
    if (profile.levels()[j].epsilon != std::ldexp(1.0, -i)) return false;
    if (profile.levels()[j].count != (std::uint64_t{1} << i)) return false;
  }
  return true;
}

double harmonic(std::uint64_t n) {
  double sum = 0.0;
  for (std::uint64_t k = n; k >= 1; --k) sum += 1.0 / static_cast<double>(k);
  return sum;
}

ThresholdPick select_threshold_for_tau(const PrivacyProfile& profile,
                                       double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("tau must be finite and positive");
  }

  // Blocks of the ascending clipped multiset: every level strictly below
  // tau keeps its own value; levels at or above tau and public records
  // merge into one block of value tau. Within a block u_j is maximal at the
  // block head, so only block heads need to be compared.
  struct Block {
    double value;
    std::uint64_t count;
  };
  std::vector<Block> blocks;
  std::uint64_t at_or_above = profile.public_count();
  for (const Level& level : profile.levels()) {
    if (level.epsilon < tau) {
      blocks.push_back({level.epsilon, level.count});
    } else {
      at_or_above += level.count;
    }
  }
  if (at_or_above > 0) blocks.push_back({tau, at_or_above});

  ThresholdPick pick;
  std::uint64_t suffix = 0;
  for (const Block& block : blocks) suffix += block.count;
  for (const Block& block : blocks) {
    const double u = static_cast<double>(suffix) * block.value;
    if (u >= pick.u_star) {  // >= keeps the largest clipped value on ties
      pick.u_star = u;
      pick.eps_star = block.value;
    }
    suffix -= block.count;
  }
  return pick;
}

namespace {

std::string summarize(const PrivacyProfile& profile) {
  std::ostringstream out;
  out << std::setprecision(12) << "levels=[";
  bool first = true;
  for (const Level& level : profile.levels()) {
    if (!first) out << ",";
    out << level.epsilon << ":" << level.count;
    first = false;
  }
  out << "] public=" << profile.public_count();
  return out.str();
}

constexpr double kBoundSlack = 1e-9;

BoundCheck upper_check(const std::string& name, double bound, double ratio,
                       bool required) {
  return {name, bound, /*lower=*/false, required, ratio <= bound + kBoundSlack,
          bound - ratio};
}

BoundCheck lower_check(const std::string& name, double bound, double ratio,
                       bool required) {
  return {name, bound, /*lower=*/true, required, ratio >= bound - kBoundSlack,
          ratio - bound};
}

}  // namespace

BoundReport verify_bounds(const PrivacyProfile& profile) {
  BoundReport report;
  report.profile_summary = summarize(profile);
  report.risk = ratio_report(profile);
  report.total_count = profile.total_count();
  report.effective_levels =
      profile.level_count() + (profile.public_count() > 0 ? 1 : 0);

  const double ratio = report.risk.ratio;
  const double n = static_cast<double>(report.total_count);
  const double m = static_cast<double>(report.effective_levels);
  const double log_term = 1.0 + std::log2(n);
  const double general = std::min(log_term * log_term, m * m);

  const bool public_private_regime =
      profile.public_count() > 0 && profile.level_count() == 1;
  const bool two_level_regime =
      profile.public_count() == 0 && profile.level_count() == 2;

  if (public_private_regime) {
    report.checks.push_back(
        upper_check("public_private_factor_2", 2.0, ratio, true));
    report.applicable_bound = 2.0;
  } else if (two_level_regime) {
    report.checks.push_back(
        upper_check("two_level_factor_4", 4.0, ratio, true));
    // Informational: two finite levels may beat the public-data factor.
    report.checks.push_back(
        upper_check("public_private_factor_2", 2.0, ratio, false));
    report.applicable_bound = 4.0;
  } else {
    report.applicable_bound = general;
  }
  report.checks.push_back(upper_check("general_bound", general, ratio, true));

  if (is_equal_revenue(profile)) {
    const double lower = m * m / 5.0;
    report.lower_bound = lower;
    report.checks.push_back(
        lower_check("equal_revenue_lower", lower, ratio, true));
  }

  report.all_satisfied = true;
  for (const BoundCheck& check : report.checks) {
    if (check.required && !check.satisfied) report.all_satisfied = false;
  }
  return report;
}

namespace {

double log_uniform(Rng& rng, double lo, double hi) {
  return lo * std::exp(rng.uniform01() * std::log(hi / lo));
}

std::uint64_t log_uniform_count(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  const double value = log_uniform(rng, static_cast<double>(lo),
                                   static_cast<double>(hi));
  const auto rounded = static_cast<std::uint64_t>(std::llround(value));
  return std::clamp(rounded, lo, hi);
}

}  // namespace

PrivacyProfile random_profile(Rng& rng, const ProfileGenOptions& options) {
  const int span = options.max_levels - options.min_levels + 1;
  const int m = options.min_levels +
                static_cast<int>(rng.uniform01() * static_cast<double>(span));
  std::vector<Level> levels;
  levels.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    levels.push_back({log_uniform(rng, options.eps_lo, options.eps_hi),
                      log_uniform_count(rng, options.count_lo, options.count_hi)});
  }
  std::uint64_t public_count = 0;
  if (rng.uniform01() < options.public_probability) {
    public_count = log_uniform_count(rng, 1, options.public_hi);
  }
  return PrivacyProfile(std::move(levels), public_count);
}

PrivacyProfile random_two_level(Rng& rng) {
  double eps1 = log_uniform(rng, 1e-4, 1e2);
  double eps2 = log_uniform(rng, 1e-4, 1e2);
  while (eps2 == eps1) eps2 = log_uniform(rng, 1e-4, 1e2);
  return PrivacyProfile({{eps1, log_uniform_count(rng, 1, 1'000'000)},
                         {eps2, log_uniform_count(rng, 1, 1'000'000)}});
}

}  // namespace hetdp
