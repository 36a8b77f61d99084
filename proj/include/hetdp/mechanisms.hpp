#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hetdp/optimizer.hpp"
#include "hetdp/profile.hpp"

namespace hetdp {

/// Counter-based deterministic generator (SplitMix64 stream). The i-th
/// output is a pure function of (seed, i), so a fixed seed reproduces the
/// exact sample stream and independent streams can be derived per trial
/// without sharing mutable state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() {
    return mix64(seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL);
  }

  /// Uniform on the open interval (-1/2, 1/2); never hits the endpoints.
  double uniform_symmetric() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53 - 0.5;
  }

  /// Uniform on [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool coin() { return (next_u64() >> 63) != 0; }

  /// Independent stream for (seed, stream_index); unaffected by how many
  /// values this instance has produced.
  Rng derived(std::uint64_t stream_index) const {
    return Rng(mix64(seed_ ^ mix64(stream_index + 0xD1B54A32D192ED03ULL)));
  }

  std::uint64_t seed() const noexcept { return seed_; }

  static std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t counter_ = 0;
};

/// Laplace quantile at u in (-1/2, 1/2): x = -scale * sign(u) * ln(1 - 2|u|).
/// Zero-mean, variance 2 * scale^2.
double laplace_inverse_cdf(double scale, double u);

/// One Laplace draw through the inverse CDF. `rng` only needs a
/// uniform_symmetric() member, so tests can substitute a stub stream.
template <typename R>
double sample_laplace(double scale, R& rng) {
  return laplace_inverse_cdf(scale, rng.uniform_symmetric());
}

/// A record: value in [-1/2, 1/2] with its privacy budget (+inf = public).
struct Record {
  double value = 0.0;
  double epsilon = 0.0;
};

/// Validated collection of records. Values outside [-1/2, 1/2] or
/// non-positive budgets are rejected at construction rather than clamped.
class Dataset {
 public:
  explicit Dataset(std::vector<Record> records);

  const std::vector<Record>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }

 private:
  std::vector<Record> records_;
};

namespace detail {
/// (subgroup mean, noise scale) of the threshold mechanism at eps.
/// Throws std::invalid_argument when no record has budget >= eps.
std::pair<double, double> threshold_mean_and_scale(const Dataset& data,
                                                   double eps);
/// Weighted mean under the plan; validates that every budget present in
/// the data is covered and that the weights over the dataset sum to one.
double affine_weighted_mean(const Dataset& data, const AffinePlan& plan);
}  // namespace detail

/// Threshold mechanism: mean of records with budget >= eps plus
/// Lap(1 / (n_eps * eps)) noise. For eps = +inf only public records are
/// averaged and no noise is added.
template <typename R>
double threshold_mechanism(const Dataset& data, double eps, R& rng) {
  const auto [mean, scale] = detail::threshold_mean_and_scale(data, eps);
  return scale > 0.0 ? mean + sample_laplace(scale, rng) : mean;
}

/// Affine mechanism: sum of plan weights times values plus Lap(eta) noise.
template <typename R>
double affine_mechanism(const Dataset& data, const AffinePlan& plan, R& rng) {
  const double mean = detail::affine_weighted_mean(data, plan);
  return plan.eta > 0.0 ? mean + sample_laplace(plan.eta, rng) : mean;
}

}  // namespace hetdp
