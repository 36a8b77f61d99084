#include "hetdp/mechanisms.hpp"

#include <cmath>
#include <utility>

namespace hetdp {

double laplace_inverse_cdf(double scale, double u) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("laplace scale must be finite and positive");
  }
  if (!(std::fabs(u) < 0.5)) {
    throw std::invalid_argument("u must lie in (-1/2, 1/2)");
  }
  if (u == 0.0) return 0.0;
  const double sign = u > 0.0 ? 1.0 : -1.0;
  return -scale * sign * std::log(1.0 - 2.0 * std::fabs(u));
}

Dataset::Dataset(std::vector<Record> records) : records_(std::move(records)) {
  for (const Record& record : records_) {
    if (!(record.value >= -0.5) || !(record.value <= 0.5)) {
      throw std::invalid_argument("record value outside [-1/2, 1/2]");
    }
    if (!(record.epsilon > 0.0)) {
      throw std::invalid_argument("record budget must be positive");
    }
  }
}

namespace detail {

std::pair<double, double> threshold_mean_and_scale(const Dataset& data,
                                                   double eps) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("threshold eps must be positive (or +inf)");
  }
  double sum = 0.0;
  std::uint64_t retained = 0;
  for (const Record& record : data.records()) {
    if (record.epsilon >= eps) {
      sum += record.value;
      ++retained;
    }
  }
  if (retained == 0) {
    throw std::invalid_argument("no record satisfies the threshold");
  }
  const double n = static_cast<double>(retained);
  const double scale = std::isinf(eps) ? 0.0 : 1.0 / (n * eps);
  return {sum / n, scale};
}

double affine_weighted_mean(const Dataset& data, const AffinePlan& plan) {
  double mean = 0.0;
  double total_weight = 0.0;
  for (const Record& record : data.records()) {
    const double w = plan.weight_for(record.epsilon);
    mean += w * record.value;
    total_weight += w;
  }
  if (std::fabs(total_weight - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "plan weights do not sum to one over this dataset");
  }
  return mean;
}

}  // namespace detail

}  // namespace hetdp
