#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hetdp/constructions.hpp"
#include "hetdp/mechanisms.hpp"
#include "hetdp/monte_carlo.hpp"
#include "hetdp/optimizer.hpp"
#include "hetdp/profile.hpp"

namespace hetdp {

/// Shortest round-trip decimal text for a double; infinities become "inf".
std::string format_number(double value);

/// {"levels": [[eps, count], ...], "public_count": k}
nlohmann::json profile_to_json(const PrivacyProfile& profile);
PrivacyProfile profile_from_json(const nlohmann::json& j);
PrivacyProfile profile_from_json_string(std::string_view text);

/// One budget per line; the token "inf" marks a public record. Lines are
/// aggregated into a profile.
PrivacyProfile profile_from_budget_csv(std::istream& in);

/// Compact command-line grammar "eps:count[,eps:count...]".
PrivacyProfile profile_from_levels_spec(std::string_view spec,
                                        std::uint64_t public_count);

/// Flat object {eps_star, mse_thr, tau_star, mse_aff, ratio}; infinite
/// values are serialized as the string "inf".
nlohmann::json risk_report_to_json(const RiskReport& report);

nlohmann::json affine_plan_to_json(const AffinePlan& plan);
nlohmann::json mc_result_to_json(const McResult& result);
nlohmann::json bound_report_to_json(const BoundReport& report);

/// Two columns "value,epsilon" per line, "inf" for public records.
Dataset dataset_from_csv(std::istream& in);
void dataset_to_csv(const Dataset& data, std::ostream& out);

}  // namespace hetdp
