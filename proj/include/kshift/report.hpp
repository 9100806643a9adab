#pragma once

#include <string_view>

#include <json.hpp>

#include "kshift/campaigns.hpp"
#include "kshift/findim.hpp"
#include "kshift/growth.hpp"
#include "kshift/krein.hpp"
#include "kshift/shift_ops.hpp"

// JSON serialization of every report type. Key order is fixed and doubles
// are written in shortest round-trip form, so equal inputs give equal bytes.
namespace kshift::report {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "krein-shift/1";

/// A finite double, or null.
Json number(double value);

Json to_json(const NormCertificate& cert);
Json to_json(const SpecRadEstimate& est);
Json to_json(const GrowthWitness& witness);
Json to_json(const GrowthVerdict& verdict);
Json to_json(const AllFourReport& report);
Json to_json(const IdentityResult& result);
Json to_json(const BatteryReport& report);
Json to_json(const JUnitarityReport& report);
Json to_json(const FlipReport& report);
Json to_json(const ShiftBoundReport& report);
Json to_json(const FlipCampaign& campaign);
Json to_json(const KreinCampaign& campaign);
Json to_json(const RadiusCampaign& campaign);
Json to_json(const DirectSumRadius& radius);
Json to_json(const TheoremCampaign& campaign);

}  // namespace kshift::report
