#pragma once

#include <json.hpp>

#include "cliffpoint/euler_maclaurin.hpp"
#include "cliffpoint/prime_ap.hpp"
#include "cliffpoint/sinc_identity.hpp"
#include "cliffpoint/towers.hpp"

namespace cliffpoint {

using Json = nlohmann::ordered_json;

/// Canonical real serialization: scientific string, 32 significant digits
/// (or fewer for narrow contexts). Big integers become decimal strings.
std::string json_real(const BigReal& v);
std::string json_int(const BigInt& z);

Json to_json(const CrossingResult& r);
Json to_json(const IdentityReport& r);
Json to_json(const MertensEstimate& r);
Json to_json(const CutoffEstimate& r);
Json to_json(const TowerReal& t);
Json to_json(const SkewesReport& r);
Json to_json(const Section8Report& r);
Json to_json(const LemmasReport& r);

/// The stable top-level envelope every CLI command emits.
Json report_envelope(const std::string& command, Json inputs, Json outputs, int precision_digits,
                     bool rigorous);

} // namespace cliffpoint
