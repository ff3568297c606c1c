#pragma once

#include "bohr/harmonic.hpp"
#include "bohr/radii.hpp"
#include "bohr/series.hpp"
#include "bohr/verify.hpp"
#include "json.hpp"

namespace bohr {

// { "coeffs": [[re, im], ...], "trunc_order": N, "r_max": x, "tail_bound": t }
[[nodiscard]] nlohmann::json to_json(const PowerSeries& s);
/// The tail model of the result is the constant tail_bound.
[[nodiscard]] PowerSeries power_series_from_json(const nlohmann::json& j);

// { "value": x, "bracket": [lo, hi], "residual": e, "method": "..." }
[[nodiscard]] nlohmann::json to_json(const RadiusResult& r);
[[nodiscard]] RadiusResult radius_result_from_json(const nlohmann::json& j);

// { "a": [[re, im], ...], "b": [[re, im], ...], "pair_mode": bool, "trunc_order": N }
[[nodiscard]] nlohmann::json to_json(const HarmonicCoeffs& hc);
[[nodiscard]] HarmonicCoeffs harmonic_coeffs_from_json(const nlohmann::json& j);

/// worst_slack of an empty report is written as null.
[[nodiscard]] nlohmann::json to_json(const VerificationReport& rep);
[[nodiscard]] VerificationReport verification_report_from_json(const nlohmann::json& j);

}  // namespace bohr
