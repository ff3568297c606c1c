#include "bohr/serialize.hpp"

#include <cmath>
#include <limits>

#include "bohr/errors.hpp"

namespace bohr {

using nlohmann::json;

namespace {

json complex_list(std::span<const Complex> values) {
  json arr = json::array();
  for (const auto& z : values) arr.push_back(json::array({z.real(), z.imag()}));
  return arr;
}

std::vector<Complex> parse_complex_list(const json& arr) {
  if (!arr.is_array()) throw DomainError("expected an array of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2) throw DomainError("complex entries must be [re, im]");
    out.emplace_back(item[0].get<double>(), item[1].get<double>());
  }
  return out;
}

void check_order(const json& j, std::size_t length) {
  if (j.at("trunc_order").get<long long>() != static_cast<long long>(length) - 1)
    throw DomainError("trunc_order does not match the coefficient count");
}

}  // namespace

json to_json(const PowerSeries& s) {
  return json{{"coeffs", complex_list(s.coeffs())},
              {"trunc_order", s.trunc_order()},
              {"r_max", s.r_max()},
              {"tail_bound", s.tail_bound()}};
}

PowerSeries power_series_from_json(const json& j) {
  auto coeffs = parse_complex_list(j.at("coeffs"));
  check_order(j, coeffs.size());
  return PowerSeries(std::move(coeffs), j.at("r_max").get<double>(),
                     TailModel::constant(j.at("tail_bound").get<double>()));
}

json to_json(const RadiusResult& r) {
  return json{{"value", r.value},
              {"bracket", json::array({r.bracket_lo, r.bracket_hi})},
              {"residual", r.residual},
              {"method", std::string(to_string(r.method))}};
}

RadiusResult radius_result_from_json(const json& j) {
  RadiusResult r;
  r.value = j.at("value").get<double>();
  const auto& br = j.at("bracket");
  if (!br.is_array() || br.size() != 2) throw DomainError("bracket must be [lo, hi]");
  r.bracket_lo = br[0].get<double>();
  r.bracket_hi = br[1].get<double>();
  r.residual = j.at("residual").get<double>();
  const auto method = parse_radius_method(j.at("method").get<std::string>());
  if (!method) throw DomainError("unknown radius method");
  r.method = *method;
  return r;
}

json to_json(const HarmonicCoeffs& hc) {
  return json{{"a", complex_list(hc.a())},
              {"b", complex_list(hc.b())},
              {"pair_mode", hc.pair_mode()},
              {"trunc_order", hc.trunc_order()}};
}

HarmonicCoeffs harmonic_coeffs_from_json(const json& j) {
  auto a = parse_complex_list(j.at("a"));
  auto b = parse_complex_list(j.at("b"));
  check_order(j, a.size());
  return HarmonicCoeffs(std::move(a), std::move(b), j.at("pair_mode").get<bool>(), 1.0);
}

json to_json(const VerificationReport& rep) {
  json j{{"claim_id", rep.claim_id},
         {"samples", rep.samples},
         {"tolerance", rep.tolerance},
         {"expect_violation", rep.expect_violation},
         {"passed", rep.passed()},
         {"seed", rep.seed},
         {"elapsed_seconds", rep.elapsed_seconds}};
  j["worst_slack"] = std::isfinite(rep.worst_slack) ? json(rep.worst_slack) : json(nullptr);
  j["counterexample"] = rep.counterexample ? json::parse(*rep.counterexample) : json(nullptr);
  return j;
}

VerificationReport verification_report_from_json(const json& j) {
  VerificationReport rep;
  rep.claim_id = j.at("claim_id").get<std::string>();
  rep.samples = j.at("samples").get<std::uint64_t>();
  rep.tolerance = j.at("tolerance").get<double>();
  rep.expect_violation = j.at("expect_violation").get<bool>();
  rep.seed = j.at("seed").get<std::uint64_t>();
  rep.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  const auto& ws = j.at("worst_slack");
  rep.worst_slack = ws.is_null() ? -std::numeric_limits<double>::infinity() : ws.get<double>();
  const auto& ce = j.at("counterexample");
  if (!ce.is_null()) rep.counterexample = ce.dump();
  return rep;
}

}  // namespace bohr
