#include "bohr/radii.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

constexpr int kScanPoints = 4096;
constexpr double kBracketWidth = 1e-13;

double rpm_derivative(SymmetryClass c, double r) {
  const int d = c.p - c.m;
  double v = 16.0 * c.p * std::pow(r, 2 * c.p - 1);
  if (d > 0) v += -6.0 * d * std::pow(r, d - 1) + 2.0 * d * std::pow(r, 2 * d - 1);
  return v;
}

// Bisection on a sign change of fn over [lo, hi].
template <class Fn>
std::pair<double, double> bisect(Fn&& fn, double lo, double hi) {
  double flo = fn(lo);
  while (hi - lo > kBracketWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = fn(mid);
    if (fmid == 0.0) return {mid, mid};
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

RadiusResult formula_result(double value, double residual, RadiusMethod method) {
  return RadiusResult{value, value, value, residual, method};
}

// Multiplier max{2^{1/q - 1/2}, 1} shared by the harmonic bounds.
double lp_prefactor(Exponent q) {
  if (q.is_infinite() || q.value() >= 2.0) return 1.0;
  return std::pow(2.0, 1.0 / q.value() - 0.5);
}

void require_unit_interval_exponent(double q) {
  if (!(q >= 1.0 && q <= 2.0)) throw DomainError("exponent must lie in [1,2], got " + std::to_string(q));
}

}  // namespace

SymmetryClass::SymmetryClass(int p_, int m_) : p(p_), m(m_) {
  if (p < 1) throw DomainError("symmetry order p must be >= 1");
  if (m < 0 || m > p) throw DomainError("offset m must satisfy 0 <= m <= p");
}

Exponent::Exponent(double value) : value_(value) {
  if (!(value >= 1.0)) throw DomainError("exponent must be >= 1");
}

std::string_view to_string(RadiusMethod method) {
  switch (method) {
    case RadiusMethod::root_solve: return "root_solve";
    case RadiusMethod::closed_form: return "closed_form";
    case RadiusMethod::bound_formula: return "bound_formula";
  }
  return "unknown";
}

std::optional<RadiusMethod> parse_radius_method(std::string_view text) {
  if (text == "root_solve") return RadiusMethod::root_solve;
  if (text == "closed_form") return RadiusMethod::closed_form;
  if (text == "bound_formula") return RadiusMethod::bound_formula;
  return std::nullopt;
}

double rpm_equation(SymmetryClass c, double r) {
  const int d = c.p - c.m;
  return -6.0 * std::pow(r, d) + std::pow(r, 2 * d) + 8.0 * std::pow(r, 2 * c.p) + 1.0;
}

RadiusResult solve_rpm_numeric(SymmetryClass c) {
  auto fn = [c](double r) { return rpm_equation(c, r); };
  std::vector<double> grid(kScanPoints + 1);
  for (int i = 1; i <= kScanPoints; ++i) grid[i] = fn(static_cast<double>(i) / kScanPoints);

  for (int i = kScanPoints; i >= 2; --i) {
    const double lo = static_cast<double>(i - 1) / kScanPoints;
    const double hi = static_cast<double>(i) / kScanPoints;
    if (grid[i] == 0.0) return RadiusResult{hi, hi, hi, 0.0, RadiusMethod::root_solve};
    if ((grid[i - 1] < 0.0) != (grid[i] < 0.0)) {
      const auto [blo, bhi] = bisect(fn, lo, hi);
      const double value = 0.5 * (blo + bhi);
      return RadiusResult{value, blo, bhi, fn(value), RadiusMethod::root_solve};
    }
  }

  // Tangential root: the rightmost grid-local minimum, refined on f'.
  auto dfn = [c](double r) { return rpm_derivative(c, r); };
  for (int i = kScanPoints - 1; i >= 2; --i) {
    if (!(grid[i] <= grid[i - 1] && grid[i] <= grid[i + 1])) continue;
    const double lo = static_cast<double>(i - 1) / kScanPoints;
    const double hi = static_cast<double>(i + 1) / kScanPoints;
    if ((dfn(lo) < 0.0) == (dfn(hi) < 0.0)) continue;
    const auto [blo, bhi] = bisect(dfn, lo, hi);
    const double value = 0.5 * (blo + bhi);
    const double residual = fn(value);
    if (std::abs(residual) <= 1e-8) return RadiusResult{value, blo, bhi, residual, RadiusMethod::root_solve};
  }
  throw SolverError("no root of the radius equation found for p=" + std::to_string(c.p) +
                    ", m=" + std::to_string(c.m));
}

RadiusResult solve_rpm(SymmetryClass c) {
  if (c.m == 0) return *closed_form_rpm(c);
  return solve_rpm_numeric(c);
}

std::optional<RadiusResult> closed_form_rpm(SymmetryClass c) {
  double value = 0.0;
  if (c.m == 0) {
    value = std::pow(3.0, -1.0 / c.p);
  } else if (c.p == c.m) {
    value = std::pow(2.0, -1.0 / (2.0 * c.m));
  } else if (c.p == 2 * c.m) {
    value = std::pow(solve_rpm_numeric(SymmetryClass(2, 1)).value, 1.0 / c.m);
  } else if (c.p == 3 * c.m) {
    value = std::pow((7.0 + std::sqrt(17.0)) / 16.0, 1.0 / (2.0 * c.m));
  } else {
    return std::nullopt;
  }
  return formula_result(value, rpm_equation(c, value), RadiusMethod::closed_form);
}

double extremal_parameter_a(SymmetryClass c) {
  const double r = solve_rpm(c).value;
  const double rp = std::pow(r, c.p);
  const double a = (1.0 - std::sqrt(1.0 - rp * rp) / std::numbers::sqrt2) / rp;
  return std::clamp(a, 0.0, 1.0);
}

RadiusResult harmonic_r0() {
  const double r = std::tanh(std::numbers::pi / 4.0);
  const double residual = (2.0 / std::numbers::pi) * std::log((1.0 + r) / (1.0 - r)) - 1.0;
  return formula_result(r, residual, RadiusMethod::closed_form);
}

RadiusResult harmonic_rp_a0(Exponent q, double a0_abs) {
  if (!(a0_abs >= 0.0 && a0_abs <= 1.0)) throw DomainError("|a_0| must lie in [0,1]");
  double value = 0.0;
  if (q.is_infinite() || q.value() >= 2.0) {
    value = std::sqrt((1.0 - a0_abs) / 2.0);
  } else {
    const double c = std::pow(2.0, 2.0 / q.value() - 1.0);
    value = std::sqrt((1.0 - a0_abs) / (c + 1.0 + (c - 1.0) * a0_abs));
  }
  const double k = lp_prefactor(q);
  const double residual =
      a0_abs + k * std::sqrt(1.0 - a0_abs * a0_abs) * value / std::sqrt(1.0 - value * value) - 1.0;
  return formula_result(value, residual, RadiusMethod::bound_formula);
}

double threshold_A(double q) {
  require_unit_interval_exponent(q);
  const double c = std::pow(2.0, 2.0 / q - 1.0);
  return (8.0 - c) / (8.0 + c);
}

double threshold_A_upper(double q) {
  require_unit_interval_exponent(q);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double l2 = std::pow(2.0, 2.0 / q) * std::numbers::ln2 * std::numbers::ln2;
  return (pi2 - l2) / (pi2 + l2);
}

RadiusResult odd_harmonic_rho(Exponent q) {
  double value = 0.0;
  if (q.is_infinite() || q.value() >= 2.0) {
    value = std::sqrt((std::sqrt(5.0) - 1.0) / 2.0);
  } else {
    const double s = std::pow(2.0, 2.0 / q.value() - 2.0);
    value = std::sqrt(std::sqrt(s * s + 1.0) - s);
  }
  const double residual = lp_prefactor(q) * value / std::sqrt(1.0 - std::pow(value, 4)) - 1.0;
  return formula_result(value, residual, RadiusMethod::bound_formula);
}

double mobius_self_radius(double a0_abs) {
  if (!(a0_abs >= 0.0 && a0_abs <= 1.0)) throw DomainError("|a_0| must lie in [0,1]");
  return 1.0 / (1.0 + 2.0 * a0_abs);
}

double pair_counterexample_radius(double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError("pair parameter a must be finite and >= 0");
  return 1.0 / (std::sqrt(1.0 + a * a) + a);
}

}  // namespace bohr
