#include "bohr/extremal.hpp"

#include <cmath>
#include <numbers>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

constexpr double kOpenSeriesRmax = 0.99;

// Combined terms supported on odd n and bounded by scale/n; past N they sum
// to at most scale/(N+1) * r^{N+1}/(1 - r^2).
TailModel odd_log_tail(double scale, int N) {
  return TailModel{scale / (N + 1), N + 1, 1.0, 2, 1.0};
}

}  // namespace

PowerSeries analytic_extremal(SymmetryClass c, int N) {
  return mobius_symmetric_expand(extremal_parameter_a(c), c.p, c.m, N);
}

double psi_value(double x, double alpha) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("psi argument must lie in [0,1]");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("psi parameter must lie in (0,1)");
  return x + alpha * (1.0 - x * x) / (1.0 - alpha * x);
}

double psi_argmax(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("psi parameter must lie in (0,1)");
  if (alpha < 1.0 / 3.0) return 1.0;
  const double x1 = (1.0 - std::sqrt(1.0 - alpha * alpha) / std::numbers::sqrt2) / alpha;
  return std::min(x1, 1.0);
}

double closed_form_majorant(SymmetryClass c, double a, double r) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("Moebius parameter a must lie in [0,1]");
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("radius must lie in [0,1]");
  const double rp = std::pow(r, c.p);
  if (!(a * rp < 1.0)) throw DomainError("closed-form majorant requires a r^p < 1");
  return std::pow(r, c.m) * (a + rp * (1.0 - a * a) / (1.0 - rp * a));
}

HarmonicCoeffs abu_example(double mu, int N) {
  if (N < 1) throw DomainError("truncation order must be >= 1");
  const std::size_t n = static_cast<std::size_t>(N) + 1;
  std::vector<Complex> a(n), b(n);
  const double s = std::sin(mu);
  a[0] = Complex{0.0, std::cos(mu)};
  for (int k = 1; k <= N; k += 2) {
    const Complex c{0.0, -2.0 * s / (std::numbers::pi * k)};
    a[k] = c;
    b[k] = c;
  }
  return HarmonicCoeffs(std::move(a), std::move(b), false, kOpenSeriesRmax,
                        {odd_log_tail(4.0 * std::abs(s) / std::numbers::pi, N)});
}

HarmonicCoeffs harmonic_sharp_f0(double alpha, double beta, int N) {
  if (N < 1) throw DomainError("truncation order must be >= 1");
  const std::size_t n = static_cast<std::size_t>(N) + 1;
  std::vector<Complex> a(n), b(n);
  for (int k = 1; k <= N; k += 2) {
    const double mod = 2.0 / (std::numbers::pi * k);
    // -i mod e^{i(alpha + k beta)} and -i mod e^{i(k beta - alpha)}
    a[k] = Complex{0.0, -1.0} * std::polar(mod, alpha + k * beta);
    b[k] = Complex{0.0, -1.0} * std::polar(mod, k * beta - alpha);
  }
  return HarmonicCoeffs(std::move(a), std::move(b), false, kOpenSeriesRmax,
                        {odd_log_tail(4.0 / std::numbers::pi, N)});
}

std::pair<PowerSeries, PowerSeries> pair_counterexample(double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError("pair parameter a must be finite and >= 0");
  const double d = 2.0 * std::sqrt(1.0 + a * a);
  PowerSeries h({Complex{a / d}, Complex{1.0 / d}}, 1.0);
  PowerSeries g({Complex{-a / d}, Complex{1.0 / d}}, 1.0);
  return {std::move(h), std::move(g)};
}

PowerSeries mobius_a0_series(double a0, int N) {
  if (!(a0 >= 0.0 && a0 < 1.0)) throw DomainError("a0 must lie in [0,1)");
  if (N < 1) throw DomainError("truncation order must be >= 1");
  std::vector<Complex> c(static_cast<std::size_t>(N) + 1);
  c[0] = a0;
  const double lead = 1.0 - a0 * a0;
  double geom = 1.0;  // (-a0)^{k-1}
  for (int k = 1; k <= N; ++k) {
    c[k] = lead * geom;
    geom *= -a0;
  }
  const TailModel tail{lead * std::pow(a0, N), N + 1, a0, 1, 1.0};
  return PowerSeries(std::move(c), 1.0, tail);
}

PowerSeries phi_alpha(int p, int N, double alpha) {
  if (p < 1) throw DomainError("symmetry order p must be >= 1");
  const auto base = mobius_symmetric_expand(alpha, p, p, N);
  std::vector<Complex> c(base.coeffs().begin(), base.coeffs().end());
  for (auto& x : c) x = -x;
  return PowerSeries(std::move(c), base.r_max(), base.tail());
}

}  // namespace bohr
