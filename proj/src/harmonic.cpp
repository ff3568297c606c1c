#include "bohr/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

Complex horner(std::span<const Complex> c, Complex z) {
  Complex acc{};
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

std::vector<Complex> padded(std::span<const Complex> c, std::size_t n) {
  std::vector<Complex> out(c.begin(), c.end());
  out.resize(n, Complex{});
  return out;
}

std::vector<double> combined_error(const PowerSeries& h, const PowerSeries& g, std::size_t n) {
  if (h.coeff_error().empty() && g.coeff_error().empty()) return {};
  std::vector<double> err(n, 0.0);
  for (std::size_t k = 0; k < h.coeff_error().size(); ++k) err[k] += h.coeff_error()[k];
  for (std::size_t k = 0; k < g.coeff_error().size(); ++k) err[k] += g.coeff_error()[k];
  return err;
}

HarmonicCoeffs from_parts(const PowerSeries& h, const PowerSeries& g, bool pair_mode) {
  const std::size_t n = std::max(h.coeffs().size(), g.coeffs().size());
  return HarmonicCoeffs(padded(h.coeffs(), n), padded(g.coeffs(), n), pair_mode,
                        std::min(h.r_max(), g.r_max()), {h.tail(), g.tail()},
                        combined_error(h, g, n));
}

double weighted_sum(const HarmonicCoeffs& hc, Exponent q, double r, std::size_t first) {
  if (!(r >= 0.0 && r <= hc.r_max())) throw DomainError("evaluation radius outside [0, r_max]");
  const auto a = hc.a();
  const auto b = hc.b();
  const auto err = hc.term_error();
  double acc = 0.0;
  for (std::size_t k = a.size(); k-- > first;) {
    double term = lp_combine(a[k], b[k], q);
    if (!err.empty()) term += err[k];
    acc = acc * r + term;
  }
  if (first > 0) acc *= std::pow(r, static_cast<double>(first));
  return acc + hc.tail_at(r);
}

}  // namespace

HarmonicCoeffs::HarmonicCoeffs(std::vector<Complex> a, std::vector<Complex> b, bool pair_mode,
                               double r_max, std::vector<TailModel> tails,
                               std::vector<double> term_error)
    : a_(std::move(a)),
      b_(std::move(b)),
      pair_mode_(pair_mode),
      r_max_(r_max),
      tails_(std::move(tails)),
      term_error_(std::move(term_error)) {
  if (a_.empty() || a_.size() != b_.size())
    throw DomainError("analytic and co-analytic parts need equal, nonzero length");
  if (!(r_max_ > 0.0 && r_max_ <= 1.0)) throw DomainError("r_max must lie in (0,1]");
  if (!pair_mode_ && b_[0] != Complex{}) throw PreconditionError("harmonic mode requires b_0 = 0");
  if (!term_error_.empty() && term_error_.size() != a_.size())
    throw DomainError("term error bars must match the coefficient count");
  const double t = tail_bound();
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("tail bound must be finite at r_max");
}

HarmonicCoeffs HarmonicCoeffs::analytic(const PowerSeries& h) {
  return from_parts(h, PowerSeries({Complex{}}, 1.0), false);
}

HarmonicCoeffs HarmonicCoeffs::harmonic(const PowerSeries& h, const PowerSeries& g) {
  if (g[0] != Complex{}) throw PreconditionError("co-analytic part must vanish at the origin");
  return from_parts(h, g, false);
}

HarmonicCoeffs HarmonicCoeffs::pair(const PowerSeries& h, const PowerSeries& g) {
  return from_parts(h, g, true);
}

double HarmonicCoeffs::tail_at(double r) const {
  double t = 0.0;
  for (const auto& tail : tails_) t += tail.at(r);
  return t;
}

Complex HarmonicCoeffs::h_at(Complex z) const { return horner(a_, z); }
Complex HarmonicCoeffs::g_at(Complex z) const { return horner(b_, z); }
Complex HarmonicCoeffs::evaluate(Complex z) const { return h_at(z) + std::conj(g_at(z)); }

double lp_combine(Complex x, Complex y, Exponent q) {
  const double u = std::abs(x);
  const double v = std::abs(y);
  const double hi = std::max(u, v);
  if (q.is_infinite() || hi == 0.0) return hi;
  const double lo = std::min(u, v);
  if (q.value() == 1.0) return u + v;
  if (q.value() == 2.0) return std::hypot(u, v);
  return hi * std::pow(1.0 + std::pow(lo / hi, q.value()), 1.0 / q.value());
}

double p_bohr_sum(const HarmonicCoeffs& hc, Exponent q, double r) { return weighted_sum(hc, q, r, 0); }

double p_bohr_sum_nonconstant(const HarmonicCoeffs& hc, Exponent q, double r) {
  return weighted_sum(hc, q, r, 1);
}

double l2_combined_sum(const HarmonicCoeffs& hc, double r) { return weighted_sum(hc, Exponent(2.0), r, 0); }

double pair_l1_sum(const HarmonicCoeffs& hc, double r) {
  if (!hc.pair_mode()) throw PreconditionError("pair_l1_sum expects a pair (h, g)");
  if (hc.b()[0] != Complex{}) throw PreconditionError("pair_l1_sum requires g(0) = 0");
  return weighted_sum(hc, Exponent(1.0), r, 0);
}

PowerSeries kernel_K_coeffs(Complex lambda, int N) {
  if (!(std::abs(lambda) < 1.0)) throw DomainError("kernel base point must satisfy |lambda| < 1");
  if (N < 0) throw DomainError("truncation order must be nonnegative");
  const Complex xi = std::polar(1.0, -std::numbers::pi * lambda.imag());
  std::vector<Complex> c(static_cast<std::size_t>(N) + 1);
  c[0] = lambda;
  Complex power{1.0, 0.0};  // (-xi)^k
  for (int k = 1; k <= N; ++k) {
    power *= -xi;
    c[k] = (2.0 / std::numbers::pi) * (1.0 - power) / static_cast<double>(k);
  }
  // |c_k| <= 4/(pi k) <= 4/(pi (N+1)) past the cut.
  const TailModel tail{4.0 / (std::numbers::pi * (N + 1)), N + 1, 1.0, 1, 1.0};
  return PowerSeries(std::move(c), 0.99, tail);
}

double coeff_sum_bound(Exponent q, double a0_abs, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0,1)");
  if (!(a0_abs >= 0.0 && a0_abs <= 1.0)) throw DomainError("|a_0| must lie in [0,1]");
  const double pref = (q.is_infinite() || q.value() >= 2.0) ? 1.0 : std::pow(2.0, 1.0 / q.value() - 0.5);
  return pref * std::sqrt(1.0 - a0_abs * a0_abs) * r / std::sqrt(1.0 - r * r);
}

double odd_coeff_sum_bound(Exponent q, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0,1)");
  const double pref = (q.is_infinite() || q.value() >= 2.0) ? 1.0 : std::pow(2.0, 1.0 / q.value() - 0.5);
  return pref * r / std::sqrt(1.0 - std::pow(r, 4));
}

double subordination_l1_bound(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0,1)");
  return std::numbers::sqrt2 * r / std::sqrt(1.0 - r * r);
}

RadiusResult p_bohr_radius_search(const HarmonicCoeffs& hc, Exponent q) {
  auto excess = [&](double r) { return p_bohr_sum(hc, q, r) - 1.0; };
  const double at_zero = excess(0.0);
  if (at_zero > 0.0) return RadiusResult{0.0, 0.0, 0.0, at_zero, RadiusMethod::root_solve};
  const double at_max = excess(hc.r_max());
  if (at_max <= 0.0) {
    const double r = hc.r_max();
    return RadiusResult{r, r, r, at_max, RadiusMethod::root_solve};
  }
  double lo = 0.0;
  double hi = hc.r_max();
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (excess(mid) <= 0.0 ? lo : hi) = mid;
  }
  return RadiusResult{lo, lo, hi, excess(lo), RadiusMethod::root_solve};
}

}  // namespace bohr
