#include "bohr/series.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

double TailModel::at(double r) const {
  if (scale == 0.0) return 0.0;
  const double denom = 1.0 - ratio * std::pow(r, step);
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return scale * std::pow(r, start) / std::pow(denom, power);
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs, double r_max, TailModel tail,
                         std::vector<double> coeff_error)
    : coeffs_(std::move(coeffs)), r_max_(r_max), tail_(tail), coeff_error_(std::move(coeff_error)) {
  if (coeffs_.empty()) throw DomainError("PowerSeries needs at least one coefficient");
  if (!(r_max_ > 0.0 && r_max_ <= 1.0)) throw DomainError("PowerSeries r_max must lie in (0,1]");
  if (!coeff_error_.empty() && coeff_error_.size() != coeffs_.size())
    throw DomainError("coefficient error bars must match the coefficient count");
  const double t = tail_bound();
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("tail bound must be finite and nonnegative at r_max");
}

Complex PowerSeries::evaluate(Complex z) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double majorant_partial(const PowerSeries& s, double r) {
  double acc = 0.0;
  const auto c = s.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * r + std::abs(c[k]);
  return acc;
}

double majorant_sum(const PowerSeries& s, double r) {
  if (!(r >= 0.0 && r <= s.r_max()))
    throw DomainError("majorant radius " + std::to_string(r) + " outside [0, r_max]");
  double acc = majorant_partial(s, r);
  const auto err = s.coeff_error();
  if (!err.empty()) {
    double e = 0.0;
    for (std::size_t k = err.size(); k-- > 0;) e = e * r + err[k];
    acc += e;
  }
  return acc + s.tail_at(r);
}

PowerSeries mobius_symmetric_expand(double a, int p, int m, int N) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("Moebius parameter a must lie in [0,1]");
  if (p < 1 || m < 0 || m > p) throw DomainError("symmetry class requires p >= 1 and 0 <= m <= p");
  if (N < m) throw DomainError("truncation order must be at least m");

  std::vector<Complex> c(static_cast<std::size_t>(N) + 1, Complex{0.0, 0.0});
  c[m] = -a;
  const double lead = 1.0 - a * a;
  double geom = 1.0;  // a^{k-1}
  int last_k = 0;
  for (int k = 1; p * k + m <= N; ++k) {
    c[p * k + m] = lead * geom;
    geom *= a;
    last_k = k;
  }
  // geom == a^{last_k} here.
  TailModel tail{lead * geom, p * last_k + p + m, a, p, 1.0};
  return PowerSeries(std::move(c), 1.0, tail);
}

namespace {

std::mutex& fftw_planner_mutex() {
  static std::mutex mu;
  return mu;
}

// Forward DFT X_k = sum_j x_j e^{-2 pi i jk/M}. Buffers come from fftw_malloc
// so every call sees the same alignment and therefore the same codelets.
std::vector<Complex> forward_dft(std::span<const Complex> values) {
  const int M = static_cast<int>(values.size());
  auto* in = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * M));
  auto* out = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * M));
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(M, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  for (int j = 0; j < M; ++j) {
    in[j][0] = values[j].real();
    in[j][1] = values[j].imag();
  }
  fftw_execute(plan);
  std::vector<Complex> result(M);
  for (int k = 0; k < M; ++k) result[k] = Complex{out[k][0], out[k][1]};
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(in);
  fftw_free(out);
  return result;
}

}  // namespace

PowerSeries coeffs_from_boundary_samples(std::span<const Complex> values, double rho, int N,
                                         double r_max) {
  const auto M = static_cast<long long>(values.size());
  if (N < 0) throw ConfigError("truncation order must be nonnegative");
  if (M < 4LL * std::max(N, 1)) throw ConfigError("need at least 4N boundary samples");
  if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("sampling radius must lie in (0,1)");
  if (!(r_max > 0.0 && r_max < 1.0)) throw ConfigError("r_max must lie in (0,1)");

  const auto spectrum = forward_dft(values);
  std::vector<Complex> c(static_cast<std::size_t>(N) + 1);
  std::vector<double> err(static_cast<std::size_t>(N) + 1);
  const double rho_M = std::pow(rho, static_cast<double>(M));
  for (int k = 0; k <= N; ++k) {
    const double rho_k = std::pow(rho, k);
    c[k] = spectrum[k] / (static_cast<double>(M) * rho_k);
    err[k] = std::pow(rho, static_cast<double>(M - k)) / (1.0 - rho_M);
  }
  return PowerSeries(std::move(c), r_max, TailModel::unit_class(N + 1), std::move(err));
}

PowerSeries coeffs_from_boundary_samples(std::span<const Complex> values, double rho, int N) {
  return coeffs_from_boundary_samples(values, rho, N, rho);
}

double weighted_coeff_l2(const PowerSeries& s, double R, int p) {
  if (!(R > 0.0 && R <= 1.0)) throw DomainError("weight radius R must lie in (0,1]");
  if (p < 1) throw DomainError("symmetry order p must be >= 1");
  const double w = std::pow(R, p);
  double acc = 0.0;
  double wk = 1.0;
  const auto c = s.coeffs();
  for (std::size_t k = 1; k < c.size(); ++k) {
    wk *= w;
    acc += std::norm(c[k]) * wk;
  }
  return acc;
}

double weighted_coeff_l2_bound(const PowerSeries& s, double R, int p) {
  if (!(R > 0.0 && R <= 1.0)) throw DomainError("weight radius R must lie in (0,1]");
  if (p < 1) throw DomainError("symmetry order p must be >= 1");
  const double b0 = std::norm(s[0]);
  if (b0 >= 1.0) return 0.0;
  const double w = std::pow(R, p);
  const double one_minus = 1.0 - b0;
  return w * one_minus * one_minus / (1.0 - b0 * w);
}

}  // namespace bohr
