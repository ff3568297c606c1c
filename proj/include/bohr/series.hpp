#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bohr {

using Complex = std::complex<double>;

/// Closed-form bound on the discarded part of a truncated series:
///
///   tail(r) = scale * r^start / (1 - ratio * r^step)^power
///
/// Covers the geometric tails of Moebius expansions, the class bound
/// sum_{k>N} r^k, and the Parseval/Cauchy-Schwarz tail of harmonic sums.
/// A default-constructed model is identically zero.
struct TailModel {
  double scale = 0.0;
  int start = 0;
  double ratio = 0.0;
  int step = 1;
  double power = 1.0;

  [[nodiscard]] double at(double r) const;

  static TailModel zero() { return {}; }
  static TailModel constant(double value) { return {value, 0, 0.0, 1, 1.0}; }
  // sum_{k >= first} r^k, valid whenever every dropped |c_k| <= 1.
  static TailModel unit_class(int first) { return {1.0, first, 1.0, 1, 1.0}; }
};

/// Truncated power series sum_{k=0}^{N} c_k z^k with a rigorous bound on
/// what was dropped.
///
/// `coeff_error[k]`, when present, bounds |c_k - exact_k| (aliasing from
/// boundary sampling). `tail_bound` is `tail.at(r_max)` and is what the JSON
/// form carries; evaluation routines use `tail.at(r)` at the actual radius.
class PowerSeries {
 public:
  PowerSeries() = default;
  PowerSeries(std::vector<Complex> coeffs, double r_max, TailModel tail = {},
              std::vector<double> coeff_error = {});

  [[nodiscard]] std::span<const Complex> coeffs() const { return coeffs_; }
  [[nodiscard]] const Complex& operator[](std::size_t k) const { return coeffs_[k]; }
  [[nodiscard]] int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] double r_max() const { return r_max_; }
  [[nodiscard]] const TailModel& tail() const { return tail_; }
  [[nodiscard]] double tail_bound() const { return tail_.at(r_max_); }
  [[nodiscard]] double tail_at(double r) const { return tail_.at(r); }
  [[nodiscard]] std::span<const double> coeff_error() const { return coeff_error_; }

  /// Horner evaluation of the retained polynomial.
  [[nodiscard]] Complex evaluate(Complex z) const;

 private:
  std::vector<Complex> coeffs_{Complex{0.0, 0.0}};
  double r_max_ = 1.0;
  TailModel tail_{};
  std::vector<double> coeff_error_{};
};

/// Upper bound for the majorant series M(r) = sum |c_k| r^k.
///
/// Adds the per-coefficient error bars and the tail model evaluated at r.
/// Throws DomainError unless 0 <= r <= r_max.
[[nodiscard]] double majorant_sum(const PowerSeries& s, double r);

/// sum_{k=0}^{N} |c_k| r^k without any tail or error contribution.
[[nodiscard]] double majorant_partial(const PowerSeries& s, double r);

/// Taylor expansion of z^m (z^p - a) / (1 - a z^p) through index N.
///
/// Index m carries -a, index pk+m carries (1-a^2) a^{k-1}; the geometric
/// tail past the last retained k is recorded exactly. a = 1 is accepted and
/// yields -z^m.
[[nodiscard]] PowerSeries mobius_symmetric_expand(double a, int p, int m, int N);

struct SamplingConfig {
  double rho = 0.7;
  int oversample = 8;  // M = oversample * N
};

/// Taylor coefficients of f from M equally spaced samples f(rho e^{2 pi i j/M}).
///
/// c_k = (1/M) sum_j values_j e^{-ik theta_j} / rho^k. With |f| <= 1 the
/// aliasing error of c_k is at most rho^{M-k}/(1-rho^M); that bound is stored
/// per coefficient. The dropped tail uses the unit class bound up to r_max.
/// Throws ConfigError if M < 4N, rho outside (0,1), or r_max outside (0,1).
[[nodiscard]] PowerSeries coeffs_from_boundary_samples(std::span<const Complex> values,
                                                       double rho, int N, double r_max);
[[nodiscard]] PowerSeries coeffs_from_boundary_samples(std::span<const Complex> values,
                                                       double rho, int N);

/// sum_{k=1}^{N} |b_k|^2 R^{pk}.
[[nodiscard]] double weighted_coeff_l2(const PowerSeries& s, double R, int p);

/// R^p (1-|b_0|^2)^2 / (1 - |b_0|^2 R^p), the bound paired with weighted_coeff_l2.
[[nodiscard]] double weighted_coeff_l2_bound(const PowerSeries& s, double R, int p);

}  // namespace bohr
