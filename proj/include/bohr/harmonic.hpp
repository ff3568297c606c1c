#pragma once

#include <span>
#include <vector>

#include "bohr/radii.hpp"
#include "bohr/series.hpp"

namespace bohr {

/// Coefficients of f = h + conj(g), h = sum a_k z^k, g = sum b_k z^k.
///
/// In harmonic mode b_0 must be exactly zero. In pair mode the object stands
/// for two analytic functions with |h| + |g| <= 1 and b_0 is unrestricted.
/// The dropped tail of the combined terms is bounded by the sum of `tails`;
/// `term_error[k]` bounds the error of the k-th combined term.
class HarmonicCoeffs {
 public:
  HarmonicCoeffs() = default;
  HarmonicCoeffs(std::vector<Complex> a, std::vector<Complex> b, bool pair_mode, double r_max,
                 std::vector<TailModel> tails = {}, std::vector<double> term_error = {});

  /// f = h (g = 0), harmonic mode.
  static HarmonicCoeffs analytic(const PowerSeries& h);
  /// f = h + conj(g); throws PreconditionError if g(0) != 0.
  static HarmonicCoeffs harmonic(const PowerSeries& h, const PowerSeries& g);
  /// Pair (h, g) with |h| + |g| <= 1.
  static HarmonicCoeffs pair(const PowerSeries& h, const PowerSeries& g);

  [[nodiscard]] std::span<const Complex> a() const { return a_; }
  [[nodiscard]] std::span<const Complex> b() const { return b_; }
  [[nodiscard]] bool pair_mode() const { return pair_mode_; }
  [[nodiscard]] int trunc_order() const { return static_cast<int>(a_.size()) - 1; }
  [[nodiscard]] double r_max() const { return r_max_; }
  [[nodiscard]] std::span<const TailModel> tails() const { return tails_; }
  [[nodiscard]] std::span<const double> term_error() const { return term_error_; }
  [[nodiscard]] double tail_at(double r) const;
  [[nodiscard]] double tail_bound() const { return tail_at(r_max_); }

  [[nodiscard]] Complex h_at(Complex z) const;
  [[nodiscard]] Complex g_at(Complex z) const;
  /// h(z) + conj(g(z)) of the retained polynomials.
  [[nodiscard]] Complex evaluate(Complex z) const;

 private:
  std::vector<Complex> a_{Complex{}};
  std::vector<Complex> b_{Complex{}};
  bool pair_mode_ = false;
  double r_max_ = 1.0;
  std::vector<TailModel> tails_{};
  std::vector<double> term_error_{};
};

/// (|x|^q + |y|^q)^{1/q}; max(|x|, |y|) for q = infinity.
[[nodiscard]] double lp_combine(Complex x, Complex y, Exponent q);

/// sum_{k>=0} (|a_k|^q + |b_k|^q)^{1/q} r^k, including error bars and tail.
/// Throws DomainError unless 0 <= r <= r_max.
[[nodiscard]] double p_bohr_sum(const HarmonicCoeffs& hc, Exponent q, double r);
/// Same sum restricted to k >= 1.
[[nodiscard]] double p_bohr_sum_nonconstant(const HarmonicCoeffs& hc, Exponent q, double r);

/// sqrt(|a_0|^2+|b_0|^2) + sum_{k>=1} sqrt(|a_k|^2+|b_k|^2) r^k.
[[nodiscard]] double l2_combined_sum(const HarmonicCoeffs& hc, double r);

/// |a_0| + sum_{k>=1} (|a_k| + |b_k|) r^k for a pair with g(0) = 0.
/// Throws PreconditionError for a non-pair input or b_0 != 0: without
/// g(0) = 0 there is no positive radius at all.
[[nodiscard]] double pair_l1_sum(const HarmonicCoeffs& hc, double r);

/// Coefficients of K(z) = lambda + (2/pi) log((1 + xi z)/(1 - z)),
/// xi = exp(-i pi Im lambda). Requires |lambda| < 1.
[[nodiscard]] PowerSeries kernel_K_coeffs(Complex lambda, int N);

/// max{2^{1/q-1/2}, 1} sqrt(1-|a_0|^2) r / sqrt(1-r^2): bound on the
/// nonconstant p-Bohr sum of a bounded harmonic map.
[[nodiscard]] double coeff_sum_bound(Exponent q, double a0_abs, double r);

/// Odd-map analogue: 2^{1/q-1/2} r / sqrt(1-r^4) for q <= 2, r / sqrt(1-r^4) beyond.
[[nodiscard]] double odd_coeff_sum_bound(Exponent q, double r);

/// sqrt(2) r / sqrt(1-r^2), from subordination to (2/pi) log((1+z)/(1-z)).
[[nodiscard]] double subordination_l1_bound(double r);

/// Largest r in [0, r_max] with p_bohr_sum <= 1, by bisection. Returns 0
/// when the constant term alone exceeds 1 and r_max when the sum never does.
[[nodiscard]] RadiusResult p_bohr_radius_search(const HarmonicCoeffs& hc, Exponent q);

}  // namespace bohr
