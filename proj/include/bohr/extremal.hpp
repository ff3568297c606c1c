#pragma once

#include <utility>

#include "bohr/harmonic.hpp"
#include "bohr/radii.hpp"
#include "bohr/series.hpp"

namespace bohr {

inline constexpr int kDefaultTruncation = 256;

/// z^m (z^p - a)/(1 - a z^p) with a = extremal_parameter_a(c); its majorant
/// reaches exactly 1 at r_{p,m}.
[[nodiscard]] PowerSeries analytic_extremal(SymmetryClass c, int N = kDefaultTruncation);

/// psi(x) = x + alpha (1 - x^2)/(1 - alpha x).
[[nodiscard]] double psi_value(double x, double alpha);

/// Maximiser of psi(., alpha) on [0,1]:
/// (1 - sqrt(1 - alpha^2)/sqrt 2)/alpha for alpha >= 1/3, and 1 below that.
[[nodiscard]] double psi_argmax(double alpha);

/// r^m psi(a, r^p), the majorant of z^m (z^p - a)/(1 - a z^p) in closed form.
[[nodiscard]] double closed_form_majorant(SymmetryClass c, double a, double r);

/// (2/pi) Im(log((1+z)/(1-z))) sin(mu) + i cos(mu) as h + conj(g).
///
/// a_0 = i cos(mu); for odd n, a_n = b_n = -2i sin(mu)/(pi n). Only the
/// moduli 2|sin mu|/(pi n) enter any Bohr-type sum.
[[nodiscard]] HarmonicCoeffs abu_example(double mu, int N = kDefaultTruncation);

/// (2 e^{i alpha}/pi) Im(log((1 + e^{i beta} z)/(1 - e^{i beta} z))) as h + conj(g).
[[nodiscard]] HarmonicCoeffs harmonic_sharp_f0(double alpha, double beta, int N = kDefaultTruncation);

/// h = (z + a)/(2 sqrt(1+a^2)), g = (z - a)/(2 sqrt(1+a^2)).
[[nodiscard]] std::pair<PowerSeries, PowerSeries> pair_counterexample(double a);

/// Expansion of (z + a0)/(1 + a0 z), a0 in [0,1).
[[nodiscard]] PowerSeries mobius_a0_series(double a0, int N = kDefaultTruncation);

/// z^p (alpha - z^p)/(1 - alpha z^p). Its majorant is r^p (alpha + r^p(1 - alpha^2)/(1 - alpha r^p)),
/// which reaches 1 at r = 2^{-1/(2p)} exactly when alpha = 2^{-1/2} (for every p).
inline constexpr double kPhiAlpha = 0.70710678118654752440;
[[nodiscard]] PowerSeries phi_alpha(int p, int N = kDefaultTruncation, double alpha = kPhiAlpha);

}  // namespace bohr
