#pragma once

#include <limits>
#include <optional>
#include <string_view>

namespace bohr {

/// Functions of the form sum_k a_{pk+m} z^{pk+m}, i.e. z^m g(z^p).
struct SymmetryClass {
  int p = 1;
  int m = 0;

  SymmetryClass() = default;
  SymmetryClass(int p_, int m_);  // throws DomainError unless p >= 1, 0 <= m <= p
};

/// Real exponent q >= 1 of the combined coefficient (|a_k|^q + |b_k|^q)^{1/q}.
/// Infinity stands for max(|a_k|, |b_k|). Kept apart from SymmetryClass::p,
/// which is an integer symmetry order.
class Exponent {
 public:
  explicit Exponent(double value);  // throws DomainError for value < 1 or NaN
  static Exponent infinity() { return Exponent(std::numeric_limits<double>::infinity()); }

  [[nodiscard]] double value() const { return value_; }
  [[nodiscard]] bool is_infinite() const { return value_ == std::numeric_limits<double>::infinity(); }

 private:
  double value_;
};

enum class RadiusMethod { root_solve, closed_form, bound_formula };

[[nodiscard]] std::string_view to_string(RadiusMethod method);
[[nodiscard]] std::optional<RadiusMethod> parse_radius_method(std::string_view text);

struct RadiusResult {
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;  // defining equation evaluated at value
  RadiusMethod method = RadiusMethod::closed_form;
};

/// -6 r^{p-m} + r^{2(p-m)} + 8 r^{2p} + 1
[[nodiscard]] double rpm_equation(SymmetryClass c, double r);

/// Largest root in (0,1) of rpm_equation: the Bohr radius of the (p,m) class.
///
/// For m = 0 the equation is (3r^p - 1)^2 and the closed form 3^{-1/p} is
/// returned directly. Otherwise see solve_rpm_numeric.
[[nodiscard]] RadiusResult solve_rpm(SymmetryClass c);

/// Grid scan of 4096 points for the rightmost sign change, then bisection to
/// a bracket of width <= 1e-12. When no sign change exists (double root) the
/// rightmost near-zero grid minimum is polished by bisecting the derivative.
/// Throws SolverError if neither is found.
[[nodiscard]] RadiusResult solve_rpm_numeric(SymmetryClass c);

/// Closed forms for the families m = 0, p = m, p = 2m, p = 3m.
[[nodiscard]] std::optional<RadiusResult> closed_form_rpm(SymmetryClass c);

/// a = (1 - sqrt(1 - r^{2p}) / sqrt 2) / r^p at r = r_{p,m}, clamped to [0,1].
[[nodiscard]] double extremal_parameter_a(SymmetryClass c);

/// tanh(pi/4): radius of |h| + |g| <= 1 for bounded harmonic maps with f(0) = 0.
[[nodiscard]] RadiusResult harmonic_r0();

/// Radius up to which |a_0| + sum_{k>=1} (|a_k|^q+|b_k|^q)^{1/q} r^k <= 1 is
/// guaranteed for bounded harmonic maps with given |a_0|.
[[nodiscard]] RadiusResult harmonic_rp_a0(Exponent q, double a0_abs);

/// Largest |a_0| for which the radius above is at least 1/3; q in [1,2].
[[nodiscard]] double threshold_A(double q);
/// Upper bound on that threshold coming from the log-type example (abu_example); q in [1,2].
[[nodiscard]] double threshold_A_upper(double q);

/// Radius guaranteed for odd bounded harmonic maps.
[[nodiscard]] RadiusResult odd_harmonic_rho(Exponent q);

/// Bohr radius 1/(1 + 2|a_0|) of the single Moebius map (z + a_0)/(1 + a_0 z).
[[nodiscard]] double mobius_self_radius(double a0_abs);

/// sqrt(1 + a^2) - a: beyond this radius the pair counterexample exceeds 1.
[[nodiscard]] double pair_counterexample_radius(double a);

}  // namespace bohr
