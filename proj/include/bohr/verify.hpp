#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bohr/harmonic.hpp"
#include "bohr/radii.hpp"
#include "bohr/rng.hpp"
#include "bohr/series.hpp"

namespace bohr {

using AnalyticFn = std::function<Complex(Complex)>;

/// e^{i phase} prod_j (z - z_j)/(1 - conj(z_j) z), unimodular on |z| = 1.
class BlaschkeProduct {
 public:
  BlaschkeProduct(double phase, std::vector<Complex> zeros);

  Complex operator()(Complex z) const;
  [[nodiscard]] double phase() const { return phase_; }
  [[nodiscard]] const std::vector<Complex>& zeros() const { return zeros_; }
  [[nodiscard]] int degree() const { return static_cast<int>(zeros_.size()); }

  /// Taylor coefficients through index N by convolving the factor expansions.
  /// Independent of the boundary-sampling route.
  [[nodiscard]] std::vector<Complex> expand(int N) const;

 private:
  double phase_;
  std::vector<Complex> zeros_;
};

inline constexpr double kBlaschkeZeroRadius = 0.95;

/// Zeros uniform in |z| < 0.95 (area measure), phase uniform in [0, 2 pi).
[[nodiscard]] BlaschkeProduct random_blaschke(int degree, CounterRng& rng);
[[nodiscard]] BlaschkeProduct random_blaschke(int degree, std::uint64_t seed);

/// z -> z^m g(z^p).
[[nodiscard]] AnalyticFn symmetrize(AnalyticFn g, int p, int m);

/// Boundary-sampling knobs used by the harness. Blaschke oracles are analytic
/// past |z| = 1/0.95, so sampling close to the unit circle keeps the rho^{-k}
/// amplification small out to the radii being certified.
struct ExtractionConfig {
  int N = 512;
  double rho = 0.98;
  int oversample = 8;
};

/// Samples f at oversample*N points of |z| = rho and extracts coefficients.
[[nodiscard]] PowerSeries extract_coefficients(const AnalyticFn& f, const ExtractionConfig& cfg,
                                               double r_max);

struct VerificationReport {
  std::string claim_id;
  std::uint64_t samples = 0;
  /// max over samples of LHS - RHS; -infinity when nothing was checked.
  double worst_slack = -std::numeric_limits<double>::infinity();
  double tolerance = 1e-9;
  /// Sharpness probes and negative controls pass only when they find a violation.
  bool expect_violation = false;
  /// JSON text of the input achieving worst_slack, present iff worst_slack > tolerance.
  std::optional<std::string> counterexample;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;

  [[nodiscard]] bool passed() const { return expect_violation == counterexample.has_value(); }
};

struct HarnessOptions {
  double tol = 1e-9;
  unsigned threads = 1;
  ExtractionConfig extraction{};
};

/// |a_n| <= 1 - |a_0|^2 for every retained n >= 1.
[[nodiscard]] VerificationReport wiener_check(const PowerSeries& s, double tol = 1e-9);
/// wiener_check over random Blaschke products.
[[nodiscard]] VerificationReport wiener_suite(int n_samples, std::uint64_t seed, const HarnessOptions& opts = {});

/// sum_{k>=1} |b_k|^2 R^{pk} <= R^p (1-|b_0|^2)^2 / (1-|b_0|^2 R^p) for one function.
[[nodiscard]] VerificationReport lemma_c_check(const AnalyticFn& g, double R, int p,
                                               const HarnessOptions& opts = {});
/// The same inequality over random Blaschke products and the R x p grid.
[[nodiscard]] VerificationReport lemma_c_suite(int n_samples, std::uint64_t seed,
                                               const std::vector<double>& R_grid,
                                               const std::vector<int>& p_grid,
                                               const HarnessOptions& opts = {});

/// Majorant of symmetrized random Blaschke products (and of the extremal
/// function) at r_{p,m}, or at r_override when given.
[[nodiscard]] VerificationReport certify_analytic_class(SymmetryClass c, int n_samples, std::uint64_t seed,
                                                        const HarnessOptions& opts = {},
                                                        std::optional<double> r_override = std::nullopt);

/// certify_analytic_class at min(r_{p,m} + 0.02, 0.999); passes only when a
/// counterexample (at least the extremal function) is reported.
[[nodiscard]] VerificationReport certify_negative_control(SymmetryClass c, int n_samples, std::uint64_t seed,
                                                          const HarnessOptions& opts = {});

/// Excess of the extremal majorant over 1 at r_{p,m} + delta; passes when positive.
[[nodiscard]] VerificationReport sharpness_probe(SymmetryClass c, double delta, double tol = 1e-9);

struct HarmonicSampleKind {
  bool zero_a0 = false;  // multiply the analytic part by z
  bool odd = false;      // h(z) -> z h(z^2), g(z) -> z g(z^2)
};

/// f = t B1 + conj((1-t) z B2), or with t z B1 when zero_a0. |f| <= 1 and b_0 = 0.
[[nodiscard]] HarmonicCoeffs bounded_harmonic_from(double t, const BlaschkeProduct& b1,
                                                   const BlaschkeProduct& b2, HarmonicSampleKind kind,
                                                   const ExtractionConfig& cfg = {});
/// t uniform in [0,1], Blaschke degrees uniform in [0,6].
[[nodiscard]] HarmonicCoeffs random_bounded_harmonic(CounterRng& rng, HarmonicSampleKind kind = {},
                                                     const ExtractionConfig& cfg = {});
[[nodiscard]] HarmonicCoeffs random_bounded_harmonic(std::uint64_t seed, HarmonicSampleKind kind = {},
                                                     const ExtractionConfig& cfg = {});

/// Pair h = t B1, g = (1-t) B2 (times z when force_g0_zero); |h| + |g| <= 1.
[[nodiscard]] HarmonicCoeffs pair_from(double t, const BlaschkeProduct& b1, const BlaschkeProduct& b2,
                                       bool force_g0_zero, const ExtractionConfig& cfg = {});
[[nodiscard]] HarmonicCoeffs random_pair(CounterRng& rng, bool force_g0_zero, const ExtractionConfig& cfg = {});
[[nodiscard]] HarmonicCoeffs random_pair(std::uint64_t seed, bool force_g0_zero, const ExtractionConfig& cfg = {});

/// |a_0|^2 + sum_{k>=1} (|a_k|^2 + |b_k|^2) for the retained coefficients.
[[nodiscard]] double parseval_budget(const HarmonicCoeffs& hc);

/// Bounded-harmonic claims for exponent q. Non-odd runs check the coefficient
/// sum bound on a 10-radius grid, the a_0 = 0 radius 1/sqrt2 (q >= 2), the
/// |a_0|-dependent radius, and the |a_0| <= A(q) threshold at 1/3 (q <= 2).
/// Odd runs check the odd bound at rho_q/2 and rho_q, the radius rho_q itself,
/// and the subordination estimate over a 64-angle sweep.
[[nodiscard]] std::vector<VerificationReport> certify_harmonic(Exponent q, int n_samples, std::uint64_t seed,
                                                               bool odd_only, const HarnessOptions& opts = {});

/// Pair claims at r = 1/3: the l1 sum with g(0) = 0 and the l2 sum without it.
/// `squared_constant` adds the experimental variant with |a_0|^2 + |b_0|^2 at r = 1/2.
[[nodiscard]] std::vector<VerificationReport> certify_pairs(int n_samples, std::uint64_t seed,
                                                            const HarnessOptions& opts = {},
                                                            bool squared_constant = false);

/// For the pair counterexample with parameter a: one report that |h| + |g| <= 1
/// on 1000 disk points and the sum stays <= 1 just below r_0(a), and one
/// (expecting a violation) that the sum exceeds 1 just above r_0(a).
[[nodiscard]] std::vector<VerificationReport> pair_counterexample_check(double a, std::uint64_t seed = 1,
                                                                        double tol = 1e-9);

/// 2 r^{p+m} <= 1 and (3 - 2 sqrt2 sqrt(1 - r^{2p}))/r^{p-m} = 1 at r = r_{p,m}
/// over 1 <= p <= p_max, 0 <= m <= p. Throws ConfigError for p_max > 16.
[[nodiscard]] std::vector<VerificationReport> lemma_grid_check(int p_max);

struct OddRadiusExploration {
  std::uint64_t samples = 0;
  double smallest_radius = 1.0;    // min over samples of the empirical p-Bohr radius
  std::uint64_t smallest_index = 0;
  double f0_radius = 0.0;          // radius of the sharp log family
  double guaranteed_radius = 0.0;  // rho_q
};

/// Empirical p-Bohr radii of random odd bounded harmonic samples. Exploration
/// only: the smallest radius found is an upper estimate for the class.
[[nodiscard]] OddRadiusExploration explore_odd_harmonic_radius(Exponent q, int n_samples, std::uint64_t seed,
                                                               const HarnessOptions& opts = {});

struct BatchConfig {
  int samples = 500;
  std::uint64_t seed = 42;
  int p_max_analytic = 4;
  int p_max_lemmas = 8;
  HarnessOptions harness{};
};

/// Every claim suite; used by `verify all`.
[[nodiscard]] std::vector<VerificationReport> run_all_claims(const BatchConfig& cfg);

}  // namespace bohr
