#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bohr/errors.hpp"
#include "bohr/extremal.hpp"
#include "bohr/verify.hpp"
#include "json.hpp"

using namespace bohr;
using std::numbers::pi;

namespace {

ExtractionConfig small_extraction() { return {64, 0.9, 8}; }

}  // namespace

TEST(Blaschke, DegreeZeroIsUnimodularConstant) {
  const auto b = random_blaschke(0, 99);
  EXPECT_EQ(b.degree(), 0);
  const Complex v = b(Complex{0.3, 0.1});
  EXPECT_NEAR(std::abs(v), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(b(Complex{-0.7, 0.2}) - v), 0.0, 1e-15);
}

TEST(Blaschke, SingleFactorExpansion) {
  const BlaschkeProduct b(pi, {Complex{0.5}});
  const auto s = extract_coefficients(b, {32, 0.9, 8}, 0.9);
  EXPECT_NEAR(std::abs(s[0] - 0.5), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s[1] + 0.75), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s[2] + 0.375), 0.0, 1e-12);
  const auto e = b.expand(3);
  EXPECT_NEAR(std::abs(e[0] - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e[1] + 0.75), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e[2] + 0.375), 0.0, 1e-15);
}

TEST(Blaschke, ModulusBoundedNearBoundary) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto b = random_blaschke(static_cast<int>(seed % 9), seed);
    for (const auto& z : b.zeros()) EXPECT_LT(std::abs(z), kBlaschkeZeroRadius + 1e-15);
    for (int j = 0; j < 1000; ++j) ASSERT_LE(std::abs(b(std::polar(0.999, 2 * pi * j / 1000.0))), 1.0 + 1e-12);
    for (int j = 0; j < 16; ++j) EXPECT_NEAR(std::abs(b(std::polar(1.0, 0.4 * j))), 1.0, 1e-12);
  }
  EXPECT_THROW((void)random_blaschke(9, 1), DomainError);
}

TEST(Blaschke, DftAgreesWithConvolutionExpansion) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto b = random_blaschke(8, seed);
    const auto s = extract_coefficients(b, {}, 0.98);
    const auto e = b.expand(64);
    for (int k = 0; k <= 64; ++k) ASSERT_LE(std::abs(s[k] - e[k]), 1e-10) << seed << " " << k;
  }
}

TEST(Symmetrize, Examples) {
  const auto one = symmetrize([](Complex) { return Complex{1.0}; }, 2, 1);
  EXPECT_EQ(one(Complex{0.3, 0.4}), Complex(0.3, 0.4));
  const auto f = symmetrize([](Complex z) { return (z - 0.5) / (1.0 - 0.5 * z); }, 2, 1);
  const auto s = extract_coefficients(f, small_extraction(), 0.9);
  const double want[] = {-0.5, 0.75, 0.375, 0.1875};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(s[2 * k + 1] - want[k]), 0.0, 1e-10);
}

TEST(Symmetrize, SupportOnProgression) {
  for (int p = 1; p <= 4; ++p)
    for (int m = 0; m <= p; ++m) {
      const auto b = random_blaschke(5, 1000 + 10 * p + m);
      const auto s = extract_coefficients(symmetrize(b, p, m), {}, 0.98);
      for (int k = 0; k <= s.trunc_order(); ++k)
        if (k < m || (k - m) % p != 0) ASSERT_LE(std::abs(s[k]), 1e-10) << p << "," << m << " k=" << k;
    }
}

TEST(Wiener, Examples) {
  const auto mob = wiener_check(mobius_a0_series(0.5));
  EXPECT_TRUE(mob.passed());
  EXPECT_NEAR(mob.worst_slack, 0.0, 1e-10);
  const auto z = wiener_check(PowerSeries({Complex{}, Complex{1.0}}, 1.0));
  EXPECT_TRUE(z.passed());
  EXPECT_LE(z.worst_slack, 0.0);
  const auto bad = wiener_check(PowerSeries({Complex{0.5}, Complex{0.9}}, 1.0));
  EXPECT_FALSE(bad.passed());
  ASSERT_TRUE(bad.counterexample);
}

TEST(Wiener, RandomSuite) {
  const auto rep = wiener_suite(500, 3);
  EXPECT_TRUE(rep.passed());
  EXPECT_LE(rep.worst_slack, 1e-9);
  EXPECT_EQ(rep.samples, 500u);
}

TEST(LemmaC, MobiusEqualityAndConstant) {
  const auto mob = lemma_c_check([](Complex z) { return (z - 0.5) / (1.0 - 0.5 * z); }, 1.0, 1);
  EXPECT_TRUE(mob.passed());
  EXPECT_NEAR(mob.worst_slack, 0.0, 1e-9);
  const auto c = lemma_c_check([](Complex) { return Complex{0.4, 0.2}; }, 0.7, 3);
  EXPECT_TRUE(c.passed());
  EXPECT_LE(c.worst_slack, 0.0);
}

TEST(AnalyticClass, ExamplesAndExtremalMember) {
  const auto r21 = certify_analytic_class(SymmetryClass(2, 1), 500, 42);
  EXPECT_TRUE(r21.passed());
  EXPECT_LE(r21.worst_slack, 1e-9);
  EXPECT_GE(r21.worst_slack, -1e-8);
  const auto r10 = certify_analytic_class(SymmetryClass(1, 0), 500, 42);
  EXPECT_TRUE(r10.passed());
  EXPECT_LE(r10.worst_slack, 1e-9);
  const auto r44 = certify_analytic_class(SymmetryClass(4, 4), 200, 42, {}, std::pow(2.0, -1.0 / 8.0));
  EXPECT_TRUE(r44.passed());
  EXPECT_LE(r44.worst_slack, 1e-9);
}

TEST(AnalyticClass, NegativeControlFindsExtremal) {
  const auto rep = certify_negative_control(SymmetryClass(2, 1), 100, 42);
  EXPECT_TRUE(rep.expect_violation);
  EXPECT_TRUE(rep.passed());
  ASSERT_TRUE(rep.counterexample);
  EXPECT_GT(rep.worst_slack, 1e-9);
}

TEST(Sharpness, Probes) {
  EXPECT_TRUE(sharpness_probe(SymmetryClass(2, 1), 0.01).passed());
  EXPECT_TRUE(sharpness_probe(SymmetryClass(1, 1), 0.01).passed());
  const auto small = sharpness_probe(SymmetryClass(3, 1), 0.001);
  const auto large = sharpness_probe(SymmetryClass(3, 1), 0.01);
  EXPECT_TRUE(small.passed());
  EXPECT_GT(small.worst_slack, 0.0);
  EXPECT_LT(small.worst_slack, large.worst_slack);
  EXPECT_THROW((void)sharpness_probe(SymmetryClass(2, 1), 0.5), ConfigError);
  EXPECT_THROW((void)sharpness_probe(SymmetryClass(2, 1), 0.0), ConfigError);
}

TEST(HarmonicSamples, Extremes) {
  const auto b1 = random_blaschke(3, 5), b2 = random_blaschke(4, 6);
  const auto analytic_only = bounded_harmonic_from(1.0, b1, b2, {});
  for (auto v : analytic_only.b()) EXPECT_EQ(std::abs(v), 0.0);
  const auto coanalytic_only = bounded_harmonic_from(0.0, b1, b2, {});
  for (auto v : coanalytic_only.a()) EXPECT_EQ(std::abs(v), 0.0);
  EXPECT_EQ(coanalytic_only.b()[0], Complex());
  const auto odd = bounded_harmonic_from(0.4, b1, b2, {false, true});
  for (int k = 0; k <= odd.trunc_order(); k += 2) {
    EXPECT_EQ(odd.a()[k], Complex());
    EXPECT_EQ(odd.b()[k], Complex());
  }
}

TEST(HarmonicSamples, ParsevalBudgetAndBoundedness) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto hc = random_bounded_harmonic(seed, {seed % 2 == 0, seed % 3 == 0});
    EXPECT_LE(parseval_budget(hc), 1.0 + 1e-9);
    EXPECT_EQ(hc.b()[0], Complex());
    for (int j = 0; j < 8; ++j) EXPECT_LE(std::abs(hc.evaluate(std::polar(0.9, 0.8 * j))), 1.0 + 1e-9);
  }
}

TEST(PairSamples, Structure) {
  const auto b1 = random_blaschke(2, 8), b2 = random_blaschke(2, 9);
  const auto h_only = pair_from(1.0, b1, b2, false);
  for (auto v : h_only.b()) EXPECT_EQ(std::abs(v), 0.0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto p = random_pair(seed, true);
    EXPECT_TRUE(p.pair_mode());
    EXPECT_EQ(p.b()[0], Complex());
    EXPECT_LE(pair_l1_sum(p, 1.0 / 3.0), 1.0 + 1e-9);
  }
}

TEST(HarmonicCertification, ExponentTwo) {
  const auto reports = certify_harmonic(Exponent(2.0), 200, 42, false);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_TRUE(r.passed()) << r.claim_id;
  const auto odd = certify_harmonic(Exponent(2.0), 200, 42, true);
  for (const auto& r : odd) EXPECT_TRUE(r.passed()) << r.claim_id;
}

TEST(LemmaGrid, Examples) {
  const auto reps = lemma_grid_check(8);
  ASSERT_EQ(reps.size(), 2u);
  for (const auto& r : reps) {
    EXPECT_TRUE(r.passed()) << r.claim_id;
    EXPECT_LE(r.worst_slack, 1e-8);
  }
  EXPECT_THROW((void)lemma_grid_check(17), ConfigError);
}

TEST(PairCounterexampleCheck, ExceedsJustAboveRadius) {
  for (double a : {1.0, 5.0, 10.0}) {
    const auto reps = pair_counterexample_check(a);
    ASSERT_EQ(reps.size(), 2u);
    EXPECT_TRUE(reps[0].passed());
    EXPECT_TRUE(reps[1].passed());
    EXPECT_TRUE(reps[1].expect_violation);
  }
}

TEST(Determinism, IndependentOfThreadCount) {
  HarnessOptions one, four;
  four.threads = 4;
  const auto a = certify_analytic_class(SymmetryClass(3, 1), 120, 9, one, 0.86);
  const auto b = certify_analytic_class(SymmetryClass(3, 1), 120, 9, four, 0.86);
  EXPECT_EQ(a.worst_slack, b.worst_slack);
  EXPECT_EQ(a.counterexample, b.counterexample);
  ASSERT_TRUE(a.counterexample);

  const auto h1 = certify_harmonic(Exponent(1.5), 80, 9, false, one);
  const auto h4 = certify_harmonic(Exponent(1.5), 80, 9, false, four);
  ASSERT_EQ(h1.size(), h4.size());
  for (std::size_t i = 0; i < h1.size(); ++i) {
    EXPECT_EQ(h1[i].claim_id, h4[i].claim_id);
    EXPECT_EQ(h1[i].worst_slack, h4[i].worst_slack);
  }
  const auto l1 = lemma_c_suite(60, 9, {0.5, 1.0}, {1, 3}, one);
  const auto l4 = lemma_c_suite(60, 9, {0.5, 1.0}, {1, 3}, four);
  EXPECT_EQ(l1.worst_slack, l4.worst_slack);
}

TEST(Determinism, SameSeedRerun) {
  const auto a = wiener_suite(100, 77);
  const auto b = wiener_suite(100, 77);
  EXPECT_EQ(a.worst_slack, b.worst_slack);
  const auto c = wiener_suite(100, 78);
  EXPECT_NE(a.worst_slack, c.worst_slack);
}

TEST(Report, CounterexamplePresentIffSlackAboveTolerance) {
  const auto rep = certify_analytic_class(SymmetryClass(2, 1), 30, 1, {}, 0.8);
  ASSERT_TRUE(rep.counterexample);
  EXPECT_GT(rep.worst_slack, rep.tolerance);
  const auto j = nlohmann::json::parse(*rep.counterexample);
  EXPECT_TRUE(j.is_object());
}
