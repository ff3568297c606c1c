#include "bohr/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <chrono>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <thread>

#include "bohr/errors.hpp"
#include "bohr/extremal.hpp"
#include "json.hpp"

namespace bohr {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Stream tags keep the suites' random draws disjoint.
enum class Stream : std::uint64_t {
  wiener = 1,
  lemma_c = 2,
  analytic = 3,
  harmonic = 4,
  harmonic_zero_a0 = 5,
  harmonic_odd = 6,
  pair_g0_zero = 7,
  pair_free = 8,
  odd_explore = 9,
  disk_points = 10,
};

std::uint64_t stream_id(Stream tag, std::uint64_t index) {
  return (static_cast<std::uint64_t>(tag) << 40) | index;
}

constexpr double kNotApplicable = -std::numeric_limits<double>::infinity();

// Evaluates fn(i) for i in [0, n). Results land at their index, so the
// output does not depend on scheduling.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn&& fn) {
  std::vector<T> out(n);
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(n));
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

// Ordered arg-max over per-sample slacks; ties keep the lowest index.
struct SlackReduction {
  double worst = kNotApplicable;
  std::size_t index = 0;
  std::uint64_t applicable = 0;

  void add(double slack, std::size_t i) {
    if (slack == kNotApplicable) return;
    ++applicable;
    if (slack > worst || applicable == 1) {
      worst = slack;
      index = i;
    }
  }
};

json complex_array(std::span<const Complex> values) {
  json arr = json::array();
  for (const auto& z : values) arr.push_back({z.real(), z.imag()});
  return arr;
}

json describe_blaschke(const BlaschkeProduct& b) {
  return json{{"phase", b.phase()}, {"zeros", complex_array(b.zeros())}};
}

VerificationReport finish(std::string claim_id, const SlackReduction& red, double tol, std::uint64_t seed,
                          Clock::time_point start, const std::function<json(std::size_t)>& describe,
                          bool expect_violation = false) {
  VerificationReport rep;
  rep.claim_id = std::move(claim_id);
  rep.samples = red.applicable;
  rep.worst_slack = red.worst;
  rep.tolerance = tol;
  rep.seed = seed;
  rep.expect_violation = expect_violation;
  if (red.applicable > 0 && red.worst > tol) {
    json witness = describe(red.index);
    witness["slack"] = red.worst;
    rep.counterexample = witness.dump();
  }
  rep.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

std::string with_exponent(std::string base, Exponent q) {
  std::ostringstream os;
  os << base << "[q=";
  if (q.is_infinite()) {
    os << "inf";
  } else {
    os << q.value();
  }
  os << "]";
  return os.str();
}

Complex ipow(Complex z, int n) {
  Complex acc{1.0, 0.0};
  for (int i = 0; i < n; ++i) acc *= z;
  return acc;
}

// Draws for one analytic sample: degree uniform in [0, 8].
BlaschkeProduct analytic_sample(std::uint64_t seed, Stream tag, std::size_t i) {
  CounterRng rng(seed, stream_id(tag, i));
  const int degree = rng.uniform_int(0, 8);
  return random_blaschke(degree, rng);
}

std::vector<Complex> scaled(std::span<const Complex> c, double factor, int shift, std::size_t length) {
  std::vector<Complex> out(length, Complex{});
  for (std::size_t k = 0; k < c.size(); ++k) {
    const std::size_t j = k + static_cast<std::size_t>(shift);
    if (j < length) out[j] = factor * c[k];
  }
  return out;
}

std::vector<double> scaled_error(std::span<const double> e, double factor, int shift, std::size_t length) {
  std::vector<double> out(length, 0.0);
  for (std::size_t k = 0; k < e.size(); ++k) {
    const std::size_t j = k + static_cast<std::size_t>(shift);
    if (j < length) out[j] = factor * e[k];
  }
  return out;
}

// z h(z^2): index k moves to 2k + 1.
template <class T>
std::vector<T> odd_spread(const std::vector<T>& c) {
  std::vector<T> out(2 * c.size(), T{});
  for (std::size_t k = 0; k < c.size(); ++k) out[2 * k + 1] = c[k];
  return out;
}

constexpr double kHarmonicRmax = 0.99;

// Parseval budget <= 1 plus Cauchy-Schwarz: combined terms past N sum to at
// most sqrt2 r^{N+1}/sqrt(1-r^2) for every exponent q >= 1.
TailModel parseval_tail(int N) { return TailModel{std::numbers::sqrt2, N + 1, 1.0, 2, 0.5}; }

HarmonicCoeffs assemble(std::vector<Complex> a, std::vector<Complex> b, std::vector<double> ea,
                        std::vector<double> eb, bool pair_mode, bool odd) {
  if (odd) {
    a = odd_spread(a);
    b = odd_spread(b);
    ea = odd_spread(ea);
    eb = odd_spread(eb);
  }
  std::vector<double> err(a.size());
  for (std::size_t k = 0; k < err.size(); ++k) err[k] = ea[k] + eb[k];
  const int N = static_cast<int>(a.size()) - 1;
  return HarmonicCoeffs(std::move(a), std::move(b), pair_mode, kHarmonicRmax, {parseval_tail(N)},
                        std::move(err));
}

}  // namespace

// ---------------------------------------------------------------- oracles

BlaschkeProduct::BlaschkeProduct(double phase, std::vector<Complex> zeros)
    : phase_(phase), zeros_(std::move(zeros)) {
  for (const auto& z : zeros_)
    if (!(std::abs(z) < 1.0)) throw DomainError("Blaschke zeros must lie in the open unit disk");
}

Complex BlaschkeProduct::operator()(Complex z) const {
  Complex acc = std::polar(1.0, phase_);
  for (const auto& zj : zeros_) acc *= (z - zj) / (1.0 - std::conj(zj) * z);
  return acc;
}

std::vector<Complex> BlaschkeProduct::expand(int N) const {
  std::vector<Complex> c(static_cast<std::size_t>(N) + 1, Complex{});
  c[0] = std::polar(1.0, phase_);
  std::vector<Complex> factor(c.size());
  for (const auto& zj : zeros_) {
    // (z - zj)/(1 - conj(zj) z) = -zj + (1 - |zj|^2) sum_{k>=1} conj(zj)^{k-1} z^k
    factor[0] = -zj;
    Complex geom{1.0, 0.0};
    for (int k = 1; k <= N; ++k) {
      factor[k] = (1.0 - std::norm(zj)) * geom;
      geom *= std::conj(zj);
    }
    std::vector<Complex> next(c.size(), Complex{});
    for (int i = 0; i <= N; ++i) {
      if (c[i] == Complex{}) continue;
      for (int k = 0; i + k <= N; ++k) next[i + k] += c[i] * factor[k];
    }
    c = std::move(next);
  }
  return c;
}

BlaschkeProduct random_blaschke(int degree, CounterRng& rng) {
  if (degree < 0 || degree > 8) throw DomainError("Blaschke degree must lie in [0,8]");
  const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> zeros;
  zeros.reserve(degree);
  for (int j = 0; j < degree; ++j) {
    const double radius = kBlaschkeZeroRadius * std::sqrt(rng.uniform());
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    zeros.push_back(std::polar(radius, angle));
  }
  return BlaschkeProduct(phase, std::move(zeros));
}

BlaschkeProduct random_blaschke(int degree, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  return random_blaschke(degree, rng);
}

AnalyticFn symmetrize(AnalyticFn g, int p, int m) {
  if (p < 1 || m < 0 || m > p) throw DomainError("symmetrize requires p >= 1 and 0 <= m <= p");
  return [g = std::move(g), p, m](Complex z) { return ipow(z, m) * g(ipow(z, p)); };
}

PowerSeries extract_coefficients(const AnalyticFn& f, const ExtractionConfig& cfg, double r_max) {
  if (cfg.N < 1 || cfg.oversample < 4) throw ConfigError("extraction needs N >= 1 and oversample >= 4");
  const int M = cfg.N * cfg.oversample;
  std::vector<Complex> values(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j)
    values[j] = f(std::polar(cfg.rho, 2.0 * std::numbers::pi * j / M));
  return coeffs_from_boundary_samples(values, cfg.rho, cfg.N, r_max);
}

// ---------------------------------------------------------------- analytic claims

VerificationReport wiener_check(const PowerSeries& s, double tol) {
  const auto start = Clock::now();
  SlackReduction red;
  const double budget = 1.0 - std::norm(s[0]);
  for (int n = 1; n <= s.trunc_order(); ++n) red.add(std::abs(s[n]) - budget, static_cast<std::size_t>(n));
  return finish("wiener_coefficient_bound", red, tol, 0, start, [&](std::size_t n) {
    return json{{"index", n}, {"a0", {s[0].real(), s[0].imag()}}, {"an", {s[n].real(), s[n].imag()}}};
  });
}

VerificationReport wiener_suite(int n_samples, std::uint64_t seed, const HarnessOptions& opts) {
  const auto start = Clock::now();
  const auto slacks = parallel_map<double>(n_samples, opts.threads, [&](std::size_t i) {
    const auto b = analytic_sample(seed, Stream::wiener, i);
    return wiener_check(extract_coefficients(b, opts.extraction, opts.extraction.rho), opts.tol).worst_slack;
  });
  SlackReduction red;
  for (std::size_t i = 0; i < slacks.size(); ++i) red.add(slacks[i], i);
  return finish("wiener_coefficient_bound", red, opts.tol, seed, start, [&](std::size_t i) {
    return json{{"sample", i}, {"function", describe_blaschke(analytic_sample(seed, Stream::wiener, i))}};
  });
}

VerificationReport lemma_c_check(const AnalyticFn& g, double R, int p, const HarnessOptions& opts) {
  const auto start = Clock::now();
  const auto s = extract_coefficients(g, opts.extraction, opts.extraction.rho);
  SlackReduction red;
  red.add(weighted_coeff_l2(s, R, p) - weighted_coeff_l2_bound(s, R, p), 0);
  return finish("weighted_l2_coefficient_bound", red, opts.tol, 0, start,
                [&](std::size_t) { return json{{"R", R}, {"p", p}, {"b0", {s[0].real(), s[0].imag()}}}; });
}

VerificationReport lemma_c_suite(int n_samples, std::uint64_t seed, const std::vector<double>& R_grid,
                                 const std::vector<int>& p_grid, const HarnessOptions& opts) {
  const auto start = Clock::now();
  struct Outcome {
    double slack = kNotApplicable;
    double R = 0.0;
    int p = 0;
  };
  const auto outcomes = parallel_map<Outcome>(n_samples, opts.threads, [&](std::size_t i) {
    const auto b = analytic_sample(seed, Stream::lemma_c, i);
    const auto s = extract_coefficients(b, opts.extraction, opts.extraction.rho);
    Outcome o;
    for (double R : R_grid) {
      for (int p : p_grid) {
        const double slack = weighted_coeff_l2(s, R, p) - weighted_coeff_l2_bound(s, R, p);
        if (slack > o.slack) o = {slack, R, p};
      }
    }
    return o;
  });
  SlackReduction red;
  for (std::size_t i = 0; i < outcomes.size(); ++i) red.add(outcomes[i].slack, i);
  return finish("weighted_l2_coefficient_bound", red, opts.tol, seed, start, [&](std::size_t i) {
    return json{{"sample", i},
                {"R", outcomes[i].R},
                {"p", outcomes[i].p},
                {"function", describe_blaschke(analytic_sample(seed, Stream::lemma_c, i))}};
  });
}

namespace {

// Moebius parameter of the extremal member used at radius r. For m = 0 the
// extremal parameter is 1 and the function is a unimodular constant; there is
// only an extremal sequence a -> 1. Beyond r_{p,0} pick a member of that
// sequence whose majorant already exceeds 1 at r.
double extremal_member_parameter(SymmetryClass c, double r) {
  const double a = extremal_parameter_a(c);
  if (c.m != 0 || r <= solve_rpm(c).value) return a;
  const double a_min = (1.0 / std::pow(r, c.p) - 1.0) / 2.0;
  return 0.5 * (std::max(a_min, 0.0) + 1.0);
}

}  // namespace

VerificationReport certify_analytic_class(SymmetryClass c, int n_samples, std::uint64_t seed,
                                          const HarnessOptions& opts, std::optional<double> r_override) {
  const auto start = Clock::now();
  const double r = r_override.value_or(solve_rpm(c).value);
  if (!(r > 0.0 && r < 1.0)) throw ConfigError("certification radius must lie in (0,1)");

  // Index 0 is the extremal function; random samples follow.
  const double a = extremal_member_parameter(c, r);
  const auto extremal = mobius_symmetric_expand(a, c.p, c.m, kDefaultTruncation);
  const auto slacks = parallel_map<double>(static_cast<std::size_t>(n_samples) + 1, opts.threads,
                                           [&](std::size_t i) {
    if (i == 0) return majorant_sum(extremal, r) - 1.0;
    const auto g = analytic_sample(seed, Stream::analytic, i - 1);
    const auto s = extract_coefficients(symmetrize(g, c.p, c.m), opts.extraction, r);
    return majorant_sum(s, r) - 1.0;
  });
  SlackReduction red;
  for (std::size_t i = 0; i < slacks.size(); ++i) red.add(slacks[i], i);

  std::ostringstream id;
  id << "analytic_class_majorant[p=" << c.p << ",m=" << c.m << "]";
  return finish(id.str(), red, opts.tol, seed, start, [&](std::size_t i) {
    json w{{"p", c.p}, {"m", c.m}, {"r", r}};
    if (i == 0) {
      w["sample"] = "extremal";
      w["a"] = a;
    } else {
      w["sample"] = i - 1;
      w["function"] = describe_blaschke(analytic_sample(seed, Stream::analytic, i - 1));
    }
    return w;
  });
}

VerificationReport certify_negative_control(SymmetryClass c, int n_samples, std::uint64_t seed,
                                            const HarnessOptions& opts) {
  const double r = std::min(solve_rpm(c).value + 0.02, 0.999);
  auto rep = certify_analytic_class(c, n_samples, seed, opts, r);
  rep.claim_id += "_negative_control";
  rep.expect_violation = true;
  return rep;
}

VerificationReport sharpness_probe(SymmetryClass c, double delta, double tol) {
  const auto start = Clock::now();
  if (!(delta > 0.0)) throw ConfigError("sharpness offset must be positive");
  const double r = solve_rpm(c).value + delta;
  if (!(r < 1.0)) throw ConfigError("r_{p,m} + delta must stay below 1");
  const double a = extremal_member_parameter(c, r);
  SlackReduction red;
  red.add(majorant_sum(mobius_symmetric_expand(a, c.p, c.m, kDefaultTruncation), r) - 1.0, 0);
  std::ostringstream id;
  id << "extremal_sharpness[p=" << c.p << ",m=" << c.m << "]";
  return finish(id.str(), red, tol, 0, start,
                [&](std::size_t) { return json{{"p", c.p}, {"m", c.m}, {"a", a}, {"r", r}}; },
                true);
}

// ---------------------------------------------------------------- harmonic oracles

HarmonicCoeffs bounded_harmonic_from(double t, const BlaschkeProduct& b1, const BlaschkeProduct& b2,
                                     HarmonicSampleKind kind, const ExtractionConfig& cfg) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("mixing weight t must lie in [0,1]");
  const auto s1 = extract_coefficients(b1, cfg, kHarmonicRmax);
  const auto s2 = extract_coefficients(b2, cfg, kHarmonicRmax);
  const std::size_t n = s1.coeffs().size();
  const int shift_a = kind.zero_a0 ? 1 : 0;
  return assemble(scaled(s1.coeffs(), t, shift_a, n), scaled(s2.coeffs(), 1.0 - t, 1, n),
                  scaled_error(s1.coeff_error(), t, shift_a, n), scaled_error(s2.coeff_error(), 1.0 - t, 1, n),
                  false, kind.odd);
}

HarmonicCoeffs random_bounded_harmonic(CounterRng& rng, HarmonicSampleKind kind, const ExtractionConfig& cfg) {
  const double t = rng.uniform();
  const auto b1 = random_blaschke(rng.uniform_int(0, 6), rng);
  const auto b2 = random_blaschke(rng.uniform_int(0, 6), rng);
  return bounded_harmonic_from(t, b1, b2, kind, cfg);
}

HarmonicCoeffs random_bounded_harmonic(std::uint64_t seed, HarmonicSampleKind kind, const ExtractionConfig& cfg) {
  CounterRng rng(seed, 0);
  return random_bounded_harmonic(rng, kind, cfg);
}

HarmonicCoeffs pair_from(double t, const BlaschkeProduct& b1, const BlaschkeProduct& b2, bool force_g0_zero,
                         const ExtractionConfig& cfg) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("mixing weight t must lie in [0,1]");
  const auto s1 = extract_coefficients(b1, cfg, kHarmonicRmax);
  const auto s2 = extract_coefficients(b2, cfg, kHarmonicRmax);
  const std::size_t n = s1.coeffs().size();
  const int shift_b = force_g0_zero ? 1 : 0;
  return assemble(scaled(s1.coeffs(), t, 0, n), scaled(s2.coeffs(), 1.0 - t, shift_b, n),
                  scaled_error(s1.coeff_error(), t, 0, n), scaled_error(s2.coeff_error(), 1.0 - t, shift_b, n),
                  true, false);
}

HarmonicCoeffs random_pair(CounterRng& rng, bool force_g0_zero, const ExtractionConfig& cfg) {
  const double t = rng.uniform();
  const auto b1 = random_blaschke(rng.uniform_int(0, 6), rng);
  const auto b2 = random_blaschke(rng.uniform_int(0, 6), rng);
  return pair_from(t, b1, b2, force_g0_zero, cfg);
}

HarmonicCoeffs random_pair(std::uint64_t seed, bool force_g0_zero, const ExtractionConfig& cfg) {
  CounterRng rng(seed, 0);
  return random_pair(rng, force_g0_zero, cfg);
}

double parseval_budget(const HarmonicCoeffs& hc) {
  double acc = std::norm(hc.a()[0]) + std::norm(hc.b()[0]);
  for (std::size_t k = 1; k < hc.a().size(); ++k) acc += std::norm(hc.a()[k]) + std::norm(hc.b()[k]);
  return acc;
}

// ---------------------------------------------------------------- harmonic claims

namespace {

json describe_harmonic_draw(std::uint64_t seed, Stream tag, std::size_t i) {
  CounterRng rng(seed, stream_id(tag, i));
  const double t = rng.uniform();
  const auto b1 = random_blaschke(rng.uniform_int(0, 6), rng);
  const auto b2 = random_blaschke(rng.uniform_int(0, 6), rng);
  return json{{"sample", i}, {"t", t}, {"B1", describe_blaschke(b1)}, {"B2", describe_blaschke(b2)}};
}

HarmonicCoeffs harmonic_draw(std::uint64_t seed, Stream tag, std::size_t i, HarmonicSampleKind kind,
                             const ExtractionConfig& cfg) {
  CounterRng rng(seed, stream_id(tag, i));
  return random_bounded_harmonic(rng, kind, cfg);
}

HarmonicCoeffs pair_draw(std::uint64_t seed, Stream tag, std::size_t i, bool force, const ExtractionConfig& cfg) {
  CounterRng rng(seed, stream_id(tag, i));
  return random_pair(rng, force, cfg);
}

constexpr int kSubordinationAngles = 64;

double subordination_slack(const HarmonicCoeffs& hc) {
  double worst = kNotApplicable;
  for (double r : {0.2, 0.4, 0.6, 0.8}) {
    const double rhs = subordination_l1_bound(r);
    const double tail = hc.tail_at(r);
    for (int j = 0; j < kSubordinationAngles; ++j) {
      const Complex rot = std::polar(1.0, -2.0 * (2.0 * std::numbers::pi * j / kSubordinationAngles));
      double acc = 0.0;
      for (std::size_t k = hc.a().size(); k-- > 1;) {
        double term = std::abs(hc.a()[k] - rot * hc.b()[k]);
        if (!hc.term_error().empty()) term += hc.term_error()[k];
        acc = acc * r + term;
      }
      worst = std::max(worst, acc * r + tail - rhs);
    }
  }
  return worst;
}

}  // namespace

std::vector<VerificationReport> certify_harmonic(Exponent q, int n_samples, std::uint64_t seed, bool odd_only,
                                                 const HarnessOptions& opts) {
  const auto start = Clock::now();
  const auto& cfg = opts.extraction;
  const bool large_q = q.is_infinite() || q.value() >= 2.0;
  const bool small_q = !q.is_infinite() && q.value() <= 2.0;
  std::vector<VerificationReport> reports;

  if (odd_only) {
    const double rho = odd_harmonic_rho(q).value;
    using Slacks = std::array<double, 3>;
    const auto out = parallel_map<Slacks>(n_samples, opts.threads, [&](std::size_t i) {
      const auto hc = harmonic_draw(seed, Stream::harmonic_odd, i, {false, true}, cfg);
      Slacks s{};
      s[0] = std::max(p_bohr_sum(hc, q, rho / 2.0) - odd_coeff_sum_bound(q, rho / 2.0),
                      p_bohr_sum(hc, q, rho) - odd_coeff_sum_bound(q, rho));
      s[1] = p_bohr_sum(hc, q, rho) - 1.0;
      s[2] = subordination_slack(hc);
      return s;
    });
    const char* ids[] = {"odd_harmonic_coeff_sum_bound", "odd_harmonic_radius", "subordination_l1_bound"};
    for (int c = 0; c < 3; ++c) {
      SlackReduction red;
      for (std::size_t i = 0; i < out.size(); ++i) red.add(out[i][c], i);
      reports.push_back(finish(with_exponent(ids[c], q), red, opts.tol, seed, start, [&](std::size_t i) {
        auto w = describe_harmonic_draw(seed, Stream::harmonic_odd, i);
        w["odd"] = true;
        return w;
      }));
    }
    return reports;
  }

  const double threshold = small_q ? threshold_A(q.value()) : 0.0;
  using Slacks = std::array<double, 4>;
  const auto out = parallel_map<Slacks>(n_samples, opts.threads, [&](std::size_t i) {
    const auto hc = harmonic_draw(seed, Stream::harmonic, i, {}, cfg);
    const double a0 = std::abs(hc.a()[0]);
    Slacks s{kNotApplicable, kNotApplicable, kNotApplicable, kNotApplicable};
    for (int j = 1; j <= 10; ++j) {
      const double r = 0.09 * j;
      s[0] = std::max(s[0], p_bohr_sum_nonconstant(hc, q, r) - coeff_sum_bound(q, std::min(a0, 1.0), r));
    }
    if (large_q) {
      const auto z = harmonic_draw(seed, Stream::harmonic_zero_a0, i, {true, false}, cfg);
      s[1] = p_bohr_sum(z, q, 1.0 / std::numbers::sqrt2) - 1.0;
    }
    s[2] = p_bohr_sum(hc, q, harmonic_rp_a0(q, std::min(a0, 1.0)).value) - 1.0;
    if (small_q && a0 <= threshold) s[3] = p_bohr_sum(hc, q, 1.0 / 3.0) - 1.0;
    return s;
  });
  const char* ids[] = {"harmonic_coeff_sum_bound", "harmonic_zero_a0_radius", "harmonic_a0_radius",
                       "harmonic_a0_threshold"};
  for (int c = 0; c < 4; ++c) {
    if (c == 1 && !large_q) continue;
    if (c == 3 && !small_q) continue;
    const Stream tag = c == 1 ? Stream::harmonic_zero_a0 : Stream::harmonic;
    SlackReduction red;
    for (std::size_t i = 0; i < out.size(); ++i) red.add(out[i][c], i);
    reports.push_back(finish(with_exponent(ids[c], q), red, opts.tol, seed, start, [&](std::size_t i) {
      auto w = describe_harmonic_draw(seed, tag, i);
      w["zero_a0"] = c == 1;
      return w;
    }));
  }
  return reports;
}

std::vector<VerificationReport> certify_pairs(int n_samples, std::uint64_t seed, const HarnessOptions& opts,
                                              bool squared_constant) {
  const auto start = Clock::now();
  const auto& cfg = opts.extraction;
  using Slacks = std::array<double, 3>;
  const auto out = parallel_map<Slacks>(n_samples, opts.threads, [&](std::size_t i) {
    const auto with_zero = pair_draw(seed, Stream::pair_g0_zero, i, true, cfg);
    const auto free = pair_draw(seed, Stream::pair_free, i, false, cfg);
    Slacks s{kNotApplicable, kNotApplicable, kNotApplicable};
    s[0] = pair_l1_sum(with_zero, 1.0 / 3.0) - 1.0;
    s[1] = l2_combined_sum(free, 1.0 / 3.0) - 1.0;
    if (squared_constant) {
      const double c0 = std::norm(free.a()[0]) + std::norm(free.b()[0]);
      s[2] = c0 + p_bohr_sum_nonconstant(free, Exponent(2.0), 0.5) - 1.0;
    }
    return s;
  });
  const char* ids[] = {"pair_l1_sum", "pair_l2_sum", "pair_l2_squared_constant"};
  const Stream tags[] = {Stream::pair_g0_zero, Stream::pair_free, Stream::pair_free};
  std::vector<VerificationReport> reports;
  for (int c = 0; c < (squared_constant ? 3 : 2); ++c) {
    SlackReduction red;
    for (std::size_t i = 0; i < out.size(); ++i) red.add(out[i][c], i);
    reports.push_back(finish(ids[c], red, opts.tol, seed, start, [&](std::size_t i) {
      auto w = describe_harmonic_draw(seed, tags[c], i);
      w["pair"] = true;
      return w;
    }));
  }
  return reports;
}

std::vector<VerificationReport> pair_counterexample_check(double a, std::uint64_t seed, double tol) {
  const auto start = Clock::now();
  const auto [h, g] = pair_counterexample(a);
  const auto hc = HarmonicCoeffs::pair(h, g);
  const double r0 = pair_counterexample_radius(a);
  constexpr double kOffset = 1e-6;

  SlackReduction bounded;
  CounterRng rng(seed, stream_id(Stream::disk_points, 0));
  for (std::size_t i = 0; i < 1000; ++i) {
    const Complex z = std::polar(std::sqrt(rng.uniform()), rng.uniform(0.0, 2.0 * std::numbers::pi));
    bounded.add(std::abs(h.evaluate(z)) + std::abs(g.evaluate(z)) - 1.0, i);
  }
  bounded.add(p_bohr_sum(hc, Exponent(1.0), std::max(r0 - kOffset, 0.0)) - 1.0, 1000);

  SlackReduction exceeds;
  exceeds.add(p_bohr_sum(hc, Exponent(1.0), r0 + kOffset) - 1.0, 0);

  std::ostringstream suffix;
  suffix << "[a=" << a << "]";
  auto describe = [&](std::size_t i) { return json{{"a", a}, {"r0", r0}, {"probe", i}}; };
  return {finish("pair_counterexample_bounded" + suffix.str(), bounded, tol, seed, start, describe),
          finish("pair_counterexample_exceeds" + suffix.str(), exceeds, tol, seed, start, describe, true)};
}

std::vector<VerificationReport> lemma_grid_check(int p_max) {
  if (p_max < 1 || p_max > 16) throw ConfigError("lemma grid needs 1 <= p_max <= 16");
  const auto start = Clock::now();
  SlackReduction power;
  SlackReduction identity;
  std::vector<std::pair<int, int>> cells;
  for (int p = 1; p <= p_max; ++p) {
    for (int m = 0; m <= p; ++m) {
      const double r = solve_rpm(SymmetryClass(p, m)).value;
      const std::size_t idx = cells.size();
      cells.emplace_back(p, m);
      power.add(2.0 * std::pow(r, p + m) - 1.0, idx);
      const double lhs = (3.0 - 2.0 * std::numbers::sqrt2 * std::sqrt(1.0 - std::pow(r, 2 * p))) / std::pow(r, p - m);
      identity.add(std::abs(lhs - 1.0), idx);
    }
  }
  auto describe = [&](std::size_t i) { return json{{"p", cells[i].first}, {"m", cells[i].second}}; };
  return {finish("rpm_power_bound", power, 1e-12, 0, start, describe),
          finish("rpm_identity", identity, 1e-8, 0, start, describe)};
}

OddRadiusExploration explore_odd_harmonic_radius(Exponent q, int n_samples, std::uint64_t seed,
                                                 const HarnessOptions& opts) {
  const auto radii = parallel_map<double>(n_samples, opts.threads, [&](std::size_t i) {
    return p_bohr_radius_search(harmonic_draw(seed, Stream::odd_explore, i, {false, true}, opts.extraction), q).value;
  });
  OddRadiusExploration out;
  out.samples = radii.size();
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < out.smallest_radius) {
      out.smallest_radius = radii[i];
      out.smallest_index = i;
    }
  }
  out.f0_radius = p_bohr_radius_search(harmonic_sharp_f0(0.0, 0.0), q).value;
  out.guaranteed_radius = odd_harmonic_rho(q).value;
  return out;
}

std::vector<VerificationReport> run_all_claims(const BatchConfig& cfg) {
  std::vector<VerificationReport> all;
  auto append = [&all](std::vector<VerificationReport> more) {
    for (auto& r : more) all.push_back(std::move(r));
  };
  const auto& h = cfg.harness;
  append(lemma_grid_check(cfg.p_max_lemmas));
  all.push_back(lemma_c_suite(cfg.samples, cfg.seed, {0.2, 0.4, 0.6, 0.8, 1.0}, {1, 2, 3, 4}, h));
  all.push_back(wiener_suite(cfg.samples, cfg.seed, h));
  for (int p = 1; p <= cfg.p_max_analytic; ++p) {
    for (int m = 0; m <= p; ++m) {
      const SymmetryClass c(p, m);
      all.push_back(certify_analytic_class(c, cfg.samples, cfg.seed, h));
      all.push_back(certify_negative_control(c, cfg.samples, cfg.seed, h));
      const double delta = std::min(0.01, 0.999 - solve_rpm(c).value);
      all.push_back(sharpness_probe(c, delta, h.tol));
    }
  }
  for (const Exponent q : {Exponent(1.0), Exponent(1.5), Exponent(2.0), Exponent(3.0), Exponent::infinity()}) {
    append(certify_harmonic(q, cfg.samples, cfg.seed, false, h));
    append(certify_harmonic(q, cfg.samples, cfg.seed, true, h));
  }
  append(certify_pairs(cfg.samples, cfg.seed, h));
  for (double a : {1.0, 5.0, 10.0}) append(pair_counterexample_check(a, cfg.seed, h.tol));
  return all;
}

}  // namespace bohr
