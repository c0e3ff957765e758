#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wavekin/cli_io.hpp"
#include "wavekin/error.hpp"
#include "wavekin/kernel.hpp"

using namespace wavekin;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const SpectralCoeffs& c) {
  double m = 0.0;
  for (const cplx& v : c.coeffs) m = std::max(m, std::abs(v));
  return m;
}

double max_diff(const SpectralCoeffs& a, const SpectralCoeffs& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) m = std::max(m, std::abs(a.coeffs[i] - b.coeffs[i]));
  return m;
}

// A 2D rule with no antipodal pairs: midpoint angles rotated by a third of a cell
// for odd nodes only.
SphericalRule lopsided_circle(int count) {
  std::ostringstream text;
  text.precision(17);
  for (int p = 0; p < count; ++p) {
    const double th = 2 * kPi * (p + (p % 2 ? 0.8 : 0.5)) / count;
    text << std::cos(th) << " " << std::sin(th) << " 0\n";
  }
  std::istringstream in(text.str());
  SphericalRule rule = read_spherical_rule(in);
  rule.dim = 2;
  for (double& w : rule.weights) w = 2 * kPi / count;
  classify_antipodes(rule);
  return rule;
}

}  // namespace

TEST(Phase, Entries) {
  const SpectralGrid g = build_grid(2, 8, 1.0);
  for (cplx v : phase_vector(g, 0.0, {0.6, 0.8, 0.0}, PhaseScale::full, PhaseSign::minus)) {
    EXPECT_EQ(v, cplx(1.0));
  }
  const auto v = phase_vector(g, 1.3, {0.6, 0.8, 0.0}, PhaseScale::half, PhaseSign::plus);
  EXPECT_EQ(v[g.flat_of_mode({0, 0, 0})], cplx(1.0));
  const cplx e = phase_entry(g, 1.0, {1.0, 0.0, 0.0}, PhaseScale::half, PhaseSign::minus, {2, 0, 0});
  EXPECT_NEAR(std::abs(e - std::polar(1.0, -kPi / g.half_box())), 0.0, 1e-15);
  EXPECT_THROW(phase_vector(g, 1.0, {1.0, 1.0, 0.0}, PhaseScale::half, PhaseSign::minus), ValidationError);
}

TEST(WeightG, ConstantIntegrand) {
  for (int dim : {2, 3}) {
    const SpectralGrid g = build_grid(dim, 4, 5.0);
    const KernelPlan plan = make_plan(g, 8, dim == 2 ? 12 : 6, dim == 2 ? 12 : 6);
    const double R = g.interaction_radius();
    const double closed = dim == 2 ? 2 * kPi * kPi * R * R : 4 * kPi * kPi * std::pow(R, 4);
    const cplx g1 = weight_G(Term::K1, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, plan);
    EXPECT_NEAR(std::abs(g1 - closed), 0.0, 1e-12 * closed);
  }
}

TEST(WeightG, MatchesAdaptiveIntegration) {
  // G1 = int_0^R r dr [int dtheta e^{-i c r v.qhat}] [int dtheta e^{+i c r u.sigma}]
  // with c = pi / (2L), v = 2m + l + n, u = l - n. Each circle integral is
  // 2 pi J0(c r |w|); the radial integral is done adaptively.
  const SpectralGrid g = build_grid(2, 8, 5.0);
  const KernelPlan plan = make_plan(g, 32, 64, 64);
  const ModeTuple l{1, 0, 0}, m{0, 1, 0}, n{-1, 0, 0};
  const double c = kPi / (2 * g.half_box());
  const double v = std::hypot(2.0 * m[0] + l[0] + n[0], 2.0 * m[1] + l[1] + n[1]);
  const double u = std::hypot(1.0 * l[0] - n[0], 1.0 * l[1] - n[1]);
  const double oracle = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      [&](double r) {
        return r * 4 * kPi * kPi * std::cyl_bessel_j(0.0, c * r * v) * std::cyl_bessel_j(0.0, c * r * u);
      },
      0.0, g.interaction_radius(), 15, 1e-14);
  const cplx g1 = weight_G(Term::K1, l, m, n, plan);
  EXPECT_NEAR(std::abs(g1 - oracle), 0.0, 1e-6 * std::abs(oracle)) << g1 << " vs " << oracle;
}

TEST(WeightG, TermsIgnoreTheirUnusedIndex) {
  const SpectralGrid g = build_grid(2, 8, 1.0);
  const KernelPlan plan = make_plan(g, 6, 12, 12);
  const ModeTuple a{1, -2, 0}, b{3, 0, 0}, c{-1, 1, 0}, z{-4, 3, 0};
  EXPECT_EQ(weight_G(Term::K2, a, b, c, plan), weight_G(Term::K2, z, b, c, plan));
  EXPECT_EQ(weight_G(Term::K3, a, b, c, plan), weight_G(Term::K3, a, z, c, plan));
  EXPECT_EQ(weight_G(Term::K4, a, b, c, plan), weight_G(Term::K4, a, b, z, plan));
  EXPECT_THROW(weight_G(Term::K1, {4, 0, 0}, b, c, plan), ValidationError);
}

TEST(Direct, ZeroAndHomogeneity) {
  const SpectralGrid g = build_grid(2, 8, 1.0);
  const KernelPlan plan = make_plan(g, 8, 12, 12);
  EXPECT_EQ(max_abs(apply_K_direct(SpectralCoeffs(g), plan)), 0.0);
  const SpectralCoeffs c = random_hermitian_coeffs(g, 4);
  SpectralCoeffs scaled = c;
  const double lambda = 1.7;
  for (cplx& v : scaled.coeffs) v *= lambda;
  const SpectralCoeffs k1 = apply_K_direct(c, plan), k2 = apply_K_direct(scaled, plan);
  double err = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    err = std::max(err, std::abs(k2.coeffs[i] - lambda * lambda * lambda * k1.coeffs[i]));
  }
  EXPECT_LE(err, 1e-12 * max_abs(k2));
}

TEST(Direct, Guard) {
  EXPECT_TRUE(direct_evaluation_allowed(build_grid(2, 16, 1.0)));
  EXPECT_FALSE(direct_evaluation_allowed(build_grid(2, 18, 1.0)));
  EXPECT_TRUE(direct_evaluation_allowed(build_grid(3, 8, 1.0)));
  EXPECT_FALSE(direct_evaluation_allowed(build_grid(3, 10, 1.0)));
  const SpectralGrid g = build_grid(3, 10, 1.0);
  const KernelPlan plan = make_plan(g, 2, 6, 6);
  EXPECT_THROW(apply_K_direct(SpectralCoeffs(g), plan), ValidationError);
}

class FastVsDirect : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FastVsDirect, ExactModeMatches) {
  const auto [dim, n] = GetParam();
  const SpectralGrid g = build_grid(dim, n, 1.0);
  const KernelPlan ref = make_plan(g, n, dim == 2 ? 12 : 6, dim == 2 ? 12 : 6);
  KernelPlan plan = make_plan(g, n, dim == 2 ? 12 : 6, dim == 2 ? 12 : 6);
  for (std::uint64_t seed : {1u, 2u}) {
    const SpectralCoeffs c = random_hermitian_coeffs(g, seed);
    const SpectralCoeffs direct = apply_K_direct(c, ref);
    const SpectralCoeffs fast = apply_K_fast(c, plan);
    EXPECT_LE(max_diff(direct, fast), 1e-12 * max_abs(direct)) << "seed " << seed;
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, FastVsDirect,
                         ::testing::Values(std::pair{2, 4}, std::pair{2, 6}, std::pair{2, 8},
                                           std::pair{3, 4}, std::pair{3, 6}));

TEST(Fast, EachTermMatchesDirect) {
  for (int dim : {2, 3}) {
    const SpectralGrid g = build_grid(dim, dim == 2 ? 8 : 4, 1.0);
    KernelPlan plan = make_plan(g, 5, dim == 2 ? 8 : 12, dim == 2 ? 8 : 12);
    const SpectralCoeffs c = random_hermitian_coeffs(g, 9);
    for (Term t : kAllTerms) {
      const SpectralCoeffs direct = apply_term_direct(t, c, plan);
      const SpectralCoeffs fast = apply_term_fast(t, c, plan);
      EXPECT_LE(max_diff(direct, fast), 1e-12 * max_abs(direct)) << to_string(t) << " dim " << dim;
    }
  }
}

TEST(Fast, FusedEqualsSumOfTerms) {
  const SpectralGrid g = build_grid(2, 8, 1.0);
  KernelPlan plan = make_plan(g, 6, 12, 12);
  const SpectralCoeffs c = random_hermitian_coeffs(g, 12);
  SpectralCoeffs sum(g);
  const double sign[4] = {0.5, -0.5, 0.5, -0.5};
  for (Term t : kAllTerms) {
    const SpectralCoeffs k = apply_term_fast(t, c, plan);
    for (std::size_t i = 0; i < g.size(); ++i) sum.coeffs[i] += sign[static_cast<int>(t)] * k.coeffs[i];
  }
  const SpectralCoeffs fused = apply_K_fast(c, plan);
  EXPECT_LE(max_diff(sum, fused), 1e-12 * max_abs(sum));
}

TEST(Fast, NonAntipodalAndMixedRules) {
  const SpectralGrid g = build_grid(2, 6, 1.0);
  const SphericalRule odd = lopsided_circle(10);
  ASSERT_FALSE(odd.antipodal);
  const SpectralCoeffs c = random_hermitian_coeffs(g, 3);
  KernelPlan a(g, gauss_legendre_radial(5, 2.0), circle_midpoint(12), odd);
  KernelPlan b(g, gauss_legendre_radial(5, 2.0), odd, circle_midpoint(8));
  for (KernelPlan* plan : {&a, &b}) {
    const SpectralCoeffs direct = apply_K_direct(c, *plan);
    EXPECT_LE(max_diff(direct, apply_K_fast(c, *plan)), 1e-12 * max_abs(direct));
  }
}

TEST(Fast, ThreadsAgreeWithSerial) {
  const SpectralGrid g = build_grid(2, 16, 1.0);
  const SpectralCoeffs c = random_hermitian_coeffs(g, 5);
  KernelPlan serial = make_plan(g, 16, 12, 12, ConvMode::exact, 1);
  KernelPlan parallel = make_plan(g, 16, 12, 12, ConvMode::exact, 3);
  const SpectralCoeffs a = apply_K_fast(c, serial), b = apply_K_fast(c, parallel);
  EXPECT_LE(max_diff(a, b), 1e-13 * max_abs(a));
  EXPECT_EQ(max_diff(a, apply_K_fast(c, serial)), 0.0);  // repeatable
}

TEST(Fast, PaddedLength) {
  const SpectralGrid g = build_grid(2, 16, 1.0);
  EXPECT_EQ(make_plan(g, 4, 12, 12).padded_length(), 48);
  EXPECT_GE(make_plan(build_grid(2, 10, 1.0), 4, 12, 12).padded_length(), 28);
  EXPECT_EQ(make_plan(g, 4, 12, 12, ConvMode::circular).padded_length(), 16);
  EXPECT_EQ(convenient_fft_length(3 * 32 - 2), 96);
  EXPECT_EQ(convenient_fft_length(3 * 64 - 2), 192);
}

TEST(Fast, CircularModeAliases) {
  const SpectralGrid g = build_grid(2, 8, 1.0);
  KernelPlan exact = make_plan(g, 6, 12, 12);
  KernelPlan circ = make_plan(g, 6, 12, 12, ConvMode::circular);
  const SpectralCoeffs c = random_hermitian_coeffs(g, 8);
  const SpectralCoeffs a = apply_K_fast(c, exact);
  EXPECT_GT(max_diff(a, apply_K_fast(c, circ)), 1e-6 * max_abs(a));
}

TEST(Invariants, CubicHomogeneityAndReality) {
  const SpectralGrid g = build_grid(3, 6, 1.0);
  KernelPlan plan = make_plan(g, 6, 12, 12);
  const SpectralCoeffs c = random_hermitian_coeffs(g, 21);
  SpectralCoeffs neg = c;
  for (cplx& v : neg.coeffs) v *= -2.0;
  const SpectralCoeffs k = apply_K_fast(c, plan), kn = apply_K_fast(neg, plan);
  double err = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) err = std::max(err, std::abs(kn.coeffs[i] + 8.0 * k.coeffs[i]));
  EXPECT_LE(err, 1e-12 * max_abs(kn));
  EXPECT_LE(hermitian_defect(k), 1e-12 * max_abs(k));
}

TEST(Invariants, MassConservedWithIdenticalSymmetricRules) {
  for (int dim : {2, 3}) {
    const SpectralGrid g = build_grid(dim, 8, 1.0);
    KernelPlan plan = make_plan(g, 8, dim == 2 ? 12 : 12, dim == 2 ? 12 : 12);
    const SpectralCoeffs c = random_hermitian_coeffs(g, 2);
    double largest = 0.0;
    for (Term t : kAllTerms) largest = std::max(largest, std::abs(apply_term_fast(t, c, plan).at({0, 0, 0})));
    const cplx k0 = apply_K_fast(c, plan).at({0, 0, 0});
    EXPECT_LE(std::abs(k0), 1e-12 * largest) << "dim " << dim;
  }
}

TEST(Invariants, MassOnlyApproximatelyConservedWithDifferentRules) {
  const SpectralGrid g = build_grid(2, 8, 1.0);
  KernelPlan same = make_plan(g, 8, 12, 12);
  KernelPlan mixed = make_plan(g, 8, 12, 8);
  const SpectralCoeffs c = random_hermitian_coeffs(g, 2);
  double largest = 0.0;
  for (Term t : kAllTerms) largest = std::max(largest, std::abs(apply_term_fast(t, c, mixed).at({0, 0, 0})));
  const double k0_same = std::abs(apply_K_fast(c, same).at({0, 0, 0}));
  const double k0_mixed = std::abs(apply_K_fast(c, mixed).at({0, 0, 0}));
  EXPECT_GT(k0_mixed, 1e-10 * largest);
  EXPECT_GT(k0_mixed, 100.0 * k0_same);
}

TEST(Collision, ZeroFieldAndDeltaRingMass) {
  const SpectralGrid g = build_grid(2, 16, 0.33);
  KernelPlan plan = make_plan(g, 16, 12, 12);
  double imag = -1.0;
  for (double v : collision(SpectralField(g), plan, &imag).values) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(imag, 0.0);

  const SpectralField ring = delta_ring(g, {{0.0, 1.0 / 3}, {0.2, 1.0 / 3}}, default_ring_width(g));
  const SpectralCoeffs c = to_coefficients(ring);
  const SpectralCoeffs k = apply_K_fast(c, plan);
  double largest = 0.0;
  for (Term t : kAllTerms) largest = std::max(largest, std::abs(apply_term_fast(t, c, plan).at({0, 0, 0})));
  EXPECT_GT(max_abs(k), 0.0);
  EXPECT_LE(std::abs(k.at({0, 0, 0})), 1e-12 * largest);
}
