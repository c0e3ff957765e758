#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "wavekin/error.hpp"
#include "wavekin/evolve.hpp"
#include "wavekin/states.hpp"

using namespace wavekin;

namespace {

double norm(const Vec3& k) { return std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]); }

}  // namespace

TEST(RayleighJeans, MatchesFormula) {
  const SpectralGrid g = build_grid(2, 16, 5.0);
  const SpectralField f = rayleigh_jeans(g, {50.0, {5.0, 5.0}, 100.0});
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Vec3 k = g.node_point(i);
    const double expect = 1.0 / (50.0 + 5.0 * k[0] + 5.0 * k[1] + 100.0 * (k[0] * k[0] + k[1] * k[1]));
    EXPECT_DOUBLE_EQ(f.values[i], expect);
  }
  EXPECT_DOUBLE_EQ(f.values[g.flat_of_mode({0, 0, 0})], 1.0 / 50.0);  // node at k = 0
}

TEST(RayleighJeans, ConstantAndThreeD) {
  for (double v : rayleigh_jeans(build_grid(2, 8, 1.0), {1.0, {}, 0.0}).values) EXPECT_EQ(v, 1.0);
  const SpectralGrid g = build_grid(3, 8, 5.0);
  const SpectralField f = rayleigh_jeans(g, {10.0, {5.0, 5.0, 0.0}, 20.0});
  for (double v : f.values) EXPECT_GT(v, 0.0);
}

TEST(RayleighJeans, PositivityViolationNamesNode) {
  const SpectralGrid g = build_grid(2, 8, 1.0);
  try {
    rayleigh_jeans(g, {0.1, {5.0, 0.0}, 0.0});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("node"), std::string::npos) << e.what();
  }
  EXPECT_THROW(rayleigh_jeans(g, {1.0, {1.0, 2.0, 3.0}, 0.0}), ValidationError);  // wrong length
}

TEST(BiMaxwellian, ContinuumMoments) {
  // The default box for S = 3 has L = 6.62, which cuts off about 2.5e-6 of the
  // energy of the T = 3/2 branch. A wider box isolates the discretization.
  const SpectralGrid g = build_grid(2, 64, 3.0, 12.0);
  const SpectralField f = bi_maxwellian(g, {});
  const ObservableRecord rec = observables(f);
  EXPECT_NEAR(rec.mass, 1.0, 1e-6);
  // d (rho1 T1 + rho2 T2) / 2 for the half-space split.
  EXPECT_NEAR(rec.energy, 2.0, 1e-6);
  for (double v : f.values) EXPECT_GT(v, 0.0);
}

TEST(BiMaxwellian, DefaultBoxMatchesTruncatedIntegrals) {
  const SpectralGrid g = build_grid(2, 64, 3.0);
  const double L = g.half_box();
  // Closed-form moments of the two half-plane Gaussians restricted to [-L, L]^2.
  auto m0 = [](double T, double a, double b) {
    return std::sqrt(std::numbers::pi * T / 2) * (std::erf(b / std::sqrt(2 * T)) - std::erf(a / std::sqrt(2 * T)));
  };
  auto m2 = [&](double T, double a, double b) {
    return T * m0(T, a, b) - T * (b * std::exp(-b * b / (2 * T)) - a * std::exp(-a * a / (2 * T)));
  };
  const BiMaxwellianParams p;
  double mass = 0.0, energy = 0.0;
  for (auto [rho, T] : {std::pair{p.rho1, p.T1}, std::pair{p.rho2, p.T2}}) {
    const double c = rho / (2 * std::numbers::pi * T);
    mass += c * m0(T, 0, L) * m0(T, -L, L);
    energy += c * (m2(T, 0, L) * m0(T, -L, L) + m0(T, 0, L) * m2(T, -L, L));
  }
  const ObservableRecord rec = observables(bi_maxwellian(g, p));
  EXPECT_NEAR(rec.mass, mass, 1e-7);
  EXPECT_NEAR(rec.energy, energy, 1e-6);
  EXPECT_NEAR(rec.mass, 1.0, 1e-6);
}

TEST(BiMaxwellian, MomentsConvergeWithN) {
  double prev = 10.0;
  for (int n : {8, 16, 32}) {
    const SpectralGrid g = build_grid(2, n, 3.0, 12.0);
    const double err = std::abs(observables(bi_maxwellian(g, {})).energy - 2.0);
    EXPECT_LT(err, prev) << n;
    prev = err;
  }
}

TEST(BiMaxwellian, EqualBranchesGiveGaussian) {
  const SpectralGrid g = build_grid(3, 8, 2.0);
  const SpectralField a = bi_maxwellian(g, {0.7, 0.7, 1.3, 1.3});
  const SpectralField b = gaussian(g, {}, 1.3, 0.7);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-15);
}

TEST(BiMaxwellian, SplitPlaneTakesAverage) {
  const SpectralGrid g = build_grid(2, 8, 2.0);
  const BiMaxwellianParams p;
  const SpectralField f = bi_maxwellian(g, p);
  const std::size_t i = g.flat_of_mode({0, 1, 0});  // k_1 = 0 plane
  const double k2 = std::pow(g.node_point(i)[1], 2);
  auto branch = [&](double rho, double T) { return rho / (2 * std::numbers::pi * T) * std::exp(-k2 / (2 * T)); };
  EXPECT_DOUBLE_EQ(f.values[i], 0.5 * (branch(p.rho1, p.T1) + branch(p.rho2, p.T2)));
  EXPECT_THROW(bi_maxwellian(g, {1.0, -1.0, 1.0, 1.0}), ValidationError);
}

TEST(DeltaRing, PeakAndSupport) {
  const SpectralGrid g = build_grid(2, 64, 0.33);
  const double u = default_ring_width(g);
  EXPECT_DOUBLE_EQ(u, 0.5 * std::sqrt(g.spacing()));
  const SpectralField f = delta_ring(g, {{0.0, 1.0 / 3}}, u);
  EXPECT_DOUBLE_EQ(f.values[g.flat_of_mode({0, 0, 0})], 1.0 / 3 / u);  // (1 + cos 0) / (2u) = 1/u
  const SpectralField narrow = delta_ring(g, {{0.2, 1.0}}, 0.01);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = norm(g.node_point(i));
    if (std::abs(r - 0.2) > 0.01) EXPECT_EQ(narrow.values[i], 0.0);
    EXPECT_GE(narrow.values[i], 0.0);
  }
  EXPECT_THROW(delta_ring(g, {{0.0, 1.0}}, 0.0), ValidationError);
}

TEST(DeltaRing, PeakValueAtRadius) {
  // A ring whose radius passes exactly through a node.
  const SpectralGrid g = build_grid(2, 16, 1.0);
  const double r = norm(g.node_point(g.flat_of_mode({0, 3, 0})));
  const SpectralField f = delta_ring(g, {{r, 2.0}}, 0.1);
  EXPECT_NEAR(f.values[g.flat_of_mode({0, 3, 0})], 2.0 / 0.1, 1e-12);
}

TEST(KZ, ValuesAndDecay) {
  const SpectralGrid g = build_grid(2, 32, 4.0);
  const SpectralField f = kz_state(g, kKZInverseCascade, 1.0);
  EXPECT_DOUBLE_EQ(f.values[g.flat_of_mode({0, 0, 0})], 1.0);
  const SpectralField h = kz_state(g, kKZDirectCascade, 1e-3);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Vec3 k = g.node_point(i);
    const double r = norm(k);
    EXPECT_DOUBLE_EQ(f.values[i], std::pow(r * r / 2 + 1.0, -7.0 / 6.0));
    if (r > 5.0) EXPECT_NEAR(h.values[i] * std::pow(r, 3), std::pow(2.0, 1.5), 1e-3);
  }
  EXPECT_THROW(kz_state(g, 1.0, 1.0), ValidationError);
  EXPECT_THROW(kz_state(g, kKZInverseCascade, 0.0), ValidationError);
}

TEST(KZ, MonotoneRadialDecay) {
  const SpectralGrid g = build_grid(2, 32, 4.0);
  const SpectralField f = kz_state(g, kKZDirectCascade, 0.1);
  for (int j = 1; j < 15; ++j) {
    EXPECT_GT(f.values[g.flat_of_mode({j, 0, 0})], f.values[g.flat_of_mode({j + 1, 0, 0})]);
  }
}

TEST(Gaussian, MassAndSymmetry) {
  const SpectralGrid g = build_grid(3, 32, 3.0);
  const SpectralField f = gaussian(g, {0.5, -0.25, 0.0}, 0.5, 2.0);
  EXPECT_NEAR(observables(f).mass, 2.0, 1e-9);
  const SpectralGrid g2 = build_grid(2, 32, 3.0);
  const ObservableRecord centered = observables(gaussian(g2, {}, 0.7, 1.0));
  EXPECT_NEAR(centered.momentum[0], 0.0, 1e-12);  // only the -L face is unpaired
  EXPECT_THROW(gaussian(g2, {}, 0.0, 1.0), ValidationError);
  EXPECT_THROW(gaussian(g2, {}, 1.0, -1.0), ValidationError);
}

TEST(Gaussian, SumIsAnisotropic) {
  const SpectralGrid g = build_grid(2, 32, 3.0);
  const SpectralField f = gaussian_sum(g, {{{1.0, 0.0}, 0.3, 1.0}, {{-0.5, 0.8}, 0.2, 0.5}});
  const SpectralField a = gaussian(g, {1.0, 0.0}, 0.3, 1.0);
  const SpectralField b = gaussian(g, {-0.5, 0.8}, 0.2, 0.5);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_DOUBLE_EQ(f.values[i], a.values[i] + b.values[i]);
  const ObservableRecord rec = observables(f);
  EXPECT_NEAR(rec.momentum[0], 1.0 - 0.25, 1e-6);
  EXPECT_NEAR(rec.momentum[1], 0.4, 1e-6);
}
