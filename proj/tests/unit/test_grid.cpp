#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wavekin/error.hpp"
#include "wavekin/grid.hpp"

using namespace wavekin;

namespace {

const double kBound = (3.0 + std::sqrt(2.0)) / 2.0;

SpectralField random_field(const SpectralGrid& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SpectralField f(g);
  for (double& v : f.values) v = u(rng);
  return f;
}

// O(N^{2d}) transform straight from the definition.
std::vector<cplx> direct_dft(const SpectralField& f) {
  const SpectralGrid& g = f.grid;
  std::vector<cplx> out(g.size());
  for (std::size_t jf = 0; jf < g.size(); ++jf) {
    const ModeTuple j = g.mode_tuple(jf);
    cplx s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Vec3 k = g.node_point(i);
      double phase = 0.0;
      for (int a = 0; a < g.dim(); ++a) phase += j[a] * k[a];
      s += f.values[i] * std::polar(1.0, -std::numbers::pi / g.half_box() * phase);
    }
    out[jf] = s / static_cast<double>(g.size());
  }
  return out;
}

}  // namespace

TEST(Grid, DefaultsFollowTheBoxBound) {
  const SpectralGrid g = build_grid(2, 16, 5.0);
  EXPECT_NEAR(g.half_box(), 11.035533905932738, 1e-12);
  EXPECT_DOUBLE_EQ(g.interaction_radius(), 10.0);
  EXPECT_DOUBLE_EQ(g.spacing(), 2.0 * g.half_box() / 16);
  EXPECT_DOUBLE_EQ(g.node(0), -g.half_box());
  EXPECT_EQ(g.mode(0), -8);
  EXPECT_EQ(g.mode(15), 7);
  EXPECT_EQ(g.size(), 256u);
}

TEST(Grid, ThreeDimensionalSpacing) {
  const SpectralGrid g = build_grid(3, 8, 0.33);
  EXPECT_NEAR(g.spacing(), 2.0 * kBound * 0.33 / 8, 1e-15);
  EXPECT_EQ(g.size(), 512u);
}

TEST(Grid, RejectsBadArguments) {
  EXPECT_THROW(build_grid(2, 4, 1.0, 1.0), ValidationError);
  EXPECT_THROW(build_grid(2, 7, 1.0), ValidationError);
  EXPECT_THROW(build_grid(2, 2, 1.0), ValidationError);
  EXPECT_THROW(build_grid(2, 8, 0.0), ValidationError);
  EXPECT_THROW(build_grid(4, 8, 1.0), ValidationError);
  EXPECT_NO_THROW(build_grid(2, 8, 1.0, 3.0));
}

TEST(Grid, ErrorsAreDistinct) {
  auto message = [](auto fn) {
    try {
      fn();
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  const std::string odd = message([] { build_grid(2, 7, 1.0); });
  const std::string support = message([] { build_grid(2, 8, -1.0); });
  const std::string box = message([] { build_grid(2, 8, 1.0, 1.0); });
  EXPECT_NE(odd, support);
  EXPECT_NE(odd, box);
  EXPECT_NE(support, box);
}

TEST(Transform, ConstantField) {
  const SpectralGrid g = build_grid(2, 8, 1.0);
  SpectralField f(g);
  std::fill(f.values.begin(), f.values.end(), 3.5);
  const SpectralCoeffs c = to_coefficients(f);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const cplx expect = i == g.flat_of_mode({0, 0, 0}) ? 3.5 : 0.0;
    EXPECT_NEAR(std::abs(c.coeffs[i] - expect), 0.0, 1e-14);
  }
}

TEST(Transform, SinglePlaneWave) {
  const SpectralGrid g = build_grid(2, 8, 1.0);
  const ModeTuple j0{2, -3, 0};
  SpectralField re(g), im(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Vec3 k = g.node_point(i);
    const double ph = std::numbers::pi / g.half_box() * (j0[0] * k[0] + j0[1] * k[1]);
    re.values[i] = std::cos(ph);
    im.values[i] = std::sin(ph);
  }
  const SpectralCoeffs a = to_coefficients(re), b = to_coefficients(im);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const cplx c = a.coeffs[i] + cplx(0, 1) * b.coeffs[i];
    const cplx expect = g.mode_tuple(i) == j0 ? 1.0 : 0.0;
    EXPECT_NEAR(std::abs(c - expect), 0.0, 1e-14);
  }
}

TEST(Transform, MatchesDirectSum) {
  for (int dim : {2, 3}) {
    const SpectralGrid g = build_grid(dim, dim == 2 ? 8 : 6, 1.3);
    const SpectralField f = random_field(g, 7);
    const SpectralCoeffs fast = to_coefficients(f);
    const std::vector<cplx> slow = direct_dft(f);
    double scale = 0.0, err = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      scale = std::max(scale, std::abs(slow[i]));
      err = std::max(err, std::abs(slow[i] - fast.coeffs[i]));
    }
    EXPECT_LE(err, 1e-13 * scale) << "dim " << dim;
  }
}

TEST(Transform, RoundTrip) {
  const SpectralGrid g = build_grid(2, 16, 2.0);
  const SpectralField f = random_field(g, 3);
  double imag = -1.0;
  const SpectralField back = to_field(to_coefficients(f), &imag);
  double err = 0.0, norm = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    err = std::max(err, std::abs(back.values[i] - f.values[i]));
    norm = std::max(norm, std::abs(f.values[i]));
  }
  EXPECT_LE(err, 1e-12 * norm);
  EXPECT_LE(imag, 1e-12 * norm);
}

TEST(Transform, ZeroAndUnitCoefficients) {
  const SpectralGrid g = build_grid(3, 4, 1.0);
  SpectralCoeffs c(g);
  for (double v : to_field(c).values) EXPECT_EQ(v, 0.0);
  c.at({0, 0, 0}) = 1.0;
  for (double v : to_field(c).values) EXPECT_NEAR(v, 1.0, 1e-15);
}

TEST(Transform, Parseval) {
  const SpectralGrid g = build_grid(2, 16, 1.0);
  const SpectralField f = random_field(g, 11);
  const SpectralCoeffs c = to_coefficients(f);
  double lhs = 0.0, rhs = 0.0;
  for (double v : f.values) lhs += v * v;
  lhs /= static_cast<double>(g.size());
  for (const cplx& v : c.coeffs) rhs += std::norm(v);
  EXPECT_NEAR(lhs, rhs, 1e-12 * lhs);
}

TEST(Transform, Linearity) {
  const SpectralGrid g = build_grid(2, 8, 1.0);
  const SpectralField f = random_field(g, 1), h = random_field(g, 2);
  SpectralField mix(g);
  for (std::size_t i = 0; i < g.size(); ++i) mix.values[i] = 2.5 * f.values[i] - 0.75 * h.values[i];
  const SpectralCoeffs cf = to_coefficients(f), ch = to_coefficients(h), cm = to_coefficients(mix);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_NEAR(std::abs(cm.coeffs[i] - (2.5 * cf.coeffs[i] - 0.75 * ch.coeffs[i])), 0.0, 1e-14);
  }
}

TEST(Transform, RealFieldIsHermitian) {
  const SpectralGrid g = build_grid(3, 6, 1.0);
  EXPECT_LE(hermitian_defect(to_coefficients(random_field(g, 5))), 1e-15);
}

TEST(Transform, ShapeMismatch) {
  const SpectralGrid g = build_grid(2, 8, 1.0);
  EXPECT_THROW(SpectralField(g, std::vector<double>(10)), ValidationError);
  EXPECT_THROW(SpectralCoeffs(g, std::vector<cplx>(10)), ValidationError);
}

TEST(Grid, OutsideSupportDiagnostic) {
  const SpectralGrid g = build_grid(2, 16, 1.0);
  SpectralField f(g);
  f.values[g.flatten({8, 8, 0})] = 1.0;  // origin
  EXPECT_EQ(mass_fraction_outside_support(f), 0.0);
  f.values[0] = 1.0;  // corner
  EXPECT_DOUBLE_EQ(mass_fraction_outside_support(f), 0.5);
}
