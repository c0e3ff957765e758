#pragma once

#include <istream>
#include <string>
#include <vector>

#include "wavekin/grid.hpp"

namespace wavekin {

/// Gauss-Legendre rule on [0, R] for the radial variable |q|.
struct RadialRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  double radius = 0.0;
};

/// Quadrature on the unit circle (dim 2) or unit sphere (dim 3).
///
/// `antipode[i]` is the index of the node equal to -nodes[i] (bitwise), or -1.
/// `antipodal` is true iff every node has an antipode carrying the same weight.
/// `strength` is the largest harmonic degree the rule integrates exactly
/// (-1 when unknown, e.g. for rules read from a file).
struct SphericalRule {
  int dim = 3;
  std::vector<Vec3> nodes;
  std::vector<double> weights;
  std::vector<int> antipode;
  bool antipodal = false;
  int strength = -1;
  std::string provenance;

  std::size_t size() const { return nodes.size(); }
};

RadialRule gauss_legendre_radial(int count, double radius);

/// Equal-weight midpoint rule at angles 2 pi (p + 1/2) / count; count even.
SphericalRule circle_midpoint(int count);

/// Embedded equal-weight spherical t-design with `count` nodes.
SphericalRule spherical_design(int count);

std::vector<int> available_design_sizes();

/// Node-table text format: one "x y z [w]" row per node, '#' starts a comment.
/// Missing weights mean equal weights summing to 4 pi.
SphericalRule read_spherical_rule(std::istream& in, const std::string& source = "stream");
SphericalRule load_spherical_rule(const std::string& path);

/// Recomputes `antipode` and `antipodal` from the node/weight arrays.
void classify_antipodes(SphericalRule& rule);

/// Real spherical harmonic of degree l, order m (|m| <= l) at a unit vector.
/// cos(m phi) terms for m >= 0, sin(|m| phi) for m < 0, orthonormal on the sphere.
double real_spherical_harmonic(int l, int m, const Vec3& x);

/// Largest |rule(Y)| over all real harmonics of the given degree (circle:
/// cos/sin of degree*theta).
double harmonic_defect(const SphericalRule& rule, int degree);

/// Largest degree t <= max_degree such that every harmonic of degree 1..t
/// integrates to at most tol in magnitude.
int measured_strength(const SphericalRule& rule, int max_degree, double tol = 1e-12);

}  // namespace wavekin
