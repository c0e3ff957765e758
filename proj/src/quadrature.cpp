#include "wavekin/quadrature.hpp"

#include <algorithm>
#include <boost/math/special_functions/spherical_harmonic.hpp>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "spherical_design_tables.hpp"
#include "wavekin/error.hpp"

namespace wavekin {

namespace {

constexpr double kPi = std::numbers::pi;

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

RadialRule gauss_legendre_radial(int count, double radius) {
  if (count < 1) throw ValidationError("radial rule needs at least one node");
  if (!(radius > 0.0)) throw ValidationError("radial rule needs a positive radius");

  RadialRule rule;
  rule.radius = radius;
  rule.nodes.assign(count, 0.0);
  rule.weights.assign(count, 0.0);
  if (count == 1) {
    rule.nodes[0] = 0.5 * radius;
    rule.weights[0] = radius;
    return rule;
  }

  // Newton on the positive roots, mirrored for the negative half so that the
  // rule on [-1, 1] is exactly symmetric.
  std::vector<double> x(count), w(count);
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (count + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre_with_derivative(count, z);
      const double dz = p / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const auto [p, dp] = legendre_with_derivative(count, z);
    (void)p;
    const double wt = 2.0 / ((1.0 - z * z) * dp * dp);
    x[i] = -z;
    x[count - 1 - i] = z;
    w[i] = wt;
    w[count - 1 - i] = wt;
  }
  if (count % 2 == 1) x[count / 2] = 0.0;

  for (int i = 0; i < count; ++i) {
    rule.nodes[i] = 0.5 * radius * (x[i] + 1.0);
    rule.weights[i] = 0.5 * radius * w[i];
  }
  return rule;
}

SphericalRule circle_midpoint(int count) {
  if (count < 2 || count % 2 != 0) {
    throw ValidationError("circle midpoint rule needs an even node count >= 2, got " +
                          std::to_string(count));
  }
  SphericalRule rule;
  rule.dim = 2;
  rule.nodes.resize(count);
  rule.weights.assign(count, 2.0 * kPi / count);
  const int half = count / 2;
  for (int p = 0; p < half; ++p) {
    const double theta = 2.0 * kPi * (p + 0.5) / count;
    rule.nodes[p] = {std::cos(theta), std::sin(theta), 0.0};
  }
  // theta + pi, stored as the exact negation.
  for (int p = half; p < count; ++p) {
    const Vec3& v = rule.nodes[p - half];
    rule.nodes[p] = {-v[0], -v[1], 0.0};
  }
  rule.strength = count - 1;
  rule.provenance = "midpoint rule, " + std::to_string(count) + " angles";
  classify_antipodes(rule);
  return rule;
}

std::vector<int> available_design_sizes() {
  std::vector<int> sizes;
  for (const auto& t : detail::design_tables()) sizes.push_back(t.size);
  return sizes;
}

SphericalRule spherical_design(int count) {
  for (const auto& table : detail::design_tables()) {
    if (table.size != count) continue;
    SphericalRule rule;
    rule.dim = 3;
    rule.nodes.resize(count);
    for (int i = 0; i < count; ++i) {
      rule.nodes[i] = {table.xyz[3 * i], table.xyz[3 * i + 1], table.xyz[3 * i + 2]};
    }
    rule.weights.assign(count, 4.0 * kPi / count);
    rule.strength = table.strength;
    rule.provenance = table.provenance;
    classify_antipodes(rule);
    return rule;
  }
  std::ostringstream os;
  os << "no spherical design with " << count << " nodes; available sizes:";
  for (int s : available_design_sizes()) os << ' ' << s;
  throw ValidationError(os.str());
}

void classify_antipodes(SphericalRule& rule) {
  const std::size_t n = rule.nodes.size();
  rule.antipode.assign(n, -1);
  bool all = n > 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = rule.nodes[i];
    for (std::size_t k = 0; k < n; ++k) {
      const Vec3& b = rule.nodes[k];
      if (a[0] == -b[0] && a[1] == -b[1] && a[2] == -b[2]) {
        rule.antipode[i] = static_cast<int>(k);
        break;
      }
    }
    if (rule.antipode[i] < 0 || rule.weights[rule.antipode[i]] != rule.weights[i]) all = false;
  }
  rule.antipodal = all;
}

SphericalRule read_spherical_rule(std::istream& in, const std::string& source) {
  SphericalRule rule;
  rule.dim = 3;
  std::string line;
  int lineno = 0;
  int with_weight = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::vector<double> vals;
    double v;
    while (row >> v) vals.push_back(v);
    if (!row.eof()) {
      throw ValidationError(source + ":" + std::to_string(lineno) + ": unparsable number");
    }
    if (vals.empty()) continue;
    if (vals.size() != 3 && vals.size() != 4) {
      throw ValidationError(source + ":" + std::to_string(lineno) + ": expected 'x y z [w]'");
    }
    const int has_w = vals.size() == 4 ? 1 : 0;
    if (with_weight >= 0 && with_weight != has_w) {
      throw ValidationError(source + ":" + std::to_string(lineno) +
                            ": weights must be given on every row or on none");
    }
    with_weight = has_w;
    const double norm = std::sqrt(vals[0] * vals[0] + vals[1] * vals[1] + vals[2] * vals[2]);
    if (std::abs(norm - 1.0) > 1e-6) {
      throw ValidationError(source + ":" + std::to_string(lineno) + ": node is not a unit vector");
    }
    rule.nodes.push_back({vals[0] / norm, vals[1] / norm, vals[2] / norm});
    if (has_w) {
      if (!(vals[3] > 0.0)) {
        throw ValidationError(source + ":" + std::to_string(lineno) + ": weight must be positive");
      }
      rule.weights.push_back(vals[3]);
    }
  }
  if (rule.nodes.empty()) throw ValidationError(source + ": no nodes");
  const std::size_t n = rule.nodes.size();
  if (with_weight == 1) {
    // Accept any normalization (sum 1, sum 4 pi, ...) and rescale to 4 pi.
    double total = 0.0;
    for (double w : rule.weights) total += w;
    for (double& w : rule.weights) w *= 4.0 * kPi / total;
  } else {
    rule.weights.assign(n, 4.0 * kPi / static_cast<double>(n));
  }
  rule.provenance = "file " + source;
  classify_antipodes(rule);
  return rule;
}

SphericalRule load_spherical_rule(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open spherical rule file '" + path + "'");
  return read_spherical_rule(in, path);
}

double real_spherical_harmonic(int l, int m, const Vec3& x) {
  const double theta = std::acos(std::clamp(x[2], -1.0, 1.0));
  const double phi = std::atan2(x[1], x[0]);
  if (m == 0) return boost::math::spherical_harmonic_r(l, 0, theta, phi);
  if (m > 0) return std::numbers::sqrt2 * boost::math::spherical_harmonic_r(l, m, theta, phi);
  return std::numbers::sqrt2 * boost::math::spherical_harmonic_i(l, -m, theta, phi);
}

double harmonic_defect(const SphericalRule& rule, int degree) {
  double worst = 0.0;
  if (rule.dim == 2) {
    double c = 0.0, s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double th = std::atan2(rule.nodes[i][1], rule.nodes[i][0]);
      c += rule.weights[i] * std::cos(degree * th);
      s += rule.weights[i] * std::sin(degree * th);
    }
    return std::max(std::abs(c), std::abs(s));
  }
  for (int m = -degree; m <= degree; ++m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      sum += rule.weights[i] * real_spherical_harmonic(degree, m, rule.nodes[i]);
    }
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

int measured_strength(const SphericalRule& rule, int max_degree, double tol) {
  int t = 0;
  for (int l = 1; l <= max_degree; ++l) {
    if (harmonic_defect(rule, l) > tol) break;
    t = l;
  }
  return t;
}

}  // namespace wavekin
