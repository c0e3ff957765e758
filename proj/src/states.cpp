#include "wavekin/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wavekin/error.hpp"

namespace wavekin {

namespace {

Vec3 as_vec(const SpectralGrid& grid, const std::vector<double>& v, const char* what) {
  Vec3 out{0.0, 0.0, 0.0};
  if (v.empty()) return out;
  if (static_cast<int>(v.size()) != grid.dim()) {
    std::ostringstream os;
    os << what << " has " << v.size() << " components, grid dimension is " << grid.dim();
    throw ValidationError(os.str());
  }
  for (int a = 0; a < grid.dim(); ++a) out[a] = v[a];
  return out;
}

double norm2(const Vec3& k) { return k[0] * k[0] + k[1] * k[1] + k[2] * k[2]; }

double maxwellian(const SpectralGrid& grid, double rho, double T, double k2) {
  return rho / std::pow(2.0 * std::numbers::pi * T, 0.5 * grid.dim()) * std::exp(-k2 / (2.0 * T));
}

template <typename F>
SpectralField tabulate(const SpectralGrid& grid, F f) {
  SpectralField out(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) out.values[i] = f(grid.node_point(i), i);
  return out;
}

}  // namespace

SpectralField rayleigh_jeans(const SpectralGrid& grid, const RJParams& params) {
  const Vec3 nu = as_vec(grid, params.nu, "nu");
  return tabulate(grid, [&](const Vec3& k, std::size_t flat) {
    const double denom = params.mu + nu[0] * k[0] + nu[1] * k[1] + nu[2] * k[2] + params.xi * norm2(k);
    if (!(denom > 0.0)) {
      const ModeTuple idx = grid.unflatten(flat);
      std::ostringstream os;
      os << "Rayleigh-Jeans denominator " << denom << " is not positive at node (";
      for (int a = 0; a < grid.dim(); ++a) os << (a ? ", " : "") << idx[a];
      os << ") k = (";
      for (int a = 0; a < grid.dim(); ++a) os << (a ? ", " : "") << k[a];
      os << ")";
      throw ValidationError(os.str());
    }
    return 1.0 / denom;
  });
}

SpectralField bi_maxwellian(const SpectralGrid& grid, const BiMaxwellianParams& p) {
  if (!(p.rho1 > 0 && p.rho2 > 0 && p.T1 > 0 && p.T2 > 0)) {
    throw ValidationError("bi-Maxwellian densities and temperatures must be positive");
  }
  return tabulate(grid, [&](const Vec3& k, std::size_t) {
    const double k2 = norm2(k);
    const double f1 = maxwellian(grid, p.rho1, p.T1, k2);
    const double f2 = maxwellian(grid, p.rho2, p.T2, k2);
    if (k[0] > 0.0) return f1;
    if (k[0] < 0.0) return f2;
    return 0.5 * (f1 + f2);
  });
}

double default_ring_width(const SpectralGrid& grid) { return 0.5 * std::sqrt(grid.spacing()); }

SpectralField delta_ring(const SpectralGrid& grid, const std::vector<RingTerm>& rings, double u) {
  if (!(u > 0.0)) throw ValidationError("delta ring width u must be positive");
  return tabulate(grid, [&](const Vec3& k, std::size_t) {
    const double radius = std::sqrt(norm2(k));
    double v = 0.0;
    for (const RingTerm& ring : rings) {
      const double x = radius - ring.radius;
      if (std::abs(x) <= u) v += ring.coefficient * (1.0 + std::cos(std::numbers::pi * x / u)) / (2.0 * u);
    }
    return v;
  });
}

SpectralField kz_state(const SpectralGrid& grid, double theta, double eps) {
  if (!(eps > 0.0)) throw ValidationError("KZ regularization eps must be positive");
  if (std::abs(theta - kKZInverseCascade) > 1e-12 && std::abs(theta - kKZDirectCascade) > 1e-12) {
    throw ValidationError("KZ exponent must be 7/6 or 3/2");
  }
  return tabulate(grid, [&](const Vec3& k, std::size_t) {
    return std::pow(0.5 * norm2(k) + eps, -theta);
  });
}

SpectralField gaussian(const SpectralGrid& grid, const std::vector<double>& center, double T,
                       double rho) {
  return gaussian_sum(grid, {GaussianBump{center, T, rho}});
}

SpectralField gaussian_sum(const SpectralGrid& grid, const std::vector<GaussianBump>& bumps) {
  std::vector<Vec3> centers;
  for (const GaussianBump& b : bumps) {
    if (!(b.T > 0.0 && b.rho > 0.0)) throw ValidationError("Gaussian T and rho must be positive");
    centers.push_back(as_vec(grid, b.center, "Gaussian center"));
  }
  return tabulate(grid, [&](const Vec3& k, std::size_t) {
    double v = 0.0;
    for (std::size_t i = 0; i < bumps.size(); ++i) {
      const Vec3& c = centers[i];
      const Vec3 d{k[0] - c[0], k[1] - c[1], k[2] - c[2]};
      v += maxwellian(grid, bumps[i].rho, bumps[i].T, norm2(d));
    }
    return v;
  });
}

}  // namespace wavekin
