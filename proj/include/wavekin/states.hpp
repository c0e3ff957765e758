#pragma once

#include <vector>

#include "wavekin/grid.hpp"

namespace wavekin {

struct RJParams {
  double mu = 1.0;
  std::vector<double> nu;  // length d; empty means zero
  double xi = 0.0;
};

struct BiMaxwellianParams {
  double rho1 = 6.0 / 5.0;
  double rho2 = 4.0 / 5.0;
  double T1 = 2.0 / 3.0;
  double T2 = 3.0 / 2.0;
};

struct RingTerm {
  double radius = 0.0;
  double coefficient = 1.0;
};

struct GaussianBump {
  std::vector<double> center;  // length d; empty means the origin
  double T = 1.0;
  double rho = 1.0;
};

/// 1 / (mu + nu.k + xi |k|^2). Throws if the denominator is not positive at
/// some node; the message names that node.
SpectralField rayleigh_jeans(const SpectralGrid& grid, const RJParams& params);

/// rho_i (2 pi T_i)^(-d/2) exp(-|k|^2 / (2 T_i)), branch 1 for k_1 > 0 and
/// branch 2 for k_1 < 0. Nodes with k_1 == 0 get the mean of the branches.
SpectralField bi_maxwellian(const SpectralGrid& grid, const BiMaxwellianParams& params);

/// 0.5 sqrt(dk)
double default_ring_width(const SpectralGrid& grid);

/// sum_i c_i delta_u(|k| - r_i), delta_u(x) = (1 + cos(pi x / u)) / (2u) on |x| <= u.
SpectralField delta_ring(const SpectralGrid& grid, const std::vector<RingTerm>& rings, double u);

inline constexpr double kKZInverseCascade = 7.0 / 6.0;
inline constexpr double kKZDirectCascade = 3.0 / 2.0;

/// (|k|^2/2 + eps)^(-theta), theta one of the two cascade exponents.
SpectralField kz_state(const SpectralGrid& grid, double theta, double eps);

/// rho (2 pi T)^(-d/2) exp(-|k - c|^2 / (2T))
SpectralField gaussian(const SpectralGrid& grid, const std::vector<double>& center, double T,
                       double rho);

SpectralField gaussian_sum(const SpectralGrid& grid, const std::vector<GaussianBump>& bumps);

}  // namespace wavekin
