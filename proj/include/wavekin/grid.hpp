#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace wavekin {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;
using ModeTuple = std::array<int, 3>;

/// Truncated periodic domain [-L, L)^d sampled at N points per axis.
///
/// The collision output of a density supported in the ball of radius S lives
/// in the ball of radius sqrt(2) S, and the relative variable q = k - k2 ranges
/// over the ball of radius R = 2S. A half box length L >= (3 + sqrt 2)/2 * S
/// keeps the periodic images of that output from wrapping back onto the
/// support. Grid values and mode coefficients are stored row-major with the
/// last axis fastest; mode j along an axis sits at index j + N/2.
class SpectralGrid {
 public:
  /// Smallest admissible L / S ratio.
  static const double kMinBoxFactor;

  SpectralGrid(int dim, int n, double support, std::optional<double> half_box = std::nullopt);

  int dim() const { return dim_; }
  int n() const { return n_; }
  double support() const { return support_; }
  double interaction_radius() const { return 2.0 * support_; }
  double half_box() const { return half_box_; }
  double spacing() const { return 2.0 * half_box_ / n_; }
  std::size_t size() const { return size_; }

  double node(int i) const { return -half_box_ + i * spacing(); }
  int mode(int i) const { return i - n_ / 2; }
  int index_of_mode(int j) const { return j + n_ / 2; }
  bool mode_in_range(int j) const { return j >= -n_ / 2 && j < n_ / 2; }
  bool modes_in_range(const ModeTuple& j) const;

  /// Per-axis indices of a flat position (unused trailing axes are 0).
  ModeTuple unflatten(std::size_t flat) const;
  std::size_t flatten(const ModeTuple& idx) const;

  Vec3 node_point(std::size_t flat) const;
  ModeTuple mode_tuple(std::size_t flat) const;
  std::size_t flat_of_mode(const ModeTuple& j) const;

  bool operator==(const SpectralGrid& other) const;

 private:
  int dim_;
  int n_;
  double support_;
  double half_box_;
  std::size_t size_;
};

SpectralGrid build_grid(int dim, int n, double support,
                        std::optional<double> half_box = std::nullopt);

/// Values of f at the collocation nodes.
struct SpectralField {
  SpectralGrid grid;
  std::vector<double> values;

  explicit SpectralField(SpectralGrid g) : grid(g), values(g.size(), 0.0) {}
  SpectralField(SpectralGrid g, std::vector<double> v);
};

/// Fourier coefficients of f, indexed by mode tuple.
struct SpectralCoeffs {
  SpectralGrid grid;
  std::vector<cplx> coeffs;

  explicit SpectralCoeffs(SpectralGrid g) : grid(g), coeffs(g.size(), cplx{}) {}
  SpectralCoeffs(SpectralGrid g, std::vector<cplx> c);

  cplx& at(const ModeTuple& j) { return coeffs[grid.flat_of_mode(j)]; }
  const cplx& at(const ModeTuple& j) const { return coeffs[grid.flat_of_mode(j)]; }
};

/// f_hat_j = N^-d sum_i f(k_i) exp(-i pi/L j.k_i)
SpectralCoeffs to_coefficients(const SpectralField& field);

/// f(k_i) = sum_j f_hat_j exp(i pi/L j.k_i). The real part is returned; the
/// largest discarded imaginary magnitude is written to `discarded_imag`.
SpectralField to_field(const SpectralCoeffs& coeffs, double* discarded_imag = nullptr);

/// Fraction of sum |f| carried by nodes outside the ball of radius S.
double mass_fraction_outside_support(const SpectralField& field);

/// Largest |c_j - conj(c_-j)| over modes whose negation is also in range.
double hermitian_defect(const SpectralCoeffs& coeffs);

}  // namespace wavekin
