#include "wavekin/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fftw_util.hpp"
#include "wavekin/error.hpp"

namespace wavekin {

const double SpectralGrid::kMinBoxFactor = (3.0 + std::numbers::sqrt2) / 2.0;

SpectralGrid::SpectralGrid(int dim, int n, double support, std::optional<double> half_box)
    : dim_(dim), n_(n), support_(support) {
  if (dim != 2 && dim != 3) {
    throw ValidationError("grid dimension must be 2 or 3, got " + std::to_string(dim));
  }
  if (n < 4 || n % 2 != 0) {
    throw ValidationError("modes per axis must be an even integer >= 4, got " + std::to_string(n));
  }
  if (!(support > 0.0) || !std::isfinite(support)) {
    std::ostringstream os;
    os << "support radius must be positive, got " << support;
    throw ValidationError(os.str());
  }
  const double bound = kMinBoxFactor * support;
  if (half_box) {
    // Relative slack so that L = factor * S written with 17 digits round-trips.
    if (!(*half_box >= bound * (1.0 - 1e-14)) || !std::isfinite(*half_box)) {
      std::ostringstream os;
      os.precision(17);
      os << "half box length " << *half_box << " is below the anti-aliasing bound " << bound;
      throw ValidationError(os.str());
    }
    half_box_ = *half_box;
  } else {
    half_box_ = bound;
  }
  size_ = 1;
  for (int a = 0; a < dim_; ++a) size_ *= static_cast<std::size_t>(n_);
}

bool SpectralGrid::modes_in_range(const ModeTuple& j) const {
  for (int a = 0; a < dim_; ++a) {
    if (!mode_in_range(j[a])) return false;
  }
  return true;
}

ModeTuple SpectralGrid::unflatten(std::size_t flat) const {
  ModeTuple idx{0, 0, 0};
  for (int a = dim_ - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % n_);
    flat /= n_;
  }
  return idx;
}

std::size_t SpectralGrid::flatten(const ModeTuple& idx) const {
  std::size_t flat = 0;
  for (int a = 0; a < dim_; ++a) flat = flat * n_ + static_cast<std::size_t>(idx[a]);
  return flat;
}

Vec3 SpectralGrid::node_point(std::size_t flat) const {
  const ModeTuple idx = unflatten(flat);
  Vec3 k{0.0, 0.0, 0.0};
  for (int a = 0; a < dim_; ++a) k[a] = node(idx[a]);
  return k;
}

ModeTuple SpectralGrid::mode_tuple(std::size_t flat) const {
  ModeTuple idx = unflatten(flat);
  for (int a = 0; a < dim_; ++a) idx[a] = mode(idx[a]);
  return idx;
}

std::size_t SpectralGrid::flat_of_mode(const ModeTuple& j) const {
  ModeTuple idx{0, 0, 0};
  for (int a = 0; a < dim_; ++a) idx[a] = index_of_mode(j[a]);
  return flatten(idx);
}

bool SpectralGrid::operator==(const SpectralGrid& other) const {
  return dim_ == other.dim_ && n_ == other.n_ && support_ == other.support_ &&
         half_box_ == other.half_box_;
}

SpectralGrid build_grid(int dim, int n, double support, std::optional<double> half_box) {
  return SpectralGrid(dim, n, support, half_box);
}

SpectralField::SpectralField(SpectralGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) {
    throw ValidationError("field has " + std::to_string(values.size()) + " values, grid needs " +
                          std::to_string(grid.size()));
  }
}

SpectralCoeffs::SpectralCoeffs(SpectralGrid g, std::vector<cplx> c) : grid(g), coeffs(std::move(c)) {
  if (coeffs.size() != grid.size()) {
    throw ValidationError("coefficient array has " + std::to_string(coeffs.size()) +
                          " entries, grid needs " + std::to_string(grid.size()));
  }
}

namespace {

// Unnormalized N^d transform in place. sign = FFTW_FORWARD is exp(-i ...).
void transform_in_place(const SpectralGrid& grid, detail::AlignedBuffer& buf, int sign) {
  const int n = grid.n();
  int dims[3] = {n, n, n};
  fftw_plan plan;
  {
    std::lock_guard lock(detail::planner_mutex());
    plan = fftw_plan_dft(grid.dim(), dims, buf.raw(), buf.raw(), sign, FFTW_ESTIMATE);
  }
  detail::UniquePlan owned(plan);
  fftw_execute(plan);
}

int parity_sign(const ModeTuple& j, int dim) {
  int s = 0;
  for (int a = 0; a < dim; ++a) s += j[a];
  return (s % 2 == 0) ? 1 : -1;
}

}  // namespace

// With k_i = -L + i dk the phase exp(-i pi/L j k_i) = (-1)^j exp(-2 pi i j i / N),
// so the coefficients are a sign-corrected unnormalized DFT.
SpectralCoeffs to_coefficients(const SpectralField& field) {
  const SpectralGrid& grid = field.grid;
  if (field.values.size() != grid.size()) throw ValidationError("field shape does not match grid");
  detail::AlignedBuffer buf(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) buf[i] = field.values[i];
  transform_in_place(grid, buf, FFTW_FORWARD);

  SpectralCoeffs out(grid);
  const int n = grid.n();
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    const ModeTuple j = grid.mode_tuple(flat);
    ModeTuple wrapped{0, 0, 0};
    for (int a = 0; a < grid.dim(); ++a) wrapped[a] = (j[a] + n) % n;
    out.coeffs[flat] = buf[grid.flatten(wrapped)] * (scale * parity_sign(j, grid.dim()));
  }
  return out;
}

SpectralField to_field(const SpectralCoeffs& coeffs, double* discarded_imag) {
  const SpectralGrid& grid = coeffs.grid;
  if (coeffs.coeffs.size() != grid.size()) {
    throw ValidationError("coefficient shape does not match grid");
  }
  const int n = grid.n();
  detail::AlignedBuffer buf(grid.size());
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    const ModeTuple j = grid.mode_tuple(flat);
    ModeTuple wrapped{0, 0, 0};
    for (int a = 0; a < grid.dim(); ++a) wrapped[a] = (j[a] + n) % n;
    buf[grid.flatten(wrapped)] = coeffs.coeffs[flat] * static_cast<double>(parity_sign(j, grid.dim()));
  }
  transform_in_place(grid, buf, FFTW_BACKWARD);

  SpectralField out(grid);
  double max_imag = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.values[i] = buf[i].real();
    max_imag = std::max(max_imag, std::abs(buf[i].imag()));
  }
  if (discarded_imag) *discarded_imag = max_imag;
  return out;
}

double mass_fraction_outside_support(const SpectralField& field) {
  const SpectralGrid& grid = field.grid;
  const double s2 = grid.support() * grid.support();
  double total = 0.0;
  double outside = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vec3 k = grid.node_point(i);
    const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    const double v = std::abs(field.values[i]);
    total += v;
    if (k2 > s2) outside += v;
  }
  return total > 0.0 ? outside / total : 0.0;
}

double hermitian_defect(const SpectralCoeffs& coeffs) {
  const SpectralGrid& grid = coeffs.grid;
  double worst = 0.0;
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    const ModeTuple j = grid.mode_tuple(flat);
    ModeTuple neg{-j[0], -j[1], -j[2]};
    if (!grid.modes_in_range(neg)) continue;
    worst = std::max(worst, std::abs(coeffs.coeffs[flat] - std::conj(coeffs.at(neg))));
  }
  return worst;
}

}  // namespace wavekin
