#include "padded_transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace wavekin::detail {

namespace {

fftw_plan_s* checked(fftw_plan_s* plan) {
  if (!plan) throw std::runtime_error("FFTW failed to create a plan");
  return plan;
}

}  // namespace

PaddedTransform::PaddedTransform(int dim, int n, int p) : dim_(dim), n_(n), p_(p) {
  if (p < n) throw std::invalid_argument("padded length shorter than block");
  const std::size_t pp = static_cast<std::size_t>(p);
  const std::size_t nn = static_cast<std::size_t>(n);
  staging_size_ = dim == 2 ? nn * pp : nn * nn * pp;
  padded_size_ = dim == 2 ? pp * pp : pp * pp * pp;

  AlignedBuffer staging(staging_size_);
  AlignedBuffer out(padded_size_);
  const unsigned flags = FFTW_ESTIMATE;

  std::lock_guard lock(planner_mutex());
  if (dim == 2) {
    fftw_iodim line{p, 1, 1};
    fftw_iodim rows{n, p, p};
    stage1_.reset(checked(fftw_plan_guru_dft(1, &line, 1, &rows, staging.raw(), out.raw(),
                                             FFTW_BACKWARD, flags)));
    fftw_iodim column{p, p, p};
    fftw_iodim columns{p, 1, 1};
    stage2_.reset(checked(fftw_plan_guru_dft(1, &column, 1, &columns, out.raw(), out.raw(),
                                             FFTW_BACKWARD, flags)));
  } else {
    fftw_iodim line{p, 1, 1};
    fftw_iodim lines[2] = {{n, n * p, p * p}, {n, p, p}};
    stage1_.reset(checked(fftw_plan_guru_dft(1, &line, 2, lines, staging.raw(), out.raw(),
                                             FFTW_BACKWARD, flags)));
    fftw_iodim mid{p, p, p};
    fftw_iodim mid_lines[2] = {{n, p * p, p * p}, {p, 1, 1}};
    stage2_.reset(checked(fftw_plan_guru_dft(1, &mid, 2, mid_lines, out.raw(), out.raw(),
                                             FFTW_BACKWARD, flags)));
    fftw_iodim outer{p, p * p, p * p};
    fftw_iodim outer_lines{p * p, 1, 1};
    stage3_.reset(checked(fftw_plan_guru_dft(1, &outer, 1, &outer_lines, out.raw(), out.raw(),
                                             FFTW_BACKWARD, flags)));
  }
  int dims[3] = {p, p, p};
  inverse_.reset(checked(fftw_plan_dft(dim, dims, out.raw(), out.raw(), FFTW_FORWARD, flags)));
}

void PaddedTransform::synthesize(AlignedBuffer& staging, AlignedBuffer& out) const {
  const std::size_t p = static_cast<std::size_t>(p_);
  const std::size_t n = static_cast<std::size_t>(n_);
  fftw_execute_dft(stage1_.get(), staging.raw(), out.raw());
  auto* o = out.data();
  if (dim_ == 2) {
    std::fill(o + n * p, o + p * p, std::complex<double>{});
    fftw_execute_dft(stage2_.get(), out.raw(), out.raw());
  } else {
    if (p > n) {
      for (std::size_t a = 0; a < n; ++a) {
        std::fill(o + (a * p + n) * p, o + (a * p + p) * p, std::complex<double>{});
      }
      std::fill(o + n * p * p, o + p * p * p, std::complex<double>{});
    }
    fftw_execute_dft(stage2_.get(), out.raw(), out.raw());
    fftw_execute_dft(stage3_.get(), out.raw(), out.raw());
  }
}

void PaddedTransform::analyze(AlignedBuffer& data) const {
  fftw_execute_dft(inverse_.get(), data.raw(), data.raw());
}

}  // namespace wavekin::detail
