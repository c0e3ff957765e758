#pragma once

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <new>

namespace wavekin::detail {

// The FFTW planner is not re-entrant; executing plans is.
inline std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

/// fftw_malloc'd complex buffer. Every array handed to a plan comes from here,
/// so new-array execution always sees the alignment the plan was made with.
class AlignedBuffer {
 public:
  AlignedBuffer() = default;
  explicit AlignedBuffer(std::size_t n)
      : data_(static_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * (n ? n : 1)))),
        size_(n) {
    if (!data_) throw std::bad_alloc();
    fill_zero();
  }

  std::complex<double>* data() { return data_.get(); }
  const std::complex<double>* data() const { return data_.get(); }
  fftw_complex* raw() { return reinterpret_cast<fftw_complex*>(data_.get()); }
  std::size_t size() const { return size_; }
  std::complex<double>& operator[](std::size_t i) { return data_.get()[i]; }
  const std::complex<double>& operator[](std::size_t i) const { return data_.get()[i]; }
  void fill_zero() {
    for (std::size_t i = 0; i < size_; ++i) data_.get()[i] = 0.0;
  }

 private:
  std::unique_ptr<std::complex<double>[], FftwFree> data_;
  std::size_t size_ = 0;
};

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};
using UniquePlan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

inline fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace wavekin::detail
