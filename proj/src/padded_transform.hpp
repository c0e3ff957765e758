#pragma once

#include <cstddef>

#include "fftw_util.hpp"

namespace wavekin::detail {

/// Synthesis transform of an n^d block of mode values into a p^d periodic
/// grid (p >= n), sign +i, unnormalized, skipping the all-zero lines the
/// padding creates.
///
/// The block is written into a staging buffer of n^(d-1) lines of length p,
/// mode s of a line at offset s; offsets n..p-1 of every line stay zero.
class PaddedTransform {
 public:
  PaddedTransform(int dim, int n, int p);

  int dim() const { return dim_; }
  int n() const { return n_; }
  int p() const { return p_; }
  std::size_t staging_size() const { return staging_size_; }
  std::size_t padded_size() const { return padded_size_; }

  /// staging -> out (p^d). `staging` is left untouched.
  void synthesize(AlignedBuffer& staging, AlignedBuffer& out) const;

  /// In-place p^d transform with sign -i, unnormalized.
  void analyze(AlignedBuffer& data) const;

 private:
  int dim_, n_, p_;
  std::size_t staging_size_, padded_size_;
  UniquePlan stage1_, stage2_, stage3_, inverse_;
};

}  // namespace wavekin::detail
