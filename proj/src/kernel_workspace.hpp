#pragma once

#include <memory>

#include "fftw_util.hpp"
#include "padded_transform.hpp"

namespace wavekin {

// Scratch owned by one worker of a KernelPlan.
class KernelWorkspace {
 public:
  KernelWorkspace(std::shared_ptr<const detail::PaddedTransform> transform)
      : transform(std::move(transform)),
        staging(this->transform->staging_size()),
        a(this->transform->padded_size()),
        b(this->transform->padded_size()),
        alpha(this->transform->padded_size()),
        inner(this->transform->padded_size()),
        sum_a(this->transform->padded_size()),
        sum_b(this->transform->padded_size()),
        acc(this->transform->padded_size()),
        outer(this->transform->padded_size()) {}

  std::shared_ptr<const detail::PaddedTransform> transform;
  detail::AlignedBuffer staging;
  detail::AlignedBuffer a, b, alpha;
  detail::AlignedBuffer inner;   // sigma-summed inner convolution
  detail::AlignedBuffer sum_a, sum_b;
  detail::AlignedBuffer acc;     // outer accumulation
  detail::AlignedBuffer outer;   // terms whose outer factor is f itself
};

}  // namespace wavekin
