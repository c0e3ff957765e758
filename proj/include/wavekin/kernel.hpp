#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "wavekin/grid.hpp"
#include "wavekin/quadrature.hpp"

namespace wavekin {

/// How mode-space convolutions are evaluated.
///  exact:    zero-padded transforms, reproducing the bounded-index Galerkin sums.
///  circular: length-N transforms; index sums wrap modulo N.
enum class ConvMode { exact, circular };

/// The four pieces K = 2^(1-d) (K1 - K2 + K3 - K4) of the spherical form of
/// the collision operator.
enum class Term { K1 = 0, K2 = 1, K3 = 2, K4 = 3 };
inline constexpr std::array<Term, 4> kAllTerms{Term::K1, Term::K2, Term::K3, Term::K4};

enum class PhaseScale { full, half };
enum class PhaseSign { plus, minus };

std::string to_string(ConvMode mode);
ConvMode conv_mode_from_string(const std::string& s);
std::string to_string(Term term);

/// exp(sign * i * pi/L * c * r * m.dir) with c = 1 (full) or 1/2 (half).
cplx phase_entry(const SpectralGrid& grid, double r, const Vec3& dir, PhaseScale scale,
                 PhaseSign sign, const ModeTuple& m);

/// phase_entry for every mode on the grid, in coefficient storage order.
std::vector<cplx> phase_vector(const SpectralGrid& grid, double r, const Vec3& dir,
                               PhaseScale scale, PhaseSign sign);

/// Smallest length >= min_length of the form 2^a 3^b 5^c 7^d.
int convenient_fft_length(int min_length);

class KernelWorkspace;

/// Per-evaluation configuration and scratch space for the collision operator.
///
/// Holds the grid, the radial rule on [0, R], the rules for the direction of
/// q and for sigma, and the evaluation mode. Buffers are sized P^d with
/// P >= 3N - 2 (exact) or P = N (circular). A plan is single-consumer: one plan
/// per calling thread. `threads > 1` splits the radial nodes across workers and
/// sums their partial results in worker order; results then differ from the
/// serial ones at roundoff level.
class KernelPlan {
 public:
  KernelPlan(SpectralGrid grid, RadialRule radial, SphericalRule qhat_rule,
             SphericalRule sigma_rule, ConvMode mode = ConvMode::exact, int threads = 1);
  ~KernelPlan();
  KernelPlan(KernelPlan&&) noexcept;
  KernelPlan& operator=(KernelPlan&&) noexcept;

  const SpectralGrid& grid() const { return grid_; }
  const RadialRule& radial() const { return radial_; }
  const SphericalRule& qhat_rule() const { return qhat_; }
  const SphericalRule& sigma_rule() const { return sigma_; }
  ConvMode mode() const { return mode_; }
  int padded_length() const { return padded_; }
  int threads() const { return threads_; }

  /// w_r |q|^(2d-3) for radial node p1.
  double radial_factor(std::size_t p1) const;

  KernelWorkspace& workspace(int worker);

 private:
  SpectralGrid grid_;
  RadialRule radial_;
  SphericalRule qhat_;
  SphericalRule sigma_;
  ConvMode mode_;
  int padded_;
  int threads_;
  std::vector<std::unique_ptr<KernelWorkspace>> workspaces_;
};

/// Default plan: Gauss-Legendre with n_r nodes on [0, 2S], and the same
/// angular rule (midpoint in 2D, spherical design in 3D) for q-hat and sigma.
KernelPlan make_plan(const SpectralGrid& grid, int n_r, int n_s, int n_sig,
                     ConvMode mode = ConvMode::exact, int threads = 1);

SphericalRule default_angular_rule(int dim, int count);

/// Quadrature value of the weight G_term(l, m, n), evaluated term by term from
/// the phase factors. Arguments a term does not depend on are ignored.
cplx weight_G(Term term, const ModeTuple& l, const ModeTuple& m, const ModeTuple& n,
              const KernelPlan& plan);

/// Size guard for the O(N^{3d}) evaluation.
bool direct_evaluation_allowed(const SpectralGrid& grid);

/// Galerkin sum of one term over l + m + n = j with all indices in range.
SpectralCoeffs apply_term_direct(Term term, const SpectralCoeffs& coeffs, const KernelPlan& plan,
                                 bool force = false);

/// 2^(1-d) (K1 - K2 + K3 - K4) by direct summation.
SpectralCoeffs apply_K_direct(const SpectralCoeffs& coeffs, const KernelPlan& plan,
                              bool force = false);

/// One term by the double-convolution algorithm, following the per-term
/// recipe literally (no sharing with the other terms).
SpectralCoeffs apply_term_fast(Term term, const SpectralCoeffs& coeffs, KernelPlan& plan);

/// All four terms by the double-convolution algorithm, sharing transforms
/// between terms.
SpectralCoeffs apply_K_fast(const SpectralCoeffs& coeffs, KernelPlan& plan);

/// Physical-space collision term: to_field(apply_K_fast(to_coefficients(f))).
SpectralField collision(const SpectralField& field, KernelPlan& plan,
                        double* discarded_imag = nullptr);

}  // namespace wavekin
