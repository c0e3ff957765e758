#include <cmath>
#include <numbers>
#include <thread>

#include "kernel_workspace.hpp"
#include "wavekin/error.hpp"
#include "wavekin/kernel.hpp"

namespace wavekin {

using detail::AlignedBuffer;

std::string to_string(ConvMode mode) { return mode == ConvMode::exact ? "exact" : "circular"; }

ConvMode conv_mode_from_string(const std::string& s) {
  if (s == "exact") return ConvMode::exact;
  if (s == "circular") return ConvMode::circular;
  throw ValidationError("conv_mode must be 'exact' or 'circular', got '" + s + "'");
}

std::string to_string(Term term) {
  static const char* names[] = {"K1", "K2", "K3", "K4"};
  return names[static_cast<int>(term)];
}

int convenient_fft_length(int min_length) {
  for (int len = std::max(min_length, 1);; ++len) {
    int r = len;
    for (int f : {2, 3, 5, 7}) {
      while (r % f == 0) r /= f;
    }
    if (r == 1) return len;
  }
}

KernelPlan::KernelPlan(SpectralGrid grid, RadialRule radial, SphericalRule qhat_rule,
                       SphericalRule sigma_rule, ConvMode mode, int threads)
    : grid_(grid),
      radial_(std::move(radial)),
      qhat_(std::move(qhat_rule)),
      sigma_(std::move(sigma_rule)),
      mode_(mode),
      threads_(threads) {
  if (qhat_.dim != grid_.dim() || sigma_.dim != grid_.dim()) {
    throw ValidationError("angular rule dimension does not match the grid");
  }
  if (radial_.size() == 0 || qhat_.size() == 0 || sigma_.size() == 0) {
    throw ValidationError("quadrature rules must be non-empty");
  }
  if (threads_ < 1) throw ValidationError("thread count must be >= 1");
  threads_ = std::min<int>(threads_, static_cast<int>(radial_.size()));
  const int n = grid_.n();
  padded_ = mode_ == ConvMode::exact ? convenient_fft_length(3 * n - 2) : n;
  auto transform = std::make_shared<const detail::PaddedTransform>(grid_.dim(), n, padded_);
  for (int w = 0; w < threads_; ++w) {
    workspaces_.push_back(std::make_unique<KernelWorkspace>(transform));
  }
}

KernelPlan::~KernelPlan() = default;
KernelPlan::KernelPlan(KernelPlan&&) noexcept = default;
KernelPlan& KernelPlan::operator=(KernelPlan&&) noexcept = default;

double KernelPlan::radial_factor(std::size_t p1) const {
  const double r = radial_.nodes[p1];
  return radial_.weights[p1] * std::pow(r, 2 * grid_.dim() - 3);
}

KernelWorkspace& KernelPlan::workspace(int worker) { return *workspaces_.at(worker); }

SphericalRule default_angular_rule(int dim, int count) {
  return dim == 2 ? circle_midpoint(count) : spherical_design(count);
}

KernelPlan make_plan(const SpectralGrid& grid, int n_r, int n_s, int n_sig, ConvMode mode,
                     int threads) {
  RadialRule radial = gauss_legendre_radial(n_r, grid.interaction_radius());
  SphericalRule qhat = default_angular_rule(grid.dim(), n_s);
  SphericalRule sigma = n_sig == n_s ? qhat : default_angular_rule(grid.dim(), n_sig);
  return KernelPlan(grid, std::move(radial), std::move(qhat), std::move(sigma), mode, threads);
}

namespace {

using Buf = AlignedBuffer;

// Writes f_m exp(-i pi/L (r/2) m.u) into the staging block and synthesizes it.
void synthesize_modulated(const SpectralCoeffs& f, double r, const Vec3& u, KernelWorkspace& ws,
                          Buf& out) {
  const SpectralGrid& grid = f.grid;
  const int n = grid.n();
  const int p = ws.transform->p();
  const double scale = std::numbers::pi / grid.half_box() * 0.5 * r;
  std::array<std::vector<cplx>, 3> axis;
  for (int a = 0; a < grid.dim(); ++a) {
    axis[a].resize(n);
    for (int s = 0; s < n; ++s) axis[a][s] = std::polar(1.0, -scale * grid.mode(s) * u[a]);
  }
  cplx* st = ws.staging.data();
  const cplx* src = f.coeffs.data();
  if (grid.dim() == 2) {
    for (int i = 0; i < n; ++i) {
      const cplx ei = axis[0][i];
      for (int k = 0; k < n; ++k) st[i * p + k] = src[i * n + k] * (ei * axis[1][k]);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const cplx eij = axis[0][i] * axis[1][j];
        const std::size_t line = static_cast<std::size_t>(i * n + j);
        for (int k = 0; k < n; ++k) {
          st[line * p + k] = src[line * n + k] * (eij * axis[2][k]);
        }
      }
    }
  }
  ws.transform->synthesize(ws.staging, out);
}

void synthesize_plain(const SpectralCoeffs& f, KernelWorkspace& ws, Buf& out) {
  synthesize_modulated(f, 0.0, Vec3{0.0, 0.0, 0.0}, ws, out);
}

Vec3 combine(const Vec3& a, double s, const Vec3& b) {
  return {a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]};
}

bool same(const Vec3& a, const Vec3& b) { return a[0] == b[0] && a[1] == b[1] && a[2] == b[2]; }
bool opposite(const Vec3& a, const Vec3& b) {
  return a[0] == -b[0] && a[1] == -b[1] && a[2] == -b[2];
}

void zero(Buf& b) { b.fill_zero(); }

// Runs body(worker, p1_begin, p1_end) over contiguous chunks of radial nodes.
template <typename Body>
void for_each_worker(KernelPlan& plan, Body body) {
  const int workers = plan.threads();
  const std::size_t nr = plan.radial().size();
  auto chunk = [&](int w) {
    const std::size_t lo = nr * w / workers;
    const std::size_t hi = nr * (w + 1) / workers;
    body(w, lo, hi);
  };
  if (workers == 1) {
    chunk(0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        chunk(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Sums worker accumulators in worker order, transforms back and extracts the
// retained modes. Mode j of the triple product sits at offset j + 3N/2 (mod P).
SpectralCoeffs finish(KernelPlan& plan, double scale) {
  const SpectralGrid& grid = plan.grid();
  Buf& total = plan.workspace(0).acc;
  for (int w = 1; w < plan.threads(); ++w) {
    const Buf& part = plan.workspace(w).acc;
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += part[i];
  }
  plan.workspace(0).transform->analyze(total);
  const int n = grid.n();
  const int p = plan.padded_length();
  const double norm = scale / static_cast<double>(total.size());
  SpectralCoeffs out(grid);
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    const ModeTuple c = grid.unflatten(flat);
    std::size_t pos = 0;
    for (int a = 0; a < grid.dim(); ++a) pos = pos * p + static_cast<std::size_t>((c[a] + n) % p);
    out.coeffs[flat] = total[pos] * norm;
  }
  return out;
}

void check_input(const SpectralCoeffs& coeffs, const KernelPlan& plan) {
  if (!(coeffs.grid == plan.grid()) || coeffs.coeffs.size() != plan.grid().size()) {
    throw ValidationError("coefficients are not on the plan's grid");
  }
}

}  // namespace

SpectralCoeffs apply_K_fast(const SpectralCoeffs& coeffs, KernelPlan& plan) {
  check_input(coeffs, plan);
  const SphericalRule& qrule = plan.qhat_rule();
  const SphericalRule& srule = plan.sigma_rule();

  Buf plain(plan.workspace(0).transform->padded_size());
  synthesize_plain(coeffs, plan.workspace(0), plain);
  const std::size_t size = plain.size();

  for_each_worker(plan, [&](int w, std::size_t lo, std::size_t hi) {
    KernelWorkspace& ws = plan.workspace(w);
    zero(ws.acc);
    zero(ws.outer);
    for (std::size_t p1 = lo; p1 < hi; ++p1) {
      const double r = plan.radial().nodes[p1];
      const double rad = plan.radial_factor(p1);
      for (std::size_t p2 = 0; p2 < qrule.size(); ++p2) {
        const Vec3& qh = qrule.nodes[p2];
        const double scale = rad * qrule.weights[p2];
        zero(ws.inner);
        zero(ws.sum_a);
        bool have_alpha = false;

        // inner  = sum_k w_k T(f * beta betat) T(f * gamma gammat)
        // sum_a  = sum_k w_k T(f * beta betat),  sum_b likewise with gamma gammat
        auto pick = [&](const Vec3& sig, Buf& scratch) -> const Buf& {
          if (same(sig, qh)) return plain;
          synthesize_modulated(coeffs, r, combine(qh, -1.0, sig), ws, scratch);
          if (opposite(sig, qh)) {
            std::copy(scratch.data(), scratch.data() + size, ws.alpha.data());
            have_alpha = true;
          }
          return scratch;
        };

        if (srule.antipodal) {
          // gamma gammat at sigma equals beta betat at -sigma, so each
          // antipodal pair needs two transforms for both factors.
          for (std::size_t k = 0; k < srule.size(); ++k) {
            const std::size_t k2 = static_cast<std::size_t>(srule.antipode[k]);
            if (k2 < k) continue;
            const Buf& ak = pick(srule.nodes[k], ws.a);
            const Buf& ak2 = pick(srule.nodes[k2], ws.b);
            const double wk = srule.weights[k];
            const double wpair = wk + srule.weights[k2];
            for (std::size_t i = 0; i < size; ++i) {
              ws.inner[i] += wpair * (ak[i] * ak2[i]);
              ws.sum_a[i] += wk * (ak[i] + ak2[i]);
            }
          }
          for (std::size_t i = 0; i < size; ++i) ws.sum_b[i] = ws.sum_a[i];
        } else {
          zero(ws.sum_b);
          for (std::size_t k = 0; k < srule.size(); ++k) {
            const Vec3& sig = srule.nodes[k];
            const Buf& ak = pick(sig, ws.a);
            synthesize_modulated(coeffs, r, combine(qh, 1.0, sig), ws, ws.b);
            const double wk = srule.weights[k];
            for (std::size_t i = 0; i < size; ++i) {
              ws.inner[i] += wk * (ak[i] * ws.b[i]);
              ws.sum_a[i] += wk * ak[i];
              ws.sum_b[i] += wk * ws.b[i];
            }
          }
        }
        if (!have_alpha) synthesize_modulated(coeffs, r, combine(qh, 1.0, qh), ws, ws.alpha);

        // K1 - K2 - K4 share the outer factor alpha f; K3 has outer factor f and
        // is collected in `outer` to be multiplied once at the end.
        for (std::size_t i = 0; i < size; ++i) {
          ws.acc[i] += scale * (ws.alpha[i] * (ws.inner[i] - plain[i] * (ws.sum_a[i] + ws.sum_b[i])));
          ws.outer[i] += scale * ws.inner[i];
        }
      }
    }
    for (std::size_t i = 0; i < size; ++i) ws.acc[i] += plain[i] * ws.outer[i];
  });

  return finish(plan, std::ldexp(1.0, 1 - plan.grid().dim()));
}

SpectralCoeffs apply_term_fast(Term term, const SpectralCoeffs& coeffs, KernelPlan& plan) {
  check_input(coeffs, plan);
  const SphericalRule& qrule = plan.qhat_rule();
  const SphericalRule& srule = plan.sigma_rule();

  Buf plain(plan.workspace(0).transform->padded_size());
  synthesize_plain(coeffs, plan.workspace(0), plain);
  const std::size_t size = plain.size();
  const bool uses_beta = term == Term::K1 || term == Term::K3 || term == Term::K4;
  const bool uses_gamma = term == Term::K1 || term == Term::K2 || term == Term::K3;
  const bool uses_alpha = term != Term::K3;

  for_each_worker(plan, [&](int w, std::size_t lo, std::size_t hi) {
    KernelWorkspace& ws = plan.workspace(w);
    zero(ws.acc);
    for (std::size_t p1 = lo; p1 < hi; ++p1) {
      const double r = plan.radial().nodes[p1];
      const double rad = plan.radial_factor(p1);
      for (std::size_t p2 = 0; p2 < qrule.size(); ++p2) {
        const Vec3& qh = qrule.nodes[p2];
        const double scale = rad * qrule.weights[p2];
        zero(ws.inner);
        for (std::size_t k = 0; k < srule.size(); ++k) {
          const Vec3& sig = srule.nodes[k];
          if (uses_beta) synthesize_modulated(coeffs, r, combine(qh, -1.0, sig), ws, ws.a);
          if (uses_gamma) synthesize_modulated(coeffs, r, combine(qh, 1.0, sig), ws, ws.b);
          const Buf& left = uses_beta ? ws.a : plain;
          const Buf& right = uses_gamma ? ws.b : plain;
          const double wk = srule.weights[k];
          for (std::size_t i = 0; i < size; ++i) ws.inner[i] += wk * (left[i] * right[i]);
        }
        if (uses_alpha) {
          synthesize_modulated(coeffs, r, combine(qh, 1.0, qh), ws, ws.alpha);
          for (std::size_t i = 0; i < size; ++i) ws.acc[i] += scale * (ws.alpha[i] * ws.inner[i]);
        } else {
          for (std::size_t i = 0; i < size; ++i) ws.acc[i] += scale * (plain[i] * ws.inner[i]);
        }
      }
    }
  });

  return finish(plan, 1.0);
}

SpectralField collision(const SpectralField& field, KernelPlan& plan, double* discarded_imag) {
  if (!(field.grid == plan.grid())) throw ValidationError("field is not on the plan's grid");
  return to_field(apply_K_fast(to_coefficients(field), plan), discarded_imag);
}

}  // namespace wavekin
