#include <cmath>
#include <numbers>
#include <sstream>

#include "wavekin/error.hpp"
#include "wavekin/kernel.hpp"

namespace wavekin {

cplx phase_entry(const SpectralGrid& grid, double r, const Vec3& dir, PhaseScale scale,
                 PhaseSign sign, const ModeTuple& m) {
  const double norm2 = dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2];
  if (std::abs(norm2 - 1.0) > 1e-12) throw ValidationError("phase direction is not a unit vector");
  double dot = 0.0;
  for (int a = 0; a < grid.dim(); ++a) dot += m[a] * dir[a];
  const double c = scale == PhaseScale::full ? 1.0 : 0.5;
  const double s = sign == PhaseSign::plus ? 1.0 : -1.0;
  return std::polar(1.0, s * std::numbers::pi / grid.half_box() * c * r * dot);
}

std::vector<cplx> phase_vector(const SpectralGrid& grid, double r, const Vec3& dir,
                               PhaseScale scale, PhaseSign sign) {
  if (r < 0.0 || r > grid.interaction_radius()) {
    std::ostringstream os;
    os << "phase radius " << r << " outside [0, " << grid.interaction_radius() << "]";
    throw ValidationError(os.str());
  }
  std::vector<cplx> out(grid.size());
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    out[flat] = phase_entry(grid, r, dir, scale, sign, grid.mode_tuple(flat));
  }
  return out;
}

cplx weight_G(Term term, const ModeTuple& l, const ModeTuple& m, const ModeTuple& n,
              const KernelPlan& plan) {
  const SpectralGrid& grid = plan.grid();
  for (const ModeTuple* t : {&l, &m, &n}) {
    if (!grid.modes_in_range(*t)) throw ValidationError("weight_G mode index out of range");
  }
  using enum PhaseScale;
  using enum PhaseSign;
  const bool use_l = term != Term::K2;
  const bool use_m = term != Term::K3;
  const bool use_n = term != Term::K4;

  cplx total = 0.0;
  for (std::size_t p1 = 0; p1 < plan.radial().size(); ++p1) {
    const double r = plan.radial().nodes[p1];
    cplx qsum = 0.0;
    const SphericalRule& qrule = plan.qhat_rule();
    for (std::size_t p2 = 0; p2 < qrule.size(); ++p2) {
      const Vec3& qh = qrule.nodes[p2];
      cplx v = 1.0;
      if (use_m) v *= phase_entry(grid, r, qh, full, minus, m);  // alpha
      if (use_l) v *= phase_entry(grid, r, qh, half, minus, l);  // beta
      if (use_n) v *= phase_entry(grid, r, qh, half, minus, n);  // gamma
      qsum += qrule.weights[p2] * v;
    }
    cplx ssum = 0.0;
    const SphericalRule& srule = plan.sigma_rule();
    for (std::size_t p3 = 0; p3 < srule.size(); ++p3) {
      const Vec3& sig = srule.nodes[p3];
      cplx v = 1.0;
      if (use_l) v *= phase_entry(grid, r, sig, half, plus, l);   // beta tilde
      if (use_n) v *= phase_entry(grid, r, sig, half, minus, n);  // gamma tilde
      ssum += srule.weights[p3] * v;
    }
    total += plan.radial_factor(p1) * qsum * ssum;
  }
  return total;
}

bool direct_evaluation_allowed(const SpectralGrid& grid) {
  return grid.dim() == 2 ? grid.n() <= 16 : grid.n() <= 8;
}

namespace {

// Per-radius angular sums tabulated over integer vectors:
//   Q(v) = sum_p2 w exp(-i pi/L r/2 v.qhat),  v in [-2N, 2N)^d
//   S(u) = sum_p3 w exp(+i pi/L r/2 u.sigma), u in [-N, N]^d
// Each weight G_l is sum_p1 c_p1 Q(.) S(.) with term-specific arguments.
class AngularTables {
 public:
  explicit AngularTables(const KernelPlan& plan)
      : dim_(plan.grid().dim()), n_(plan.grid().n()), nr_(plan.radial().size()) {
    const SpectralGrid& grid = plan.grid();
    q_extent_ = 4 * n_;
    s_extent_ = 2 * n_ + 1;
    const std::size_t q_count = ipow(q_extent_, dim_);
    const std::size_t s_count = ipow(s_extent_, dim_);
    q_.assign(q_count * nr_, 0.0);
    s_.assign(s_count * nr_, 0.0);
    radial_.resize(nr_);
    const double k0 = std::numbers::pi / grid.half_box() * 0.5;
    for (std::size_t p1 = 0; p1 < nr_; ++p1) {
      radial_[p1] = plan.radial_factor(p1);
      const double r = plan.radial().nodes[p1];
      for (std::size_t idx = 0; idx < q_count; ++idx) {
        const ModeTuple v = decode(idx, q_extent_, 2 * n_);
        cplx sum = 0.0;
        for (std::size_t p2 = 0; p2 < plan.qhat_rule().size(); ++p2) {
          sum += plan.qhat_rule().weights[p2] *
                 std::polar(1.0, -k0 * r * dot(v, plan.qhat_rule().nodes[p2]));
        }
        q_[idx * nr_ + p1] = sum;
      }
      for (std::size_t idx = 0; idx < s_count; ++idx) {
        const ModeTuple u = decode(idx, s_extent_, n_);
        cplx sum = 0.0;
        for (std::size_t p3 = 0; p3 < plan.sigma_rule().size(); ++p3) {
          sum += plan.sigma_rule().weights[p3] *
                 std::polar(1.0, k0 * r * dot(u, plan.sigma_rule().nodes[p3]));
        }
        s_[idx * nr_ + p1] = sum;
      }
    }
  }

  cplx weight(const ModeTuple& v, const ModeTuple& u) const {
    const cplx* q = &q_[encode(v, q_extent_, 2 * n_) * nr_];
    const cplx* s = &s_[encode(u, s_extent_, n_) * nr_];
    cplx total = 0.0;
    for (std::size_t p1 = 0; p1 < nr_; ++p1) total += radial_[p1] * (q[p1] * s[p1]);
    return total;
  }

 private:
  static std::size_t ipow(int b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(b);
    return r;
  }
  double dot(const ModeTuple& v, const Vec3& x) const {
    double s = 0.0;
    for (int a = 0; a < dim_; ++a) s += v[a] * x[a];
    return s;
  }
  ModeTuple decode(std::size_t idx, int extent, int offset) const {
    ModeTuple v{0, 0, 0};
    for (int a = dim_ - 1; a >= 0; --a) {
      v[a] = static_cast<int>(idx % extent) - offset;
      idx /= extent;
    }
    return v;
  }
  std::size_t encode(const ModeTuple& v, int extent, int offset) const {
    std::size_t idx = 0;
    for (int a = 0; a < dim_; ++a) idx = idx * extent + static_cast<std::size_t>(v[a] + offset);
    return idx;
  }

  int dim_, n_;
  std::size_t nr_;
  int q_extent_, s_extent_;
  std::vector<cplx> q_, s_;
  std::vector<double> radial_;
};

ModeTuple add(const ModeTuple& a, const ModeTuple& b, int sa = 1, int sb = 1) {
  return {sa * a[0] + sb * b[0], sa * a[1] + sb * b[1], sa * a[2] + sb * b[2]};
}

void check_direct(const SpectralCoeffs& coeffs, const KernelPlan& plan, bool force) {
  if (!(coeffs.grid == plan.grid())) throw ValidationError("coefficients are not on the plan's grid");
  if (!force && !direct_evaluation_allowed(plan.grid())) {
    throw ValidationError("direct evaluation refused for N = " + std::to_string(plan.grid().n()) +
                          " in " + std::to_string(plan.grid().dim()) +
                          "D (limit 16 in 2D, 8 in 3D; pass force to override)");
  }
}

void accumulate_term(Term term, const SpectralCoeffs& coeffs, const AngularTables& tables,
                     double sign, SpectralCoeffs& out) {
  const SpectralGrid& grid = coeffs.grid;
  const std::size_t size = grid.size();
  std::vector<ModeTuple> modes(size);
  for (std::size_t i = 0; i < size; ++i) modes[i] = grid.mode_tuple(i);

  for (std::size_t jf = 0; jf < size; ++jf) {
    const ModeTuple& j = modes[jf];
    cplx sum = 0.0;
    for (std::size_t lf = 0; lf < size; ++lf) {
      const ModeTuple& l = modes[lf];
      const cplx fl = coeffs.coeffs[lf];
      for (std::size_t mf = 0; mf < size; ++mf) {
        const ModeTuple& m = modes[mf];
        const ModeTuple n = add(add(j, l, 1, -1), m, 1, -1);
        if (!grid.modes_in_range(n)) continue;
        cplx g;
        switch (term) {
          case Term::K1: g = tables.weight(add(add(m, m), add(l, n)), add(l, n, 1, -1)); break;
          case Term::K2: g = tables.weight(add(add(m, m), n), add(n, n, 0, -1)); break;
          case Term::K3: g = tables.weight(add(l, n), add(l, n, 1, -1)); break;
          case Term::K4: g = tables.weight(add(add(m, m), l), l); break;
        }
        sum += g * (fl * coeffs.coeffs[mf] * coeffs.at(n));
      }
    }
    out.coeffs[jf] += sign * sum;
  }
}

}  // namespace

SpectralCoeffs apply_term_direct(Term term, const SpectralCoeffs& coeffs, const KernelPlan& plan,
                                 bool force) {
  check_direct(coeffs, plan, force);
  AngularTables tables(plan);
  SpectralCoeffs out(coeffs.grid);
  accumulate_term(term, coeffs, tables, 1.0, out);
  return out;
}

SpectralCoeffs apply_K_direct(const SpectralCoeffs& coeffs, const KernelPlan& plan, bool force) {
  check_direct(coeffs, plan, force);
  AngularTables tables(plan);
  SpectralCoeffs out(coeffs.grid);
  const double pre = std::ldexp(1.0, 1 - plan.grid().dim());
  accumulate_term(Term::K1, coeffs, tables, pre, out);
  accumulate_term(Term::K2, coeffs, tables, -pre, out);
  accumulate_term(Term::K3, coeffs, tables, pre, out);
  accumulate_term(Term::K4, coeffs, tables, -pre, out);
  return out;
}

}  // namespace wavekin
