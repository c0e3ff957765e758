#!/usr/bin/env python3
"""Generate the embedded spherical-design tables (src/spherical_design_tables.cpp).

Sizes 6 and 12 are the octahedron and icosahedron (closed form). The larger
antipodal designs are found numerically: N/2 free unit vectors plus their
negations, with the monomial moments of degree t-1 matched to the sphere's by
nonlinear least squares. Odd degrees vanish by the antipodal symmetry. Each
table is then checked against all real spherical harmonics up to degree t.

Usage: gen_spherical_designs.py [output.cpp]
"""

import sys

import numpy as np
from scipy.optimize import least_squares
from scipy.special import sph_harm_y

# (size, target strength) for the numerically computed symmetric designs.
NUMERIC = [(24, 5), (32, 7), (48, 9)]


def real_harmonic_sums(points, degrees):
    x, y, z = points.T
    theta = np.arccos(np.clip(z, -1.0, 1.0))
    phi = np.arctan2(y, x)
    out = []
    for l in degrees:
        for m in range(0, l + 1):
            y_lm = sph_harm_y(l, m, theta, phi)
            out.append(y_lm.real.sum())
            if m > 0:
                out.append(y_lm.imag.sum())
    return np.array(out)


def max_residual(points, t):
    return np.abs(real_harmonic_sums(points, range(1, t + 1))).max()


def monomial_exponents(degree):
    return [(a, b, degree - a - b) for a in range(degree + 1) for b in range(degree + 1 - a)]


def double_factorial(n):
    return 1 if n <= 0 else n * double_factorial(n - 2)


def sphere_moment(a, b, c):
    if a % 2 or b % 2 or c % 2:
        return 0.0
    return (double_factorial(a - 1) * double_factorial(b - 1) * double_factorial(c - 1)
            / double_factorial(a + b + c + 1))


def solve(n, t, rng, tries=200):
    # An antipodal set is a t-design (t odd) iff its mean of every monomial of
    # degree t-1 equals the sphere mean; lower even degrees follow because
    # x^2 + y^2 + z^2 = 1 on the sphere.
    exps = monomial_exponents(t - 1)
    target = np.array([sphere_moment(*e) for e in exps])
    m = n // 2

    def points(v):
        v = v.reshape(m, 3)
        return v / np.linalg.norm(v, axis=1)[:, None]

    def residual(v):
        x = points(v)
        return np.array([np.mean(x[:, 0] ** a * x[:, 1] ** b * x[:, 2] ** c)
                         for a, b, c in exps]) - target

    def jacobian(v):
        v = v.reshape(m, 3)
        norm = np.linalg.norm(v, axis=1)
        x = v / norm[:, None]
        jac = np.zeros((len(exps), m, 3))
        for r, (a, b, c) in enumerate(exps):
            px = np.stack([a * x[:, 0] ** max(a - 1, 0) * x[:, 1] ** b * x[:, 2] ** c,
                           b * x[:, 0] ** a * x[:, 1] ** max(b - 1, 0) * x[:, 2] ** c,
                           c * x[:, 0] ** a * x[:, 1] ** b * x[:, 2] ** max(c - 1, 0)], axis=1)
            # d x / d v = (I - x x^T) / |v|
            radial = np.sum(px * x, axis=1)
            jac[r] = (px - radial[:, None] * x) / norm[:, None] / m
        return jac.reshape(len(exps), 3 * m)

    best = None
    for _ in range(tries):
        v0 = rng.normal(size=3 * m)
        res = least_squares(residual, v0, jac=jacobian, method="trf",
                            xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=2000)
        half = points(res.x)
        pts = np.concatenate([half, -half])
        r = max_residual(pts, t)
        if best is None or r < best[0]:
            best = (r, pts)
        if r < 1e-14:
            break
    return best


def octahedron():
    e = np.eye(3)
    return np.concatenate([e, -e]), 3


def icosahedron():
    phi = (1 + 5 ** 0.5) / 2
    pts = []
    for a in (1, -1):
        for b in (phi, -phi):
            pts += [(0, a, b), (a, b, 0), (b, 0, a)]
    pts = np.array(pts, dtype=float)
    return pts / np.linalg.norm(pts, axis=1)[:, None], 5


def emit(tables, path):
    lines = [
        "// Generated by tools/gen_spherical_designs.py. Do not edit by hand.",
        "",
        '#include "spherical_design_tables.hpp"',
        "",
        "namespace wavekin::detail {",
        "",
    ]
    for n, (pts, t, prov, resid) in tables.items():
        lines.append(f"// {prov}; max |sum Y_lm|, 1<=l<={t}: {resid:.2e}")
        lines.append(f"static constexpr double kDesign{n}[{n}][3] = {{")
        for p in pts:
            lines.append("    {" + ", ".join(f"{c:.17e}" for c in p) + "},")
        lines.append("};")
        lines.append("")
    lines.append("const std::vector<DesignTable>& design_tables() {")
    lines.append("  static const std::vector<DesignTable> tables = {")
    for n, (pts, t, prov, _) in tables.items():
        lines.append(f'      {{{n}, {t}, true, "{prov}", &kDesign{n}[0][0]}},')
    lines.append("  };")
    lines.append("  return tables;")
    lines.append("}")
    lines.append("")
    lines.append("}  // namespace wavekin::detail")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "src/spherical_design_tables.cpp"
    rng = np.random.default_rng(20240611)
    tables = {}
    for n, (pts, t) in ((6, octahedron()), (12, icosahedron())):
        name = "octahedron" if n == 6 else "icosahedron"
        tables[n] = (pts, t, f"{name} vertices, closed form", max_residual(pts, t))
    for n, t in NUMERIC:
        resid, pts = solve(n, t, rng)
        print(f"N={n} t={t} residual={resid:.3e}", file=sys.stderr)
        if resid > 1e-13:
            raise SystemExit(f"failed to converge for N={n}")
        tables[n] = (pts, t, f"antipodal {t}-design, least-squares solve", resid)
    emit(tables, out)


if __name__ == "__main__":
    main()
