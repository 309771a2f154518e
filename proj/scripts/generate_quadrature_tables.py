#!/usr/bin/env python3
"""Generates embedded quadrature tables for the reference triangle.

Writes two C++ headers:
  include/swedg/quadrature_tables.hpp  -- collapsed-coordinate volume rules,
                                          one per exactness degree 1..16
  include/swedg/sbp_tables.hpp         -- boundary-inclusive SBP rules with
                                          Gauss-Legendre face nodes, N=1..4

Reference triangle: vertices (-1,-1), (1,-1), (-1,1), area 2.
"""
import numpy as np
from scipy.special import roots_jacobi, roots_legendre, eval_jacobi
from scipy.optimize import linprog

np.set_printoptions(precision=17)


def collapsed_rule(degree):
    """Volume rule exact for total degree `degree`, via the Duffy map with a
    Gauss-Jacobi(1,0) rule absorbing the collapsed-coordinate Jacobian."""
    n = (degree + 2) // 2  # 2n-1 >= degree
    a, wa = roots_legendre(n)
    b, wb = roots_jacobi(n, 1.0, 0.0)  # weight (1-b)
    pts, wts = [], []
    for bi, wbi in zip(b, wb):
        for ai, wai in zip(a, wa):
            x = (1.0 + ai) * (1.0 - bi) / 2.0 - 1.0
            y = bi
            pts.append((x, y))
            wts.append(wai * wbi / 2.0)
    return np.array(pts), np.array(wts)


def jacobi_p(x, alpha, beta, n):
    """Orthonormal Jacobi polynomial on [-1,1]."""
    from scipy.special import gamma
    x = np.asarray(x, dtype=float)
    p = eval_jacobi(n, alpha, beta, x)
    # L2 norm of classical Jacobi polynomial w.r.t. (1-x)^a (1+x)^b
    nrm2 = (2 ** (alpha + beta + 1) / (2 * n + alpha + beta + 1)
            * gamma(n + alpha + 1) * gamma(n + beta + 1)
            / (gamma(n + 1) * gamma(n + alpha + beta + 1)))
    return p / np.sqrt(nrm2)


def dubiner(x, y, i, j):
    """Orthonormal basis member on the reference triangle."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    a = np.where(np.abs(1.0 - y) > 1e-14, 2.0 * (1.0 + x) / (1.0 - y) - 1.0, -1.0)
    b = y
    return (np.sqrt(2.0) * jacobi_p(a, 0.0, 0.0, i)
            * jacobi_p(b, 2.0 * i + 1.0, 0.0, j) * (1.0 - b) ** i)


def dubiner_vandermonde(pts, N):
    cols = []
    for i in range(N + 1):
        for j in range(N + 1 - i):
            cols.append(dubiner(pts[:, 0], pts[:, 1], i, j))
    return np.column_stack(cols)


def check_exactness(pts, wts, degree):
    """Max error integrating the orthonormal basis up to `degree`."""
    V = dubiner_vandermonde(pts, degree)
    moments = V.T @ wts
    exact = np.zeros(V.shape[1])
    exact[0] = np.sqrt(2.0)  # integral of the constant mode 1/sqrt(2)
    return np.max(np.abs(moments - exact))


FACE_PARAM = [
    lambda r: (r, -1.0 + 0.0 * r),    # face 0: y = -1
    lambda r: (-r, r),                # face 1: hypotenuse x + y = 0
    lambda r: (-1.0 + 0.0 * r, -r),   # face 2: x = -1
]
FACE_JAC = [1.0, np.sqrt(2.0), 1.0]


def sbp_rule(N):
    """Boundary-inclusive rule: Gauss-Legendre face nodes + interior nodes,
    positive weights, volume exactness 2N-1."""
    r, wr = roots_legendre(N + 1)
    bpts = []
    for f in range(3):
        fx, fy = FACE_PARAM[f](r)
        for k in range(N + 1):
            bpts.append((fx[k], fy[k]))
    bpts = np.array(bpts)

    # interior candidate nodes: shrunk copies of collapsed rules plus a few
    # points along the medians; the LP below picks positive weights
    cent = np.array([-1.0 / 3.0, -1.0 / 3.0])
    cand = [np.array([cent])]
    for deg, s in [(2 * N - 1, 0.92), (2 * N, 0.72), (2 * N + 1, 0.5)]:
        p, _ = collapsed_rule(deg)
        cand.append(cent + s * (p - cent))
    for s in (0.3, 0.55, 0.8):
        for v in [(-1, -1), (1, -1), (-1, 1)]:
            cand.append(np.array([cent + s * (np.array(v, dtype=float) - cent)]))
    ipts = np.vstack(cand)

    deg = 2 * N - 1

    def solve_lp(pts):
        A = dubiner_vandermonde(pts, deg)
        m = np.zeros(A.shape[1])
        m[0] = np.sqrt(2.0)
        nn = pts.shape[0]
        c = np.zeros(nn + 1)
        c[-1] = -1.0
        A_eq = np.hstack([A.T, np.zeros((A.shape[1], 1))])
        A_ub = np.hstack([-np.eye(nn), np.ones((nn, 1))])
        res = linprog(c, A_ub=A_ub, b_ub=np.zeros(nn), A_eq=A_eq, b_eq=m,
                      bounds=[(0, 2.0)] * nn + [(0, 2.0)], method="highs")
        if res.status != 0 or res.x[-1] < 5e-3:
            return None, None
        return res.x[:nn], A

    pts = np.vstack([bpts, ipts])
    w, A = solve_lp(pts)
    assert w is not None, f"LP failed for N={N}"

    # greedily drop interior nodes while the LP stays feasible with a
    # healthy minimum weight
    nb = bpts.shape[0]
    changed = True
    while changed:
        changed = False
        order = np.argsort(w[nb:]) + nb
        for idx in order:
            trial = np.delete(pts, idx, axis=0)
            wt, At = solve_lp(trial)
            if wt is not None:
                pts, w, A = trial, wt, At
                changed = True
                break

    # polish: project exactly onto the moment constraints
    m = np.zeros(A.shape[1])
    m[0] = np.sqrt(2.0)
    for _ in range(3):
        resid = A.T @ w - m
        w = w - A @ np.linalg.solve(A.T @ A, resid)
    assert np.min(w) > 1e-5
    err = check_exactness(pts, w, deg)
    assert err < 1e-14, f"N={N} exactness {err}"
    return pts, w, N + 1


def fmt(x):
    return repr(float(x))


def write_volume_header(path):
    lines = []
    lines.append("#pragma once")
    lines.append("")
    lines.append("// Tabulated volume quadrature rules on the reference triangle")
    lines.append("// (vertices (-1,-1), (1,-1), (-1,1)).  One rule per exactness")
    lines.append("// degree; entries are {x, y, w}.  Generated by")
    lines.append("// scripts/generate_quadrature_tables.py.")
    lines.append("")
    lines.append("#include <array>")
    lines.append("#include <cstddef>")
    lines.append("")
    lines.append("namespace swedg::tables {")
    lines.append("")
    names = []
    for d in range(1, 17):
        pts, wts = collapsed_rule(d)
        err = check_exactness(pts, wts, d)
        assert err < 2e-14, (d, err)
        name = f"tri_rule_deg{d}"
        names.append((d, name, len(wts)))
        lines.append(f"inline constexpr std::array<std::array<double, 3>, {len(wts)}> {name} = {{{{")
        for (x, y), w in zip(pts, wts):
            lines.append(f"    {{{fmt(x)}, {fmt(y)}, {fmt(w)}}},")
        lines.append("}};")
        lines.append("")
    lines.append("struct TriRuleView {")
    lines.append("    int degree;")
    lines.append("    const std::array<double, 3>* data;")
    lines.append("    std::size_t size;")
    lines.append("};")
    lines.append("")
    lines.append(f"inline constexpr std::array<TriRuleView, {len(names)}> tri_rules = {{{{")
    for d, name, n in names:
        lines.append(f"    {{{d}, {name}.data(), {name}.size()}},")
    lines.append("}};")
    lines.append("")
    lines.append("}  // namespace swedg::tables")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


def write_sbp_header(path):
    lines = []
    lines.append("#pragma once")
    lines.append("")
    lines.append("// Boundary-inclusive SBP quadrature rules with Gauss-Legendre face")
    lines.append("// nodes on the reference triangle.  The first 3*(N+1) nodes are the")
    lines.append("// face nodes in face-major order (face 0, 1, 2); the rest are")
    lines.append("// interior.  Volume exactness 2N-1.  Generated by")
    lines.append("// scripts/generate_quadrature_tables.py.")
    lines.append("")
    lines.append("#include <array>")
    lines.append("#include <cstddef>")
    lines.append("")
    lines.append("namespace swedg::tables {")
    lines.append("")
    names = []
    for N in range(1, 5):
        pts, w, nf = sbp_rule(N)
        name = f"sbp_legendre_N{N}"
        names.append((N, name, len(w), nf))
        lines.append(f"inline constexpr std::array<std::array<double, 3>, {len(w)}> {name} = {{{{")
        for (x, y), wi in zip(pts, w):
            lines.append(f"    {{{fmt(x)}, {fmt(y)}, {fmt(wi)}}},")
        lines.append("}};")
        lines.append("")
    lines.append("struct SbpRuleView {")
    lines.append("    int N;")
    lines.append("    int nodes_per_face;")
    lines.append("    const std::array<double, 3>* data;")
    lines.append("    std::size_t size;")
    lines.append("};")
    lines.append("")
    lines.append(f"inline constexpr std::array<SbpRuleView, {len(names)}> sbp_legendre_rules = {{{{")
    for N, name, n, nf in names:
        lines.append(f"    {{{N}, {nf}, {name}.data(), {name}.size()}},")
    lines.append("}};")
    lines.append("")
    lines.append("}  // namespace swedg::tables")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    import os
    root = os.path.join(os.path.dirname(__file__), "..", "include", "swedg")
    os.makedirs(root, exist_ok=True)
    write_volume_header(os.path.join(root, "quadrature_tables.hpp"))
    write_sbp_header(os.path.join(root, "sbp_tables.hpp"))
    print("ok")
