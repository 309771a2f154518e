#pragma once

// Exact solutions and experiment setups, fine-quadrature error norms and
// invariant totals, and the CSV / VTK output writers.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "swedg/mesh.hpp"
#include "swedg/refelem.hpp"
#include "swedg/solver.hpp"
#include "swedg/swe.hpp"

namespace swedg {

// (x, y, t) -> conservative state
using ExactFn = std::function<ConsState(double, double, double)>;
// (x, y) -> bathymetry
using BathymetryFn = std::function<double(double, double)>;

// ---- exact solutions and problem data -------------------------------------

struct VortexParams {
    double h_inf = 1.0;
    double u_inf = 1.0;
    double v_inf = 0.0;
    double beta = 5.0;
    double g = 2.0;
    double xc = 0.0;
    double yc = 0.0;
};

// Translating vortex; smooth exact solution of the flat-bottom equations.
inline ConsState vortex_exact(const VortexParams& p, double x, double y, double t) {
    double xt = x - p.xc - p.u_inf * t;
    double yt = y - p.yc - p.v_inf * t;
    double r2 = xt * xt + yt * yt;
    // velocity carries half the height's exponent; with g = 2 this pair
    // satisfies the flat-bottom equations exactly
    double e = std::exp(-(r2 - 1.0));
    double h = p.h_inf - p.beta * p.beta / (32.0 * M_PI * M_PI) * e * e;
    if (h <= 0.0) throw std::invalid_argument("vortex parameters give nonpositive height");
    double u = p.u_inf - p.beta / (2.0 * M_PI) * e * yt;
    double v = p.v_inf + p.beta / (2.0 * M_PI) * e * xt;
    return {h, h * u, h * v};
}

inline double lake_bathymetry(double x, double /*y*/) {
    return 0.1 * std::sin(2.0 * M_PI * x) * std::cos(2.0 * M_PI * x) + 0.5;
}

// ---- degree-N lattice interpolation ---------------------------------------

// Interpolates point data given on the degree-N mapping lattice into modal
// coefficients.  Lattice nodes include the element boundary, so fields that
// are continuous across faces stay C0 after interpolation.
struct LatticeInterp {
    int N;
    Vec lx, ly;
    Eigen::PartialPivLU<Mat> lu;

    explicit LatticeInterp(int degree) : N(degree) {
        map_lattice(N, lx, ly);
        lu.compute(basis_vandermonde(N, lx, ly));
    }

    Vec coeffs(const Vec& values) const { return lu.solve(values); }
    Mat coeffs(const Mat& values) const { return lu.solve(values); }
};

// Modal state from pointwise functions, sampled on each element's mapping
// lattice (mapping degree must equal the solution degree).
inline State make_state(const Mesh& mesh, int N, const ExactFn& exact,
                        const BathymetryFn& bathy, double t = 0.0) {
    if (mesh.N_map != N) throw std::runtime_error("mapping degree does not match N");
    LatticeInterp li(N);
    int np = basis_dim(N);
    State st;
    st.N = N;
    st.t = t;
    int K = mesh.num_elements();
    st.u.resize(K);
    st.b.resize(K);
    for (int k = 0; k < K; ++k) {
        Mat uv(np, 3);
        Vec bv(np);
        for (int i = 0; i < np; ++i) {
            double x = mesh.map_nodes[k](i, 0), y = mesh.map_nodes[k](i, 1);
            ConsState u = exact(x, y, t);
            uv(i, 0) = u.h;
            uv(i, 1) = u.hu;
            uv(i, 2) = u.hv;
            bv[i] = bathy(x, y);
        }
        st.u[k] = li.coeffs(uv);
        st.b[k] = li.coeffs(bv);
    }
    return st;
}

// Nodal state for the SBP scheme.  Bathymetry is interpolated on the C0
// lattice first so both schemes see the same degree-N bottom.
inline NodalState make_nodal_state(const Mesh& mesh, const RefOperators& ref,
                                   const Geometry& geo, const ExactFn& exact,
                                   const BathymetryFn& bathy, double t = 0.0) {
    LatticeInterp li(ref.N);
    int np = basis_dim(ref.N);
    int nq = ref.volq.size();
    NodalState st;
    st.N = ref.N;
    st.t = t;
    int K = mesh.num_elements();
    st.u.resize(K);
    st.b.resize(K);
    for (int k = 0; k < K; ++k) {
        Vec bl(np);
        for (int i = 0; i < np; ++i)
            bl[i] = bathy(mesh.map_nodes[k](i, 0), mesh.map_nodes[k](i, 1));
        st.b[k] = ref.Vq * li.coeffs(bl);
        st.u[k].resize(nq, 3);
        for (int i = 0; i < nq; ++i) {
            ConsState u = exact(geo.elems[k].xy_vol(i, 0), geo.elems[k].xy_vol(i, 1), t);
            st.u[k](i, 0) = u.h;
            st.u[k](i, 1) = u.hu;
            st.u[k](i, 2) = u.hv;
        }
    }
    return st;
}

// ---- fine-rule evaluation --------------------------------------------------

// Degree-(2N+2) quadrature with basis and mapping evaluations, used for
// error norms and invariant totals.
struct FineQuad {
    int N;
    Quadrature2D rule;
    Mat V, Vx, Vy;  // degree-N basis at the fine points

    explicit FineQuad(int degree) : N(degree) {
        rule = volume_rule_by_degree(2 * N + 2);
        V = basis_vandermonde(N, rule.x, rule.y);
        auto [gx, gy] = grad_vandermonde(N, rule.x, rule.y);
        Vx = gx;
        Vy = gy;
    }

    // physical coordinates and Jacobian at the fine points of one element
    void element_geometry(const Mat& map_coeffs, Mat& xy, Vec& J) const {
        xy = V * map_coeffs;
        Mat dr = Vx * map_coeffs, ds = Vy * map_coeffs;
        int n = rule.size();
        J.resize(n);
        for (int i = 0; i < n; ++i) {
            J[i] = dr(i, 0) * ds(i, 1) - ds(i, 0) * dr(i, 1);
            if (J[i] <= 0.0) throw std::runtime_error("nonpositive Jacobian at fine point");
        }
    }
};

struct ErrorReport {
    double err_h = 0.0, err_hu = 0.0, err_hv = 0.0;
    double combined = 0.0;
    double h_mesh = 0.0;
    int N = 0;
};

// L2 errors of a modal solution against an exact state at time t.
inline ErrorReport l2_error(const FineQuad& fq, const Geometry& geo,
                            const std::vector<Mat>& u_modal, const ExactFn& exact,
                            double t) {
    ErrorReport rep;
    rep.N = fq.N;
    double s[3] = {0, 0, 0};
    Mat xy;
    Vec J;
    for (size_t k = 0; k < u_modal.size(); ++k) {
        fq.element_geometry(geo.elems[k].map_coeffs, xy, J);
        Mat uq = fq.V * u_modal[k];
        for (int i = 0; i < fq.rule.size(); ++i) {
            ConsState ue = exact(xy(i, 0), xy(i, 1), t);
            double wJ = fq.rule.w[i] * J[i];
            double d0 = uq(i, 0) - ue.h, d1 = uq(i, 1) - ue.hu, d2 = uq(i, 2) - ue.hv;
            s[0] += wJ * d0 * d0;
            s[1] += wJ * d1 * d1;
            s[2] += wJ * d2 * d2;
        }
    }
    rep.err_h = std::sqrt(s[0]);
    rep.err_hu = std::sqrt(s[1]);
    rep.err_hv = std::sqrt(s[2]);
    rep.combined = std::sqrt(s[0] + s[1] + s[2]);
    return rep;
}

// Deviation from a reference modal state (e.g. a discrete steady state).
inline ErrorReport l2_error(const FineQuad& fq, const Geometry& geo,
                            const std::vector<Mat>& u_modal,
                            const std::vector<Mat>& ref_modal) {
    ErrorReport rep;
    rep.N = fq.N;
    double s[3] = {0, 0, 0};
    Mat xy;
    Vec J;
    for (size_t k = 0; k < u_modal.size(); ++k) {
        fq.element_geometry(geo.elems[k].map_coeffs, xy, J);
        Mat dq = fq.V * (u_modal[k] - ref_modal[k]);
        for (int i = 0; i < fq.rule.size(); ++i) {
            double wJ = fq.rule.w[i] * J[i];
            for (int c = 0; c < 3; ++c) s[c] += wJ * dq(i, c) * dq(i, c);
        }
    }
    rep.err_h = std::sqrt(s[0]);
    rep.err_hu = std::sqrt(s[1]);
    rep.err_hv = std::sqrt(s[2]);
    rep.combined = std::sqrt(s[0] + s[1] + s[2]);
    return rep;
}

// Nodal SBP solutions are projected to P^N before measuring the error.
inline std::vector<Mat> project_nodal(const RefOperators& ref, const std::vector<Mat>& u) {
    std::vector<Mat> modal(u.size());
    for (size_t k = 0; k < u.size(); ++k) modal[k] = ref.Pq * u[k];
    return modal;
}

struct Invariants {
    double t = 0.0;
    double mass = 0.0;
    double momentum_x = 0.0;
    double momentum_y = 0.0;
    double entropy = 0.0;
    double min_h = 0.0;
};

inline Invariants compute_invariants(const FineQuad& fq, const Geometry& geo,
                                     const std::vector<Mat>& u_modal,
                                     const std::vector<Vec>& b_modal, double g,
                                     double t) {
    Invariants inv;
    inv.t = t;
    inv.min_h = 1e300;
    Mat xy;
    Vec J;
    for (size_t k = 0; k < u_modal.size(); ++k) {
        fq.element_geometry(geo.elems[k].map_coeffs, xy, J);
        Mat uq = fq.V * u_modal[k];
        Vec bq = fq.V * b_modal[k];
        for (int i = 0; i < fq.rule.size(); ++i) {
            double wJ = fq.rule.w[i] * J[i];
            ConsState u{uq(i, 0), uq(i, 1), uq(i, 2)};
            inv.mass += wJ * u.h;
            inv.momentum_x += wJ * u.hu;
            inv.momentum_y += wJ * u.hv;
            inv.entropy += wJ * entropy(u, bq[i], g);
            inv.min_h = std::min(inv.min_h, u.h);
        }
    }
    return inv;
}

// ---- output writers --------------------------------------------------------

// Atomic text write: temp file in the same directory, then rename.
inline void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

inline std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void write_invariants_csv(const std::string& path,
                                 const std::vector<Invariants>& series) {
    std::ostringstream out;
    out << "t,mass,momentum_x,momentum_y,entropy,min_h\n";
    for (const auto& s : series)
        out << csv_number(s.t) << ',' << csv_number(s.mass) << ','
            << csv_number(s.momentum_x) << ',' << csv_number(s.momentum_y) << ','
            << csv_number(s.entropy) << ',' << csv_number(s.min_h) << '\n';
    write_file_atomic(path, out.str());
}

inline void write_errors_csv(const std::string& path,
                             const std::vector<ErrorReport>& reports,
                             const std::vector<double>& orders) {
    std::ostringstream out;
    out << "N,h_mesh,err_h,err_hu,err_hv,err_combined,order\n";
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        out << r.N << ',' << csv_number(r.h_mesh) << ',' << csv_number(r.err_h) << ','
            << csv_number(r.err_hu) << ',' << csv_number(r.err_hv) << ','
            << csv_number(r.combined) << ',';
        if (i < orders.size() && std::isfinite(orders[i])) out << csv_number(orders[i]);
        out << '\n';
    }
    write_file_atomic(path, out.str());
}

// Legacy ASCII VTK unstructured grid: every element plotted on its degree-N
// lattice, subdivided into straight-sided triangles; point data H, h, hu,
// hv, b.
inline void write_solution_vtk(const std::string& path, const Mesh& mesh, int N,
                               const std::vector<Mat>& u_modal,
                               const std::vector<Vec>& b_modal) {
    LatticeInterp li(N);
    Mat Vl = basis_vandermonde(N, li.lx, li.ly);
    int np = basis_dim(N);
    int K = mesh.num_elements();

    auto idx = [N](int i, int j) { return i * (N + 1) - i * (i - 1) / 2 + j; };
    std::vector<std::array<int, 3>> sub;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N - i; ++j) {
            sub.push_back({idx(i, j), idx(i + 1, j), idx(i, j + 1)});
            if (j < N - i - 1)
                sub.push_back({idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1)});
        }

    std::ostringstream out;
    out.precision(15);
    out << "# vtk DataFile Version 3.0\nshallow water solution\nASCII\n"
        << "DATASET UNSTRUCTURED_GRID\n";
    out << "POINTS " << K * np << " double\n";
    for (int k = 0; k < K; ++k)
        for (int i = 0; i < np; ++i)
            out << mesh.map_nodes[k](i, 0) << ' ' << mesh.map_nodes[k](i, 1) << " 0\n";
    int nc = K * static_cast<int>(sub.size());
    out << "CELLS " << nc << ' ' << 4 * nc << '\n';
    for (int k = 0; k < K; ++k)
        for (const auto& s : sub)
            out << "3 " << k * np + s[0] << ' ' << k * np + s[1] << ' ' << k * np + s[2]
                << '\n';
    out << "CELL_TYPES " << nc << '\n';
    for (int c = 0; c < nc; ++c) out << "5\n";

    out << "POINT_DATA " << K * np << '\n';
    std::vector<Mat> uv(K);
    std::vector<Vec> bv(K);
    for (int k = 0; k < K; ++k) {
        uv[k] = Vl * u_modal[k];
        bv[k] = Vl * b_modal[k];
    }
    auto scalar = [&](const std::string& name, auto&& value) {
        out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (int k = 0; k < K; ++k)
            for (int i = 0; i < np; ++i) out << value(k, i) << '\n';
    };
    scalar("H", [&](int k, int i) { return uv[k](i, 0) + bv[k][i]; });
    scalar("h", [&](int k, int i) { return uv[k](i, 0); });
    scalar("hu", [&](int k, int i) { return uv[k](i, 1); });
    scalar("hv", [&](int k, int i) { return uv[k](i, 2); });
    scalar("b", [&](int k, int i) { return bv[k][i]; });
    write_file_atomic(path, out.str());
}

}  // namespace swedg
