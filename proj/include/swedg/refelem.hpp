#pragma once

// Reference-element operators: orthonormal Dubiner basis on the triangle,
// interpolation/projection/extrapolation matrices, nodal and hybridized
// SBP operators, and traditional SBP operators derived from the
// hybridized ones by congruence with the face-selection matrix.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "swedg/quadrature.hpp"

namespace swedg {

inline int basis_dim(int N) { return (N + 1) * (N + 2) / 2; }

namespace detail {

// Orthonormal Jacobi polynomial P_n^{(a,b)} on [-1,1].
inline Vec jacobi_p(const Vec& x, double a, double b, int n) {
    int np = static_cast<int>(x.size());
    double gamma0 = std::pow(2.0, a + b + 1) / (a + b + 1) * std::tgamma(a + 1) *
                    std::tgamma(b + 1) / std::tgamma(a + b + 1);
    Vec pl0 = Vec::Constant(np, 1.0 / std::sqrt(gamma0));
    if (n == 0) return pl0;
    double gamma1 = (a + 1) * (b + 1) / (a + b + 3) * gamma0;
    Vec pl1 = (((a + b + 2) * x.array() / 2.0 + (a - b) / 2.0) / std::sqrt(gamma1)).matrix();
    if (n == 1) return pl1;
    double aold = 2.0 / (2 + a + b) * std::sqrt((a + 1) * (b + 1) / (a + b + 3));
    for (int i = 1; i < n; ++i) {
        double h1 = 2.0 * i + a + b;
        double anew = 2.0 / (h1 + 2) *
                      std::sqrt((i + 1) * (i + 1 + a + b) * (i + 1 + a) * (i + 1 + b) /
                                ((h1 + 1) * (h1 + 3)));
        double bnew = -(a * a - b * b) / (h1 * (h1 + 2));
        Vec pl2 = (1.0 / anew) * (-aold * pl0 + ((x.array() - bnew) * pl1.array()).matrix());
        pl0 = pl1;
        pl1 = pl2;
        aold = anew;
    }
    return pl1;
}

inline Vec grad_jacobi_p(const Vec& x, double a, double b, int n) {
    if (n == 0) return Vec::Zero(x.size());
    return std::sqrt(n * (n + a + b + 1)) * jacobi_p(x, a + 1, b + 1, n - 1);
}

// Collapsed coordinates (a,b) from triangle coordinates.
inline void collapse(const Vec& x, const Vec& y, Vec& a, Vec& b) {
    int n = static_cast<int>(x.size());
    a.resize(n);
    b.resize(n);
    for (int i = 0; i < n; ++i) {
        a[i] = (std::abs(1.0 - y[i]) > 1e-12) ? 2.0 * (1.0 + x[i]) / (1.0 - y[i]) - 1.0
                                              : -1.0;
        b[i] = y[i];
    }
}

inline Vec simplex_p(const Vec& a, const Vec& b, int i, int j) {
    Vec h1 = jacobi_p(a, 0, 0, i);
    Vec h2 = jacobi_p(b, 2.0 * i + 1.0, 0, j);
    Vec out(a.size());
    for (int k = 0; k < a.size(); ++k)
        out[k] = std::sqrt(2.0) * h1[k] * h2[k] * std::pow(1.0 - b[k], i);
    return out;
}

inline void grad_simplex_p(const Vec& a, const Vec& b, int id, int jd, Vec& dx, Vec& dy) {
    Vec fa = jacobi_p(a, 0, 0, id), dfa = grad_jacobi_p(a, 0, 0, id);
    Vec gb = jacobi_p(b, 2.0 * id + 1.0, 0, jd), dgb = grad_jacobi_p(b, 2.0 * id + 1.0, 0, jd);
    int n = static_cast<int>(a.size());
    dx.resize(n);
    dy.resize(n);
    for (int k = 0; k < n; ++k) {
        double omb = 1.0 - b[k];
        double d_dr = dfa[k] * gb[k];
        if (id > 0) d_dr *= std::pow(0.5 * omb, id - 1);
        double d_ds = dfa[k] * gb[k] * (0.5 * (1.0 + a[k]));
        if (id > 0) d_ds *= std::pow(0.5 * omb, id - 1);
        double tmp = dgb[k] * std::pow(0.5 * omb, id);
        if (id > 0) tmp -= 0.5 * id * gb[k] * std::pow(0.5 * omb, id - 1);
        d_ds += fa[k] * tmp;
        dx[k] = std::pow(2.0, id + 0.5) * d_dr;
        dy[k] = std::pow(2.0, id + 0.5) * d_ds;
    }
}

}  // namespace detail

// Evaluation matrix of the orthonormal basis at the given points.
inline Mat basis_vandermonde(int N, const Vec& x, const Vec& y) {
    Vec a, b;
    detail::collapse(x, y, a, b);
    Mat V(x.size(), basis_dim(N));
    int col = 0;
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N - i; ++j) V.col(col++) = detail::simplex_p(a, b, i, j);
    return V;
}

inline std::pair<Mat, Mat> grad_vandermonde(int N, const Vec& x, const Vec& y) {
    Vec a, b;
    detail::collapse(x, y, a, b);
    Mat Vx(x.size(), basis_dim(N)), Vy(x.size(), basis_dim(N));
    int col = 0;
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N - i; ++j) {
            Vec dx, dy;
            detail::grad_simplex_p(a, b, i, j, dx, dy);
            Vx.col(col) = dx;
            Vy.col(col) = dy;
            ++col;
        }
    return {Vx, Vy};
}

struct RefOperators {
    int N = 0;
    int Np = 0;
    Quadrature2D volq;
    SurfaceQuadrature surfq;
    Mat Vq, Vf;       // interpolation to volume / surface quadrature points
    Mat Dx, Dy;       // modal differentiation
    Mat M;            // mass matrix
    Mat Minv;
    Mat Pq;           // quadrature-based L2 projection
    Mat E;            // extrapolation volume -> surface points
    Mat Qx, Qy;       // nodal differentiation operators
    Vec Bx, By;       // diagonal scaled-normal surface matrices
    Mat Qh_x, Qh_y;   // hybridized operators on stacked volume+surface values
    Mat Qh_skew_x, Qh_skew_y;
    int n_stack() const { return volq.size() + surfq.size(); }
};

namespace detail {

inline double max_abs(const Mat& A) { return A.cwiseAbs().maxCoeff(); }

inline Mat hybridized(const Mat& Q, const Mat& E, const Vec& B) {
    int nq = static_cast<int>(Q.rows());
    int nf = static_cast<int>(B.size());
    Mat Qh(nq + nf, nq + nf);
    Mat EtB = E.transpose() * B.asDiagonal();
    Qh.topLeftCorner(nq, nq) = 0.5 * (Q - Q.transpose());
    Qh.topRightCorner(nq, nf) = 0.5 * EtB;
    Qh.bottomLeftCorner(nf, nq) = -0.5 * B.asDiagonal() * E;
    Qh.bottomRightCorner(nf, nf) = 0.5 * Mat(B.asDiagonal());
    return Qh;
}

}  // namespace detail

inline RefOperators build_ref_operators(int N, const Quadrature2D& volq,
                                        const SurfaceQuadrature& surfq,
                                        double tol = 1e-12) {
    RefOperators ops;
    ops.N = N;
    ops.Np = basis_dim(N);
    ops.volq = volq;
    ops.surfq = surfq;

    ops.Vq = basis_vandermonde(N, volq.x, volq.y);
    ops.Vf = basis_vandermonde(N, surfq.x, surfq.y);
    ops.M = ops.Vq.transpose() * volq.w.asDiagonal() * ops.Vq;
    Eigen::LLT<Mat> llt(ops.M);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("mass matrix not SPD; quadrature insufficient");
    ops.Minv = llt.solve(Mat::Identity(ops.Np, ops.Np));
    ops.Pq = llt.solve(ops.Vq.transpose() * Mat(volq.w.asDiagonal()));

    auto [Vqx, Vqy] = grad_vandermonde(N, volq.x, volq.y);
    ops.Dx = ops.Pq * Vqx;
    ops.Dy = ops.Pq * Vqy;
    ops.E = ops.Vf * ops.Pq;

    int nf = surfq.size();
    ops.Bx.resize(nf);
    ops.By.resize(nf);
    for (int i = 0; i < nf; ++i) {
        ops.Bx[i] = surfq.w[i] * ref_face_normals[surfq.face[i]][0];
        ops.By[i] = surfq.w[i] * ref_face_normals[surfq.face[i]][1];
    }

    Mat Qhat_x = ops.M * ops.Dx;
    Mat Qhat_y = ops.M * ops.Dy;
    ops.Qx = ops.Pq.transpose() * Qhat_x * ops.Pq;
    ops.Qy = ops.Pq.transpose() * Qhat_y * ops.Pq;

    ops.Qh_x = detail::hybridized(ops.Qx, ops.E, ops.Bx);
    ops.Qh_y = detail::hybridized(ops.Qy, ops.E, ops.By);
    ops.Qh_skew_x = ops.Qh_x - ops.Qh_x.transpose();
    ops.Qh_skew_y = ops.Qh_y - ops.Qh_y.transpose();

    // construction-time verification
    int nq = volq.size();
    double r = detail::max_abs(ops.Pq * ops.Vq - Mat::Identity(ops.Np, ops.Np));
    r = std::max(r, detail::max_abs(ops.Qx + ops.Qx.transpose() -
                                    ops.E.transpose() * ops.Bx.asDiagonal() * ops.E));
    r = std::max(r, detail::max_abs(ops.Qy + ops.Qy.transpose() -
                                    ops.E.transpose() * ops.By.asDiagonal() * ops.E));
    Mat Bh = Mat::Zero(nq + nf, nq + nf);
    Bh.bottomRightCorner(nf, nf) = Mat(ops.Bx.asDiagonal());
    r = std::max(r, detail::max_abs(ops.Qh_x + ops.Qh_x.transpose() - Bh));
    Bh.bottomRightCorner(nf, nf) = Mat(ops.By.asDiagonal());
    r = std::max(r, detail::max_abs(ops.Qh_y + ops.Qh_y.transpose() - Bh));
    r = std::max(r, (ops.Qh_x * Vec::Ones(nq + nf)).cwiseAbs().maxCoeff());
    r = std::max(r, (ops.Qh_y * Vec::Ones(nq + nf)).cwiseAbs().maxCoeff());
    if (r > tol)
        throw std::runtime_error("reference operator identities violated, residual " +
                                 std::to_string(r));
    return ops;
}

inline RefOperators build_ref_operators(int N) {
    return build_ref_operators(N, volume_rule(N), surface_rule(N));
}

struct TraditionalSBP {
    int N = 0;
    SBPQuadrature quad;
    Vec M_diag;             // SBP-rule weights
    Mat Q_SBP_x, Q_SBP_y;   // nodal SBP operators
    Vec Bx_sbp, By_sbp;     // diagonal of I_f^T B^i I_f (volume-node indexed)
    std::vector<int> face_index;  // surface slot -> volume node (the I_f map)
};

// Congruence construction: Q_SBP^i = [I; I_f]^T Q_h^i [I; I_f].
inline TraditionalSBP build_traditional_sbp(const RefOperators& ops,
                                            const SBPQuadrature& sbpq,
                                            double tol = 1e-12) {
    int nq = sbpq.vol.size();
    int nf = sbpq.surf.size();
    if (ops.volq.size() != nq || ops.surfq.size() != nf)
        throw std::runtime_error("ref operators not built on the SBP rule");

    TraditionalSBP t;
    t.N = sbpq.N;
    t.quad = sbpq;
    t.M_diag = sbpq.vol.w;
    t.face_index = sbpq.face_node_index;

    // stacked prolongation [I; I_f] applied by index gather
    auto congruence = [&](const Mat& Qh) {
        Mat Q = Qh.topLeftCorner(nq, nq);
        for (int i = 0; i < nf; ++i) {
            int vi = t.face_index[i];
            Q.row(vi) += Qh.row(nq + i).head(nq);
            Q.col(vi) += Qh.col(nq + i).head(nq);
            for (int j = 0; j < nf; ++j) Q(vi, t.face_index[j]) += Qh(nq + i, nq + j);
        }
        return Q;
    };
    t.Q_SBP_x = congruence(ops.Qh_x);
    t.Q_SBP_y = congruence(ops.Qh_y);

    t.Bx_sbp = Vec::Zero(nq);
    t.By_sbp = Vec::Zero(nq);
    for (int i = 0; i < nf; ++i) {
        t.Bx_sbp[t.face_index[i]] += ops.Bx[i];
        t.By_sbp[t.face_index[i]] += ops.By[i];
    }

    double r = detail::max_abs(t.Q_SBP_x + t.Q_SBP_x.transpose() - Mat(t.Bx_sbp.asDiagonal()));
    r = std::max(r, detail::max_abs(t.Q_SBP_y + t.Q_SBP_y.transpose() -
                                    Mat(t.By_sbp.asDiagonal())));
    if (r > tol) throw std::runtime_error("traditional SBP property violated");
    return t;
}

inline TraditionalSBP build_traditional_sbp(int N,
                                            EdgeFamily family = EdgeFamily::GaussLegendre,
                                            const std::string& data_dir = "") {
    SBPQuadrature q = sbp_rule(N, family, data_dir);
    RefOperators ops = build_ref_operators(N, q.vol, q.surf);
    return build_traditional_sbp(ops, q);
}

}  // namespace swedg
