#pragma once

// Semi-discrete entropy-stable DG operator: entropy projection,
// skew-form flux differencing over stacked volume+surface values,
// surface coupling with EC or Lax-Friedrichs interface fluxes,
// bathymetry source, the nodal DG-SBP variant, and low-storage RK4.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "swedg/mesh.hpp"
#include "swedg/parallel.hpp"
#include "swedg/refelem.hpp"
#include "swedg/swe.hpp"

namespace swedg {

enum class Scheme { Hybridized, SbpLegendre, SbpLobatto };
enum class Penalty { EntropyConservative, LaxFriedrichs };

// Modal state for the hybridized scheme: per element, Np coefficient
// triples for (h, hu, hv) plus Np bathymetry coefficients.
struct State {
    int N = 0;
    double t = 0.0;
    std::vector<Mat> u;  // per element: Np x 3
    std::vector<Vec> b;  // per element: Np
};

// Nodal state for the SBP scheme: values at the SBP volume nodes.
struct NodalState {
    int N = 0;
    double t = 0.0;
    std::vector<Mat> u;  // per element: Nq x 3
    std::vector<Vec> b;  // per element: Nq
};

struct ElementOps {
    Mat Qh_skew_x, Qh_skew_y;  // skew parts of the physical hybridized operators
    Vec Bx, By;                // diag of B^{i,k} (surface-point indexed, weights included)
    Vec wf_sJ;                 // Wf * Jf/Jf_hat, the face measure for penalties
    Mat Mh, Mh_inv;            // weighted mass matrix and its inverse
    Vec b_stacked;             // bathymetry values at volume+surface points
    Vec src_x, src_y;          // Qh^{i,k} applied to b_stacked
};

// Full physical hybridized operator, recovered from its skew part and
// boundary block: Qh = (Qh_skew + blockdiag(0, B)) / 2.
inline Mat full_Qh(const Mat& skew, const Vec& B, int nq) {
    Mat Qh = 0.5 * skew;
    int nf = static_cast<int>(B.size());
    for (int i = 0; i < nf; ++i) Qh(nq + i, nq + i) += 0.5 * B[i];
    return Qh;
}

struct SolverOps {
    const RefOperators* ref = nullptr;
    const Mesh* mesh = nullptr;
    const Geometry* geo = nullptr;
    const Connectivity* conn = nullptr;
    const FaceMatch* fm = nullptr;
    std::vector<ElementOps> elem;
    double g = 9.81;
    Penalty penalty = Penalty::LaxFriedrichs;
    int threads = 1;
};

namespace detail {

inline Mat split_form_op(const Mat& Qh_ref_x, const Mat& Qh_ref_y, const Vec& g1,
                         const Vec& g2) {
    // 1/2 sum_j diag(g_j) Qh^j + Qh^j diag(g_j)
    Mat out = 0.5 * (g1.asDiagonal() * Qh_ref_x + Qh_ref_x * g1.asDiagonal() +
                     g2.asDiagonal() * Qh_ref_y + Qh_ref_y * g2.asDiagonal());
    return out;
}

}  // namespace detail

inline SolverOps precompute_element_ops(const RefOperators& ref, const Mesh& mesh,
                                        const Geometry& geo, const Connectivity& conn,
                                        const FaceMatch& fm, double g,
                                        Penalty penalty = Penalty::LaxFriedrichs,
                                        int threads = 1) {
    SolverOps ops;
    ops.ref = &ref;
    ops.mesh = &mesh;
    ops.geo = &geo;
    ops.conn = &conn;
    ops.fm = &fm;
    ops.g = g;
    ops.penalty = penalty;
    ops.threads = threads;

    int K = mesh.num_elements();
    int nf = ref.surfq.size();
    ops.elem.resize(K);
    for (int k = 0; k < K; ++k) {
        const ElemGeom& eg = geo.elems[k];
        ElementOps& eo = ops.elem[k];
        Mat Qh_x = detail::split_form_op(ref.Qh_x, ref.Qh_y, eg.gf.col(0), eg.gf.col(1));
        Mat Qh_y = detail::split_form_op(ref.Qh_x, ref.Qh_y, eg.gf.col(2), eg.gf.col(3));
        eo.Qh_skew_x = Qh_x - Qh_x.transpose();
        eo.Qh_skew_y = Qh_y - Qh_y.transpose();
        eo.Bx.resize(nf);
        eo.By.resize(nf);
        eo.wf_sJ.resize(nf);
        for (int i = 0; i < nf; ++i) {
            double m = ref.surfq.w[i] * eg.sJ[i];
            eo.Bx[i] = m * eg.nx[i];
            eo.By[i] = m * eg.ny[i];
            eo.wf_sJ[i] = m;
        }
        eo.Mh = ref.Vq.transpose() * (ref.volq.w.cwiseProduct(eg.J_vol)).asDiagonal() *
                ref.Vq;
        eo.Mh_inv = eo.Mh.llt().solve(Mat::Identity(ref.Np, ref.Np));
    }
    return ops;
}

// Installs bathymetry coefficients into the precomputed operators:
// stacked point values and the source operator applied to them.
inline void set_bathymetry(SolverOps& ops, const std::vector<Vec>& b_coeffs) {
    const RefOperators& ref = *ops.ref;
    int nq = ref.volq.size(), nf = ref.surfq.size();
    for (size_t k = 0; k < ops.elem.size(); ++k) {
        ElementOps& eo = ops.elem[k];
        eo.b_stacked.resize(nq + nf);
        eo.b_stacked.head(nq) = ref.Vq * b_coeffs[k];
        eo.b_stacked.tail(nf) = ref.Vf * b_coeffs[k];
        Vec bf = eo.b_stacked.tail(nf);
        eo.src_x = 0.5 * (eo.Qh_skew_x * eo.b_stacked);
        eo.src_y = 0.5 * (eo.Qh_skew_y * eo.b_stacked);
        eo.src_x.tail(nf) += 0.5 * eo.Bx.cwiseProduct(bf);
        eo.src_y.tail(nf) += 0.5 * eo.By.cwiseProduct(bf);
    }
}

// Entropy-projected conservative variables at the stacked
// volume+surface quadrature points of one element.
inline Mat entropy_projection_element(const RefOperators& ref, const ElementOps& eo,
                                      const Mat& u_modal, double g) {
    int nq = ref.volq.size(), nf = ref.surfq.size();
    Mat uq = ref.Vq * u_modal;  // nq x 3
    Mat vq(nq, 3);
    for (int i = 0; i < nq; ++i) {
        EntropyState v = entropy_vars({uq(i, 0), uq(i, 1), uq(i, 2)}, eo.b_stacked[i], g);
        vq(i, 0) = v.v1;
        vq(i, 1) = v.v2;
        vq(i, 2) = v.v3;
    }
    Mat vh = ref.Pq * vq;
    Mat vt(nq + nf, 3);
    vt.topRows(nq) = ref.Vq * vh;
    vt.bottomRows(nf) = ref.Vf * vh;
    Mat ut(nq + nf, 3);
    for (int i = 0; i < nq + nf; ++i) {
        ConsState u = cons_from_entropy({vt(i, 0), vt(i, 1), vt(i, 2)}, eo.b_stacked[i], g);
        ut(i, 0) = u.h;
        ut(i, 1) = u.hu;
        ut(i, 2) = u.hv;
    }
    return ut;
}

inline std::vector<Mat> entropy_projection(const SolverOps& ops, const State& state) {
    int K = static_cast<int>(ops.elem.size());
    std::vector<Mat> proj(K);
    parallel_for(K, ops.threads, [&](int k) {
        try {
            proj[k] = entropy_projection_element(*ops.ref, ops.elem[k], state.u[k], ops.g);
        } catch (const PositivityError& e) {
            throw std::runtime_error("entropy projection failed in element " +
                                     std::to_string(k) + " at t = " +
                                     std::to_string(state.t) + ": " + e.what());
        }
    });
    return proj;
}

namespace detail {

inline ConsState row_state(const Mat& m, int i) { return {m(i, 0), m(i, 1), m(i, 2)}; }

// Both EC flux directions at once (shares the averages).
inline void ec_flux_xy(const ConsState& a, const ConsState& b, double g, double* fx,
                       double* fy) {
    double uxa = a.hu / a.h, uya = a.hv / a.h;
    double uxb = b.hu / b.h, uyb = b.hv / b.h;
    double h_avg = 0.5 * (a.h + b.h);
    double p = g * h_avg * h_avg - 0.25 * g * (a.h * a.h + b.h * b.h);
    double ux = 0.5 * (uxa + uxb), uy = 0.5 * (uya + uyb);
    double hu = 0.5 * (a.hu + b.hu), hv = 0.5 * (a.hv + b.hv);
    fx[0] = hu;
    fx[1] = hu * ux + p;
    fx[2] = hu * uy;
    fy[0] = hv;
    fy[1] = hv * ux;
    fy[2] = hv * uy + p;
}

// Two-pass skew volume kernel: row sums of (Qh_skew^x o F^x) + (Qh_skew^y o F^y)
// skipping the zero surface-surface block.  Pass 1 covers the first nq
// columns for all rows; pass 2 the volume-row / surface-column block.
inline void skew_volume_kernel(const Mat& Qsx, const Mat& Qsy, const Mat& ut, int nq,
                               double g, Mat& acc) {
    int nh = static_cast<int>(ut.rows());
    double fx[3], fy[3];
    for (int j = 0; j < nq; ++j) {
        ConsState uj = row_state(ut, j);
        for (int i = 0; i < nh; ++i) {
            double qx = Qsx(i, j), qy = Qsy(i, j);
            if (qx == 0.0 && qy == 0.0) continue;
            ec_flux_xy(row_state(ut, i), uj, g, fx, fy);
            for (int c = 0; c < 3; ++c) acc(i, c) += qx * fx[c] + qy * fy[c];
        }
    }
    for (int j = nq; j < nh; ++j) {
        ConsState uj = row_state(ut, j);
        for (int i = 0; i < nq; ++i) {
            double qx = Qsx(i, j), qy = Qsy(i, j);
            if (qx == 0.0 && qy == 0.0) continue;
            ec_flux_xy(row_state(ut, i), uj, g, fx, fy);
            for (int c = 0; c < 3; ++c) acc(i, c) += qx * fx[c] + qy * fy[c];
        }
    }
}

}  // namespace detail

// Semi-discrete RHS for the hybridized scheme: returns modal du/dt.
// `proj` must be the entropy projection of `state`.
inline std::vector<Mat> rhs(const SolverOps& ops, const State& state,
                            const std::vector<Mat>& proj) {
    const RefOperators& ref = *ops.ref;
    int K = static_cast<int>(ops.elem.size());
    int nq = ref.volq.size(), nf = ref.surfq.size();
    int npf = ref.surfq.nodes_per_face;
    std::vector<Mat> du(K);
    bool lf = ops.penalty == Penalty::LaxFriedrichs;

    parallel_for(K, ops.threads, [&](int k) {
        const ElementOps& eo = ops.elem[k];
        const Mat& ut = proj[k];
        Mat acc = Mat::Zero(nq + nf, 3);
        detail::skew_volume_kernel(eo.Qh_skew_x, eo.Qh_skew_y, ut, nq, ops.g, acc);

        // surface flux with exterior traces
        const ElemGeom& eg = ops.geo->elems[k];
        for (int f = 0; f < 3; ++f) {
            const FaceInfo& info = ops.conn->faces[k][f];
            for (int s = 0; s < npf; ++s) {
                int i = f * npf + s;
                ConsState ui = detail::row_state(ut, nq + i);
                ConsState up;
                if (info.type == FaceType::Wall) {
                    up = wall_ghost(ui, eg.nx[i], eg.ny[i]);
                } else {
                    int j = ops.fm->perm[k][f][s];
                    up = detail::row_state(proj[info.nbr_elem], nq + j);
                }
                double fx[3], fy[3];
                detail::ec_flux_xy(up, ui, ops.g, fx, fy);
                for (int c = 0; c < 3; ++c)
                    acc(nq + i, c) += eo.Bx[i] * fx[c] + eo.By[i] * fy[c];
                if (lf) {
                    auto pen = lf_penalty(ui, up, ops.g, eg.nx[i], eg.ny[i]);
                    for (int c = 0; c < 3; ++c) acc(nq + i, c) -= eo.wf_sJ[i] * pen[c];
                }
            }
        }

        // bathymetry source at stacked points, tested against the basis
        Mat src = Mat::Zero(nq + nf, 3);
        for (int i = 0; i < nq + nf; ++i) {
            double h = ut(i, 0);
            src(i, 1) = -ops.g * h * eo.src_x[i];
            src(i, 2) = -ops.g * h * eo.src_y[i];
        }
        Mat stacked = src - acc;
        Mat modal = ref.Vq.transpose() * stacked.topRows(nq) +
                    ref.Vf.transpose() * stacked.bottomRows(nf);
        du[k] = eo.Mh_inv * modal;
        if (!du[k].allFinite())
            throw std::runtime_error("non-finite RHS in element " + std::to_string(k) +
                                     " at t = " + std::to_string(state.t));
    });
    return du;
}

inline std::vector<Mat> rhs(const SolverOps& ops, const State& state) {
    return rhs(ops, state, entropy_projection(ops, state));
}

// ---- traditional SBP (nodal) scheme ---------------------------------------

struct SbpElementOps {
    Mat Qs_x, Qs_y;   // physical split-form SBP operators (Nq x Nq)
    Vec Bx, By;       // surface-slot diagonals of B^{i,k}
    Vec wf_sJ;
    Vec Minv_diag;    // 1 / (w_i J_i)
    Vec src_x, src_y; // Qs^{i,k} b
};

struct SbpSolverOps {
    const RefOperators* ref = nullptr;  // built on the SBP rule
    const TraditionalSBP* sbp = nullptr;
    const Mesh* mesh = nullptr;
    const Geometry* geo = nullptr;
    const Connectivity* conn = nullptr;
    const FaceMatch* fm = nullptr;
    std::vector<SbpElementOps> elem;
    double g = 9.81;
    Penalty penalty = Penalty::LaxFriedrichs;
    int threads = 1;
};

inline SbpSolverOps precompute_sbp_ops(const RefOperators& ref, const TraditionalSBP& sbp,
                                       const Mesh& mesh, const Geometry& geo,
                                       const Connectivity& conn, const FaceMatch& fm,
                                       double g, Penalty penalty = Penalty::LaxFriedrichs,
                                       int threads = 1) {
    SbpSolverOps ops;
    ops.ref = &ref;
    ops.sbp = &sbp;
    ops.mesh = &mesh;
    ops.geo = &geo;
    ops.conn = &conn;
    ops.fm = &fm;
    ops.g = g;
    ops.penalty = penalty;
    ops.threads = threads;

    int K = mesh.num_elements();
    int nq = ref.volq.size(), nf = ref.surfq.size();
    ops.elem.resize(K);
    for (int k = 0; k < K; ++k) {
        const ElemGeom& eg = geo.elems[k];
        SbpElementOps& eo = ops.elem[k];
        eo.Qs_x = detail::split_form_op(sbp.Q_SBP_x, sbp.Q_SBP_y, eg.gf.col(0).head(nq),
                                        eg.gf.col(1).head(nq));
        eo.Qs_y = detail::split_form_op(sbp.Q_SBP_x, sbp.Q_SBP_y, eg.gf.col(2).head(nq),
                                        eg.gf.col(3).head(nq));
        eo.Bx.resize(nf);
        eo.By.resize(nf);
        eo.wf_sJ.resize(nf);
        for (int i = 0; i < nf; ++i) {
            double m = ref.surfq.w[i] * eg.sJ[i];
            eo.Bx[i] = m * eg.nx[i];
            eo.By[i] = m * eg.ny[i];
            eo.wf_sJ[i] = m;
        }
        eo.Minv_diag = (sbp.M_diag.cwiseProduct(eg.J_vol)).cwiseInverse();
    }
    return ops;
}

inline void set_bathymetry(SbpSolverOps& ops, const std::vector<Vec>& b_nodal) {
    for (size_t k = 0; k < ops.elem.size(); ++k) {
        ops.elem[k].src_x = ops.elem[k].Qs_x * b_nodal[k];
        ops.elem[k].src_y = ops.elem[k].Qs_y * b_nodal[k];
    }
}

inline std::vector<Mat> rhs_sbp(const SbpSolverOps& ops, const NodalState& state) {
    const TraditionalSBP& sbp = *ops.sbp;
    int K = static_cast<int>(ops.elem.size());
    int nq = static_cast<int>(sbp.M_diag.size());
    int nf = static_cast<int>(sbp.face_index.size());
    int npf = ops.ref->surfq.nodes_per_face;
    bool lf = ops.penalty == Penalty::LaxFriedrichs;
    std::vector<Mat> du(K);

    parallel_for(K, ops.threads, [&](int k) {
        const SbpElementOps& eo = ops.elem[k];
        const Mat& u = state.u[k];
        for (int i = 0; i < nq; ++i) check_positive(u(i, 0));
        Mat acc = Mat::Zero(nq, 3);
        double fx[3], fy[3];
        for (int j = 0; j < nq; ++j) {
            ConsState uj = detail::row_state(u, j);
            for (int i = 0; i < nq; ++i) {
                double qx = eo.Qs_x(i, j), qy = eo.Qs_y(i, j);
                if (qx == 0.0 && qy == 0.0) continue;
                detail::ec_flux_xy(detail::row_state(u, i), uj, ops.g, fx, fy);
                for (int c = 0; c < 3; ++c) acc(i, c) += 2.0 * (qx * fx[c] + qy * fy[c]);
            }
        }

        const ElemGeom& eg = ops.geo->elems[k];
        for (int f = 0; f < 3; ++f) {
            const FaceInfo& info = ops.conn->faces[k][f];
            for (int s = 0; s < npf; ++s) {
                int i = f * npf + s;
                int vi = sbp.face_index[i];
                ConsState ui = detail::row_state(u, vi);
                ConsState up;
                if (info.type == FaceType::Wall) {
                    up = wall_ghost(ui, eg.nx[i], eg.ny[i]);
                } else {
                    int j = ops.fm->perm[k][f][s];
                    up = detail::row_state(state.u[info.nbr_elem],
                                           sbp.face_index[j]);
                }
                detail::ec_flux_xy(up, ui, ops.g, fx, fy);
                auto fxi = flux(ui, ops.g, 0);
                auto fyi = flux(ui, ops.g, 1);
                for (int c = 0; c < 3; ++c)
                    acc(vi, c) += eo.Bx[i] * (fx[c] - fxi[c]) + eo.By[i] * (fy[c] - fyi[c]);
                if (lf) {
                    auto pen = lf_penalty(ui, up, ops.g, eg.nx[i], eg.ny[i]);
                    for (int c = 0; c < 3; ++c) acc(vi, c) -= eo.wf_sJ[i] * pen[c];
                }
            }
        }

        Mat rhs_nodal(nq, 3);
        for (int i = 0; i < nq; ++i) {
            double h = u(i, 0);
            rhs_nodal(i, 0) = -acc(i, 0);
            rhs_nodal(i, 1) = -acc(i, 1) - ops.g * h * eo.src_x[i];
            rhs_nodal(i, 2) = -acc(i, 2) - ops.g * h * eo.src_y[i];
        }
        du[k] = eo.Minv_diag.asDiagonal() * rhs_nodal;
        if (!du[k].allFinite())
            throw std::runtime_error("non-finite SBP RHS in element " + std::to_string(k) +
                                     " at t = " + std::to_string(state.t));
    });
    return du;
}

// ---- time stepping --------------------------------------------------------

// Carpenter-Kennedy five-stage fourth-order low-storage coefficients.
struct Lsrk45 {
    static constexpr int stages = 5;
    static constexpr double a[5] = {
        0.0,
        -0.41789047449985195,
        -1.192151694642677,
        -1.6977846924715279,
        -1.5141834442571558,
    };
    static constexpr double b[5] = {
        0.14965902199922912,
        0.37921031299962726,
        0.8229550293869817,
        0.6994504559491221,
        0.15305724796815198,
    };
    static constexpr double c[5] = {
        0.0,
        0.14965902199922912,
        0.37040095736420475,
        0.6222557631344432,
        0.9582821306746903,
    };
};

// One low-storage RK step.  `rhs_fn(state) -> vector<Mat>` is evaluated at
// the stage states; `res` is the persistent register (resized on entry).
template <typename StateT, typename RhsFn>
void step_lsrk45(StateT& state, const RhsFn& rhs_fn, double dt, std::vector<Mat>& res) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    int K = static_cast<int>(state.u.size());
    if (static_cast<int>(res.size()) != K) {
        res.assign(K, Mat());
        for (int k = 0; k < K; ++k) res[k] = Mat::Zero(state.u[k].rows(), 3);
    }
    double t0 = state.t;
    for (int s = 0; s < Lsrk45::stages; ++s) {
        state.t = t0 + Lsrk45::c[s] * dt;
        auto du = rhs_fn(state);
        for (int k = 0; k < K; ++k) {
            res[k] = Lsrk45::a[s] * res[k] + dt * du[k];
            state.u[k] += Lsrk45::b[s] * res[k];
        }
    }
    state.t = t0 + dt;
}

template <typename StateT, typename RhsFn>
void step_lsrk45(StateT& state, const RhsFn& rhs_fn, double dt) {
    std::vector<Mat> res;
    step_lsrk45(state, rhs_fn, dt, res);
}

// dt = CFL * h_min / C_N with the trace-inequality constant
// C_N = (N+1)(N+2)/2 and h_min the shortest mesh edge.
inline double trace_constant(int N) { return 0.5 * (N + 1) * (N + 2); }

inline double compute_dt(const Mesh& mesh, int N, double cfl) {
    return cfl * min_edge_length(mesh) / trace_constant(N);
}

// ---- diagnostics hooks on the semi-discrete operator ----------------------

// Global entropy-rate pairing sum_k v_h^T (M_h^k du_h/dt).
inline double entropy_rate(const SolverOps& ops, const State& state,
                           const std::vector<Mat>& du) {
    const RefOperators& ref = *ops.ref;
    int nq = ref.volq.size();
    double total = 0.0;
    for (size_t k = 0; k < ops.elem.size(); ++k) {
        Mat uq = ref.Vq * state.u[k];
        Mat vq(nq, 3);
        for (int i = 0; i < nq; ++i) {
            EntropyState v = entropy_vars({uq(i, 0), uq(i, 1), uq(i, 2)},
                                          ops.elem[k].b_stacked[i], ops.g);
            vq(i, 0) = v.v1;
            vq(i, 1) = v.v2;
            vq(i, 2) = v.v3;
        }
        Mat vh = ref.Pq * vq;
        total += (vh.cwiseProduct(ops.elem[k].Mh * du[k])).sum();
    }
    return total;
}

// Nodal entropy-rate pairing for the SBP scheme: sum_k v^T M du/dt.
inline double entropy_rate_sbp(const SbpSolverOps& ops, const NodalState& state,
                               const std::vector<Mat>& du) {
    double total = 0.0;
    int nq = static_cast<int>(ops.sbp->M_diag.size());
    for (size_t k = 0; k < ops.elem.size(); ++k) {
        const Vec& minv = ops.elem[k].Minv_diag;
        for (int i = 0; i < nq; ++i) {
            EntropyState v = entropy_vars(detail::row_state(state.u[k], i),
                                          state.b[k][i], ops.g);
            double m = 1.0 / minv[i];
            total += m * (v.v1 * du[k](i, 0) + v.v2 * du[k](i, 1) + v.v3 * du[k](i, 2));
        }
    }
    return total;
}

// Rate of change of the cell totals: sum_k integral of du/dt per field,
// evaluated with the volume rule.
inline std::array<double, 3> conservation_rate(const SolverOps& ops,
                                               const std::vector<Mat>& du) {
    const RefOperators& ref = *ops.ref;
    std::array<double, 3> total = {0, 0, 0};
    for (size_t k = 0; k < ops.elem.size(); ++k) {
        Vec wJ = ref.volq.w.cwiseProduct(ops.geo->elems[k].J_vol);
        Mat duq = ref.Vq * du[k];
        for (int c = 0; c < 3; ++c) total[c] += wJ.dot(duq.col(c));
    }
    return total;
}

inline std::array<double, 3> conservation_rate_sbp(const SbpSolverOps& ops,
                                                   const std::vector<Mat>& du) {
    std::array<double, 3> total = {0, 0, 0};
    for (size_t k = 0; k < ops.elem.size(); ++k) {
        Vec wJ = ops.elem[k].Minv_diag.cwiseInverse();
        for (int c = 0; c < 3; ++c) total[c] += wJ.dot(du[k].col(c));
    }
    return total;
}

}  // namespace swedg
