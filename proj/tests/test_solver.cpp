#include <doctest.h>

#include <cmath>
#include <random>

#include "swedg/run.hpp"
#include "swedg/solver.hpp"

using namespace swedg;

namespace {

// random smooth periodic state on the lake domain
State smooth_state(const Mesh& mesh, int N, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> amp(-0.1, 0.1);
    double a1 = amp(rng), a2 = amp(rng), a3 = amp(rng);
    ExactFn fn = [=](double x, double y, double) -> ConsState {
        double h = 1.5 + a1 * std::sin(M_PI * x) * std::cos(M_PI * y);
        double u = a2 * std::cos(M_PI * x);
        double v = a3 * std::sin(M_PI * y);
        return {h, h * u, h * v};
    };
    return make_state(mesh, N, fn, [](double, double) { return 0.0; });
}

struct Fixture {
    RefOperators ops;
    Mesh mesh;
    Connectivity conn;
    Geometry geo;
    FaceMatch fm;
    SolverOps sops;

    Fixture(int N, int nx, int ny, double warp, double g, bool periodic = true) {
        ops = build_ref_operators(N);
        mesh = uniform_tri_mesh(nx, ny, {0, 0, 2, 2});
        set_mapping_degree(mesh, N);
        if (warp != 0.0) warp_mesh(mesh, warp);
        conn = connect(mesh, periodic, periodic);
        geo = build_geometry(mesh, ops);
        fm = match_faces(mesh, conn, geo, ops);
        sops = precompute_element_ops(ops, mesh, geo, conn, fm, g);
    }
};

}  // namespace

TEST_CASE("free stream: constant state has zero rhs") {
    for (double warp : {0.0, 0.1}) {
        Fixture fx(2, 4, 4, warp, 9.81);
        int K = fx.mesh.num_elements();
        State st;
        st.N = 2;
        std::vector<Vec> b(K, Vec::Zero(fx.ops.Np));
        for (int k = 0; k < K; ++k) {
            Mat u = Mat::Zero(fx.ops.Np, 3);
            u(0, 0) = std::sqrt(2.0) * 1.7;
            st.u.push_back(u);
            st.b.push_back(b[k]);
        }
        set_bathymetry(fx.sops, b);
        auto du = rhs(fx.sops, st);
        for (auto& d : du) CHECK(d.cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("affine elements: physical Qh is a constant combination of reference ops") {
    Fixture fx(3, 2, 2, 0.0, 9.81);
    const ElemGeom& eg = fx.geo.elems[0];
    // constant geometric factors on affine elements
    double g0 = eg.gf(0, 0), g1 = eg.gf(0, 1), g2 = eg.gf(0, 2), g3 = eg.gf(0, 3);
    for (int i = 0; i < eg.gf.rows(); ++i) {
        CHECK(eg.gf(i, 0) == doctest::Approx(g0).epsilon(1e-12));
        CHECK(eg.gf(i, 3) == doctest::Approx(g3).epsilon(1e-12));
    }
    Mat expect = g0 * fx.ops.Qh_x + g1 * fx.ops.Qh_y;
    Mat skew_expect = expect - expect.transpose();
    CHECK((fx.sops.elem[0].Qh_skew_x - skew_expect).cwiseAbs().maxCoeff() < 1e-12);
    (void)g2;
}

TEST_CASE("curved elements: physical operators keep the SBP property") {
    Fixture fx(3, 4, 4, 0.1, 9.81);
    int nq = fx.ops.volq.size(), nf = fx.ops.surfq.size();
    for (int k = 0; k < fx.mesh.num_elements(); ++k) {
        const ElementOps& eo = fx.sops.elem[k];
        Mat Qh = full_Qh(eo.Qh_skew_x, eo.Bx, nq);
        Mat S = Qh + Qh.transpose();
        S.bottomRightCorner(nf, nf) -= Mat(eo.Bx.asDiagonal());
        CHECK(S.cwiseAbs().maxCoeff() < 1e-11);
        CHECK((Qh * Vec::Ones(nq + nf)).cwiseAbs().maxCoeff() < 1e-11);
    }
}

TEST_CASE("entropy projection of a constant state is exact") {
    Fixture fx(3, 2, 2, 0.1, 9.81);
    int K = fx.mesh.num_elements();
    std::vector<Vec> b(K, Vec::Zero(fx.ops.Np));
    set_bathymetry(fx.sops, b);
    Mat u = Mat::Zero(fx.ops.Np, 3);
    u(0, 0) = std::sqrt(2.0) * 2.0;
    u(0, 1) = std::sqrt(2.0) * 0.6;
    Mat ut = entropy_projection_element(fx.ops, fx.sops.elem[0], u, 9.81);
    for (int i = 0; i < ut.rows(); ++i) {
        CHECK(ut(i, 0) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(ut(i, 1) == doctest::Approx(0.6).epsilon(1e-12));
        CHECK(ut(i, 2) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("entropy projection converges at the projection rate") {
    int N = 2;
    double errs[2];
    int idx = 0;
    for (int n : {4, 8}) {
        Fixture fx(N, n, n, 0.0, 9.81);
        int K = fx.mesh.num_elements();
        std::vector<Vec> b(K, Vec::Zero(fx.ops.Np));
        set_bathymetry(fx.sops, b);
        State st = smooth_state(fx.mesh, N, 5);
        auto proj = entropy_projection(fx.sops, st);
        // compare with direct evaluation of the interpolated state
        double err = 0.0;
        for (int k = 0; k < K; ++k) {
            Mat direct(fx.ops.n_stack(), 3);
            direct.topRows(fx.ops.volq.size()) = fx.ops.Vq * st.u[k];
            direct.bottomRows(fx.ops.surfq.size()) = fx.ops.Vf * st.u[k];
            err = std::max(err, (proj[k] - direct).cwiseAbs().maxCoeff());
        }
        errs[idx++] = err;
    }
    double rate = std::log2(errs[0] / errs[1]);
    CHECK(rate > N + 0.5);
}

TEST_CASE("lake at rest is preserved discretely") {
    for (double warp : {0.0, 0.1}) {
        for (int N : {1, 2, 3}) {
            RunConfig cfg;
            cfg.problem = ProblemId::Lake;
            cfg.degree = N;
            cfg.nx = 4;
            cfg.ny = 4;
            cfg.warp = warp;
            Case c = build_lake_case(cfg);
            auto du = rhs(c.hops, c.hstate);
            double m = 0.0;
            for (auto& d : du) m = std::max(m, d.cwiseAbs().maxCoeff());
            CHECK(m < 1e-10);
        }
    }
}

TEST_CASE("lake at rest for the SBP scheme") {
    for (double warp : {0.0, 0.1}) {
        RunConfig cfg;
        cfg.problem = ProblemId::Lake;
        cfg.degree = 2;
        cfg.nx = 4;
        cfg.ny = 4;
        cfg.warp = warp;
        cfg.scheme = Scheme::SbpLegendre;
        Case c = build_case(cfg);
        auto du = rhs_sbp(c.sops, c.nstate);
        double m = 0.0;
        for (auto& d : du) m = std::max(m, d.cwiseAbs().maxCoeff());
        CHECK(m < 1e-9);
    }
}

TEST_CASE("semi-discrete entropy balance") {
    Fixture fx(3, 4, 4, 0.1, 9.81);
    int K = fx.mesh.num_elements();
    // bathymetry in P^N
    LatticeInterp li(3);
    std::vector<Vec> b(K);
    for (int k = 0; k < K; ++k) {
        Vec bv(fx.ops.Np);
        for (int i = 0; i < bv.size(); ++i) {
            double x = fx.mesh.map_nodes[k](i, 0), y = fx.mesh.map_nodes[k](i, 1);
            bv[i] = 0.05 * std::sin(M_PI * x) * std::sin(M_PI * y) +
                    0.1 * std::cos(M_PI * x);
        }
        b[k] = li.coeffs(bv);
    }
    set_bathymetry(fx.sops, b);
    State st = smooth_state(fx.mesh, 3, 23);
    st.b = b;
    auto proj = entropy_projection(fx.sops, st);

    fx.sops.penalty = Penalty::EntropyConservative;
    auto du_ec = rhs(fx.sops, st, proj);
    double rate_ec = entropy_rate(fx.sops, st, du_ec);
    double scale = 0.0;
    for (auto& d : du_ec) scale = std::max(scale, d.cwiseAbs().maxCoeff());
    CHECK(std::abs(rate_ec) < 1e-9 * (1.0 + scale));

    fx.sops.penalty = Penalty::LaxFriedrichs;
    auto du_lf = rhs(fx.sops, st, proj);
    CHECK(entropy_rate(fx.sops, st, du_lf) <= 1e-12);

    // mass conserved by both
    CHECK(std::abs(conservation_rate(fx.sops, du_ec)[0]) < 1e-10);
    CHECK(std::abs(conservation_rate(fx.sops, du_lf)[0]) < 1e-10);
}

TEST_CASE("entropy balance for the SBP scheme") {
    RunConfig cfg;
    cfg.problem = ProblemId::Lake;
    cfg.degree = 3;
    cfg.nx = 4;
    cfg.ny = 4;
    cfg.warp = 0.1;
    cfg.scheme = Scheme::SbpLegendre;
    cfg.penalty = Penalty::EntropyConservative;
    Case c = build_case(cfg);
    // perturb the steady state to something dynamic (heights stay positive)
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> d(-0.05, 0.05);
    for (auto& u : c.nstate.u)
        for (int i = 0; i < u.rows(); ++i) {
            u(i, 0) += d(rng);
            u(i, 1) += d(rng);
            u(i, 2) += d(rng);
        }
    auto du = rhs_sbp(c.sops, c.nstate);
    double scale = 0.0;
    for (auto& m : du) scale = std::max(scale, m.cwiseAbs().maxCoeff());
    CHECK(std::abs(entropy_rate_sbp(c.sops, c.nstate, du)) < 1e-9 * (1.0 + scale));

    c.sops.penalty = Penalty::LaxFriedrichs;
    auto du_lf = rhs_sbp(c.sops, c.nstate);
    CHECK(entropy_rate_sbp(c.sops, c.nstate, du_lf) <= 1e-12);
    CHECK(std::abs(conservation_rate_sbp(c.sops, du_lf)[0]) < 1e-10);
}

TEST_CASE("walls conserve mass") {
    Fixture fx(2, 4, 4, 0.0, 9.81, /*periodic=*/false);
    int K = fx.mesh.num_elements();
    std::vector<Vec> b(K, Vec::Zero(fx.ops.Np));
    set_bathymetry(fx.sops, b);
    State st = smooth_state(fx.mesh, 2, 31);
    auto du = rhs(fx.sops, st);
    CHECK(std::abs(conservation_rate(fx.sops, du)[0]) < 1e-10);
}

TEST_CASE("two-pass skew kernel equals naive full Hadamard assembly") {
    Fixture fx(3, 4, 4, 0.1, 9.81);
    int K = fx.mesh.num_elements();
    int nq = fx.ops.volq.size(), nf = fx.ops.surfq.size();
    std::vector<Vec> b(K, Vec::Zero(fx.ops.Np));
    set_bathymetry(fx.sops, b);
    State st = smooth_state(fx.mesh, 3, 41);
    auto proj = entropy_projection(fx.sops, st);
    fx.sops.penalty = Penalty::EntropyConservative;
    auto du = rhs(fx.sops, st, proj);

    double g = 9.81;
    int npf = fx.ops.surfq.nodes_per_face;
    for (int k = 0; k < K; ++k) {
        const ElementOps& eo = fx.sops.elem[k];
        Mat Qh_x = full_Qh(eo.Qh_skew_x, eo.Bx, nq);
        Mat Qh_y = full_Qh(eo.Qh_skew_y, eo.By, nq);
        const Mat& ut = proj[k];
        Mat acc = Mat::Zero(nq + nf, 3);
        // naive: full (2 Qh o F) 1 over every index pair
        for (int i = 0; i < nq + nf; ++i) {
            ConsState ui{ut(i, 0), ut(i, 1), ut(i, 2)};
            for (int j = 0; j < nq + nf; ++j) {
                ConsState uj{ut(j, 0), ut(j, 1), ut(j, 2)};
                auto fxs = ec_flux(ui, uj, g, 0);
                auto fys = ec_flux(ui, uj, g, 1);
                for (int c = 0; c < 3; ++c)
                    acc(i, c) += 2.0 * (Qh_x(i, j) * fxs[c] + Qh_y(i, j) * fys[c]);
            }
        }
        // naive interface term: B (f_S(u+, u) - f(u))
        for (int f = 0; f < 3; ++f) {
            const FaceInfo& info = fx.conn.faces[k][f];
            for (int s = 0; s < npf; ++s) {
                int i = f * npf + s;
                ConsState ui{ut(nq + i, 0), ut(nq + i, 1), ut(nq + i, 2)};
                int j = fx.fm.perm[k][f][s];
                const Mat& un = proj[info.nbr_elem];
                ConsState up{un(nq + j, 0), un(nq + j, 1), un(nq + j, 2)};
                auto fs_x = ec_flux(up, ui, g, 0);
                auto fs_y = ec_flux(up, ui, g, 1);
                auto f_x = flux(ui, g, 0);
                auto f_y = flux(ui, g, 1);
                for (int c = 0; c < 3; ++c)
                    acc(nq + i, c) += eo.Bx[i] * (fs_x[c] - f_x[c]) +
                                      eo.By[i] * (fs_y[c] - f_y[c]);
            }
        }
        Mat modal = fx.ops.Vq.transpose() * acc.topRows(nq) +
                    fx.ops.Vf.transpose() * acc.bottomRows(nf);
        Mat du_naive = -(eo.Mh_inv * modal);
        double scale = 1.0 + du[k].cwiseAbs().maxCoeff();
        CHECK((du_naive - du[k]).cwiseAbs().maxCoeff() < 1e-12 * scale);
    }
}

TEST_CASE("time step formula") {
    Mesh m1 = uniform_tri_mesh(4, 4, {0, 0, 2, 2});
    Mesh m2 = uniform_tri_mesh(8, 8, {0, 0, 2, 2});
    CHECK(trace_constant(3) == 10.0);
    CHECK(trace_constant(1) == 3.0);
    CHECK(compute_dt(m2, 3, 0.125) == doctest::Approx(0.5 * compute_dt(m1, 3, 0.125)));
    CHECK(compute_dt(m1, 3, 0.125) == doctest::Approx(0.125 * 0.5 / 10.0));
}

namespace {
struct ScalarState {
    double t = 0.0;
    std::vector<Mat> u;
};
}

TEST_CASE("lsrk45 basics") {
    // y' = c integrated exactly
    ScalarState st;
    st.u.assign(1, Mat::Constant(1, 3, 1.0));
    auto rhs_c = [](const ScalarState&) {
        return std::vector<Mat>{Mat::Constant(1, 3, 2.5)};
    };
    step_lsrk45(st, rhs_c, 0.2);
    CHECK(st.u[0](0, 0) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(st.t == doctest::Approx(0.2));

    // zero rhs leaves the state unchanged
    ScalarState st2;
    st2.u.assign(1, Mat::Constant(1, 3, 3.0));
    step_lsrk45(st2, [](const ScalarState&) {
        return std::vector<Mat>{Mat::Zero(1, 3)};
    }, 0.1);
    CHECK(st2.u[0](0, 0) == 3.0);

    CHECK_THROWS_AS(step_lsrk45(st2, rhs_c, -1.0), std::invalid_argument);
}

TEST_CASE("lsrk45 is fourth order on y' = -y") {
    auto solve = [](double dt) {
        ScalarState st;
        st.u.assign(1, Mat::Constant(1, 3, 1.0));
        auto f = [](const ScalarState& s) { return std::vector<Mat>{-s.u[0]}; };
        int n = static_cast<int>(std::round(1.0 / dt));
        for (int i = 0; i < n; ++i) step_lsrk45(st, f, dt);
        return std::abs(st.u[0](0, 0) - std::exp(-1.0));
    };
    double e1 = solve(0.1), e2 = solve(0.05);
    CHECK(std::log2(e1 / e2) >= 3.9);
}

TEST_CASE("rhs reports positivity failures with location") {
    Fixture fx(2, 2, 2, 0.0, 9.81);
    int K = fx.mesh.num_elements();
    std::vector<Vec> b(K, Vec::Zero(fx.ops.Np));
    set_bathymetry(fx.sops, b);
    State st;
    st.N = 2;
    for (int k = 0; k < K; ++k) {
        Mat u = Mat::Zero(fx.ops.Np, 3);
        u(0, 0) = std::sqrt(2.0) * 1.0;
        st.u.push_back(u);
        st.b.push_back(b[k]);
    }
    st.u[1](0, 0) = -std::sqrt(2.0);  // negative height in element 1
    CHECK_THROWS_WITH_AS(rhs(fx.sops, st), doctest::Contains("element 1"),
                         std::runtime_error);
}

TEST_CASE("threaded rhs matches serial") {
    Fixture fx(2, 4, 4, 0.1, 9.81);
    int K = fx.mesh.num_elements();
    std::vector<Vec> b(K, Vec::Zero(fx.ops.Np));
    set_bathymetry(fx.sops, b);
    State st = smooth_state(fx.mesh, 2, 53);
    auto du1 = rhs(fx.sops, st);
    fx.sops.threads = 4;
    auto du4 = rhs(fx.sops, st);
    for (int k = 0; k < K; ++k)
        CHECK((du1[k] - du4[k]).cwiseAbs().maxCoeff() == 0.0);
}
