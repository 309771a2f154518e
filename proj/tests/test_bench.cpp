#include <doctest.h>

#include <random>

#include "swedg/bench.hpp"

using namespace swedg;

namespace {
const double g = 9.81;
}

TEST_CASE("matvec kernel") {
    std::mt19937 rng(5);
    BenchStates s = random_states(8, 3, rng);

    // identity operator returns the nodal flux
    Mat I = Mat::Identity(8, 8);
    auto y = kernel_matvec(I, s, g);
    for (int i = 0; i < 8; ++i) {
        auto f = flux({s.u[0](i, 0), s.u[0](i, 1), s.u[0](i, 2)}, g, 0);
        CHECK(y[0](i, 0) == doctest::Approx(f[0]).epsilon(1e-14));
        CHECK(y[0](i, 1) == doctest::Approx(f[1]).epsilon(1e-14));
    }

    // naive triple-loop oracle
    Mat Q = random_operator(8, rng);
    auto y2 = kernel_matvec(Q, s, g);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 8; ++i)
            for (int c = 0; c < 3; ++c) {
                double acc = 0.0;
                for (int j = 0; j < 8; ++j)
                    acc += Q(i, j) * flux({s.u[k](j, 0), s.u[k](j, 1), s.u[k](j, 2)}, g, 0)[c];
                CHECK(std::abs(y2[k](i, c) - acc) < 1e-12 * (1 + std::abs(acc)));
            }
}

TEST_CASE("rest state gives the pressure-only pattern") {
    BenchStates s;
    s.n = 4;
    s.u.assign(1, Mat::Zero(4, 3));
    s.u[0].col(0).setConstant(1.0);  // h = 1 at rest
    std::mt19937 rng(9);
    Mat Q = random_operator(4, rng);
    auto y = kernel_matvec(Q, s, g);
    Vec q1 = Q * Vec::Ones(4);
    for (int i = 0; i < 4; ++i) {
        CHECK(y[0](i, 0) == doctest::Approx(0.0));
        CHECK(y[0](i, 1) == doctest::Approx(0.5 * g * q1[i]).epsilon(1e-13));
        CHECK(y[0](i, 2) == doctest::Approx(0.0));
    }
}

TEST_CASE("fluxdiff kernel") {
    std::mt19937 rng(7);
    BenchStates s = random_states(6, 2, rng);
    Mat Q = random_operator(6, rng);

    // naive double-loop oracle
    auto y = kernel_fluxdiff(Q, s, g);
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 6; ++i)
            for (int c = 0; c < 3; ++c) {
                double acc = 0.0;
                for (int j = 0; j < 6; ++j)
                    acc += 2.0 * Q(i, j) *
                           ec_flux({s.u[k](i, 0), s.u[k](i, 1), s.u[k](i, 2)},
                                   {s.u[k](j, 0), s.u[k](j, 1), s.u[k](j, 2)}, g, 0)[c];
                CHECK(std::abs(y[k](i, c) - acc) < 1e-12 * (1 + std::abs(acc)));
            }

    // all states equal and Q*1 = 0 gives zero by consistency
    Mat Q0 = Q;
    for (int i = 0; i < 6; ++i) Q0(i, i) -= Q.row(i).sum();
    BenchStates se;
    se.n = 6;
    se.u.assign(1, Mat::Zero(6, 3));
    se.u[0].col(0).setConstant(1.3);
    se.u[0].col(1).setConstant(0.4);
    auto y0 = kernel_fluxdiff(Q0, se, g);
    CHECK(y0[0].cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("skew variant equals full variant on a block-zero operator") {
    std::mt19937 rng(21);
    int nq = 6, n = 10;
    BenchStates s = random_states(n, 4, rng);
    Mat Q = random_operator(n, rng);
    Q.bottomRightCorner(n - nq, n - nq).setZero();
    auto y_full = kernel_fluxdiff(Q, s, g);
    auto y_skew = kernel_fluxdiff_skew(Q, nq, s, g);
    for (int k = 0; k < 4; ++k)
        CHECK((y_full[k] - y_skew[k]).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("kernels are thread-count independent") {
    std::mt19937 rng(31);
    BenchStates s = random_states(12, 16, rng);
    Mat Q = random_operator(12, rng);
    auto a1 = kernel_fluxdiff(Q, s, g, 1);
    auto a4 = kernel_fluxdiff(Q, s, g, 4);
    auto b1 = kernel_matvec(Q, s, g, 1);
    auto b4 = kernel_matvec(Q, s, g, 4);
    for (int k = 0; k < 16; ++k) {
        CHECK((a1[k] - a4[k]).cwiseAbs().maxCoeff() == 0.0);
        CHECK((b1[k] - b4[k]).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("ratio sweep output shape") {
    auto reports = ratio_sweep({6, 10}, 8, 1, 42, g, 5, 2);
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) {
        CHECK(r.t_esdg > 0.0);
        CHECK(r.t_dg > 0.0);
        CHECK(r.reps >= 5);
    }
    std::string csv = ratios_csv(reports);
    CHECK(csv.rfind("n,elements,reps,", 0) == 0);
    CHECK_THROWS_AS(ratio_sweep({1}, 8, 1, 0), std::invalid_argument);
}
