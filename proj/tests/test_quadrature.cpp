#include <doctest.h>

#include <cmath>

#include "swedg/quadrature.hpp"

using namespace swedg;

namespace {

// brute-force monomial integral over the reference triangle by heavy
// subdivision, used as an independent cross-check of the closed form
double monomial_brute(int i, int j) {
    int n = 2000;
    double sum = 0.0;
    double h = 2.0 / n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n - a; ++b) {
            // two subtriangle centroids per cell of the lattice subdivision
            double x0 = -1.0 + a * h, y0 = -1.0 + b * h;
            double c1x = x0 + h / 3.0, c1y = y0 + h / 3.0;
            sum += std::pow(c1x, i) * std::pow(c1y, j) * h * h / 2.0;
            if (b < n - a - 1) {
                double c2x = x0 + 2.0 * h / 3.0, c2y = y0 + 2.0 * h / 3.0;
                sum += std::pow(c2x, i) * std::pow(c2y, j) * h * h / 2.0;
            }
        }
    return sum;
}

}  // namespace

TEST_CASE("monomial integral closed form") {
    CHECK(tri_monomial_integral(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
    // midpoint symmetry: odd total degree under the triangle's symmetry is
    // not zero in general, so check against brute force
    CHECK(tri_monomial_integral(1, 0) == doctest::Approx(monomial_brute(1, 0)).epsilon(1e-5));
    CHECK(tri_monomial_integral(2, 3) == doctest::Approx(monomial_brute(2, 3)).epsilon(1e-5));
    CHECK(tri_monomial_integral(4, 1) == doctest::Approx(monomial_brute(4, 1)).epsilon(1e-5));
}

TEST_CASE("tabulated volume rules are exact and positive") {
    for (int d = 1; d <= 16; ++d) {
        Quadrature2D q = volume_rule_by_degree(d);
        CHECK(q.degree >= d);
        CHECK(q.w.minCoeff() > 0.0);
        CHECK(std::abs(q.w.sum() - 2.0) < 1e-13);
        auto rep = verify_exactness(q, d);
        CHECK(rep.pass);
    }
    CHECK_THROWS_WITH_AS(volume_rule_by_degree(17), doctest::Contains("out of table"),
                         std::invalid_argument);
    CHECK_THROWS_AS(volume_rule(8), std::invalid_argument);
    CHECK_THROWS_AS(volume_rule(0), std::invalid_argument);
}

TEST_CASE("volume rule integrates x^2 y^3 exactly") {
    Quadrature2D q = volume_rule(3);
    double approx = 0.0;
    for (int i = 0; i < q.size(); ++i)
        approx += q.w[i] * q.x[i] * q.x[i] * q.y[i] * q.y[i] * q.y[i];
    CHECK(approx == doctest::Approx(tri_monomial_integral(2, 3)).epsilon(1e-13));
}

TEST_CASE("gauss nodes") {
    Vec x, w;
    gauss_legendre(3, x, w);
    CHECK(x[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(x[2] - std::sqrt(0.6)) < 1e-14);
    CHECK(w.sum() == doctest::Approx(2.0).epsilon(1e-14));

    Vec xl, wl;
    gauss_lobatto(4, xl, wl);
    CHECK(xl[0] == doctest::Approx(-1.0));
    CHECK(xl[3] == doctest::Approx(1.0));
    CHECK(std::abs(xl[1] + 1.0 / std::sqrt(5.0)) < 1e-14);
    CHECK(wl.sum() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("surface rule geometry") {
    for (int N = 1; N <= 7; ++N) {
        SurfaceQuadrature s = surface_rule(N);
        CHECK(s.nodes_per_face == N + 1);
        CHECK(s.size() == 3 * (N + 1));
        // face weights sum to face length (face Jacobian premultiplied)
        double w0 = 0, w1 = 0, w2 = 0;
        for (int i = 0; i < s.size(); ++i) {
            if (s.face[i] == 0) w0 += s.w[i];
            if (s.face[i] == 1) w1 += s.w[i];
            if (s.face[i] == 2) w2 += s.w[i];
        }
        CHECK(w0 == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(w1 == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-13));
        CHECK(w2 == doctest::Approx(2.0).epsilon(1e-13));
    }
}

TEST_CASE("surface rule integrates degree-2N monomials on a face") {
    int N = 3;
    SurfaceQuadrature s = surface_rule(N);
    // bottom face: y = -1, x in [-1,1]; integrate x^6
    double approx = 0.0;
    for (int i = 0; i < s.size(); ++i)
        if (s.face[i] == 0) approx += s.w[i] * std::pow(s.x[i], 2 * N);
    CHECK(approx == doctest::Approx(2.0 / 7.0).epsilon(1e-13));  // int x^6 over [-1,1]
}

TEST_CASE("sbp rules") {
    for (int N = 1; N <= 4; ++N) {
        SBPQuadrature q = sbp_rule(N, EdgeFamily::GaussLegendre);
        CHECK(q.N == N);
        CHECK(q.surf.nodes_per_face == N + 1);
        CHECK(q.vol.w.minCoeff() > 0.0);
        CHECK(verify_exactness(q.vol, 2 * N - 1).pass);
        // selection map: surface nodes coincide with volume nodes
        for (int i = 0; i < q.surf.size(); ++i) {
            int j = q.face_node_index[i];
            CHECK(std::hypot(q.surf.x[i] - q.vol.x[j], q.surf.y[i] - q.vol.y[j]) < 1e-12);
        }
        // bijection onto a subset
        std::vector<int> seen(q.vol.size(), 0);
        for (int i = 0; i < q.surf.size(); ++i) seen[q.face_node_index[i]]++;
        for (int c : seen) CHECK(c <= 1);
    }
    CHECK_THROWS_WITH_AS(sbp_rule(5, EdgeFamily::GaussLegendre),
                         doctest::Contains("unavailable"), std::runtime_error);
    CHECK_THROWS_WITH_AS(sbp_rule(2, EdgeFamily::GaussLobatto, "/nonexistent"),
                         doctest::Contains("unavailable"), std::runtime_error);
}

TEST_CASE("verify_exactness flags a broken rule") {
    Quadrature2D q = volume_rule(2);
    q.w[0] += 1e-6;
    CHECK_FALSE(verify_exactness(q, 2).pass);
}
