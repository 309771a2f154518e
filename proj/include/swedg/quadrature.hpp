#pragma once

// Quadrature rules on the reference triangle with vertices
// (-1,-1), (1,-1), (-1,1).  Volume rules are tabulated per exactness
// degree; surface rules are Gauss-Legendre per face with the reference
// face Jacobian premultiplied into the weights; SBP rules are
// boundary-inclusive volume rules whose face nodes form the surface rule.

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "swedg/quadrature_tables.hpp"
#include "swedg/sbp_tables.hpp"

namespace swedg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct Quadrature2D {
    Vec x, y, w;
    int degree = 0;  // declared exactness
    int size() const { return static_cast<int>(w.size()); }
};

// Per-face reference parametrizations.  Face f runs counterclockwise,
// r in [-1,1]; face 0 is y=-1, face 1 the hypotenuse, face 2 is x=-1.
inline std::array<double, 2> face_point(int face, double r) {
    switch (face) {
        case 0: return {r, -1.0};
        case 1: return {-r, r};
        case 2: return {-1.0, -r};
    }
    throw std::invalid_argument("face index out of range");
}

inline constexpr std::array<std::array<double, 2>, 3> ref_face_normals = {{
    {0.0, -1.0},
    {1.0 / 1.4142135623730951, 1.0 / 1.4142135623730951},
    {-1.0, 0.0},
}};

inline constexpr std::array<double, 3> ref_face_jacobians = {
    1.0, 1.4142135623730951, 1.0};

struct SurfaceQuadrature {
    Vec r;        // shared 1D nodes on [-1,1]
    Vec x, y, w;  // all faces stacked face-major; w includes the face Jacobian
    std::vector<int> face;  // face index per point
    int nodes_per_face = 0;
    int degree = 0;
    int size() const { return static_cast<int>(w.size()); }
};

enum class EdgeFamily { GaussLegendre, GaussLobatto };

struct SBPQuadrature {
    Quadrature2D vol;
    SurfaceQuadrature surf;
    std::vector<int> face_node_index;  // surface index -> volume index
    EdgeFamily family = EdgeFamily::GaussLegendre;
    int N = 0;
};

// Exact integral of x^i y^j over the reference triangle.  Integrating in x
// first over [-1, -y] leaves two 1D moments, so there is no cancellation:
//   (-1)^(i+1)/(i+1) * (I(i+j+1) - I(j)),  I(m) = 2/(m+1) for even m, else 0.
inline double tri_monomial_integral(int i, int j) {
    auto I = [](int m) { return m % 2 == 0 ? 2.0 / (m + 1) : 0.0; };
    double sign = (i % 2 == 0) ? -1.0 : 1.0;
    return sign / (i + 1) * (I(i + j + 1) - I(j));
}

struct ExactnessReport {
    struct Entry {
        int i, j;
        double error;
    };
    std::vector<Entry> entries;
    double max_error = 0.0;
    bool pass = false;
};

inline ExactnessReport verify_exactness(const Quadrature2D& rule, int degree,
                                        double tol = 1e-12) {
    if (rule.size() == 0) throw std::invalid_argument("empty quadrature rule");
    ExactnessReport rep;
    for (int d = 0; d <= degree; ++d) {
        for (int i = 0; i <= d; ++i) {
            int j = d - i;
            double approx = 0.0;
            for (int q = 0; q < rule.size(); ++q)
                approx += rule.w[q] * std::pow(rule.x[q], i) * std::pow(rule.y[q], j);
            double err = std::abs(approx - tri_monomial_integral(i, j));
            rep.entries.push_back({i, j, err});
            rep.max_error = std::max(rep.max_error, err);
        }
    }
    rep.pass = rep.max_error <= tol;
    return rep;
}

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
inline void gauss_legendre(int n, Vec& x, Vec& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p0, p1;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        p0 = 1.0;
        p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        x[n - 1 - i] = t;
        w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

// Gauss-Lobatto nodes/weights on [-1,1]; interior nodes are the roots of
// P'_{n-1}, found by Newton from Chebyshev-Lobatto starting guesses.
inline void gauss_lobatto(int n, Vec& x, Vec& w) {
    if (n < 2) throw std::invalid_argument("Lobatto rule needs >= 2 points");
    x.resize(n);
    w.resize(n);
    auto legendre = [n](double t, double& p, double& dp) {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n - 1; ++k) {
            double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        p = p1;
        dp = (n - 1) * (t * p1 - p0) / (t * t - 1.0);
    };
    for (int i = 0; i < n; ++i) {
        double t = -std::cos(M_PI * i / (n - 1));
        if (i > 0 && i < n - 1) {
            for (int it = 0; it < 100; ++it) {
                double p, dp;
                legendre(t, p, dp);
                // Newton on P'_{n-1} using the ODE (1-t^2)P'' = 2tP' - n(n-1)P
                double d2p = (2.0 * t * dp - n * (n - 1) * p) / (1.0 - t * t);
                double dt = dp / d2p;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
        }
        double p, dp;
        legendre(t, p, dp);
        x[i] = t;
        w[i] = 2.0 / (n * (n - 1) * p * p);
    }
}

// Surface rule with a caller-chosen 1D family and point count.
inline SurfaceQuadrature surface_rule_1d(int nodes_per_face, EdgeFamily family) {
    SurfaceQuadrature s;
    int n = nodes_per_face;
    Vec r1, w1;
    if (family == EdgeFamily::GaussLegendre) {
        gauss_legendre(n, r1, w1);
        s.degree = 2 * n - 1;
    } else {
        gauss_lobatto(n, r1, w1);
        s.degree = 2 * n - 3;
    }
    s.r = r1;
    s.nodes_per_face = n;
    s.x.resize(3 * n);
    s.y.resize(3 * n);
    s.w.resize(3 * n);
    s.face.resize(3 * n);
    for (int f = 0; f < 3; ++f) {
        for (int k = 0; k < n; ++k) {
            auto p = face_point(f, r1[k]);
            s.x[f * n + k] = p[0];
            s.y[f * n + k] = p[1];
            s.w[f * n + k] = w1[k] * ref_face_jacobians[f];
            s.face[f * n + k] = f;
        }
    }
    return s;
}

inline SurfaceQuadrature surface_rule(int N) {
    if (N < 1 || N > 7) throw std::invalid_argument("degree out of table range");
    return surface_rule_1d(N + 1, EdgeFamily::GaussLegendre);
}

// Smallest tabulated triangle rule with exactness >= degree.
inline Quadrature2D volume_rule_by_degree(int degree) {
    for (const auto& view : tables::tri_rules) {
        if (view.degree >= degree) {
            Quadrature2D q;
            int n = static_cast<int>(view.size);
            q.x.resize(n);
            q.y.resize(n);
            q.w.resize(n);
            for (int i = 0; i < n; ++i) {
                q.x[i] = view.data[i][0];
                q.y[i] = view.data[i][1];
                q.w[i] = view.data[i][2];
            }
            q.degree = view.degree;
            auto rep = verify_exactness(q, q.degree);
            if (!rep.pass)
                throw std::runtime_error("tabulated rule failed exactness check");
            return q;
        }
    }
    throw std::invalid_argument("degree out of table range");
}

inline Quadrature2D volume_rule(int N) {
    if (N < 1 || N > 7) throw std::invalid_argument("degree out of table range");
    // needs degree-2N exactness so the modal mass matrix comes out exact
    return volume_rule_by_degree(2 * N);
}

inline SurfaceQuadrature surface_rule(int N);

namespace detail {

inline SBPQuadrature make_sbp(int N, EdgeFamily family, const Vec& x, const Vec& y,
                              const Vec& w, int nodes_per_face) {
    SBPQuadrature q;
    q.N = N;
    q.family = family;
    q.vol.x = x;
    q.vol.y = y;
    q.vol.w = w;
    q.vol.degree = 2 * N - 1;
    q.surf = surface_rule_1d(nodes_per_face, family);
    if (q.surf.degree < 2 * N)
        throw std::runtime_error("SBP surface rule exactness below 2N");
    // match each surface node to a volume node
    q.face_node_index.resize(q.surf.size());
    std::vector<char> used(x.size(), 0);
    for (int i = 0; i < q.surf.size(); ++i) {
        int best = -1;
        double bestd = 1e100;
        for (int j = 0; j < static_cast<int>(x.size()); ++j) {
            double d = std::hypot(q.surf.x[i] - x[j], q.surf.y[i] - y[j]);
            if (d < bestd) {
                bestd = d;
                best = j;
            }
        }
        if (bestd > 1e-12 || used[best])
            throw std::runtime_error("SBP surface node does not embed in volume rule");
        used[best] = 1;
        q.face_node_index[i] = best;
    }
    for (int i = 0; i < q.vol.size(); ++i)
        if (q.vol.w[i] <= 0.0) throw std::runtime_error("SBP rule has nonpositive weight");
    auto rep = verify_exactness(q.vol, 2 * N - 1);
    if (!rep.pass) throw std::runtime_error("SBP volume rule failed exactness check");
    return q;
}

}  // namespace detail

/// Text format: header "degree=<d> nodes_per_face=<m>", then one node per
// line "x y w" with the first 3*m nodes being the face nodes in
// face-major order.
inline SBPQuadrature load_sbp_rule_file(const std::string& path, int N,
                                        EdgeFamily family) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("SBP rule unavailable: cannot open " + path);
    std::string header;
    std::getline(in, header);
    int deg = -1, npf = -1;
    {
        std::istringstream hs(header);
        std::string tok;
        while (hs >> tok) {
            if (tok.rfind("degree=", 0) == 0) deg = std::stoi(tok.substr(7));
            if (tok.rfind("nodes_per_face=", 0) == 0) npf = std::stoi(tok.substr(15));
        }
    }
    if (deg < 2 * N - 1 || npf < N + 1)
        throw std::runtime_error("SBP rule file header mismatch for " + path);
    std::vector<double> xs, ys, ws;
    double a, b, c;
    while (in >> a >> b >> c) {
        xs.push_back(a);
        ys.push_back(b);
        ws.push_back(c);
    }
    Vec x = Eigen::Map<Vec>(xs.data(), xs.size());
    Vec y = Eigen::Map<Vec>(ys.data(), ys.size());
    Vec w = Eigen::Map<Vec>(ws.data(), ws.size());
    return detail::make_sbp(N, family, x, y, w, npf);
}

inline SBPQuadrature sbp_rule(int N, EdgeFamily family = EdgeFamily::GaussLegendre,
                              const std::string& data_dir = "") {
    if (family == EdgeFamily::GaussLegendre) {
        for (const auto& view : tables::sbp_legendre_rules) {
            if (view.N == N) {
                int n = static_cast<int>(view.size);
                Vec x(n), y(n), w(n);
                for (int i = 0; i < n; ++i) {
                    x[i] = view.data[i][0];
                    y[i] = view.data[i][1];
                    w[i] = view.data[i][2];
                }
                return detail::make_sbp(N, family, x, y, w, view.nodes_per_face);
            }
        }
        throw std::runtime_error("SBP rule unavailable for (N=" + std::to_string(N) +
                                 ", legendre)");
    }
    // Gauss-Lobatto rules are only available as external data files.
    std::string path = data_dir.empty()
                           ? ("sbp_lobatto_N" + std::to_string(N) + ".txt")
                           : (data_dir + "/sbp_lobatto_N" + std::to_string(N) + ".txt");
    return load_sbp_rule_file(path, N, family);
}

}  // namespace swedg
