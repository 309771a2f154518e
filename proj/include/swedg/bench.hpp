#pragma once

// CPU kernel cost study: dense matrix-vector application of the nodal flux
// versus on-the-fly flux differencing, swept over matrix sizes.

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "swedg/diagnostics.hpp"
#include "swedg/parallel.hpp"
#include "swedg/swe.hpp"

namespace swedg {

struct BenchStates {
    int n = 0;               // nodes per element
    std::vector<Mat> u;      // per element: n x 3, admissible
};

// Reproducible random operator and states; heights in [0.5, 2] keep every
// pairwise flux well defined.
inline Mat random_operator(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Mat Q(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Q(i, j) = dist(rng);
    return Q;
}

inline BenchStates random_states(int n, int K, std::mt19937& rng) {
    std::uniform_real_distribution<double> h_dist(0.5, 2.0);
    std::uniform_real_distribution<double> v_dist(-1.0, 1.0);
    BenchStates s;
    s.n = n;
    s.u.resize(K);
    for (int k = 0; k < K; ++k) {
        s.u[k].resize(n, 3);
        for (int i = 0; i < n; ++i) {
            double h = h_dist(rng);
            s.u[k](i, 0) = h;
            s.u[k](i, 1) = h * v_dist(rng);
            s.u[k](i, 2) = h * v_dist(rng);
        }
    }
    return s;
}

// Traditional DG work unit: y = Q f(u) with the x-flux applied nodally.
inline std::vector<Mat> kernel_matvec(const Mat& Q, const BenchStates& s, double g,
                                      int threads = 1) {
    int K = static_cast<int>(s.u.size());
    std::vector<Mat> y(K);
    parallel_for(K, threads, [&](int k) {
        int n = s.n;
        Mat f(n, 3);
        for (int i = 0; i < n; ++i) {
            auto fi = flux({s.u[k](i, 0), s.u[k](i, 1), s.u[k](i, 2)}, g, 0);
            f(i, 0) = fi[0];
            f(i, 1) = fi[1];
            f(i, 2) = fi[2];
        }
        y[k] = Q * f;
    });
    return y;
}

// Flux-differencing work unit: y_i = sum_j 2 Q_ij f_S(u_i, u_j).
inline std::vector<Mat> kernel_fluxdiff(const Mat& Q, const BenchStates& s, double g,
                                        int threads = 1) {
    int K = static_cast<int>(s.u.size());
    std::vector<Mat> y(K);
    parallel_for(K, threads, [&](int k) {
        int n = s.n;
        const Mat& u = s.u[k];
        y[k] = Mat::Zero(n, 3);
        for (int j = 0; j < n; ++j) {
            ConsState uj{u(j, 0), u(j, 1), u(j, 2)};
            for (int i = 0; i < n; ++i) {
                auto fs = ec_flux({u(i, 0), u(i, 1), u(i, 2)}, uj, g, 0);
                double q2 = 2.0 * Q(i, j);
                y[k](i, 0) += q2 * fs[0];
                y[k](i, 1) += q2 * fs[1];
                y[k](i, 2) += q2 * fs[2];
            }
        }
    });
    return y;
}

// Same contraction on a block operator whose lower-right (n - nq) block is
// zero: two passes that skip it.
inline std::vector<Mat> kernel_fluxdiff_skew(const Mat& Q, int nq, const BenchStates& s,
                                             double g, int threads = 1) {
    int K = static_cast<int>(s.u.size());
    std::vector<Mat> y(K);
    parallel_for(K, threads, [&](int k) {
        int n = s.n;
        const Mat& u = s.u[k];
        y[k] = Mat::Zero(n, 3);
        for (int j = 0; j < nq; ++j) {
            ConsState uj{u(j, 0), u(j, 1), u(j, 2)};
            for (int i = 0; i < n; ++i) {
                auto fs = ec_flux({u(i, 0), u(i, 1), u(i, 2)}, uj, g, 0);
                double q2 = 2.0 * Q(i, j);
                y[k](i, 0) += q2 * fs[0];
                y[k](i, 1) += q2 * fs[1];
                y[k](i, 2) += q2 * fs[2];
            }
        }
        for (int j = nq; j < n; ++j) {
            ConsState uj{u(j, 0), u(j, 1), u(j, 2)};
            for (int i = 0; i < nq; ++i) {
                auto fs = ec_flux({u(i, 0), u(i, 1), u(i, 2)}, uj, g, 0);
                double q2 = 2.0 * Q(i, j);
                y[k](i, 0) += q2 * fs[0];
                y[k](i, 1) += q2 * fs[1];
                y[k](i, 2) += q2 * fs[2];
            }
        }
    });
    return y;
}

struct RatioReport {
    int n = 0;
    int elements = 0;
    int reps = 0;
    double t_esdg = 0.0;  // median seconds per sweep
    double t_dg = 0.0;
    double ratio = 0.0;
    double spread = 0.0;  // (max - min) / median over ESDG repetitions
};

namespace detail {

template <typename Fn>
double median_time(const Fn& fn, int reps, int warmups, double* spread = nullptr) {
    using clock = std::chrono::steady_clock;
    for (int i = 0; i < warmups; ++i) fn();
    std::vector<double> t(reps);
    for (int i = 0; i < reps; ++i) {
        auto t0 = clock::now();
        fn();
        t[i] = std::chrono::duration<double>(clock::now() - t0).count();
    }
    std::sort(t.begin(), t.end());
    double med = t[reps / 2];
    if (spread) *spread = (t.back() - t.front()) / med;
    return med;
}

}  // namespace detail

inline std::vector<RatioReport> ratio_sweep(const std::vector<int>& sizes, int K,
                                            int threads, unsigned seed, double g = 9.81,
                                            int reps = 5, int warmups = 2) {
    if (reps < 5) reps = 5;
    if (warmups < 2) warmups = 2;
    std::vector<RatioReport> out;
    for (int n : sizes) {
        if (n < 2) throw std::invalid_argument("matrix size must be >= 2");
        std::mt19937 rng(seed + static_cast<unsigned>(n));
        Mat Q = random_operator(n, rng);
        int Keff = K;
        for (;;) {
            BenchStates s = random_states(n, Keff, rng);
            RatioReport r;
            r.n = n;
            r.elements = Keff;
            r.reps = reps;
            volatile double sink = 0.0;
            r.t_esdg = detail::median_time(
                [&]() {
                    auto y = kernel_fluxdiff(Q, s, g, threads);
                    sink = sink + y[0](0, 0);
                },
                reps, warmups, &r.spread);
            r.t_dg = detail::median_time(
                [&]() {
                    auto y = kernel_matvec(Q, s, g, threads);
                    sink = sink + y[0](0, 0);
                },
                reps, warmups);
            // guard against timer granularity: require runs well above 1 us
            if (std::min(r.t_dg, r.t_esdg) < 1e-4 && Keff < (1 << 20)) {
                Keff *= 4;
                continue;
            }
            r.ratio = r.t_esdg / r.t_dg;
            out.push_back(r);
            break;
        }
    }
    return out;
}

inline std::string ratios_csv(const std::vector<RatioReport>& reports) {
    std::ostringstream out;
    out << "n,elements,reps,t_esdg,t_dg,ratio,spread\n";
    for (const auto& r : reports)
        out << r.n << ',' << r.elements << ',' << r.reps << ',' << csv_number(r.t_esdg)
            << ',' << csv_number(r.t_dg) << ',' << csv_number(r.ratio) << ','
            << csv_number(r.spread) << '\n';
    return out.str();
}

inline std::vector<int> default_bench_sizes() {
    return {6, 10, 15, 21, 28, 36, 50, 100, 200};
}

}  // namespace swedg
