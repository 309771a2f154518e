// Command-line front end: operator verification, experiment runs,
// convergence studies, and the kernel benchmark.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swedg/bench.hpp"
#include "swedg/config.hpp"
#include "swedg/run.hpp"

namespace {

using namespace swedg;

int cmd_verify_quadrature(int degree_max) {
    bool ok = true;
    std::printf("rule,degree,points,max_residual,pass\n");
    for (int d = 1; d <= degree_max; ++d) {
        Quadrature2D q = volume_rule_by_degree(d);
        auto rep = verify_exactness(q, d);
        std::printf("volume,%d,%d,%.3e,%d\n", d, q.size(), rep.max_error, rep.pass ? 1 : 0);
        ok = ok && rep.pass;
    }
    for (int N = 1; N <= 4; ++N) {
        auto sbpq = sbp_rule(N, EdgeFamily::GaussLegendre);
        auto rep = verify_exactness(sbpq.vol, 2 * N - 1);
        std::printf("sbp-legendre,%d,%d,%.3e,%d\n", 2 * N - 1, sbpq.vol.size(),
                    rep.max_error, rep.pass ? 1 : 0);
        ok = ok && rep.pass;
    }
    return ok ? 0 : 1;
}

int cmd_verify_operators(int N, const std::string& sbp_data_dir, EdgeFamily family) {
    double tol = 1e-12;
    bool ok = true;
    auto report = [&](const char* name, double r) {
        std::printf("%-28s %.3e %s\n", name, r, r <= tol ? "ok" : "FAIL");
        ok = ok && r <= tol;
    };

    RefOperators ops = build_ref_operators(N);
    int nq = ops.volq.size(), nf = ops.surfq.size();
    report("Pq*Vq - I", (ops.Pq * ops.Vq - Mat::Identity(ops.Np, ops.Np))
                            .cwiseAbs()
                            .maxCoeff());
    Mat EB_x = ops.E.transpose() * ops.Bx.asDiagonal() * ops.E;
    Mat EB_y = ops.E.transpose() * ops.By.asDiagonal() * ops.E;
    report("Qx + Qx' - E'BxE", (ops.Qx + ops.Qx.transpose() - EB_x).cwiseAbs().maxCoeff());
    report("Qy + Qy' - E'ByE", (ops.Qy + ops.Qy.transpose() - EB_y).cwiseAbs().maxCoeff());
    auto qh_residual = [&](const Mat& Qh, const Vec& B) {
        Mat S = Qh + Qh.transpose();
        S.bottomRightCorner(nf, nf) -= Mat(B.asDiagonal());
        return S.cwiseAbs().maxCoeff();
    };
    report("Qh_x SBP property", qh_residual(ops.Qh_x, ops.Bx));
    report("Qh_y SBP property", qh_residual(ops.Qh_y, ops.By));
    report("Qh_x * 1", (ops.Qh_x * Vec::Ones(nq + nf)).cwiseAbs().maxCoeff());
    report("Qh_y * 1", (ops.Qh_y * Vec::Ones(nq + nf)).cwiseAbs().maxCoeff());

    if (N <= 4) {
        auto sbpq = sbp_rule(N, family, sbp_data_dir);
        auto sops = build_ref_operators(N, sbpq.vol, sbpq.surf);
        auto tsbp = build_traditional_sbp(sops, sbpq);
        int nv = sbpq.vol.size();
        Mat S = tsbp.Q_SBP_x + tsbp.Q_SBP_x.transpose();
        S -= Mat(tsbp.Bx_sbp.asDiagonal());
        report("Q_SBP_x SBP property", S.cwiseAbs().maxCoeff());
        Mat Sy = tsbp.Q_SBP_y + tsbp.Q_SBP_y.transpose();
        Sy -= Mat(tsbp.By_sbp.asDiagonal());
        report("Q_SBP_y SBP property", Sy.cwiseAbs().maxCoeff());
        report("Q_SBP_x * 1", (tsbp.Q_SBP_x * Vec::Ones(nv)).cwiseAbs().maxCoeff());
    }
    return ok ? 0 : 1;
}

int cmd_run(const RunConfig& cfg) {
    std::cout << "# resolved configuration\n" << describe_config(cfg) << "#\n";
    Case c = build_case(cfg);
    RunResult r = run(c);
    std::printf("steps=%d dt=%.6e t=%.6f\n", r.steps, r.dt, c.time());
    const Invariants& first = r.series.front();
    const Invariants& last = r.series.back();
    std::printf("mass_drift_rel=%.3e entropy_change=%.6e min_h=%.6e\n",
                std::abs(last.mass - first.mass) / std::abs(first.mass),
                last.entropy - first.entropy, last.min_h);
    if (r.has_error)
        std::printf("l2_error h=%.6e hu=%.6e hv=%.6e combined=%.6e\n", r.error.err_h,
                    r.error.err_hu, r.error.err_hv, r.error.combined);
    return 0;
}

int cmd_convergence(const RunConfig& base, const std::vector<int>& degrees, int levels,
                    const std::string& out) {
    std::cout << "# resolved configuration\n"
              << describe_config(base) << "levels=" << levels << "\n#\n";
    auto rows = convergence_study(base, degrees, levels);
    std::vector<ErrorReport> reps;
    std::vector<double> orders;
    std::printf("N,nx,ny,h_mesh,err_combined,order\n");
    for (const auto& row : rows) {
        if (row.failed) {
            std::printf("%d,%d,%d,,,FAILED: %s\n", row.N, row.nx, row.ny,
                        row.failure.c_str());
            continue;
        }
        std::printf("%d,%d,%d,%.6e,%.6e,", row.N, row.nx, row.ny, row.error.h_mesh,
                    row.error.combined);
        if (std::isfinite(row.order)) std::printf("%.3f", row.order);
        std::printf("\n");
        reps.push_back(row.error);
        orders.push_back(row.order);
    }
    if (!out.empty()) write_errors_csv(out, reps, orders);
    return 0;
}

int cmd_bench(const std::vector<int>& sizes, int K, int threads, unsigned seed,
              const std::string& out) {
    auto reports = ratio_sweep(sizes, K, threads, seed);
    std::string csv = ratios_csv(reports);
    std::fputs(csv.c_str(), stdout);
    if (!out.empty()) write_file_atomic(out, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy stable DG shallow water solver"};
    app.require_subcommand(1);

    int vq_degree = 16;
    auto* vq = app.add_subcommand("verify-quadrature", "check tabulated quadrature rules");
    vq->add_option("--degree", vq_degree, "highest volume degree to check");

    int vo_degree = 3;
    std::string vo_data = "data", vo_family = "legendre";
    auto* vo = app.add_subcommand("verify-operators", "check operator identities");
    vo->add_option("--degree", vo_degree, "polynomial degree")->check(CLI::Range(1, 7));
    vo->add_option("--family", vo_family, "legendre|lobatto SBP edge family");
    vo->add_option("--sbp-data-dir", vo_data, "directory with SBP node files");

    swedg::RunConfig cfg;
    std::string config_path, problem = "lake", scheme = "hybridized",
                penalty = "lax-friedrichs";
    auto add_run_flags = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value config file");
        sub->add_option("--degree", cfg.degree, "polynomial degree");
        sub->add_option("--scheme", scheme, "hybridized|sbp-legendre|sbp-lobatto");
        sub->add_option("--penalty", penalty, "ec|lax-friedrichs");
        sub->add_option("--nx", cfg.nx, "elements per row (pairs of triangles)");
        sub->add_option("--ny", cfg.ny, "element rows");
        sub->add_option("--warp", cfg.warp, "mesh warp amplitude");
        sub->add_option("--cfl", cfg.cfl, "CFL number");
        sub->add_option("--tfinal", cfg.tfinal, "final time");
        sub->add_option("--problem", problem, "lake|vortex|dambreak");
        sub->add_option("--out-dir", cfg.out_dir, "output directory");
        sub->add_option("--threads", cfg.threads, "worker threads");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--sbp-data-dir", cfg.sbp_data_dir, "SBP node file directory");
    };
    auto* runc = app.add_subcommand("run", "run one experiment");
    add_run_flags(runc);

    std::vector<int> degrees = {2, 3};
    int levels = 3;
    std::string conv_out;
    auto* conv = app.add_subcommand("convergence", "refinement study");
    add_run_flags(conv);
    conv->add_option("--degrees", degrees, "degrees to sweep");
    conv->add_option("--levels", levels, "refinement levels");
    conv->add_option("--out", conv_out, "errors CSV path");

    std::vector<int> sizes = swedg::default_bench_sizes();
    int bench_K = 256, bench_threads = 1;
    unsigned bench_seed = 0;
    std::string bench_out;
    auto* bench = app.add_subcommand("bench", "kernel cost ratio sweep");
    bench->add_option("--sizes", sizes, "matrix sizes");
    bench->add_option("--elements", bench_K, "element count");
    bench->add_option("--threads", bench_threads, "worker threads");
    bench->add_option("--seed", bench_seed, "random seed");
    bench->add_option("--out", bench_out, "ratios CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (vq->parsed()) return cmd_verify_quadrature(vq_degree);
        if (vo->parsed()) {
            swedg::EdgeFamily fam;
            if (vo_family == "legendre") fam = swedg::EdgeFamily::GaussLegendre;
            else if (vo_family == "lobatto") fam = swedg::EdgeFamily::GaussLobatto;
            else throw std::invalid_argument("unknown family '" + vo_family + "'");
            return cmd_verify_operators(vo_degree, vo_data, fam);
        }
        if (runc->parsed() || conv->parsed()) {
            CLI::App* sub = runc->parsed() ? runc : conv;
            if (!config_path.empty()) {
                swedg::RunConfig file_cfg = swedg::load_config(config_path);
                // flags given on the command line override the file
                auto keep = [&](const char* flag) { return sub->count(flag) > 0; };
                if (!keep("--degree")) cfg.degree = file_cfg.degree;
                if (!keep("--scheme")) scheme = scheme_name(file_cfg.scheme);
                if (!keep("--penalty")) penalty = penalty_name(file_cfg.penalty);
                if (!keep("--nx")) cfg.nx = file_cfg.nx;
                if (!keep("--ny")) cfg.ny = file_cfg.ny;
                if (!keep("--warp")) cfg.warp = file_cfg.warp;
                if (!keep("--cfl")) cfg.cfl = file_cfg.cfl;
                if (!keep("--tfinal")) cfg.tfinal = file_cfg.tfinal;
                if (!keep("--problem")) problem = problem_name(file_cfg.problem);
                if (!keep("--out-dir")) cfg.out_dir = file_cfg.out_dir;
                if (!keep("--threads")) cfg.threads = file_cfg.threads;
                if (!keep("--seed")) cfg.seed = file_cfg.seed;
                if (!keep("--sbp-data-dir")) cfg.sbp_data_dir = file_cfg.sbp_data_dir;
                cfg.g = file_cfg.g;
                cfg.g_explicit = file_cfg.g_explicit;
                cfg.sample_every = file_cfg.sample_every;
            }
            cfg.problem = swedg::parse_problem(problem);
            cfg.scheme = swedg::parse_scheme(scheme);
            cfg.penalty = swedg::parse_penalty(penalty);
            if (runc->parsed()) return cmd_run(cfg);
            return cmd_convergence(cfg, degrees, levels, conv_out);
        }
        if (bench->parsed())
            return cmd_bench(sizes, bench_K, bench_threads, bench_seed, bench_out);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
