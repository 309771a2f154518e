#pragma once

// Experiment driver: problem setup for the lake-at-rest, translating-vortex
// and dam-break cases, the time loop with invariant tracking and output,
// and the convergence-study harness.

#include <cmath>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "swedg/diagnostics.hpp"
#include "swedg/mesh.hpp"
#include "swedg/solver.hpp"

namespace swedg {

enum class ProblemId { Lake, Vortex, DamBreak };

struct RunConfig {
    ProblemId problem = ProblemId::Lake;
    int degree = 3;
    Scheme scheme = Scheme::Hybridized;
    Penalty penalty = Penalty::LaxFriedrichs;
    int nx = 8, ny = 8;
    double warp = 0.0;       // mesh warp amplitude, 0 = affine
    double cfl = 0.125;
    double tfinal = 0.5;
    double g = 9.81;         // overridden per problem unless set explicitly
    bool g_explicit = false;
    std::string out_dir;     // empty = no file output
    std::string sbp_data_dir = "data";
    int threads = 1;
    unsigned seed = 0;
    int sample_every = 0;    // invariant cadence in steps, 0 = auto (~100 samples)

    void validate() const {
        if (degree < 1) throw std::invalid_argument("degree must be >= 1");
        if (!(cfl > 0.0)) throw std::invalid_argument("CFL must be positive");
        if (tfinal < 0.0) throw std::invalid_argument("tfinal must be >= 0");
        if (nx < 1 || ny < 1) throw std::invalid_argument("nx, ny must be >= 1");
        if (threads < 1) throw std::invalid_argument("threads must be >= 1");
    }
};

// Fully assembled case: mesh, operators and initial state for one scheme.
struct Case {
    RunConfig cfg;
    Mesh mesh;
    RefOperators ref;
    std::unique_ptr<TraditionalSBP> tsbp;  // SBP schemes only
    Connectivity conn;
    Geometry geo;
    FaceMatch fm;
    SolverOps hops;
    SbpSolverOps sops;
    State hstate;
    NodalState nstate;
    bool sbp = false;
    ExactFn exact;              // empty if the problem has no usable reference solution
    std::vector<Mat> ref_state;  // discrete reference (steady problems); wins over exact

    int num_elements() const { return mesh.num_elements(); }

    // modal view of the current solution (projection for SBP)
    std::vector<Mat> modal_solution() const {
        return sbp ? project_nodal(ref, nstate.u) : hstate.u;
    }
    std::vector<Vec> modal_bathymetry() const {
        if (!sbp) return hstate.b;
        std::vector<Vec> b(nstate.b.size());
        for (size_t k = 0; k < b.size(); ++k) b[k] = ref.Pq * nstate.b[k];
        return b;
    }
    double time() const { return sbp ? nstate.t : hstate.t; }
};

namespace detail {

inline void build_operators(Case& c) {
    const RunConfig& cfg = c.cfg;
    if (cfg.scheme == Scheme::Hybridized) {
        c.ref = build_ref_operators(cfg.degree);
    } else {
        EdgeFamily fam = cfg.scheme == Scheme::SbpLegendre ? EdgeFamily::GaussLegendre
                                                           : EdgeFamily::GaussLobatto;
        auto sbpq = sbp_rule(cfg.degree, fam, cfg.sbp_data_dir);
        c.ref = build_ref_operators(cfg.degree, sbpq.vol, sbpq.surf);
        c.tsbp = std::make_unique<TraditionalSBP>(build_traditional_sbp(c.ref, sbpq));
        c.sbp = true;
    }
}

inline void finish_case(Case& c, bool periodic_x, bool periodic_y, const ExactFn& init,
                        const BathymetryFn& bathy) {
    const RunConfig& cfg = c.cfg;
    c.conn = connect(c.mesh, periodic_x, periodic_y);
    c.geo = build_geometry(c.mesh, c.ref);
    c.fm = match_faces(c.mesh, c.conn, c.geo, c.ref);
    if (!c.sbp) {
        c.hops = precompute_element_ops(c.ref, c.mesh, c.geo, c.conn, c.fm, cfg.g,
                                        cfg.penalty, cfg.threads);
        c.hstate = make_state(c.mesh, cfg.degree, init, bathy);
        set_bathymetry(c.hops, c.hstate.b);
    } else {
        c.sops = precompute_sbp_ops(c.ref, *c.tsbp, c.mesh, c.geo, c.conn, c.fm, cfg.g,
                                    cfg.penalty, cfg.threads);
        c.nstate = make_nodal_state(c.mesh, c.ref, c.geo, init, bathy);
        set_bathymetry(c.sops, c.nstate.b);
    }
}

}  // namespace detail

inline Case build_lake_case(RunConfig cfg) {
    if (!cfg.g_explicit) cfg.g = 9.81;
    cfg.validate();
    Case c;
    c.cfg = cfg;
    detail::build_operators(c);
    c.mesh = uniform_tri_mesh(cfg.nx, cfg.ny, {0.0, 0.0, 2.0, 2.0});
    set_mapping_degree(c.mesh, cfg.degree);
    if (cfg.warp != 0.0) warp_mesh(c.mesh, cfg.warp);
    ExactFn init = [](double x, double y, double) -> ConsState {
        return {2.0 - lake_bathymetry(x, y), 0.0, 0.0};
    };
    detail::finish_case(c, true, true, init, lake_bathymetry);
    if (c.sbp) {
        // the discrete steady state pairs h with the interpolated bottom
        for (size_t k = 0; k < c.nstate.u.size(); ++k)
            c.nstate.u[k].col(0) = 2.0 - c.nstate.b[k].array();
    }
    c.exact = init;
    c.ref_state = c.modal_solution();  // discrete steady state
    return c;
}

inline Case build_vortex_case(RunConfig cfg) {
    VortexParams vp;
    if (cfg.g_explicit) vp.g = cfg.g;
    cfg.g = vp.g;
    cfg.validate();
    Case c;
    c.cfg = cfg;
    detail::build_operators(c);
    c.mesh = uniform_tri_mesh(cfg.nx, cfg.ny, {0.0, 0.0, 20.0, 10.0});
    set_mapping_degree(c.mesh, cfg.degree);
    if (cfg.warp != 0.0) warp_mesh(c.mesh, cfg.warp);
    ExactFn ex = [vp](double x, double y, double t) { return vortex_exact(vp, x, y, t); };
    detail::finish_case(c, true, true, ex, [](double, double) { return 0.0; });
    c.exact = ex;
    return c;
}

// Dam polyline x = y^2/25 with an opening for |y| <= 0.5.
inline std::vector<double> dam_curve_coeffs() { return {0.0, 0.0, 1.0 / 25.0}; }

inline Case build_dambreak_case(RunConfig cfg) {
    if (!cfg.g_explicit) cfg.g = 9.81;
    cfg.validate();
    Case c;
    c.cfg = cfg;
    detail::build_operators(c);

    auto qc = dam_curve_coeffs();
    c.mesh = uniform_tri_mesh(cfg.nx, cfg.ny, {0.0, 0.0, 20.0, 20.0},
                              /*flip_diagonal_below_center=*/true);
    snap_vertices_to_curve(c.mesh, qc);
    set_mapping_degree(c.mesh, cfg.degree);
    auto dam_faces = faces_on_curve(c.mesh, qc);
    if (dam_faces.empty()) throw std::runtime_error("mesh has no faces on the dam curve");
    bool tagged = false;
    for (const auto& ef : dam_faces) {
        const auto& a = c.mesh.verts[c.mesh.tris[ef[0]][ef[1]]];
        const auto& b = c.mesh.verts[c.mesh.tris[ef[0]][(ef[1] + 1) % 3]];
        double ymid = 0.5 * (a[1] + b[1]);
        if (std::abs(ymid) > 0.5) {
            c.mesh.wall_faces.push_back(ef);
            tagged = true;
        }
    }
    if (!tagged) throw std::runtime_error("no dam wall faces tagged");
    fit_curve_boundary(c.mesh, qc, dam_faces);

    auto q = [&](double y) { return y * y / 25.0; };
    // element-constant initial depth by centroid side
    ExactFn init = [q](double, double, double) -> ConsState { return {5.0, 0.0, 0.0}; };
    detail::finish_case(c, false, false, init, [](double, double) { return 0.0; });
    double sqrt2 = std::sqrt(2.0);
    for (int k = 0; k < c.mesh.num_elements(); ++k) {
        const auto& t = c.mesh.tris[k];
        double cx = 0, cy = 0;
        for (int v : t) {
            cx += c.mesh.verts[v][0] / 3.0;
            cy += c.mesh.verts[v][1] / 3.0;
        }
        double h = cx < q(cy) ? 10.0 : 5.0;
        if (!c.sbp) {
            c.hstate.u[k].setZero();
            c.hstate.u[k](0, 0) = sqrt2 * h;  // constant-mode coefficient
        } else {
            c.nstate.u[k].col(0).setConstant(h);
            c.nstate.u[k].col(1).setZero();
            c.nstate.u[k].col(2).setZero();
        }
    }
    return c;
}

inline Case build_case(const RunConfig& cfg) {
    switch (cfg.problem) {
        case ProblemId::Lake: return build_lake_case(cfg);
        case ProblemId::Vortex: return build_vortex_case(cfg);
        case ProblemId::DamBreak: return build_dambreak_case(cfg);
    }
    throw std::invalid_argument("unknown problem");
}

struct RunResult {
    std::vector<Invariants> series;
    ErrorReport error;       // valid only when the case has an exact solution
    bool has_error = false;
    int steps = 0;
    double dt = 0.0;
};

// Integrates the case to cfg.tfinal, sampling invariants and optionally
// writing errors.csv / invariants.csv / solution_<t>.vtk into out_dir.
inline RunResult run(Case& c) {
    const RunConfig& cfg = c.cfg;
    double dt = compute_dt(c.mesh, cfg.degree, cfg.cfl);
    int nsteps = cfg.tfinal > 0.0 ? static_cast<int>(std::ceil(cfg.tfinal / dt - 1e-12)) : 0;

    RunResult res;
    res.dt = dt;
    FineQuad fq(cfg.degree);
    int cadence = cfg.sample_every > 0 ? cfg.sample_every : std::max(1, nsteps / 100);

    auto sample = [&]() {
        res.series.push_back(compute_invariants(fq, c.geo, c.modal_solution(),
                                                c.modal_bathymetry(), cfg.g, c.time()));
    };
    sample();
    if (!cfg.out_dir.empty())
        write_solution_vtk(cfg.out_dir + "/solution_0.vtk", c.mesh, cfg.degree,
                           c.modal_solution(), c.modal_bathymetry());

    std::vector<Mat> reg;
    for (int s = 0; s < nsteps; ++s) {
        double step_dt = std::min(dt, cfg.tfinal - c.time());
        if (step_dt <= 0.0) break;
        if (!c.sbp) {
            step_lsrk45(c.hstate, [&](const State& st) { return rhs(c.hops, st); },
                        step_dt, reg);
        } else {
            step_lsrk45(c.nstate, [&](const NodalState& st) { return rhs_sbp(c.sops, st); },
                        step_dt, reg);
        }
        ++res.steps;
        if ((s + 1) % cadence == 0 || s + 1 == nsteps) sample();
    }

    if (!c.ref_state.empty()) {
        res.error = l2_error(fq, c.geo, c.modal_solution(), c.ref_state);
        res.error.h_mesh = min_edge_length(c.mesh);
        res.has_error = true;
    } else if (c.exact) {
        res.error = l2_error(fq, c.geo, c.modal_solution(), c.exact, c.time());
        res.error.h_mesh = min_edge_length(c.mesh);
        res.has_error = true;
    }

    if (!cfg.out_dir.empty()) {
        write_invariants_csv(cfg.out_dir + "/invariants.csv", res.series);
        if (res.has_error)
            write_errors_csv(cfg.out_dir + "/errors.csv", {res.error}, {});
        std::ostringstream tag;
        tag << c.time();
        write_solution_vtk(cfg.out_dir + "/solution_" + tag.str() + ".vtk", c.mesh,
                           cfg.degree, c.modal_solution(), c.modal_bathymetry());
    }
    return res;
}

struct ConvergenceRow {
    int N = 0;
    int nx = 0, ny = 0;
    ErrorReport error;
    double order = std::nan("");
    bool failed = false;
    std::string failure;
};

// Refinement sweep on the vortex (or any problem with an exact solution).
// Each level doubles nx and ny.  Failures are recorded and the study continues.
inline std::vector<ConvergenceRow> convergence_study(const RunConfig& base,
                                                     const std::vector<int>& degrees,
                                                     int levels) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    std::vector<ConvergenceRow> rows;
    for (int N : degrees) {
        ConvergenceRow* prev = nullptr;
        for (int lev = 0; lev < levels; ++lev) {
            RunConfig cfg = base;
            cfg.degree = N;
            cfg.nx = base.nx << lev;
            cfg.ny = base.ny << lev;
            cfg.out_dir.clear();
            ConvergenceRow row;
            row.N = N;
            row.nx = cfg.nx;
            row.ny = cfg.ny;
            try {
                Case c = build_case(cfg);
                RunResult r = run(c);
                if (!r.has_error) throw std::runtime_error("problem has no exact solution");
                row.error = r.error;
                if (prev && !prev->failed)
                    row.order = std::log2(prev->error.combined / row.error.combined);
            } catch (const std::exception& e) {
                row.failed = true;
                row.failure = e.what();
            }
            rows.push_back(row);
            prev = &rows.back();
        }
    }
    return rows;
}

}  // namespace swedg
