#pragma once

// Structured triangular meshes of rectangles, mesh warping, curved
// boundary fitting, connectivity (interior/periodic/wall), and
// curvilinear element geometry: mapping coefficients, Jacobians,
// geometric factors, normals, and surface-point matching.

#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "swedg/refelem.hpp"

namespace swedg {

struct Domain {
    double xc = 0.0, yc = 0.0;  // center
    double Lx = 2.0, Ly = 2.0;
    double xmin() const { return xc - Lx / 2; }
    double xmax() const { return xc + Lx / 2; }
    double ymin() const { return yc - Ly / 2; }
    double ymax() const { return yc + Ly / 2; }
};

struct Mesh {
    std::vector<std::array<double, 2>> verts;
    std::vector<std::array<int, 3>> tris;  // counterclockwise
    Domain dom;
    int N_map = 0;  // degree of the nodal element mapping; 0 = not set
    std::vector<Mat> map_nodes;  // per element, Np_map x 2 nodal coordinates
    std::vector<std::array<int, 2>> wall_faces;  // explicit (elem, face) wall tags
    int num_elements() const { return static_cast<int>(tris.size()); }
};

// Reference lattice of degree N (equispaced, used for the nodal mapping).
inline void map_lattice(int N, Vec& x, Vec& y) {
    int np = basis_dim(N);
    x.resize(np);
    y.resize(np);
    int c = 0;
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N - i; ++j) {
            x[c] = -1.0 + 2.0 * i / N;
            y[c] = -1.0 + 2.0 * j / N;
            ++c;
        }
}

// Barycentric coordinates w.r.t. the reference vertices (-1,-1),(1,-1),(-1,1).
inline std::array<double, 3> ref_barycentric(double x, double y) {
    double l1 = (1.0 + x) / 2.0;
    double l2 = (1.0 + y) / 2.0;
    return {1.0 - l1 - l2, l1, l2};
}

// Assigns degree-N mapping nodes from the straight-sided element geometry.
inline void set_mapping_degree(Mesh& mesh, int N) {
    if (N < 1) throw std::invalid_argument("mapping degree must be >= 1");
    mesh.N_map = N;
    Vec lx, ly;
    map_lattice(N, lx, ly);
    int np = basis_dim(N);
    mesh.map_nodes.assign(mesh.tris.size(), Mat(np, 2));
    for (size_t k = 0; k < mesh.tris.size(); ++k) {
        const auto& t = mesh.tris[k];
        for (int i = 0; i < np; ++i) {
            auto l = ref_barycentric(lx[i], ly[i]);
            for (int d = 0; d < 2; ++d)
                mesh.map_nodes[k](i, d) = l[0] * mesh.verts[t[0]][d] +
                                          l[1] * mesh.verts[t[1]][d] +
                                          l[2] * mesh.verts[t[2]][d];
        }
    }
}

inline Mesh uniform_tri_mesh(int nx, int ny, const Domain& dom,
                             bool flip_diagonal_below_center = false) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("nx, ny must be >= 1");
    if (dom.Lx <= 0 || dom.Ly <= 0) throw std::invalid_argument("degenerate domain");
    Mesh m;
    m.dom = dom;
    auto vid = [&](int i, int j) { return j * (nx + 1) + i; };
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i)
            m.verts.push_back({dom.xmin() + dom.Lx * i / nx, dom.ymin() + dom.Ly * j / ny});
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            int v00 = vid(i, j), v10 = vid(i + 1, j), v01 = vid(i, j + 1),
                v11 = vid(i + 1, j + 1);
            double ycenter = dom.ymin() + dom.Ly * (j + 0.5) / ny;
            bool flip = flip_diagonal_below_center && ycenter < dom.yc;
            if (!flip) {
                m.tris.push_back({v00, v10, v11});
                m.tris.push_back({v00, v11, v01});
            } else {
                m.tris.push_back({v00, v10, v01});
                m.tris.push_back({v10, v11, v01});
            }
        }
    return m;
}

// Sequential mesh warp: the x update feeds into the y update.
inline std::array<double, 2> warp_point(const Domain& d, double c, double x, double y) {
    x = x + c * d.Lx * std::cos(M_PI * (x - d.xc) / d.Lx) *
                std::cos(1.5 * M_PI * (y - d.yc) / d.Ly);
    y = y + c * d.Ly * std::sin(2.0 * M_PI * (x - d.xc) / d.Lx) *
                std::cos(M_PI * (y - d.yc) / d.Ly);
    return {x, y};
}

inline void warp_mesh(Mesh& mesh, double c_curve) {
    for (auto& v : mesh.verts) {
        auto p = warp_point(mesh.dom, c_curve, v[0], v[1]);
        v = p;
    }
    for (auto& nodes : mesh.map_nodes)
        for (int i = 0; i < nodes.rows(); ++i) {
            auto p = warp_point(mesh.dom, c_curve, nodes(i, 0), nodes(i, 1));
            nodes(i, 0) = p[0];
            nodes(i, 1) = p[1];
        }
}

inline double min_edge_length(const Mesh& mesh) {
    double h = 1e300;
    for (const auto& t : mesh.tris)
        for (int f = 0; f < 3; ++f) {
            const auto& a = mesh.verts[t[f]];
            const auto& b = mesh.verts[t[(f + 1) % 3]];
            h = std::min(h, std::hypot(a[0] - b[0], a[1] - b[1]));
        }
    return h;
}

enum class FaceType { Interior, Periodic, Wall };

struct FaceInfo {
    FaceType type = FaceType::Wall;
    int nbr_elem = -1;
    int nbr_face = -1;
    std::array<double, 2> shift = {0.0, 0.0};  // added to our points to reach the neighbor's
};

struct Connectivity {
    std::vector<std::array<FaceInfo, 3>> faces;  // per element
};

inline Connectivity connect(const Mesh& mesh, bool periodic_x, bool periodic_y) {
    Connectivity conn;
    int K = mesh.num_elements();
    conn.faces.resize(K);

    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edge_map;
    auto key = [](int a, int b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    for (int e = 0; e < K; ++e)
        for (int f = 0; f < 3; ++f)
            edge_map[key(mesh.tris[e][f], mesh.tris[e][(f + 1) % 3])].push_back({e, f});

    std::vector<char> is_wall_tag(K * 3, 0);
    for (const auto& wf : mesh.wall_faces) is_wall_tag[wf[0] * 3 + wf[1]] = 1;
    auto tag_shared = [&](int e, int f) {
        // propagate an explicit wall tag to the other side of a shared edge
        auto& rec = edge_map[key(mesh.tris[e][f], mesh.tris[e][(f + 1) % 3])];
        for (auto& [e2, f2] : rec) is_wall_tag[e2 * 3 + f2] = 1;
    };
    for (const auto& wf : mesh.wall_faces) tag_shared(wf[0], wf[1]);

    // interior faces
    std::vector<std::pair<int, int>> open;  // unmatched boundary faces
    for (auto& [k, rec] : edge_map) {
        if (rec.size() == 2 && !is_wall_tag[rec[0].first * 3 + rec[0].second]) {
            conn.faces[rec[0].first][rec[0].second] = {FaceType::Interior, rec[1].first,
                                                       rec[1].second, {0, 0}};
            conn.faces[rec[1].first][rec[1].second] = {FaceType::Interior, rec[0].first,
                                                       rec[0].second, {0, 0}};
        } else if (rec.size() > 2) {
            throw std::runtime_error("non-manifold edge in mesh");
        } else {
            for (auto& ef : rec) {
                if (is_wall_tag[ef.first * 3 + ef.second])
                    conn.faces[ef.first][ef.second] = {FaceType::Wall, -1, -1, {0, 0}};
                else
                    open.push_back(ef);
            }
        }
    }

    // periodic pairing of open boundary faces by shifted midpoints.
    // Matching uses the unwarped structured coordinates only when the mesh is
    // straight; for warped meshes the warp keeps boundary displacements
    // periodic-compatible, so midpoint matching still applies.
    const double tol = 1e-8 * std::max(mesh.dom.Lx, mesh.dom.Ly);
    auto mid = [&](int e, int f) {
        const auto& a = mesh.verts[mesh.tris[e][f]];
        const auto& b = mesh.verts[mesh.tris[e][(f + 1) % 3]];
        return std::array<double, 2>{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
    };
    std::vector<char> matched(open.size(), 0);
    for (size_t i = 0; i < open.size(); ++i) {
        if (matched[i]) continue;
        auto mi = mid(open[i].first, open[i].second);
        bool on_x = std::abs(mi[0] - mesh.dom.xmin()) < tol ||
                    std::abs(mi[0] - mesh.dom.xmax()) < tol;
        bool on_y = std::abs(mi[1] - mesh.dom.ymin()) < tol ||
                    std::abs(mi[1] - mesh.dom.ymax()) < tol;
        std::array<double, 2> shift = {0, 0};
        bool periodic = false;
        if (periodic_x && on_x) {
            shift[0] = (std::abs(mi[0] - mesh.dom.xmin()) < tol) ? mesh.dom.Lx : -mesh.dom.Lx;
            periodic = true;
        } else if (periodic_y && on_y) {
            shift[1] = (std::abs(mi[1] - mesh.dom.ymin()) < tol) ? mesh.dom.Ly : -mesh.dom.Ly;
            periodic = true;
        }
        if (!periodic) {
            conn.faces[open[i].first][open[i].second] = {FaceType::Wall, -1, -1, {0, 0}};
            matched[i] = 1;
            continue;
        }
        bool found = false;
        for (size_t j = 0; j < open.size(); ++j) {
            if (j == i || matched[j]) continue;
            auto mj = mid(open[j].first, open[j].second);
            if (std::abs(mi[0] + shift[0] - mj[0]) < tol &&
                std::abs(mi[1] + shift[1] - mj[1]) < tol) {
                conn.faces[open[i].first][open[i].second] = {
                    FaceType::Periodic, open[j].first, open[j].second, shift};
                conn.faces[open[j].first][open[j].second] = {
                    FaceType::Periodic, open[i].first, open[i].second,
                    {-shift[0], -shift[1]}};
                matched[i] = matched[j] = 1;
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("unmatched periodic face");
    }
    return conn;
}

struct ElemGeom {
    Mat map_coeffs;        // Np x 2 modal mapping coefficients
    Vec J_vol;             // Jacobian determinant at volume points
    Vec J_surf;            // at surface points
    Mat gf;                // (nq+nf) x 4 scaled geometric factors J*dxhat_j/dx_i
                           // columns: (x,xhat) (x,yhat) (y,xhat) (y,yhat)
    Vec sJ;                // Jf/Jf_hat at surface points
    Vec nx, ny;            // outward unit normals at surface points
    Mat xy_vol, xy_surf;   // physical coordinates at quadrature points
};

struct Geometry {
    std::vector<ElemGeom> elems;
    double min_J = 0.0;
};

inline Geometry build_geometry(const Mesh& mesh, const RefOperators& ops) {
    if (mesh.N_map != ops.N)
        throw std::runtime_error("mapping degree does not match operator degree");
    Geometry geo;
    int K = mesh.num_elements();
    geo.elems.resize(K);
    geo.min_J = 1e300;

    Vec lx, ly;
    map_lattice(ops.N, lx, ly);
    Mat Vmap = basis_vandermonde(ops.N, lx, ly);
    Eigen::PartialPivLU<Mat> lu(Vmap);

    int nq = ops.volq.size(), nf = ops.surfq.size();
    for (int k = 0; k < K; ++k) {
        ElemGeom& g = geo.elems[k];
        g.map_coeffs = lu.solve(mesh.map_nodes[k]);
        Mat dxdr_c = ops.Dx * g.map_coeffs;  // derivative coefficients
        Mat dxds_c = ops.Dy * g.map_coeffs;

        g.xy_vol = ops.Vq * g.map_coeffs;
        g.xy_surf = ops.Vf * g.map_coeffs;
        Mat xr_v = ops.Vq * dxdr_c, xs_v = ops.Vq * dxds_c;
        Mat xr_f = ops.Vf * dxdr_c, xs_f = ops.Vf * dxds_c;

        g.J_vol.resize(nq);
        g.J_surf.resize(nf);
        g.gf.resize(nq + nf, 4);
        for (int i = 0; i < nq + nf; ++i) {
            double xr, xs, yr, ys;
            if (i < nq) {
                xr = xr_v(i, 0); xs = xs_v(i, 0); yr = xr_v(i, 1); ys = xs_v(i, 1);
            } else {
                xr = xr_f(i - nq, 0); xs = xs_f(i - nq, 0);
                yr = xr_f(i - nq, 1); ys = xs_f(i - nq, 1);
            }
            double J = xr * ys - xs * yr;
            if (J <= 0.0)
                throw std::runtime_error("nonpositive Jacobian in element " +
                                         std::to_string(k));
            if (i < nq) g.J_vol[i] = J; else g.J_surf[i - nq] = J;
            geo.min_J = std::min(geo.min_J, J);
            // J * [dxhat/dx, dyhat/dx, dxhat/dy, dyhat/dy] = [ys, -yr, -xs, xr]
            g.gf(i, 0) = ys;
            g.gf(i, 1) = -yr;
            g.gf(i, 2) = -xs;
            g.gf(i, 3) = xr;
        }
        g.sJ.resize(nf);
        g.nx.resize(nf);
        g.ny.resize(nf);
        for (int i = 0; i < nf; ++i) {
            const auto& nref = ref_face_normals[ops.surfq.face[i]];
            double dx = g.gf(nq + i, 0) * nref[0] + g.gf(nq + i, 1) * nref[1];
            double dy = g.gf(nq + i, 2) * nref[0] + g.gf(nq + i, 3) * nref[1];
            double len = std::hypot(dx, dy);
            g.sJ[i] = len;  // = J*|G^T nhat| = Jf/Jf_hat
            g.nx[i] = dx / len;
            g.ny[i] = dy / len;
        }
    }
    return geo;
}

// Exterior-trace gather maps: for every coupled face, the neighbor's
// surface-point index coincident with each of ours.
struct FaceMatch {
    // per element, per face: local surface slot -> neighbor surface index
    std::vector<std::array<std::vector<int>, 3>> perm;
};

inline FaceMatch match_faces(const Mesh& mesh, const Connectivity& conn,
                             const Geometry& geo, const RefOperators& ops,
                             double tol = 1e-10) {
    FaceMatch fm;
    int K = mesh.num_elements();
    int npf = ops.surfq.nodes_per_face;
    fm.perm.resize(K);
    double scale = std::max(mesh.dom.Lx, mesh.dom.Ly);
    for (int e = 0; e < K; ++e) {
        for (int f = 0; f < 3; ++f) {
            const FaceInfo& info = conn.faces[e][f];
            if (info.type == FaceType::Wall) continue;
            auto& perm = fm.perm[e][f];
            perm.resize(npf);
            for (int i = 0; i < npf; ++i) {
                double px = geo.elems[e].xy_surf(f * npf + i, 0) + info.shift[0];
                double py = geo.elems[e].xy_surf(f * npf + i, 1) + info.shift[1];
                int best = -1;
                double bd = 1e300;
                for (int j = 0; j < npf; ++j) {
                    int idx = info.nbr_face * npf + j;
                    double d = std::hypot(px - geo.elems[info.nbr_elem].xy_surf(idx, 0),
                                          py - geo.elems[info.nbr_elem].xy_surf(idx, 1));
                    if (d < bd) {
                        bd = d;
                        best = idx;
                    }
                }
                if (bd > tol * scale)
                    throw std::runtime_error("face quadrature points do not match across face");
                perm[i] = best;
            }
        }
    }
    return fm;
}

// Snaps, per vertex row near the curve x = q(y), the horizontally nearest
// vertex onto the curve.  Used to pre-align a structured mesh before
// fit_curve_boundary.
inline void snap_vertices_to_curve(Mesh& mesh, const std::vector<double>& q_coeffs) {
    auto q = [&](double y) {
        double v = 0.0, p = 1.0;
        for (double c : q_coeffs) {
            v += c * p;
            p *= y;
        }
        return v;
    };
    std::map<long long, std::vector<int>> rows;  // keyed by rounded y
    for (size_t i = 0; i < mesh.verts.size(); ++i)
        rows[llround(mesh.verts[i][1] * 1e9)].push_back(static_cast<int>(i));
    for (auto& [ykey, ids] : rows) {
        double y = mesh.verts[ids[0]][1];
        double target = q(y);
        int best = -1;
        double bd = 1e300;
        for (int id : ids) {
            double d = std::abs(mesh.verts[id][0] - target);
            if (d < bd) {
                bd = d;
                best = id;
            }
        }
        if (best >= 0) mesh.verts[best][0] = target;
    }
}

// Faces whose both endpoints lie on x = q(y).
inline std::vector<std::array<int, 2>> faces_on_curve(const Mesh& mesh,
                                                      const std::vector<double>& q_coeffs,
                                                      double tol = 1e-10) {
    auto q = [&](double y) {
        double v = 0.0, p = 1.0;
        for (double c : q_coeffs) {
            v += c * p;
            p *= y;
        }
        return v;
    };
    std::vector<std::array<int, 2>> out;
    for (int e = 0; e < mesh.num_elements(); ++e)
        for (int f = 0; f < 3; ++f) {
            const auto& a = mesh.verts[mesh.tris[e][f]];
            const auto& b = mesh.verts[mesh.tris[e][(f + 1) % 3]];
            if (std::abs(a[0] - q(a[1])) < tol && std::abs(b[0] - q(b[1])) < tol)
                out.push_back({e, f});
        }
    return out;
}

// Snaps the high-order mapping nodes of the given faces onto x = q(y) and
// blends the displacement linearly toward the opposite vertex.
inline void fit_curve_boundary(Mesh& mesh, const std::vector<double>& q_coeffs,
                               const std::vector<std::array<int, 2>>& curved_faces) {
    if (mesh.N_map < 1) throw std::runtime_error("set_mapping_degree before fitting");
    auto q = [&](double y) {
        double v = 0.0, p = 1.0;
        for (double c : q_coeffs) {
            v += c * p;
            p *= y;
        }
        return v;
    };
    Vec lx, ly;
    map_lattice(mesh.N_map, lx, ly);
    for (const auto& ef : curved_faces) {
        int e = ef[0], f = ef[1];
        const auto& va = mesh.verts[mesh.tris[e][f]];
        const auto& vb = mesh.verts[mesh.tris[e][(f + 1) % 3]];
        int opp = (f + 2) % 3;
        Mat& nodes = mesh.map_nodes[e];
        for (int i = 0; i < nodes.rows(); ++i) {
            auto l = ref_barycentric(lx[i], ly[i]);
            double blend = 1.0 - l[opp];
            if (blend < 1e-13) continue;
            double t = l[(f + 1) % 3] / (l[f] + l[(f + 1) % 3]);
            double sx = va[0] + t * (vb[0] - va[0]);
            double sy = va[1] + t * (vb[1] - va[1]);
            nodes(i, 0) += blend * (q(sy) - sx);
        }
    }
}

// ---- minimal text exchange format -----------------------------------------
// header "nv ne", vertex lines "x y", element lines "v0 v1 v2",
// optional "wallface e f" lines.

inline void write_mesh_text(const Mesh& mesh, std::ostream& out) {
    out.precision(17);
    out << mesh.verts.size() << " " << mesh.tris.size() << "\n";
    for (const auto& v : mesh.verts) out << v[0] << " " << v[1] << "\n";
    for (const auto& t : mesh.tris) out << t[0] << " " << t[1] << " " << t[2] << "\n";
    for (const auto& w : mesh.wall_faces) out << "wallface " << w[0] << " " << w[1] << "\n";
}

inline Mesh read_mesh_text(std::istream& in, const Domain& dom) {
    Mesh m;
    m.dom = dom;
    size_t nv = 0, ne = 0;
    if (!(in >> nv >> ne)) throw std::runtime_error("bad mesh header");
    m.verts.resize(nv);
    for (auto& v : m.verts)
        if (!(in >> v[0] >> v[1])) throw std::runtime_error("bad vertex line");
    m.tris.resize(ne);
    for (auto& t : m.tris)
        if (!(in >> t[0] >> t[1] >> t[2])) throw std::runtime_error("bad element line");
    std::string tok;
    while (in >> tok) {
        if (tok != "wallface") throw std::runtime_error("unknown mesh record " + tok);
        std::array<int, 2> w{};
        in >> w[0] >> w[1];
        m.wall_faces.push_back(w);
    }
    return m;
}

}  // namespace swedg
