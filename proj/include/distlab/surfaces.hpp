#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "distlab/trimesh.hpp"
#include "distlab/vec.hpp"

namespace distlab {

inline constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// Surface family parameters

struct ConeSpec {
    double r;  // disc radius in the unit-slant normalization, 0 < r < 1
};
struct SphereSpec {
    double radius = 1.0;
};
struct EllipsoidSpec {
    double a, b, c;  // semi-axes, a >= b >= c > 0
};
struct TorusSpec {
    double eps;  // tube radius around the unit circle, 0 < eps < 1
};
struct SimplexBoundarySpec {
    int n;  // boundary of the regular (n+1)-simplex, n >= 1
};
struct TwoRaysSpec {
    double alpha;  // angle between the rays, 0 < alpha <= pi
};

using SurfaceSpec =
    std::variant<ConeSpec, SphereSpec, EllipsoidSpec, TorusSpec, SimplexBoundarySpec, TwoRaysSpec>;

inline void check_cone_param(double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("cone parameter r must lie in (0,1)");
}
inline void check_torus_param(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("torus parameter eps must lie in (0,1)");
}

// ---------------------------------------------------------------------------
// Ring-band triangulation shared by the cone generator

namespace detail {

struct Ring {
    std::vector<int> idx;     // vertex indices, sorted by angle
    std::vector<double> ang;  // angle of each vertex in [0, 2pi)
};

// Triangulates the annular band between two concentric vertex rings by a
// two-pointer sweep that always advances the side producing the shorter new
// crossing edge. Ring A edges end up running with increasing angle inside
// the triangles, ring B edges with decreasing angle, which keeps stacked
// bands orientation-consistent.
inline void stitch_band(const Ring& a, const Ring& b, const std::vector<Vec3>& verts,
                        std::vector<std::array<int, 3>>& out) {
    const int na = static_cast<int>(a.idx.size());
    const int nb = static_cast<int>(b.idx.size());
    // align the starting pointer of B with the first vertex of A
    int j0 = 0;
    double best = 1e300;
    for (int j = 0; j < nb; ++j) {
        double d = std::fabs(std::remainder(b.ang[j] - a.ang[0], 2.0 * kPi));
        if (d < best) {
            best = d;
            j0 = j;
        }
    }
    int ia = 0, jb = 0;
    while (ia < na || jb < nb) {
        int va = a.idx[ia % na], vb = b.idx[(j0 + jb) % nb];
        int va2 = a.idx[(ia + 1) % na], vb2 = b.idx[(j0 + jb + 1) % nb];
        bool advanceA;
        if (ia == na)
            advanceA = false;
        else if (jb == nb)
            advanceA = true;
        else
            advanceA = dist(verts[va2], verts[vb]) <= dist(verts[va], verts[vb2]);
        if (advanceA) {
            out.push_back({va, va2, vb});
            ++ia;
        } else {
            out.push_back({va, vb2, vb});
            ++jb;
        }
    }
}

// Ring counts move in powers of two over a base of 8, so neighbouring rings
// either match (offset by half a chord) or double. Both patterns keep the
// stitched diagonals short; free-running counts would let them spike.
inline int ring_count_banded(double radius, double chord) {
    int n = 8;
    while (2.0 * kPi * radius / n > chord) n *= 2;
    return n;
}

// Phase for the next ring given the previous ring's count and phase.
// Equal counts stagger by half a chord; at a doubling (or halving) the finer
// ring contains the coarser ring's angles, which caps every stitched
// diagonal at half the local coarse chord.
inline double next_ring_phase(int prev_count, double prev_phase, int count) {
    double p;
    if (count == prev_count)
        p = prev_phase + 0.5;
    else if (count == 2 * prev_count)
        p = 2.0 * prev_phase;
    else if (2 * count == prev_count)
        p = 0.5 * prev_phase;
    else
        p = prev_phase;
    p = std::fmod(p, 1.0);
    if (p < 0.0) p += 1.0;
    return p;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cone surface S(r): lateral sheet plus flat top disc, unit slant length.
// Apex sits at the origin; the rim circle of radius r lies at height
// sqrt(1 - r^2). One vertex ring per slant step; ring vertex counts grow
// with the ring radius so edge lengths stay near-uniform.
inline TriMesh3 mesh_cone(double r, int resolution) {
    check_cone_param(r);
    if (resolution < 8) throw std::invalid_argument("cone resolution too small to close the surface");

    const double height = std::sqrt(1.0 - r * r);
    const double g = 1.0 / resolution;            // slant step
    const double chord = 2.0 / std::sqrt(3.0) * g;  // angular spacing target
    TriMesh3 mesh;
    mesh.expected_genus = 0;

    mesh.vertices.push_back({0.0, 0.0, 0.0});  // apex

    int prev_count = 8;
    double prev_phase = 0.5;
    auto make_ring = [&](double rho, double z) {
        const int n = detail::ring_count_banded(rho, chord);
        const double phase = detail::next_ring_phase(prev_count, prev_phase, n);
        prev_count = n;
        prev_phase = phase;
        detail::Ring ring;
        for (int kk = 0; kk < n; ++kk) {
            double ang = 2.0 * kPi * (kk + phase) / n;
            if (ang >= 2.0 * kPi) ang -= 2.0 * kPi;
            ring.idx.push_back(static_cast<int>(mesh.vertices.size()));
            ring.ang.push_back(ang);
            mesh.vertices.push_back({rho * std::cos(ang), rho * std::sin(ang), z});
        }
        return ring;
    };

    std::vector<detail::Ring> lateral;
    lateral.reserve(resolution);
    for (int i = 1; i <= resolution; ++i) {
        const double s = (i == resolution) ? 1.0 : static_cast<double>(i) / resolution;
        lateral.push_back(make_ring(s * r, s * height));
    }

    // disc rings from the rim inward; the rim ring is shared with the sheet
    const int disc_rings = std::max(1, static_cast<int>(std::llround(r / g)));
    std::vector<detail::Ring> disc;
    disc.push_back(lateral.back());
    for (int j = 1; j < disc_rings; ++j)
        disc.push_back(make_ring(r * static_cast<double>(disc_rings - j) / disc_rings, height));
    const int center = static_cast<int>(mesh.vertices.size());
    mesh.vertices.push_back({0.0, 0.0, height});

    // apex fan; rim-ward rings follow band by band
    const auto& first = lateral.front();
    for (size_t k = 0; k < first.idx.size(); ++k)
        mesh.triangles.push_back(
            {0, first.idx[(k + 1) % first.idx.size()], first.idx[k]});
    for (int i = 0; i + 1 < resolution; ++i) detail::stitch_band(lateral[i], lateral[i + 1], mesh.vertices, mesh.triangles);
    for (size_t j = 0; j + 1 < disc.size(); ++j) detail::stitch_band(disc[j], disc[j + 1], mesh.vertices, mesh.triangles);
    const auto& inner = disc.back();
    for (size_t k = 0; k < inner.idx.size(); ++k)
        mesh.triangles.push_back({center, inner.idx[k], inner.idx[(k + 1) % inner.idx.size()]});
    return mesh;
}

// ---------------------------------------------------------------------------
// Icosphere. The base icosahedron is rotated so one vertex pair lands on the
// +-x axis; anisotropic scalings then realize their extreme points exactly at
// mesh vertices.
inline TriMesh3 mesh_sphere(double radius, int subdivisions) {
    if (!(radius > 0.0)) throw std::invalid_argument("sphere radius must be positive");
    if (subdivisions < 1) throw std::invalid_argument("sphere subdivisions must be >= 1");

    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> verts = {{-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
                               {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
                               {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1}};
    std::vector<std::array<int, 3>> faces = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9},  {5, 11, 4},
        {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6},  {3, 6, 8},
        {3, 8, 9},  {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

    const double len = std::sqrt(1.0 + phi * phi);
    const double ca = 1.0 / len, sa = phi / len;  // rotate vertex (1, phi, 0) onto (1, 0, 0)
    for (auto& v : verts) {
        double x = ca * v[0] + sa * v[1], y = -sa * v[0] + ca * v[1];
        v = normalized(Vec3{x, y, v[2]});
    }

    for (int s = 0; s < subdivisions; ++s) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) {
            auto key = detail::undirected(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            int idx = static_cast<int>(verts.size());
            verts.push_back(normalized(verts[a] + verts[b]));
            midpoint.emplace(key, idx);
            return idx;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(faces.size() * 4);
        for (const auto& f : faces) {
            int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca2 = mid(f[2], f[0]);
            next.push_back({f[0], ab, ca2});
            next.push_back({f[1], bc, ab});
            next.push_back({f[2], ca2, bc});
            next.push_back({ab, bc, ca2});
        }
        faces = std::move(next);
    }

    TriMesh3 mesh;
    mesh.expected_genus = 0;
    mesh.vertices.reserve(verts.size());
    for (const auto& v : verts) mesh.vertices.push_back(v * radius);
    mesh.triangles = std::move(faces);
    return mesh;
}

inline TriMesh3 mesh_ellipsoid(double a, double b, double c, int subdivisions) {
    if (!(a >= b && b >= c && c > 0.0))
        throw std::invalid_argument("ellipsoid semi-axes must satisfy a >= b >= c > 0");
    TriMesh3 mesh = mesh_sphere(1.0, subdivisions);
    for (auto& v : mesh.vertices) {
        v[0] *= a;
        v[1] *= b;
        v[2] *= c;
    }
    return mesh;
}

// ---------------------------------------------------------------------------
// Tube torus: boundary of the eps-neighbourhood of the unit circle,
// sampled on a regular (u, v) grid. u runs along the circle, v around the
// tube. param_coords keeps (u, v) per vertex for covering-space searches.
inline TriMesh3 mesh_torus(double eps, int res_u, int res_v) {
    check_torus_param(eps);
    if (res_u < 8 || res_v < 8) throw std::invalid_argument("torus resolutions must be >= 8");

    TriMesh3 mesh;
    mesh.expected_genus = 1;
    mesh.vertices.reserve(static_cast<size_t>(res_u) * res_v);
    mesh.param_coords.reserve(static_cast<size_t>(res_u) * res_v);
    for (int i = 0; i < res_u; ++i) {
        const double u = 2.0 * kPi * i / res_u;
        for (int j = 0; j < res_v; ++j) {
            const double v = 2.0 * kPi * j / res_v;
            const double w = 1.0 + eps * std::cos(v);
            mesh.vertices.push_back({w * std::cos(u), w * std::sin(u), eps * std::sin(v)});
            mesh.param_coords.push_back({u, v});
        }
    }
    auto vid = [&](int i, int j) { return (i % res_u) * res_v + (j % res_v); };
    for (int i = 0; i < res_u; ++i)
        for (int j = 0; j < res_v; ++j) {
            int v00 = vid(i, j), v10 = vid(i + 1, j), v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
            mesh.triangles.push_back({v00, v10, v11});
            mesh.triangles.push_back({v00, v11, v01});
        }
    return mesh;
}

// ---------------------------------------------------------------------------
// Boundary of the regular 3-simplex in R^4, each facet refined on the
// barycentric lattice. The subdivision schedule 1, 3, 6, 12, ... keeps facet
// centroids on lattice vertices from the first refinement on.
inline int simplex_edge_divisions(int subdivisions) {
    return subdivisions == 0 ? 1 : 3 * (1 << (subdivisions - 1));
}

inline TriMesh4 mesh_simplex_boundary(int n, int subdivisions) {
    if (n != 2)
        throw std::invalid_argument(
            "mesh path supports n = 2 only; use analytic operations for general n");
    if (subdivisions < 0) throw std::invalid_argument("subdivisions must be >= 0");

    const int m = simplex_edge_divisions(subdivisions);
    TriMesh4 mesh;
    mesh.expected_genus = 0;

    std::map<std::array<int, 4>, int> lattice;  // integer coords in units of 1/m
    auto vertex_at = [&](std::array<int, 4> key) {
        auto it = lattice.find(key);
        if (it != lattice.end()) return it->second;
        int idx = static_cast<int>(mesh.vertices.size());
        Vec4 p{};
        for (int d = 0; d < 4; ++d) p[d] = static_cast<double>(key[d]) / m;
        mesh.vertices.push_back(p);
        lattice.emplace(key, idx);
        return idx;
    };

    // facets of the oriented 3-simplex [e1 e2 e3 e4]
    const std::array<std::array<int, 3>, 4> facets = {{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}};
    for (const auto& f : facets) {
        auto corner = [&](int i, int j) {  // barycentric (i, j, m-i-j) on this facet
            std::array<int, 4> key{0, 0, 0, 0};
            key[f[0]] = i;
            key[f[1]] = j;
            key[f[2]] = m - i - j;
            return vertex_at(key);
        };
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m - i; ++j) {
                mesh.triangles.push_back({corner(i, j), corner(i + 1, j), corner(i, j + 1)});
                if (i + j < m - 1)
                    mesh.triangles.push_back({corner(i + 1, j), corner(i + 1, j + 1), corner(i, j + 1)});
            }
    }
    return mesh;
}

// ---------------------------------------------------------------------------

inline std::string surface_name(const SurfaceSpec& spec) {
    struct V {
        std::string operator()(const ConeSpec&) const { return "cone"; }
        std::string operator()(const SphereSpec&) const { return "sphere"; }
        std::string operator()(const EllipsoidSpec&) const { return "ellipsoid"; }
        std::string operator()(const TorusSpec&) const { return "torus"; }
        std::string operator()(const SimplexBoundarySpec&) const { return "simplex"; }
        std::string operator()(const TwoRaysSpec&) const { return "two_rays"; }
    };
    return std::visit(V{}, spec);
}

// Default torus grid used by sweeps and the verification suite: finer tubes
// get more samples in both directions so discretization error shrinks along
// a decreasing-eps sweep.
inline std::pair<int, int> torus_default_resolution(double eps) {
    check_torus_param(eps);
    auto up = [](double x, int mult) {
        int v = static_cast<int>(std::ceil(x));
        return ((v + mult - 1) / mult) * mult;
    };
    int rv = std::max(16, up(16.0 * std::sqrt(0.3 / eps), 4));
    int ru = std::max(96, up(96.0 * std::cbrt(0.3 / eps), 8));
    return {ru, rv};
}

// Smallest cone resolution whose measured longest edge stays below h_target.
inline int cone_resolution_for(double r, double h_target) {
    check_cone_param(r);
    if (!(h_target > 0.0)) throw std::invalid_argument("h_target must be positive");
    int res = std::max(8, static_cast<int>(std::ceil(1.17 / h_target)));
    for (;;) {
        TriMesh3 mesh = mesh_cone(r, res);
        if (validate_mesh(mesh).h_max <= h_target) return res;
        res += std::max(2, res / 16);
    }
}

}  // namespace distlab
