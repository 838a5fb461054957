#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "distlab/vec.hpp"

namespace distlab {

struct MeshError : std::runtime_error {
    explicit MeshError(const std::string& what) : std::runtime_error(what) {}
};

struct MeshQuality {
    double h_max = 0.0;  // longest edge
    int triangle_count = 0;
    double min_angle = 0.0;  // radians
};

// Closed oriented triangulated surface embedded in R^N.
template <int N>
struct TriMesh {
    std::vector<Vec<N>> vertices;
    std::vector<std::array<int, 3>> triangles;
    int expected_genus = 0;
    // Optional per-vertex parameter-domain coordinates, e.g. (u, v) for the
    // torus tube. Empty when the generator has no natural parametrization.
    std::vector<std::array<double, 2>> param_coords;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int triangle_count() const { return static_cast<int>(triangles.size()); }

    double diameter_hint() const {
        // bounding-box diagonal; cheap upper-ish scale for tolerances
        Vec<N> lo = vertices.at(0), hi = vertices.at(0);
        for (const auto& v : vertices)
            for (int i = 0; i < N; ++i) {
                lo[i] = std::min(lo[i], v[i]);
                hi[i] = std::max(hi[i], v[i]);
            }
        return dist(lo, hi);
    }
};

using TriMesh3 = TriMesh<3>;
using TriMesh4 = TriMesh<4>;

namespace detail {
inline std::pair<int, int> undirected(int a, int b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}
}  // namespace detail

// Unique undirected edges as sorted index pairs.
template <int N>
inline std::vector<std::pair<int, int>> mesh_edges(const TriMesh<N>& mesh) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(mesh.triangles.size() * 3);
    for (const auto& t : mesh.triangles)
        for (int k = 0; k < 3; ++k) edges.push_back(detail::undirected(t[k], t[(k + 1) % 3]));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

// Checks every TriMesh invariant and reports basic quality numbers.
// Throws MeshError on the first violation found.
template <int N>
inline MeshQuality validate_mesh(const TriMesh<N>& mesh) {
    const int nv = mesh.vertex_count();
    const int nf = mesh.triangle_count();
    if (nv < 4 || nf < 4) throw MeshError("mesh too small to be a closed surface");

    for (const auto& v : mesh.vertices)
        for (int i = 0; i < N; ++i)
            if (!std::isfinite(v[i])) throw MeshError("non-finite vertex coordinate");

    // Orientation-aware manifold check: each undirected edge must carry the
    // two directed half-edges exactly once each.
    std::map<std::pair<int, int>, std::array<int, 2>> half;  // (a,b) a<b -> {count ab, count ba}
    for (const auto& t : mesh.triangles) {
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw MeshError("triangle repeats a vertex");
        for (int k = 0; k < 3; ++k) {
            int a = t[k], b = t[(k + 1) % 3];
            if (a < 0 || b < 0 || a >= nv || b >= nv) throw MeshError("triangle index out of range");
            auto& slot = half[detail::undirected(a, b)];
            ++slot[a < b ? 0 : 1];
        }
    }
    for (const auto& [e, counts] : half) {
        if (counts[0] + counts[1] != 2)
            throw MeshError("non-manifold or boundary edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + "): shared by " +
                            std::to_string(counts[0] + counts[1]) + " triangles");
        if (counts[0] != 1 || counts[1] != 1)
            throw MeshError("inconsistent orientation across edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
    }

    const long long ne = static_cast<long long>(half.size());
    const long long euler = static_cast<long long>(nv) - ne + nf;
    if (euler != 2 - 2 * static_cast<long long>(mesh.expected_genus))
        throw MeshError("Euler characteristic " + std::to_string(euler) + " does not match genus " +
                        std::to_string(mesh.expected_genus));

    MeshQuality q;
    q.triangle_count = nf;
    q.min_angle = 4.0;  // > pi
    for (const auto& t : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            double len = dist(mesh.vertices[t[k]], mesh.vertices[t[(k + 1) % 3]]);
            q.h_max = std::max(q.h_max, len);
        }
    }
    const double area_floor = 1e-14 * q.h_max * q.h_max;
    for (const auto& t : mesh.triangles) {
        const Vec<N>&a = mesh.vertices[t[0]], &b = mesh.vertices[t[1]], &c = mesh.vertices[t[2]];
        if (triangle_area(a, b, c) < area_floor) throw MeshError("degenerate triangle below area floor");
        for (int k = 0; k < 3; ++k) {
            Vec<N> u = mesh.vertices[t[(k + 1) % 3]] - mesh.vertices[t[k]];
            Vec<N> w = mesh.vertices[t[(k + 2) % 3]] - mesh.vertices[t[k]];
            double ang = std::acos(std::clamp(dot(u, w) / (norm(u) * norm(w)), -1.0, 1.0));
            q.min_angle = std::min(q.min_angle, ang);
        }
    }
    if (q.h_max <= 0.0) throw MeshError("zero-size mesh");
    return q;
}

// OFF text export; R^4 embeddings get the "nOFF 4" variant header.
template <int N>
inline void write_off(std::ostream& os, const TriMesh<N>& mesh) {
    static_assert(N == 3 || N == 4);
    long long ne = static_cast<long long>(mesh_edges(mesh).size());
    if constexpr (N == 3)
        os << "OFF\n";
    else
        os << "nOFF " << N << "\n";
    os << mesh.vertex_count() << " " << mesh.triangle_count() << " " << ne << "\n";
    os.precision(17);
    for (const auto& v : mesh.vertices) {
        for (int i = 0; i < N; ++i) os << (i ? " " : "") << v[i];
        os << "\n";
    }
    for (const auto& t : mesh.triangles) os << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
}

}  // namespace distlab
