#pragma once

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "distlab/surfaces.hpp"
#include "distlab/trimesh.hpp"

namespace distlab {

// Triangles within `rings` vertex-adjacency rings of any seed vertex.
template <int N>
inline std::vector<char> triangles_near(const TriMesh<N>& mesh, const std::vector<int>& seeds,
                                        int rings) {
    std::set<int> zone(seeds.begin(), seeds.end());
    for (int round = 0; round < rings; ++round) {
        std::set<int> grown = zone;
        for (const auto& t : mesh.triangles) {
            bool touches = zone.count(t[0]) || zone.count(t[1]) || zone.count(t[2]);
            if (touches) grown.insert(t.begin(), t.end());
        }
        zone.swap(grown);
    }
    std::vector<char> marked(mesh.triangles.size(), 0);
    for (size_t i = 0; i < mesh.triangles.size(); ++i) {
        const auto& t = mesh.triangles[i];
        if (zone.count(t[0]) || zone.count(t[1]) || zone.count(t[2])) marked[i] = 1;
    }
    return marked;
}

// Conforming local subdivision: marked triangles split 4:1 at edge midpoints,
// neighbours that inherit one or two split edges get matching green splits.
// Original vertices keep their indices. New midpoints stay on the straight
// edges, so the polyhedron is unchanged as a set.
template <int N>
inline TriMesh<N> refine_triangles(const TriMesh<N>& mesh, const std::vector<char>& marked) {
    TriMesh<N> out;
    out.vertices = mesh.vertices;
    out.expected_genus = mesh.expected_genus;
    out.param_coords = mesh.param_coords;
    const bool has_params = !mesh.param_coords.empty();

    std::map<std::pair<int, int>, int> midpoint;
    for (size_t i = 0; i < mesh.triangles.size(); ++i) {
        if (!marked[i]) continue;
        const auto& t = mesh.triangles[i];
        for (int k = 0; k < 3; ++k) midpoint.emplace(detail::undirected(t[k], t[(k + 1) % 3]), -1);
    }
    for (auto& [edge, idx] : midpoint) {
        idx = static_cast<int>(out.vertices.size());
        out.vertices.push_back(0.5 * (mesh.vertices[edge.first] + mesh.vertices[edge.second]));
        if (has_params) {
            std::array<double, 2> pm{};
            for (int c = 0; c < 2; ++c) {
                double a = mesh.param_coords[edge.first][c];
                double delta = std::remainder(mesh.param_coords[edge.second][c] - a, 2.0 * kPi);
                double v = a + 0.5 * delta;
                v = std::fmod(v, 2.0 * kPi);
                if (v < 0.0) v += 2.0 * kPi;
                pm[c] = v;
            }
            out.param_coords.push_back(pm);
        }
    }
    auto mid = [&](int a, int b) {
        auto it = midpoint.find(detail::undirected(a, b));
        return it == midpoint.end() ? -1 : it->second;
    };

    for (const auto& t : mesh.triangles) {
        int m01 = mid(t[0], t[1]), m12 = mid(t[1], t[2]), m20 = mid(t[2], t[0]);
        int splits = (m01 >= 0) + (m12 >= 0) + (m20 >= 0);
        if (splits == 3) {
            out.triangles.push_back({t[0], m01, m20});
            out.triangles.push_back({t[1], m12, m01});
            out.triangles.push_back({t[2], m20, m12});
            out.triangles.push_back({m01, m12, m20});
        } else if (splits == 0) {
            out.triangles.push_back(t);
        } else {
            // rotate so the first edge (a, b) is split
            std::array<int, 3> v = t;
            std::array<int, 3> m = {m01, m12, m20};
            while (m[0] < 0) {
                v = {v[1], v[2], v[0]};
                m = {m[1], m[2], m[0]};
            }
            if (splits == 1) {
                out.triangles.push_back({v[0], m[0], v[2]});
                out.triangles.push_back({m[0], v[1], v[2]});
            } else {
                // two split edges; the unsplit one is either (b, c) or (c, a)
                if (m[1] >= 0) {
                    out.triangles.push_back({v[0], m[0], m[1]});
                    out.triangles.push_back({v[0], m[1], v[2]});
                    out.triangles.push_back({m[0], v[1], m[1]});
                } else {
                    out.triangles.push_back({v[0], m[0], m[2]});
                    out.triangles.push_back({m[0], v[1], m[2]});
                    out.triangles.push_back({m[2], v[1], v[2]});
                }
            }
        }
    }
    return out;
}

// Longest edge among triangles within `rings` of the seed vertices.
template <int N>
inline double local_h_max(const TriMesh<N>& mesh, const std::vector<int>& seeds, int rings) {
    auto marked = triangles_near(mesh, seeds, rings);
    double h = 0.0;
    for (size_t i = 0; i < mesh.triangles.size(); ++i) {
        if (!marked[i]) continue;
        const auto& t = mesh.triangles[i];
        for (int k = 0; k < 3; ++k)
            h = std::max(h, dist(mesh.vertices[t[k]], mesh.vertices[t[(k + 1) % 3]]));
    }
    return h;
}

}  // namespace distlab
