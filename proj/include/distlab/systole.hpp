#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include "distlab/steiner.hpp"
#include "distlab/surfaces.hpp"

namespace distlab {

struct SystoleResult {
    double length = 0.0;
    std::vector<Vec3> loop;          // closed polyline on the mesh
    std::array<int, 2> winding{0, 0};  // wraps in the (u, v) parameter lattice
};

namespace systole_detail {

// wrap count picked up when walking from param a to param b the short way
inline int arc_shift(double a, double b) {
    double delta = std::remainder(b - a, 2.0 * kPi);
    return static_cast<int>(std::llround((a + delta - b) / (2.0 * kPi)));
}

}  // namespace systole_detail

// Shortest non-contractible loop on a genus-1 tube mesh, found as the
// shortest path between lifted copies of a base node in a 3x3 replication of
// the parameter cover. Winding classes searched: (0,1), (1,0), (1,1), (1,-1);
// larger classes are strictly longer in the cover.
inline SystoleResult systole_torus(const TriMesh3& mesh, int k = 0) {
    if (mesh.param_coords.size() != mesh.vertices.size())
        throw std::invalid_argument("systole search needs per-vertex param_coords");
    if (mesh.expected_genus != 1) throw std::invalid_argument("systole search expects a genus-1 mesh");
    validate_mesh(mesh);

    const SteinerGraph<3> base = build_steiner_graph(mesh, k);
    const int nb = base.node_count();

    // params for subdivision nodes are interpolated along the short way
    std::vector<std::array<double, 2>> params(nb);
    for (int v = 0; v < base.mesh_vertices; ++v) params[v] = mesh.param_coords[v];
    for (size_t e = 0; e < base.edges.size(); ++e) {
        const auto [a, b] = base.edges[e];
        for (int j = 1; j <= k; ++j) {
            double t = static_cast<double>(j) / (k + 1);
            std::array<double, 2> pm{};
            for (int c = 0; c < 2; ++c) {
                double delta = std::remainder(mesh.param_coords[b][c] - mesh.param_coords[a][c], 2.0 * kPi);
                pm[c] = mesh.param_coords[a][c] + t * delta;
            }
            params[base.mesh_vertices + static_cast<int>(e) * k + j - 1] = pm;
        }
    }

    // replicate nodes over copies (cu, cv) in {-1,0,1}^2
    auto copy_id = [](int cu, int cv) { return (cu + 1) * 3 + (cv + 1); };
    auto lift = [&](int node, int cu, int cv) { return node * 9 + copy_id(cu, cv); };
    const std::array<std::array<int, 2>, 4> classes = {{{0, 1}, {1, 0}, {1, 1}, {1, -1}}};

    struct Arc {
        int to_node;
        int du, dv;
        double w;
    };
    std::vector<std::vector<Arc>> adj(nb);
    for (int u = 0; u < nb; ++u)
        for (uint32_t a = base.row_ptr[u]; a < base.row_ptr[u + 1]; ++a) {
            int v = static_cast<int>(base.col[a]);
            Arc arc;
            arc.to_node = v;
            arc.du = systole_detail::arc_shift(params[u][0], params[v][0]);
            arc.dv = systole_detail::arc_shift(params[u][1], params[v][1]);
            arc.w = base.weight[a];
            adj[u].push_back(arc);
        }

    const int cover_nodes = nb * 9;
    std::vector<double> distv(cover_nodes);
    std::vector<int> pred(cover_nodes);
    double best_len = kInfDist;
    int best_src = -1;
    std::array<int, 2> best_class{0, 0};

    auto run_source = [&](int src, double cap, bool with_pred) {
        std::fill(distv.begin(), distv.end(), kInfDist);
        if (with_pred) std::fill(pred.begin(), pred.end(), -1);
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        int start = lift(src, 0, 0);
        distv[start] = 0.0;
        pq.emplace(0.0, start);
        while (!pq.empty()) {
            auto [d, c] = pq.top();
            pq.pop();
            if (d != distv[c]) continue;
            if (d > cap) break;
            int node = c / 9;
            int cu = c % 9 / 3 - 1, cv = c % 9 % 3 - 1;
            for (const Arc& arc : adj[node]) {
                int nu = cu + arc.du, nv2 = cv + arc.dv;
                if (nu < -1 || nu > 1 || nv2 < -1 || nv2 > 1) continue;
                int target = lift(arc.to_node, nu, nv2);
                double nd = d + arc.w;
                if (nd < distv[target]) {
                    distv[target] = nd;
                    if (with_pred) pred[target] = c;
                    pq.emplace(nd, target);
                }
            }
        }
    };

    for (int src = 0; src < nb; ++src) {
        run_source(src, best_len, false);
        for (const auto& cls : classes) {
            double d = distv[lift(src, cls[0], cls[1])];
            if (d < best_len) {
                best_len = d;
                best_src = src;
                best_class = {cls[0], cls[1]};
            }
        }
    }
    if (!(best_len < kInfDist)) throw std::runtime_error("no non-contractible loop found in the cover");

    // rebuild the winning path once with predecessors
    run_source(best_src, kInfDist, true);
    SystoleResult out;
    out.length = best_len;
    out.winding = best_class;
    int cur = lift(best_src, best_class[0], best_class[1]);
    std::vector<int> chain;
    while (cur >= 0) {
        chain.push_back(cur);
        cur = pred[cur];
    }
    std::reverse(chain.begin(), chain.end());
    out.loop.reserve(chain.size());
    for (int c : chain) out.loop.push_back(base.points[c / 9]);
    return out;
}

}  // namespace distlab
