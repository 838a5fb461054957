#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "distlab/trimesh.hpp"

namespace distlab {

inline constexpr float kInfDist = std::numeric_limits<float>::infinity();

// Shortest-path graph over a triangle mesh: the nodes are the mesh vertices
// plus k evenly spaced subdivision points per edge, and within every triangle
// all boundary nodes are pairwise connected by straight arcs. Graph distances
// over-estimate the polyhedral intrinsic distance and converge to it under
// refinement, which is the one-sided error the estimator relies on.
template <int N>
struct SteinerGraph {
    std::vector<Vec<N>> points;  // mesh vertices first, then edge nodes
    int mesh_vertices = 0;
    int k = 0;
    std::vector<std::pair<int, int>> edges;  // unique undirected mesh edges
    std::vector<uint32_t> row_ptr;           // CSR over directed arcs
    std::vector<uint32_t> col;
    std::vector<float> weight;

    int node_count() const { return static_cast<int>(points.size()); }
    long long arc_count() const { return static_cast<long long>(col.size()); }
};

template <int N>
inline SteinerGraph<N> build_steiner_graph(const TriMesh<N>& mesh, int k) {
    if (k < 0) throw std::invalid_argument("steiner k must be >= 0");
    const int nv = mesh.vertex_count();
    for (const auto& t : mesh.triangles)
        for (int v : t)
            if (v < 0 || v >= nv) throw std::invalid_argument("triangle index out of range");

    SteinerGraph<N> g;
    g.mesh_vertices = nv;
    g.k = k;
    g.points = mesh.vertices;
    g.edges = mesh_edges(mesh);

    std::vector<std::pair<std::pair<int, int>, int>> lookup(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i) lookup[i] = {g.edges[i], static_cast<int>(i)};
    auto edge_id = [&](int a, int b) {
        auto key = detail::undirected(a, b);
        auto it = std::lower_bound(lookup.begin(), lookup.end(), key,
                                   [](const auto& e, const auto& v) { return e.first < v; });
        return it->second;
    };

    // subdivision nodes, k per edge, laid out edge-major
    auto edge_node = [&](int eid, int j) { return nv + eid * k + j; };
    g.points.reserve(nv + g.edges.size() * k);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const Vec<N>&a = mesh.vertices[g.edges[e].first], &b = mesh.vertices[g.edges[e].second];
        for (int j = 1; j <= k; ++j) {
            double t = static_cast<double>(j) / (k + 1);
            g.points.push_back(a + t * (b - a));
        }
    }

    // collect undirected arcs triangle by triangle, then dedupe shared ones
    std::vector<std::pair<uint32_t, uint32_t>> arcs;
    arcs.reserve(mesh.triangles.size() * (3 + 3 * k) * (2 + 3 * k) / 2);
    std::vector<int> ring;
    for (const auto& t : mesh.triangles) {
        ring.clear();
        for (int c = 0; c < 3; ++c) {
            int a = t[c], b = t[(c + 1) % 3];
            ring.push_back(a);
            int eid = edge_id(a, b);
            bool fwd = g.edges[eid].first == a;
            for (int j = 1; j <= k; ++j) ring.push_back(edge_node(eid, fwd ? j - 1 : k - j));
        }
        // skip non-consecutive pairs along the same edge: those chords are
        // exact sums of the consecutive ones
        const int L = static_cast<int>(ring.size());
        const int seg = k + 1;
        auto same_edge = [&](int i, int j) {  // positions i < j around the ring
            if (j <= seg) return true;                  // first edge
            if (i >= seg && j <= 2 * seg) return true;  // second edge
            if (i >= 2 * seg) return true;              // third edge
            if (i == 0 && j >= 2 * seg) return true;    // third edge, wrapped corner
            return false;
        };
        for (int i = 0; i < L; ++i)
            for (int j = i + 1; j < L; ++j) {
                int cgap = std::min(j - i, L - (j - i));
                if (cgap > 1 && same_edge(i, j)) continue;
                uint32_t u = ring[i], v = ring[j];
                arcs.emplace_back(std::min(u, v), std::max(u, v));
            }
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    const int nn = g.node_count();
    std::vector<uint32_t> degree(nn, 0);
    for (const auto& [u, v] : arcs) {
        ++degree[u];
        ++degree[v];
    }
    g.row_ptr.assign(nn + 1, 0);
    for (int i = 0; i < nn; ++i) g.row_ptr[i + 1] = g.row_ptr[i] + degree[i];
    g.col.resize(arcs.size() * 2);
    g.weight.resize(arcs.size() * 2);
    std::vector<uint32_t> cursor(g.row_ptr.begin(), g.row_ptr.end() - 1);
    for (const auto& [u, v] : arcs) {
        float w = static_cast<float>(dist(g.points[u], g.points[v]));
        g.col[cursor[u]] = v;
        g.weight[cursor[u]++] = w;
        g.col[cursor[v]] = u;
        g.weight[cursor[v]++] = w;
    }
    return g;
}

namespace detail {

// min-heap over (float distance | node) packed in 64 bits; nonnegative float
// bit patterns sort like the floats themselves
class DijkstraHeap {
  public:
    void reset() { items_.clear(); }
    bool empty() const { return items_.empty(); }

    void push(float d, uint32_t node) {
        uint64_t key = (static_cast<uint64_t>(std::bit_cast<uint32_t>(d)) << 32) | node;
        items_.push_back(key);
        size_t i = items_.size() - 1;
        while (i > 0) {
            size_t parent = (i - 1) / 4;
            if (items_[parent] <= items_[i]) break;
            std::swap(items_[parent], items_[i]);
            i = parent;
        }
    }

    std::pair<float, uint32_t> pop() {
        uint64_t top = items_.front();
        uint64_t last = items_.back();
        items_.pop_back();
        if (!items_.empty()) {
            size_t i = 0;
            const size_t n = items_.size();
            for (;;) {
                size_t child = 4 * i + 1;
                if (child >= n) break;
                size_t best = child;
                size_t end = std::min(child + 4, n);
                for (size_t c = child + 1; c < end; ++c)
                    if (items_[c] < items_[best]) best = c;
                if (last <= items_[best]) break;
                items_[i] = items_[best];
                i = best;
            }
            items_[i] = last;
        }
        return {std::bit_cast<float>(static_cast<uint32_t>(top >> 32)),
                static_cast<uint32_t>(top & 0xffffffffu)};
    }

  private:
    std::vector<uint64_t> items_;
};

}  // namespace detail

// Scratch buffers reused across single-source runs.
struct DijkstraScratch {
    std::vector<float> dist;
    std::vector<int> pred;
    detail::DijkstraHeap heap;
};

// Plain Dijkstra; disconnected nodes keep an infinite distance.
// `cutoff` bounds the search radius, `preds` optionally records the tree.
template <int N>
inline void single_source_into(const SteinerGraph<N>& g, int src, DijkstraScratch& scratch,
                               float cutoff = kInfDist, bool want_preds = false) {
    if (src < 0 || src >= g.node_count()) throw std::invalid_argument("source node out of range");
    scratch.dist.assign(g.node_count(), kInfDist);
    if (want_preds) scratch.pred.assign(g.node_count(), -1);
    scratch.heap.reset();
    scratch.dist[src] = 0.0f;
    scratch.heap.push(0.0f, static_cast<uint32_t>(src));
    const uint32_t* col = g.col.data();
    const float* wgt = g.weight.data();
    while (!scratch.heap.empty()) {
        auto [d, u] = scratch.heap.pop();
        if (d != scratch.dist[u]) continue;
        if (d > cutoff) break;
        const uint32_t lo = g.row_ptr[u], hi = g.row_ptr[u + 1];
        for (uint32_t a = lo; a < hi; ++a) {
            uint32_t v = col[a];
            float nd = d + wgt[a];
            if (nd < scratch.dist[v]) {
                scratch.dist[v] = nd;
                if (want_preds) scratch.pred[v] = static_cast<int>(u);
                scratch.heap.push(nd, v);
            }
        }
    }
}

template <int N>
inline std::vector<float> single_source(const SteinerGraph<N>& g, int src, float cutoff = kInfDist,
                                        std::vector<int>* preds = nullptr) {
    DijkstraScratch scratch;
    single_source_into(g, src, scratch, cutoff, preds != nullptr);
    if (preds) *preds = scratch.pred;
    return std::move(scratch.dist);
}

}  // namespace distlab
