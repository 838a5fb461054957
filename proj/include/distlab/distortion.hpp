#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "distlab/parallel.hpp"
#include "distlab/refine.hpp"
#include "distlab/steiner.hpp"
#include "distlab/trimesh.hpp"

namespace distlab {

template <int N>
struct DistortionEstimate {
    double value = 1.0;
    Vec<N> witness_p{}, witness_q{};
    double intrinsic = 0.0;
    double euclidean = 0.0;
    double h_max = 0.0;  // longest edge of the input mesh
    // (local mesh scale near the witnesses, estimate) per refinement round
    std::vector<std::pair<double, double>> refinement_history;
};

namespace detail {

struct SourceBest {
    double ratio2 = 0.0;  // squared ratio, cross-multiplied comparisons
    int tgt = -1;
};

// Best graph-to-Euclidean ratio from one settled source against all mesh
// vertices, excluding spatially near pairs.
template <int N>
inline SourceBest best_from_source(const SteinerGraph<N>& g, int src, const std::vector<float>& d,
                                   double cut2, bool check_connected) {
    SourceBest best;
    const int nv = g.mesh_vertices;
    const Vec<N> p = g.points[src];
    for (int t = 0; t < nv; ++t) {
        if (t == src) continue;
        double e2 = norm2(g.points[t] - p);
        if (e2 < cut2) continue;
        double dd = d[t];
        if (check_connected && !(dd < kInfDist))
            throw std::runtime_error("mesh graph is disconnected");
        double r2 = dd * dd / e2;
        if (r2 > best.ratio2) {
            best.ratio2 = r2;
            best.tgt = t;
        }
    }
    return best;
}

}  // namespace detail

// Distortion of the mesh as a set: sup over vertex pairs of graph distance
// over Euclidean distance, followed by witness-local refinement rounds
// (2-ring subdivision plus doubled edge sampling) that re-examine the top
// candidate sources on the finer graph.
template <int N>
inline DistortionEstimate<N> estimate_distortion(const TriMesh<N>& mesh, int k, int budget,
                                                 int workers = 0) {
    if (k < 0) throw std::invalid_argument("steiner k must be >= 0");
    if (budget < 0) throw std::invalid_argument("refinement budget must be >= 0");
    const MeshQuality quality = validate_mesh(mesh);
    const double cut = 1e-6 * mesh.diameter_hint();
    const double cut2 = cut * cut;
    if (workers <= 0) workers = worker_count();

    SteinerGraph<N> graph = build_steiner_graph(mesh, k);
    const int nv = graph.mesh_vertices;

    std::vector<detail::SourceBest> per_source(nv);
    {
        std::vector<DijkstraScratch> scratch(workers);
        parallel_for(
            nv,
            [&](int w, int src) {
                single_source_into(graph, src, scratch[w]);
                per_source[src] = detail::best_from_source(graph, src, scratch[w].dist, cut2, true);
            },
            workers);
    }

    int wp = 0;
    for (int i = 1; i < nv; ++i)
        if (per_source[i].ratio2 > per_source[wp].ratio2) wp = i;
    int wq = per_source[wp].tgt;
    double value = std::sqrt(per_source[wp].ratio2);

    DistortionEstimate<N> est;
    est.h_max = quality.h_max;
    est.refinement_history.emplace_back(quality.h_max, value);

    // the strongest sources get a second look on the refined graph
    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return per_source[a].ratio2 != per_source[b].ratio2 ? per_source[a].ratio2 > per_source[b].ratio2
                                                            : a < b;
    });
    std::vector<int> candidates(order.begin(), order.begin() + std::min(nv, 16));

    TriMesh<N> current = mesh;
    int kk = k;
    for (int round = 0; round < budget; ++round) {
        auto marked = triangles_near(current, {wp, wq}, 2);
        current = refine_triangles(current, marked);
        kk = kk == 0 ? 1 : 2 * kk;
        graph = build_steiner_graph(current, kk);

        std::vector<int> sources = candidates;
        sources.push_back(wp);
        sources.push_back(wq);
        std::sort(sources.begin(), sources.end());
        sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

        std::vector<detail::SourceBest> round_best(sources.size());
        std::vector<DijkstraScratch> scratch(workers);
        parallel_for(
            static_cast<int>(sources.size()),
            [&](int w, int si) {
                single_source_into(graph, sources[si], scratch[w]);
                round_best[si] =
                    detail::best_from_source(graph, sources[si], scratch[w].dist, cut2, false);
            },
            workers);
        int bi = 0;
        for (size_t i = 1; i < round_best.size(); ++i)
            if (round_best[i].ratio2 > round_best[bi].ratio2) bi = static_cast<int>(i);
        wp = sources[bi];
        wq = round_best[bi].tgt;
        value = std::sqrt(round_best[bi].ratio2);
        est.refinement_history.emplace_back(local_h_max(current, {wp, wq}, 2), value);
    }

    est.witness_p = graph.points[wp];
    est.witness_q = graph.points[wq];
    std::vector<float> d = single_source(graph, wp);
    est.intrinsic = d[wq];
    est.euclidean = dist(est.witness_p, est.witness_q);
    est.value = est.intrinsic / est.euclidean;
    return est;
}

}  // namespace distlab
