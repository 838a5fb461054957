#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "distlab/surfaces.hpp"
#include "distlab/trimesh.hpp"

namespace distlab {

struct Ball {
    Vec3 center{};
    double radius = 0.0;
};

struct EccentricityResult {
    double circumradius = 0.0;
    double inradius = 0.0;
    double ratio = 1.0;
    Vec3 circumcenter{};
    Vec3 incenter{};
};

namespace meb_detail {

// circumball of 1..4 points; radius -1 flags an empty or degenerate support
inline Ball ball_of_support(const std::vector<Vec3>& s) {
    Ball b;
    if (s.empty()) {
        b.radius = -1.0;
        return b;
    }
    if (s.size() == 1) {
        b.center = s[0];
        return b;
    }
    if (s.size() == 2) {
        b.center = 0.5 * (s[0] + s[1]);
        b.radius = dist(s[0], s[1]) / 2.0;
        return b;
    }
    if (s.size() == 3) {
        Vec3 u = s[1] - s[0], v = s[2] - s[0];
        double uu = norm2(u), vv = norm2(v), uv = dot(u, v);
        double det = 2.0 * (uu * vv - uv * uv);
        if (std::fabs(det) < 1e-30) {
            b.radius = -1.0;
            return b;
        }
        double alpha = vv * (uu - uv) / det, beta = uu * (vv - uv) / det;
        b.center = s[0] + alpha * u + beta * v;
        b.radius = dist(b.center, s[0]);
        return b;
    }
    double m[3][3], rhs[3];
    for (int i = 0; i < 3; ++i) {
        Vec3 d = s[i + 1] - s[0];
        for (int j = 0; j < 3; ++j) m[i][j] = 2.0 * d[j];
        rhs[i] = norm2(s[i + 1]) - norm2(s[0]);
    }
    Ball out;
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        std::swap(rhs[col], rhs[piv]);
        if (std::fabs(m[col][col]) < 1e-30) {
            out.radius = -1.0;
            return out;
        }
        for (int r = col + 1; r < 3; ++r) {
            double f = m[r][col] / m[col][col];
            for (int j = col; j < 3; ++j) m[r][j] -= f * m[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    for (int r = 2; r >= 0; --r) {
        double v = rhs[r];
        for (int j = r + 1; j < 3; ++j) v -= m[r][j] * out.center[j];
        out.center[r] = v / m[r][r];
    }
    out.radius = dist(out.center, s[0]);
    return out;
}

inline bool contains(const Ball& b, const Vec3& p, double slack) {
    return b.radius >= 0.0 && dist(b.center, p) <= b.radius + slack;
}

inline Ball welzl(std::vector<Vec3>& pts, size_t n, std::vector<Vec3>& support, double slack) {
    if (n == 0 || support.size() == 4) return ball_of_support(support);
    Vec3 p = pts[n - 1];
    Ball b = welzl(pts, n - 1, support, slack);
    if (contains(b, p, slack)) return b;
    support.push_back(p);
    b = welzl(pts, n - 1, support, slack);
    support.pop_back();
    std::rotate(pts.begin(), pts.begin() + (n - 1), pts.begin() + n);  // move-to-front
    return b;
}

}  // namespace meb_detail

// Exact minimal enclosing ball (Welzl, support sets of at most 4 points).
// The shuffle seed is fixed, so the run is reproducible.
inline Ball minimal_enclosing_ball(std::vector<Vec3> points) {
    if (points.empty()) throw std::invalid_argument("minimal_enclosing_ball needs points");
    double scale = 0.0;
    for (const auto& p : points) scale = std::max(scale, norm(p));
    const double slack = 1e-12 * std::max(1.0, scale);
    std::mt19937 rng(0x9e3779b9u);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Vec3> support;
    return meb_detail::welzl(points, points.size(), support, slack);
}

// ---------------------------------------------------------------------------
// Chebyshev center of the facet half-space intersection: maximize rho with
// a_i . x + rho <= b_i over unit facet normals a_i. Solved by a dense
// revised simplex on the dual (4 equality rows, one column per facet), so
// the working set stays 4 x m.

struct HalfSpace {
    Vec3 normal{};  // unit outward normal
    double offset = 0.0;
};

namespace cheb_detail {

inline bool solve4(double m[4][4], double rhs[4], double out[4]) {
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        for (int j = 0; j < 4; ++j) std::swap(m[col][j], m[piv][j]);
        std::swap(rhs[col], rhs[piv]);
        if (std::fabs(m[col][col]) < 1e-14) return false;
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            double f = m[r][col] / m[col][col];
            for (int j = col; j < 4; ++j) m[r][j] -= f * m[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    for (int i = 0; i < 4; ++i) out[i] = rhs[i] / m[i][i];
    return true;
}

}  // namespace cheb_detail

struct InscribedBall {
    Vec3 center{};
    double radius = 0.0;
    std::array<int, 4> active{};  // facet indices tight at the optimum
};

inline InscribedBall chebyshev_center(const std::vector<HalfSpace>& facets) {
    using cheb_detail::solve4;
    const int m = static_cast<int>(facets.size());
    if (m < 4) throw std::invalid_argument("chebyshev_center needs at least 4 half-spaces");
    const int art0 = m;
    std::array<int, 4> basis = {art0, art0 + 1, art0 + 2, art0 + 3};

    auto column = [&](int j, double out[4]) {
        if (j < m) {
            for (int i = 0; i < 3; ++i) out[i] = facets[j].normal[i];
            out[3] = 1.0;
        } else {
            for (int i = 0; i < 4; ++i) out[i] = 0.0;
            out[j - art0] = 1.0;
        }
    };

    for (int phase = 1; phase <= 2; ++phase) {
        auto cost_of = [&](int j) {
            if (phase == 1) return j >= art0 ? 1.0 : 0.0;
            return j >= art0 ? 0.0 : facets[j].offset;
        };
        bool done = false;
        for (int iter = 0; iter < 50000 && !done; ++iter) {
            double B[4][4];
            for (int i = 0; i < 4; ++i) {
                double colv[4];
                column(basis[i], colv);
                for (int r = 0; r < 4; ++r) B[r][i] = colv[r];
            }
            double xb[4];
            {
                double Bc[4][4], rc[4] = {0.0, 0.0, 0.0, 1.0};
                std::copy(&B[0][0], &B[0][0] + 16, &Bc[0][0]);
                if (!solve4(Bc, rc, xb)) throw std::runtime_error("chebyshev LP: singular basis");
            }
            double pi[4];
            {
                double BT[4][4], cb[4];
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) BT[i][j] = B[j][i];
                for (int i = 0; i < 4; ++i) cb[i] = cost_of(basis[i]);
                if (!solve4(BT, cb, pi)) throw std::runtime_error("chebyshev LP: singular basis");
            }

            int entering = -1;
            const int limit = phase == 1 ? m + 4 : m;
            for (int j = 0; j < limit; ++j) {
                if (j == basis[0] || j == basis[1] || j == basis[2] || j == basis[3]) continue;
                double colv[4];
                column(j, colv);
                double rc = cost_of(j) -
                            (pi[0] * colv[0] + pi[1] * colv[1] + pi[2] * colv[2] + pi[3] * colv[3]);
                if (rc < -1e-11) {
                    entering = j;  // Bland's rule: first improving index
                    break;
                }
            }
            if (entering < 0) {
                done = true;
                break;
            }

            double dir[4];
            {
                double Bc[4][4], colv[4];
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) Bc[i][j] = B[i][j];
                column(entering, colv);
                if (!solve4(Bc, colv, dir)) throw std::runtime_error("chebyshev LP: singular basis");
            }
            int leaving = -1;
            double best_ratio = 0.0;
            for (int i = 0; i < 4; ++i) {
                if (dir[i] > 1e-12) {
                    double ratio = std::max(0.0, xb[i]) / dir[i];
                    bool better = leaving < 0 || ratio < best_ratio - 1e-15 ||
                                  (ratio <= best_ratio + 1e-15 && basis[i] < basis[leaving]);
                    if (better) {
                        leaving = i;
                        best_ratio = ratio;
                    }
                }
            }
            if (leaving < 0) throw std::runtime_error("chebyshev LP: dual unbounded");
            basis[leaving] = entering;
        }
        if (phase == 1) {
            double B[4][4], xb[4];
            for (int i = 0; i < 4; ++i) {
                double colv[4];
                column(basis[i], colv);
                for (int r = 0; r < 4; ++r) B[r][i] = colv[r];
            }
            double rc[4] = {0.0, 0.0, 0.0, 1.0};
            if (!solve4(B, rc, xb)) throw std::runtime_error("chebyshev LP: singular basis");
            for (int i = 0; i < 4; ++i)
                if (basis[i] >= art0 && std::fabs(xb[i]) > 1e-9)
                    throw std::runtime_error("chebyshev LP: infeasible dual");
        }
    }
    for (int b : basis)
        if (b >= art0) throw std::runtime_error("chebyshev LP: artificial stuck in basis");

    // the optimal basis names the four tight primal constraints
    double A[4][4], rhs[4], w[4];
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 3; ++j) A[i][j] = facets[basis[i]].normal[j];
        A[i][3] = 1.0;
        rhs[i] = facets[basis[i]].offset;
    }
    if (!solve4(A, rhs, w)) throw std::runtime_error("chebyshev LP: degenerate active set");
    InscribedBall ball;
    ball.center = {w[0], w[1], w[2]};
    ball.radius = w[3];
    ball.active = basis;
    return ball;
}

// ---------------------------------------------------------------------------

// Outward facet half-spaces of a convex mesh. The mesh triangles themselves
// serve as the hull facets; a global check rejects inputs whose vertices
// poke outside any facet plane beyond tolerance.
inline std::vector<HalfSpace> convex_facets(const TriMesh3& mesh, double rel_tol = 1e-7) {
    double vol6 = 0.0;
    for (const auto& t : mesh.triangles)
        vol6 += dot(mesh.vertices[t[0]], cross(mesh.vertices[t[1]], mesh.vertices[t[2]]));
    const double sign = vol6 >= 0.0 ? 1.0 : -1.0;

    double scale = 0.0;
    for (const auto& v : mesh.vertices) scale = std::max(scale, norm(v));
    const double tol = rel_tol * std::max(1.0, scale);

    std::vector<HalfSpace> facets;
    facets.reserve(mesh.triangles.size());
    for (const auto& t : mesh.triangles) {
        Vec3 n = cross(mesh.vertices[t[1]] - mesh.vertices[t[0]], mesh.vertices[t[2]] - mesh.vertices[t[0]]);
        double len = norm(n);
        if (len < 1e-30) continue;  // area floor already enforced by validate_mesh
        n = n * (sign / len);
        facets.push_back({n, dot(n, mesh.vertices[t[0]])});
    }
    double worst_excess = 0.0;
    for (const auto& f : facets)
        for (const auto& v : mesh.vertices)
            worst_excess = std::max(worst_excess, dot(f.normal, v) - f.offset);
    if (worst_excess > tol)
        throw std::invalid_argument("mesh is not convex within tolerance: vertex excess " +
                                    std::to_string(worst_excess));
    return facets;
}

// Circumradius over inradius of a convex vertex set: minimal enclosing ball
// of the vertices against the Chebyshev ball of the facet half-spaces.
inline EccentricityResult eccentricity(const TriMesh3& mesh, bool convex) {
    if (!convex) throw std::invalid_argument("eccentricity requires the convex flag");
    validate_mesh(mesh);
    Ball outer = minimal_enclosing_ball(mesh.vertices);
    InscribedBall inner = chebyshev_center(convex_facets(mesh));
    if (!(inner.radius > 0.0)) throw std::runtime_error("inscribed ball collapsed");

    EccentricityResult res;
    res.circumradius = outer.radius;
    res.inradius = inner.radius;
    res.ratio = outer.radius / inner.radius;
    res.circumcenter = outer.center;
    res.incenter = inner.center;
    return res;
}

}  // namespace distlab
