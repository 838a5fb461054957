#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "distlab/quasirandom.hpp"
#include "distlab/surfaces.hpp"
#include "distlab/vec.hpp"

namespace distlab {

template <typename T = double>
inline constexpr T kInf() {
    return std::numeric_limits<T>::infinity();
}

template <int N>
struct GeodesicResult {
    double distance = 0.0;
    std::vector<Vec<N>> path;  // polyline whose length matches distance
    bool exact = false;
};

namespace detail {

// Densifies a smooth curve until the chord sum matches the target length.
template <int N>
inline std::vector<Vec<N>> sample_to_length(const std::function<Vec<N>(double)>& curve,
                                            double target, double tol) {
    int n = 16;
    std::vector<Vec<N>> pts;
    for (int round = 0; round < 18; ++round) {
        pts.clear();
        pts.reserve(n + 1);
        for (int i = 0; i <= n; ++i) pts.push_back(curve(static_cast<double>(i) / n));
        double len = 0.0;
        for (int i = 0; i < n; ++i) len += dist(pts[i], pts[i + 1]);
        if (std::fabs(len - target) <= tol) return pts;
        n *= 2;
    }
    return pts;
}

// Golden-section minimization on [lo, hi] for a unimodal-on-bracket function.
inline double golden_min(const std::function<double(double)>& f, double lo, double hi,
                         double tol, double* arg = nullptr) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    double x = 0.5 * (a + b);
    if (arg) *arg = x;
    return f(x);
}

// Periodic 1-D minimization: 64 bracket seeds over one period, then
// golden-section refinement around every local basin found.
inline double periodic_min(const std::function<double(double)>& f, double period, double tol,
                           double* arg = nullptr, int seeds = 64) {
    std::vector<double> val(seeds);
    double step = period / seeds;
    for (int i = 0; i < seeds; ++i) val[i] = f(i * step);
    double best = kInf<double>();
    double best_arg = 0.0;
    for (int i = 0; i < seeds; ++i) {
        double prev = val[(i + seeds - 1) % seeds], next = val[(i + 1) % seeds];
        if (val[i] <= prev && val[i] <= next) {
            double x = 0.0;
            double v = golden_min(f, (i - 1) * step, (i + 1) * step, tol, &x);
            if (v < best) {
                best = v;
                best_arg = x;
            }
        }
    }
    if (arg) *arg = best_arg;
    return best;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cone geodesics via the isometric unrolling of the lateral sheet onto a
// planar sector of angle 2*pi*r. Slant distance from the apex is the polar
// radius; angular positions shrink by the factor r.

namespace cone_detail {

inline Vec3 lateral_point(double r, double s, double theta) {
    const double height = std::sqrt(1.0 - r * r);
    return {s * r * std::cos(theta), s * r * std::sin(theta), s * height};
}

// chord in the unrolled sector between (s1, 0) and (s2, phi)
inline double unrolled_chord(double s1, double s2, double phi) {
    return std::sqrt(std::max(0.0, s1 * s1 + s2 * s2 - 2.0 * s1 * s2 * std::cos(phi)));
}

}  // namespace cone_detail

inline GeodesicResult<3> cone_lateral_distance(double r, double s1, double theta1, double s2,
                                               double theta2) {
    check_cone_param(r);
    if (!(s1 > 0.0 && s1 <= 1.0 && s2 > 0.0 && s2 <= 1.0))
        throw std::invalid_argument("slant distances must lie in (0, 1]");

    GeodesicResult<3> out;
    out.exact = true;
    const double dtheta = std::fabs(std::remainder(theta1 - theta2, 2.0 * kPi));
    const double phi = dtheta * r;  // separation angle after unrolling

    if (phi <= kPi) {
        out.distance = cone_detail::unrolled_chord(s1, s2, phi);
        // walk the unrolled segment and roll it back onto the cone
        const double sgn = std::remainder(theta2 - theta1, 2.0 * kPi) >= 0.0 ? 1.0 : -1.0;
        auto curve = [&](double t) {
            double x = s1 + t * (s2 * std::cos(phi) - s1);
            double y = t * s2 * std::sin(phi);
            double rho = std::hypot(x, y);
            double psi = (rho > 0.0) ? std::atan2(y, x) : 0.0;
            return cone_detail::lateral_point(r, rho, theta1 + sgn * psi / r);
        };
        out.path = detail::sample_to_length<3>(curve, out.distance,
                                               1e-9 * std::max(1.0, out.distance) * 0.5);
    } else {
        // only reachable for separations beyond the unrolled half-plane,
        // which a sector of angle 2*pi*r < 2*pi never produces with the
        // wrapped separation; kept for the apex path class
        out.distance = s1 + s2;
        out.path = {cone_detail::lateral_point(r, s1, theta1), Vec3{0.0, 0.0, 0.0},
                    cone_detail::lateral_point(r, s2, theta2)};
    }
    return out;
}

// Geodesic on the full closed cone S(r): minimum over the lateral-only,
// disc-only, one-rim-crossing and two-rim-crossing path classes.
inline GeodesicResult<3> cone_surface_distance(double r, const Vec3& pa, const Vec3& pb) {
    check_cone_param(r);
    const double height = std::sqrt(1.0 - r * r);
    const double tol_on = 1e-9;

    struct SurfPoint {
        bool on_disc;
        double s, theta;  // lateral coordinates (slant, angle)
        Vec3 xyz;
    };
    auto classify = [&](const Vec3& p) {
        double rho = std::hypot(p[0], p[1]);
        double t = std::clamp(rho * r + p[2] * height, 0.0, 1.0);
        double d_lat = std::hypot(rho - t * r, p[2] - t * height);
        double d_disc = std::hypot(std::max(0.0, rho - r), p[2] - height);
        if (d_lat > tol_on && d_disc > tol_on)
            throw std::invalid_argument("point is not on the cone surface");
        SurfPoint sp;
        sp.on_disc = d_disc <= d_lat;
        sp.s = t;
        sp.theta = std::atan2(p[1], p[0]);
        sp.xyz = p;
        return sp;
    };
    const SurfPoint A = classify(pa), B = classify(pb);

    // lateral leg to a rim point at angle phi, measured in the unrolled sector
    auto lat_to_rim = [&](const SurfPoint& sp, double phi) {
        double psi = std::fabs(std::remainder(phi - sp.theta, 2.0 * kPi)) * r;
        return cone_detail::unrolled_chord(sp.s, 1.0, psi);
    };
    auto rim_point = [&](double phi) { return Vec3{r * std::cos(phi), r * std::sin(phi), height}; };
    auto in_disc = [&](const Vec3& u, const Vec3& v) { return std::hypot(u[0] - v[0], u[1] - v[1]); };

    const double mintol = 1e-10;
    GeodesicResult<3> out;
    out.exact = true;
    double best = kInf<double>();
    enum class Kind { LatOnly, DiscOnly, OneCross, TwoCross } kind = Kind::LatOnly;
    double cross1 = 0.0, cross2 = 0.0;

    if (!A.on_disc && !B.on_disc) {
        best = cone_lateral_distance(r, A.s, A.theta, B.s, B.theta).distance;
        kind = Kind::LatOnly;
        auto two_cross = [&](double p1, double p2) {
            return lat_to_rim(A, p1) + in_disc(rim_point(p1), rim_point(p2)) + lat_to_rim(B, p2);
        };
        // coarse periodic grid, then coordinate descent with golden steps
        int seeds = 64;
        double g1 = 0.0, g2 = 0.0, gv = kInf<double>();
        for (int i = 0; i < seeds; ++i)
            for (int j = 0; j < seeds; ++j) {
                double v = two_cross(2.0 * kPi * i / seeds, 2.0 * kPi * j / seeds);
                if (v < gv) {
                    gv = v;
                    g1 = 2.0 * kPi * i / seeds;
                    g2 = 2.0 * kPi * j / seeds;
                }
            }
        double span = 2.0 * kPi / seeds;
        for (int it = 0; it < 64; ++it) {
            double prev = gv;
            gv = detail::golden_min([&](double x) { return two_cross(x, g2); }, g1 - span, g1 + span,
                                    mintol, &g1);
            gv = detail::golden_min([&](double x) { return two_cross(g1, x); }, g2 - span, g2 + span,
                                    mintol, &g2);
            if (prev - gv < 1e-13) break;
        }
        if (gv < best) {
            best = gv;
            kind = Kind::TwoCross;
            cross1 = g1;
            cross2 = g2;
        }
    } else if (A.on_disc && B.on_disc) {
        best = dist(pa, pb);  // the disc is flat and convex
        kind = Kind::DiscOnly;
    } else {
        const SurfPoint& lat = A.on_disc ? B : A;
        const SurfPoint& dsc = A.on_disc ? A : B;
        auto one_cross = [&](double phi) { return lat_to_rim(lat, phi) + in_disc(rim_point(phi), dsc.xyz); };
        best = detail::periodic_min(one_cross, 2.0 * kPi, mintol, &cross1);
        kind = Kind::OneCross;
    }
    out.distance = best;

    // assemble the witness polyline for the winning class
    auto lateral_path = [&](const SurfPoint& from, const SurfPoint& to) {
        return cone_lateral_distance(r, from.s, from.theta, to.s, to.theta).path;
    };
    auto as_surf = [&](const Vec3& p, bool on_disc) {
        SurfPoint sp;
        sp.on_disc = on_disc;
        sp.s = std::clamp(std::hypot(p[0], p[1]) * r + p[2] * height, 0.0, 1.0);
        sp.theta = std::atan2(p[1], p[0]);
        sp.xyz = p;
        return sp;
    };
    switch (kind) {
        case Kind::LatOnly:
            out.path = lateral_path(A, B);
            break;
        case Kind::DiscOnly:
            out.path = {pa, pb};
            break;
        case Kind::OneCross: {
            const SurfPoint& lat = A.on_disc ? B : A;
            Vec3 c = rim_point(cross1);
            auto leg = lateral_path(lat, as_surf(c, false));
            if (A.on_disc) {
                out.path = {pa, c};
                out.path.insert(out.path.end(), leg.rbegin() + 1, leg.rend());
            } else {
                out.path = std::move(leg);
                out.path.push_back(pb);
            }
            break;
        }
        case Kind::TwoCross: {
            Vec3 c1 = rim_point(cross1), c2 = rim_point(cross2);
            out.path = lateral_path(A, as_surf(c1, false));
            out.path.push_back(c2);
            auto leg = lateral_path(as_surf(c2, false), B);
            out.path.insert(out.path.end(), leg.begin() + 1, leg.end());
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

inline GeodesicResult<3> sphere_distance(double radius, const Vec3& p, const Vec3& q) {
    if (!(radius > 0.0)) throw std::invalid_argument("sphere radius must be positive");
    const double tol = 1e-9 * std::max(1.0, radius);
    if (std::fabs(norm(p) - radius) > tol || std::fabs(norm(q) - radius) > tol)
        throw std::invalid_argument("points are not on the sphere");

    GeodesicResult<3> out;
    out.exact = true;
    const double angle = std::acos(std::clamp(dot(p, q) / (radius * radius), -1.0, 1.0));
    out.distance = radius * angle;
    if (angle < 1e-15) {
        out.path = {p, q};
        return out;
    }
    // slerp along the great circle; for antipodal points pick any orthogonal mate
    Vec3 axis = p;
    Vec3 ortho = q - (dot(p, q) / (radius * radius)) * p;
    if (norm(ortho) < 1e-12 * radius) {
        int imin = 0;
        for (int i = 1; i < 3; ++i)
            if (std::fabs(p[i]) < std::fabs(p[imin])) imin = i;
        Vec3 e{};
        e[imin] = 1.0;
        ortho = e - (dot(p, e) / (radius * radius)) * p;
    }
    ortho = normalized(ortho) * radius;
    auto curve = [&](double t) {
        double a = t * angle;
        return std::cos(a) * axis + std::sin(a) * ortho;
    };
    out.path = detail::sample_to_length<3>(curve, out.distance, 1e-9 * std::max(1.0, out.distance) * 0.5);
    return out;
}

// ---------------------------------------------------------------------------
// Union of two rays meeting at angle alpha: the worst intrinsic/Euclidean
// ratio sits at equal distances t from the vertex, where the isoceles law of
// cosines gives |p-q| = 2 t sin(alpha/2).

inline double two_ray_distortion(double alpha) {
    if (!(alpha > 0.0 && alpha <= kPi)) throw std::invalid_argument("alpha must lie in (0, pi]");
    return 1.0 / std::sin(alpha / 2.0);
}

// Monte-style confirmation with a low-discrepancy sweep over ray positions.
inline double two_ray_distortion_sampled(double alpha, int samples, unsigned seed = 1) {
    if (!(alpha > 0.0 && alpha <= kPi)) throw std::invalid_argument("alpha must lie in (0, pi]");
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    Halton seq(2, seed);
    double best = 1.0;
    const double c = std::cos(alpha);
    for (int i = 0; i < samples; ++i) {
        auto u = seq.next();
        double t = 1e-3 + (1.0 - 1e-3) * u[0];
        double s = 1e-3 + (1.0 - 1e-3) * u[1];
        double gap2 = t * t + s * s - 2.0 * t * s * c;
        if (gap2 < 1e-24) continue;
        best = std::max(best, (t + s) / std::sqrt(gap2));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Exact geodesic between points on two adjacent facets of the boundary of the
// regular (n+1)-simplex in R^{n+2}, by rotating facet B isometrically about
// the common ridge into the hyperplane of facet A.

struct RidgeUnfoldResult {
    double distance = 0.0;
    std::vector<std::vector<double>> path;  // straight legs through the ridge
    bool exact = true;
};

namespace simplex_detail {

inline double vdot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
inline double vnorm(const std::vector<double>& a) { return std::sqrt(vdot(a, a)); }
inline std::vector<double> vsub(std::vector<double> a, const std::vector<double>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
inline std::vector<double> vadd(std::vector<double> a, const std::vector<double>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline std::vector<double> vscale(std::vector<double> a, double s) {
    for (auto& x : a) x *= s;
    return a;
}

// projection onto the ridge hull {x_a = x_b = 0, sum x = 1}
inline std::vector<double> ridge_project(const std::vector<double>& p, int a, int b) {
    const int d = static_cast<int>(p.size());
    double lambda = -(p[a] + p[b]) / (d - 2);
    std::vector<double> f(d);
    for (int i = 0; i < d; ++i) f[i] = p[i] - lambda;
    f[a] = f[b] = 0.0;
    return f;
}

}  // namespace simplex_detail

inline RidgeUnfoldResult ridge_unfold_distance(int n, const std::vector<double>& pa,
                                               const std::vector<double>& pb) {
    using namespace simplex_detail;
    if (n < 1) throw std::invalid_argument("simplex parameter n must be >= 1");
    const int d = n + 2;
    if (static_cast<int>(pa.size()) != d || static_cast<int>(pb.size()) != d)
        throw std::invalid_argument("points must live in R^(n+2)");
    const double tol = 1e-9;
    auto check_on_boundary = [&](const std::vector<double>& p) {
        double sum = 0.0;
        double minc = kInf<double>();
        for (double x : p) {
            sum += x;
            minc = std::min(minc, x);
        }
        if (std::fabs(sum - 1.0) > tol || minc < -tol)
            throw std::invalid_argument("point is not on the simplex boundary");
    };
    check_on_boundary(pa);
    check_on_boundary(pb);

    auto zero_set = [&](const std::vector<double>& p) {
        std::vector<int> z;
        for (int i = 0; i < d; ++i)
            if (std::fabs(p[i]) <= tol) z.push_back(i);
        if (z.empty()) throw std::invalid_argument("point is not on a facet of the simplex boundary");
        return z;
    };
    const auto za = zero_set(pa), zb = zero_set(pb);

    RidgeUnfoldResult out;
    // shared facet: the boundary piece is convex and flat there
    for (int i : za)
        for (int j : zb)
            if (i == j) {
                out.distance = vnorm(vsub(pb, pa));
                out.path = {pa, pb};
                return out;
            }
    const int a = za.front(), b = zb.front();

    // unfold pb across the ridge {x_a = x_b = 0} into the hyperplane of facet A
    const auto foot = ridge_project(pb, a, b);
    const double drop = vnorm(vsub(pb, foot));
    std::vector<double> centroid(d, 1.0 / (n + 1));
    centroid[a] = 0.0;
    auto u = vsub(centroid, ridge_project(centroid, a, b));
    u = vscale(u, 1.0 / vnorm(u));
    const auto unfolded = vsub(foot, vscale(u, drop));

    // does the straight unfolded segment pierce the ridge inside the simplex?
    const double qb = unfolded[b];
    if (pa[b] - qb > 1e-15) {
        double t = pa[b] / (pa[b] - qb);
        auto crossing = vadd(vscale(vsub(unfolded, pa), t), pa);
        bool inside = true;
        for (int i = 0; i < d; ++i)
            if (crossing[i] < -1e-12) inside = false;
        if (t >= -1e-12 && t <= 1.0 + 1e-12 && inside) {
            out.distance = vnorm(vsub(unfolded, pa));
            crossing[a] = crossing[b] = 0.0;
            out.path = {pa, crossing, pb};
            return out;
        }
    }

    // otherwise bend around the ridge boundary: minimize |pa-x| + |x-pb| over
    // the ridge simplex by projected gradient descent with simplex projection
    auto objective = [&](const std::vector<double>& x) {
        return vnorm(vsub(x, pa)) + vnorm(vsub(x, pb));
    };
    std::vector<int> free_axes;
    for (int i = 0; i < d; ++i)
        if (i != a && i != b) free_axes.push_back(i);
    const int m = static_cast<int>(free_axes.size());
    std::vector<double> w(m, 1.0 / m);
    auto embed = [&](const std::vector<double>& wv) {
        std::vector<double> x(d, 0.0);
        for (int i = 0; i < m; ++i) x[free_axes[i]] = wv[i];
        return x;
    };
    auto project_simplex = [&](std::vector<double> v) {
        std::vector<double> s = v;
        std::sort(s.begin(), s.end(), std::greater<>());
        double cum = 0.0, theta = 0.0;
        int rho = 0;
        for (int i = 0; i < m; ++i) {
            cum += s[i];
            double t = (cum - 1.0) / (i + 1);
            if (s[i] - t > 0.0) {
                rho = i + 1;
                theta = t;
            }
        }
        for (auto& x : v) x = std::max(0.0, x - theta);
        return v;
    };
    double fw = objective(embed(w));
    double step = 1.0;
    for (int it = 0; it < 4000; ++it) {
        auto x = embed(w);
        auto ga = vsub(x, pa), gb2 = vsub(x, pb);
        double na = vnorm(ga), nb = vnorm(gb2);
        if (na < 1e-14 || nb < 1e-14) break;
        std::vector<double> grad(m);
        for (int i = 0; i < m; ++i) grad[i] = ga[free_axes[i]] / na + gb2[free_axes[i]] / nb;
        bool improved = false;
        while (step > 1e-14) {
            std::vector<double> cand(m);
            for (int i = 0; i < m; ++i) cand[i] = w[i] - step * grad[i];
            cand = project_simplex(cand);
            double fc = objective(embed(cand));
            if (fc < fw - 1e-16) {
                w = cand;
                fw = fc;
                improved = true;
                step *= 1.3;
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
    auto best = embed(w);
    out.distance = fw;
    out.path = {pa, best, pb};
    return out;
}

}  // namespace distlab
