#pragma once

#include <cmath>
#include <stdexcept>

#include "distlab/quasirandom.hpp"
#include "distlab/surfaces.hpp"
#include "distlab/vec.hpp"

namespace distlab {

// Radial projection from (1, 0, 0) onto the (y, z)-plane.
inline Vec3 radial_projection(const Vec3& p) {
    if (!(p[0] < 1.0)) throw std::domain_error("radial projection undefined for x >= 1");
    const double f = 1.0 / (1.0 - p[0]);
    return {0.0, p[1] * f, p[2] * f};
}

struct LipschitzReport {
    double r = 0.0;
    double bound = 0.0;         // 1 + 6 pi r
    double observed_max = 0.0;  // largest sampled difference quotient
    long long pairs_used = 0;
    bool pass = false;
};

// Samples difference quotients of the radial projection over the cylinder
// Z = [0, pi r] x B^2(0, r) with a low-discrepancy sequence and checks the
// Lipschitz bound 1 + 6 pi r. Valid for 6 pi r <= 1 only.
inline LipschitzReport lipschitz_check(double r, long long samples, unsigned seed = 1) {
    if (!(r > 0.0)) throw std::invalid_argument("r must be positive");
    if (6.0 * kPi * r > 1.0 + 1e-15)
        throw std::invalid_argument("lipschitz bound requires 6*pi*r <= 1");
    if (samples < 10000) throw std::invalid_argument("at least 1e4 sample pairs required");

    LipschitzReport rep;
    rep.r = r;
    rep.bound = 1.0 + 6.0 * kPi * r;

    Halton seq(6, seed);
    const double xmax = kPi * r;
    auto cyl_point = [&](double u0, double u1, double u2) {
        double rho = r * std::sqrt(u1);
        double ang = 2.0 * kPi * u2;
        return Vec3{u0 * xmax, rho * std::cos(ang), rho * std::sin(ang)};
    };
    for (long long i = 0; i < samples; ++i) {
        auto u = seq.next();
        Vec3 q = cyl_point(u[0], u[1], u[2]);
        Vec3 qp = cyl_point(u[3], u[4], u[5]);
        double gap = dist(q, qp);
        if (gap < 1e-14) continue;  // degenerate pair: nothing to measure
        double stretch = dist(radial_projection(q), radial_projection(qp)) / gap;
        if (stretch > rep.observed_max) rep.observed_max = stretch;
        ++rep.pairs_used;
    }
    rep.pass = rep.observed_max <= rep.bound + 1e-12;
    return rep;
}

}  // namespace distlab
