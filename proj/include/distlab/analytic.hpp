#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "distlab/surfaces.hpp"

namespace distlab {

// delta(S(r)): the larger of the apex-crossing ratio sin(pi r / 2) / r and
// the rim-crossing ratio sqrt(2) / sqrt(1 - r). The first branch falls from
// pi/2, the second climbs from sqrt(2); their crossing is the minimiser.
inline double cone_distortion_analytic(double r) {
    check_cone_param(r);
    double through_apex = std::sin(kPi * r / 2.0) / r;
    double through_rim = std::sqrt(2.0) / std::sqrt(1.0 - r);
    return std::max(through_apex, through_rim);
}

// The r below which delta(S(r)) < pi/2, i.e. the solution of
// sqrt(2)/sqrt(1-r) = pi/2.
inline double cone_threshold() { return (kPi * kPi - 8.0) / (kPi * kPi); }

struct RootResult {
    double r0 = 0.0;
    double delta0 = 0.0;
    double bracket_width = 0.0;
};

// Locates the balance point of the two cone ratios by bisection on
// [0.01, 0.5]. The difference is strictly decreasing there, so the bracket
// is certain; the sign check is kept anyway.
inline RootResult find_r0(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    auto g = [](double r) {
        return std::sin(kPi * r / 2.0) / r - std::sqrt(2.0) / std::sqrt(1.0 - r);
    };
    double lo = 0.01, hi = 0.5;
    if (!(g(lo) > 0.0 && g(hi) < 0.0))
        throw std::runtime_error("bisection bracket does not change sign");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    RootResult res;
    res.r0 = 0.5 * (lo + hi);
    res.delta0 = cone_distortion_analytic(res.r0);
    res.bracket_width = hi - lo;
    return res;
}

inline double simplex_distortion_analytic(int n) {
    if (n < 1) throw std::invalid_argument("simplex parameter n must be >= 1");
    return std::sqrt(2.0 + 2.0 / n);
}

// Angle between two adjacent n-facets of the regular (n+1)-simplex.
inline double dihedral_angle(int n) {
    if (n < 1) throw std::invalid_argument("simplex parameter n must be >= 1");
    return std::acos(1.0 / (n + 1));
}

struct SimplexWitnesses {
    std::vector<double> p, q, r;  // facet midpoints and the ridge midpoint, in R^{n+2}
    double d_intrinsic = 0.0;     // 2|p-r|
    double d_euclid = 0.0;        // |p-q|
    double ratio() const { return d_intrinsic / d_euclid; }
};

// The witness triple of the simplex bound: midpoints of the facets x1=0 and
// x2=0 plus the midpoint of their common ridge. Construction is checked
// against the closed forms 1/sqrt(n(n+1)) and sqrt(2)/(n+1).
inline SimplexWitnesses simplex_witnesses(int n) {
    if (n < 1) throw std::invalid_argument("simplex parameter n must be >= 1");
    const int d = n + 2;
    SimplexWitnesses w;
    w.p.assign(d, 1.0 / (n + 1));
    w.p[0] = 0.0;
    w.q.assign(d, 1.0 / (n + 1));
    w.q[1] = 0.0;
    w.q[0] = 1.0 / (n + 1);
    w.q[1] = 0.0;
    w.r.assign(d, 1.0 / n);
    w.r[0] = w.r[1] = 0.0;

    auto distv = [d](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (int i = 0; i < d; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
        return std::sqrt(s);
    };
    const double pr = distv(w.p, w.r);
    w.d_intrinsic = 2.0 * pr;
    w.d_euclid = distv(w.p, w.q);
    if (std::fabs(pr - 1.0 / std::sqrt(static_cast<double>(n) * (n + 1))) > 1e-12)
        throw std::logic_error("witness leg length deviates from 1/sqrt(n(n+1))");
    if (std::fabs(w.d_euclid - std::sqrt(2.0) / (n + 1)) > 1e-12)
        throw std::logic_error("witness separation deviates from sqrt(2)/(n+1)");
    return w;
}

}  // namespace distlab
