#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace distlab {

// Point/vector in R^N. N is 3 for the classic surfaces, 4 for the
// boundary of the 3-simplex.
template <int N>
struct Vec {
    std::array<double, N> c{};

    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < N; ++i) c[i] += o.c[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < N; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < N; ++i) c[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
    friend Vec operator/(Vec a, double s) { return a *= (1.0 / s); }
    friend Vec operator-(Vec a) { return a *= -1.0; }

    friend bool operator==(const Vec& a, const Vec& b) { return a.c == b.c; }
};

using Vec3 = Vec<3>;
using Vec4 = Vec<4>;

template <int N>
inline double dot(const Vec<N>& a, const Vec<N>& b) {
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += a.c[i] * b.c[i];
    return s;
}

template <int N>
inline double norm2(const Vec<N>& a) {
    return dot(a, a);
}

template <int N>
inline double norm(const Vec<N>& a) {
    return std::sqrt(norm2(a));
}

template <int N>
inline double dist(const Vec<N>& a, const Vec<N>& b) {
    return norm(a - b);
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <int N>
inline Vec<N> normalized(const Vec<N>& a) {
    return a / norm(a);
}

// Area of the triangle spanned by three points, valid in any dimension.
template <int N>
inline double triangle_area(const Vec<N>& p0, const Vec<N>& p1, const Vec<N>& p2) {
    Vec<N> u = p1 - p0, v = p2 - p0;
    double uu = norm2(u), vv = norm2(v), uv = dot(u, v);
    double g = uu * vv - uv * uv;
    return g > 0.0 ? 0.5 * std::sqrt(g) : 0.0;
}

}  // namespace distlab
