#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <set>
#include <sstream>

#include "distlab/surfaces.hpp"

using namespace distlab;

namespace {

template <int N>
double signed_volume6(const TriMesh<N>& mesh) {
    double v = 0.0;
    if constexpr (N == 3)
        for (const auto& t : mesh.triangles)
            v += dot(mesh.vertices[t[0]], cross(mesh.vertices[t[1]], mesh.vertices[t[2]]));
    return v;
}

}  // namespace

TEST_CASE("cone mesh closes with sphere topology") {
    auto mesh = mesh_cone(0.5, 64);
    auto q = validate_mesh(mesh);
    CHECK(q.h_max > 0.0);
    CHECK(mesh.expected_genus == 0);
    CHECK(signed_volume6(mesh) > 0.0);
}

TEST_CASE("cone rim and lateral vertices satisfy the defining equations") {
    const double r = 0.169;
    auto mesh = mesh_cone(r, 48);
    const double height = std::sqrt(1.0 - r * r);
    double worst_rim = 0.0, worst_lateral = 0.0;
    const double coeff = r * r / (1.0 - r * r);
    int rim_count = 0;
    for (const auto& v : mesh.vertices) {
        double rho = std::hypot(v[0], v[1]);
        if (std::fabs(v[2] - height) < 1e-15 && std::fabs(rho - r) < 1e-6) {
            worst_rim = std::max(worst_rim, std::fabs(rho - r));
            ++rim_count;
        }
        if (v[2] < height - 1e-12)  // strictly lateral
            worst_lateral = std::max(worst_lateral, std::fabs(rho * rho - coeff * v[2] * v[2]));
    }
    CHECK(rim_count >= 8);
    CHECK(worst_rim < 1e-12);
    CHECK(worst_lateral < 1e-12);
    CHECK(mesh.vertices[0] == Vec3{0.0, 0.0, 0.0});
}

TEST_CASE("cone substitution check at r=0.3") {
    auto mesh = mesh_cone(0.3, 128);
    const double coeff = 0.09 / 0.91;
    const double height = std::sqrt(0.91);
    double worst = 0.0;
    for (const auto& v : mesh.vertices) {
        if (v[2] > height - 1e-12) continue;
        worst = std::max(worst, std::fabs(v[0] * v[0] + v[1] * v[1] - coeff * v[2] * v[2]));
    }
    CHECK(worst < 1e-12);
    CHECK_NOTHROW(validate_mesh(mesh));
}

TEST_CASE("cone rejects bad parameters") {
    CHECK_THROWS_AS(mesh_cone(0.0, 32), std::invalid_argument);
    CHECK_THROWS_AS(mesh_cone(1.0, 32), std::invalid_argument);
    CHECK_THROWS_AS(mesh_cone(0.3, 4), std::invalid_argument);
}

TEST_CASE("icosphere counts and radius") {
    auto mesh = mesh_sphere(1.0, 1);
    CHECK(mesh.vertex_count() == 42);
    CHECK(mesh.triangle_count() == 80);
    CHECK_NOTHROW(validate_mesh(mesh));

    auto fine = mesh_sphere(2.0, 3);
    double worst = 0.0;
    for (const auto& v : fine.vertices) worst = std::max(worst, std::fabs(norm(v) - 2.0));
    CHECK(worst < 1e-12);
    CHECK(signed_volume6(fine) > 0.0);
    CHECK_NOTHROW(validate_mesh(mesh_sphere(1.0, 4)));
    CHECK_THROWS_AS(mesh_sphere(-1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(mesh_sphere(1.0, 0), std::invalid_argument);
}

TEST_CASE("icosphere keeps an antipodal vertex pair on the x axis") {
    auto mesh = mesh_sphere(1.0, 2);
    bool plus = false, minus = false;
    for (const auto& v : mesh.vertices) {
        if (dist(v, Vec3{1, 0, 0}) < 1e-12) plus = true;
        if (dist(v, Vec3{-1, 0, 0}) < 1e-12) minus = true;
    }
    CHECK(plus);
    CHECK(minus);
}

TEST_CASE("ellipsoid scaling") {
    auto unit = mesh_ellipsoid(1.0, 1.0, 1.0, 2);
    auto sphere = mesh_sphere(1.0, 2);
    REQUIRE(unit.vertex_count() == sphere.vertex_count());
    bool identical = true;
    for (int i = 0; i < unit.vertex_count(); ++i)
        identical = identical && std::memcmp(&unit.vertices[i], &sphere.vertices[i], sizeof(Vec3)) == 0;
    CHECK(identical);

    auto prolate = mesh_ellipsoid(5.0, 1.0, 1.0, 2);
    double xmax = 0.0;
    for (const auto& v : prolate.vertices) xmax = std::max(xmax, std::fabs(v[0]));
    CHECK(xmax == Catch::Approx(5.0).margin(1e-12));

    auto e2 = mesh_ellipsoid(2.0, 1.0, 1.0, 4);
    double worst = 0.0;
    for (const auto& v : e2.vertices)
        worst = std::max(worst, std::fabs(v[0] * v[0] / 4.0 + v[1] * v[1] + v[2] * v[2] - 1.0));
    CHECK(worst < 1e-12);
    CHECK_THROWS_AS(mesh_ellipsoid(1.0, 2.0, 1.0, 2), std::invalid_argument);
}

TEST_CASE("torus grid") {
    auto mesh = mesh_torus(0.1, 64, 16);
    CHECK(mesh.expected_genus == 1);
    CHECK_NOTHROW(validate_mesh(mesh));
    CHECK(mesh.param_coords.size() == mesh.vertices.size());
    CHECK(signed_volume6(mesh) > 0.0);

    // the v = +-pi/2 rings project onto the unit circle
    auto ring = mesh_torus(0.3, 32, 16);
    double worst = 0.0;
    int hits = 0;
    for (size_t i = 0; i < ring.vertices.size(); ++i) {
        double v = ring.param_coords[i][1];
        if (std::fabs(std::remainder(v - kPi / 2.0, kPi)) < 1e-12) {
            worst = std::max(worst, std::fabs(std::hypot(ring.vertices[i][0], ring.vertices[i][1]) - 1.0));
            ++hits;
        }
    }
    CHECK(hits == 64);
    CHECK(worst < 1e-12);

    // every vertex sits at distance eps from the unit circle
    auto tube = mesh_torus(0.05, 128, 16);
    double worst_tube = 0.0;
    for (const auto& p : tube.vertices) {
        double ring_gap = std::hypot(std::hypot(p[0], p[1]) - 1.0, p[2]);
        worst_tube = std::max(worst_tube, std::fabs(ring_gap - 0.05));
    }
    CHECK(worst_tube < 1e-12);
    CHECK_THROWS_AS(mesh_torus(0.0, 32, 16), std::invalid_argument);
    CHECK_THROWS_AS(mesh_torus(0.5, 4, 16), std::invalid_argument);
}

TEST_CASE("simplex boundary mesh") {
    auto base = mesh_simplex_boundary(2, 0);
    CHECK(base.vertex_count() == 4);
    CHECK(base.triangle_count() == 4);
    CHECK_NOTHROW(validate_mesh(base));

    auto fine = mesh_simplex_boundary(2, 3);
    CHECK_NOTHROW(validate_mesh(fine));
    double worst_sum = 0.0, worst_neg = 0.0;
    for (const auto& v : fine.vertices) {
        double sum = v[0] + v[1] + v[2] + v[3];
        worst_sum = std::max(worst_sum, std::fabs(sum - 1.0));
        for (int d = 0; d < 4; ++d) worst_neg = std::min(worst_neg, v[d]);
    }
    CHECK(worst_sum < 1e-12);
    CHECK(worst_neg >= 0.0);

    CHECK_THROWS_WITH(mesh_simplex_boundary(3, 1), Catch::Matchers::ContainsSubstring("n = 2 only"));
}

TEST_CASE("validate_mesh flags broken meshes") {
    auto mesh = mesh_sphere(1.0, 1);
    SECTION("boundary edge after deleting a triangle") {
        mesh.triangles.pop_back();
        CHECK_THROWS_WITH(validate_mesh(mesh), Catch::Matchers::ContainsSubstring("boundary"));
    }
    SECTION("euler characteristic mismatch") {
        mesh.expected_genus = 1;
        CHECK_THROWS_WITH(validate_mesh(mesh), Catch::Matchers::ContainsSubstring("Euler"));
    }
    SECTION("degenerate triangle") {
        // collapse one vertex onto a neighbour
        auto t = mesh.triangles[0];
        mesh.vertices[t[1]] = mesh.vertices[t[0]];
        CHECK_THROWS_AS(validate_mesh(mesh), MeshError);
    }
    SECTION("torus accepted with expected genus 1") {
        auto torus = mesh_torus(0.2, 16, 8);
        CHECK_NOTHROW(validate_mesh(torus));
    }
}

TEST_CASE("generators are deterministic") {
    auto a = mesh_cone(0.25, 40);
    auto b = mesh_cone(0.25, 40);
    REQUIRE(a.vertex_count() == b.vertex_count());
    CHECK(std::memcmp(a.vertices.data(), b.vertices.data(), a.vertices.size() * sizeof(Vec3)) == 0);

    auto t1 = mesh_torus(0.15, 32, 12);
    auto t2 = mesh_torus(0.15, 32, 12);
    CHECK(std::memcmp(t1.vertices.data(), t2.vertices.data(), t1.vertices.size() * sizeof(Vec3)) == 0);
}

TEST_CASE("resolution doubling shrinks the longest edge") {
    CHECK(validate_mesh(mesh_cone(0.3, 32)).h_max > validate_mesh(mesh_cone(0.3, 64)).h_max);
    CHECK(validate_mesh(mesh_sphere(1.0, 2)).h_max > validate_mesh(mesh_sphere(1.0, 3)).h_max);
    CHECK(validate_mesh(mesh_torus(0.2, 16, 8)).h_max > validate_mesh(mesh_torus(0.2, 32, 16)).h_max);
    CHECK(validate_mesh(mesh_simplex_boundary(2, 1)).h_max >
          validate_mesh(mesh_simplex_boundary(2, 2)).h_max);
}

TEST_CASE("cone_resolution_for reaches the requested edge bound") {
    int res = cone_resolution_for(0.169, 0.05);
    CHECK(validate_mesh(mesh_cone(0.169, res)).h_max <= 0.05);
}

TEST_CASE("off export") {
    auto mesh = mesh_sphere(1.0, 1);
    std::ostringstream os;
    write_off(os, mesh);
    std::istringstream is(os.str());
    std::string header;
    int nv = 0, nf = 0;
    long long ne = 0;
    is >> header >> nv >> nf >> ne;
    CHECK(header == "OFF");
    CHECK(nv == 42);
    CHECK(nf == 80);
    CHECK(ne == 120);

    auto simplex = mesh_simplex_boundary(2, 1);
    std::ostringstream os4;
    write_off(os4, simplex);
    CHECK(os4.str().rfind("nOFF 4", 0) == 0);
}
