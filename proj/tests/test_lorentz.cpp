#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <random>

#include "hypack/lorentz.hpp"
#include "hypack/orthoscheme.hpp"
#include "oracles.hpp"

using namespace hypack;

namespace {
const std::array<Vec4, 4> kStdFrame = {Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}, Vec4{0, 0, 1, 0},
                                       Vec4{0, 0, 0, 1}};
}

TEST_CASE("bilinear form") {
    CHECK(lorentz_dot({1, 0, 0, 0}, {1, 0, 0, 0}) == doctest::Approx(-1.0));
    CHECK(lorentz_dot({1, 0, 0, 1}, {1, 0, 0, 1}) == doctest::Approx(0.0));
    CHECK(lorentz_dot({1, 0, 0, 2}, {1, 0, 0, 0.5}) == doctest::Approx(0.0));

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        Vec4 x{u(rng), u(rng), u(rng), u(rng)}, y{u(rng), u(rng), u(rng), u(rng)};
        CHECK(lorentz_dot(x, y) == doctest::Approx(lorentz_dot(y, x)).epsilon(1e-14));
    }
}

TEST_CASE("classify") {
    CHECK(classify({1, 0.5, 0, 0}) == PointClass::Proper);
    CHECK(classify({1, 0, 0, 1}) == PointClass::Ideal);
    CHECK(classify({1, 0, 0, 2}) == PointClass::UltraIdeal);
    CHECK(classify({2, 0, 0, 2 + 1e-12}) == PointClass::Ideal); // inside the dead band
    CHECK_THROWS_AS(classify({0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("point_distance basics") {
    CHECK(point_distance({1, 0, 0, 0}, {1, 0, 0, 0}) == doctest::Approx(0.0).epsilon(1e-12));
    // Klein chord at Euclidean radius 1/2: artanh(1/2)
    CHECK(point_distance({1, 0.5, 0, 0}, {1, 0, 0, 0}) ==
          doctest::Approx(0.5493061443340548).epsilon(1e-12));
    CHECK_THROWS_AS(point_distance({1, 0, 0, 1}, {1, 0, 0, 0}), std::domain_error);
    // opposite time orientation: acosh argument below 1
    CHECK_THROWS_AS(point_distance({1, 0, 0, 0}, {-1, 0, 0, 0}), std::domain_error);
}

TEST_CASE("point_distance vs Klein chord oracle, symmetry, scale invariance") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> sc(0.1, 5.0);
    for (int i = 0; i < 200; ++i) {
        const Vec4 a = oracles::random_proper_point(rng);
        const Vec4 b = oracles::random_proper_point(rng);
        const double d = point_distance(a, b);
        CHECK(d == doctest::Approx(oracles::klein_chord_distance(a, b)).epsilon(1e-10));
        CHECK(d == doctest::Approx(point_distance(b, a)).epsilon(1e-14));
        const double c1 = sc(rng), c2 = sc(rng);
        CHECK(std::abs(point_distance(a * c1, b * c2) - d) < 1e-12);
    }
}

TEST_CASE("triangle inequality") {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        const Vec4 a = oracles::random_proper_point(rng);
        const Vec4 b = oracles::random_proper_point(rng);
        const Vec4 c = oracles::random_proper_point(rng);
        CHECK(point_distance(a, c) <= point_distance(a, b) + point_distance(b, c) + 1e-10);
    }
}

TEST_CASE("polar plane") {
    const Vec4 pole{1, 0, 0, 2};
    const Vec4 u = polar_plane(pole);
    CHECK(lorentz_dot(u, {1, 0, 0, 0.5}) == doctest::Approx(0.0));
    CHECK(lorentz_dot(u, {1, 0, 0, 0}) == doctest::Approx(-1.0));
}

TEST_CASE("perpendicular_foot") {
    const Vec4 u{0, 1, 0, 0}; // plane x1 = 0
    SUBCASE("point already on the plane is fixed") {
        const Vec4 a{1, 0, 0.3, 0.2};
        const Vec4 f = perpendicular_foot(a, u);
        CHECK(coord_norm(f - a) < 1e-14);
    }
    SUBCASE("defining property and minimality") {
        std::mt19937 rng(17);
        for (int i = 0; i < 50; ++i) {
            const Vec4 a = oracles::random_proper_point(rng);
            // random plane guaranteed to meet the model: pole with spacelike
            // dominant part
            Vec4 pole = oracles::random_proper_point(rng, 0.5);
            pole.x0 = 0.3 * pole.x0;
            pole.x1 += 1.0;
            const Vec4 f = perpendicular_foot(a, pole);
            CHECK(std::abs(lorentz_dot(f, pole)) < 1e-12 * coord_norm(f) * coord_norm(pole));
            if (classify(f) != PointClass::Proper)
                continue;
            const double df = point_distance(a, f);
            for (int k = 0; k < 100; ++k) {
                Vec4 p = perpendicular_foot(oracles::random_proper_point(rng), pole);
                if (classify(p) != PointClass::Proper)
                    continue;
                CHECK(df <= point_distance(a, p) + 1e-10);
            }
        }
    }
    SUBCASE("degenerate plane") {
        CHECK_THROWS_AS(perpendicular_foot({1, 0, 0, 0}, {1, 0, 0, 1}), std::domain_error);
    }
}

TEST_CASE("Mat4 inverse and isometry checks") {
    std::mt19937 rng(19);
    for (int i = 0; i < 20; ++i) {
        const Mat4 m = oracles::random_isometry(rng);
        CHECK(form_violation(m) < 1e-12);
        const Mat4 p = m * m.inverse();
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                CHECK(p.m[a][b] == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-11));
    }
}

TEST_CASE("isometry invariance of distance") {
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
        const Mat4 m = oracles::random_isometry(rng);
        const Vec4 a = oracles::random_proper_point(rng);
        const Vec4 b = oracles::random_proper_point(rng);
        CHECK(std::abs(point_distance(m * a, m * b) - point_distance(a, b)) < 1e-11);
    }
}

TEST_CASE("ideal_to_canonical") {
    SUBCASE("canonical center gives the identity") {
        const Mat4 m = ideal_to_canonical({1, 0, 0, 1}, kStdFrame);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                CHECK(m.m[a][b] == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-13));
    }
    SUBCASE("antipodal center") {
        const Vec4 v{1, 0, 0, -1};
        const Mat4 m = ideal_to_canonical(v, kStdFrame);
        const Vec4 img = m * v;
        CHECK(coord_norm(img - Vec4{1, 0, 0, 1}) < 1e-12);
        CHECK(form_violation(m) < 1e-12);
    }
    SUBCASE("random ideal points, exact mapping and determinism") {
        std::mt19937 rng(29);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int i = 0; i < 50; ++i) {
            double x = u(rng), y = u(rng), z = u(rng);
            const double n = std::sqrt(x * x + y * y + z * z);
            if (n < 1e-6)
                continue;
            const Vec4 v{1, x / n, y / n, z / n};
            const Mat4 m1 = ideal_to_canonical(v, kStdFrame);
            const Mat4 m2 = ideal_to_canonical(v, kStdFrame);
            CHECK(coord_norm(m1 * v - Vec4{1, 0, 0, 1}) < 1e-11);
            CHECK(form_violation(m1) < 1e-11);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    CHECK(m1.m[a][b] == m2.m[a][b]);
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(ideal_to_canonical({1, 0, 0, 0}, kStdFrame), std::domain_error);
        const Vec4 v{1, 0, 0, 1};
        const std::array<Vec4, 4> degenerate = {v, v, v, v};
        CHECK_THROWS_AS(ideal_to_canonical(v, degenerate), std::domain_error);
    }
}

TEST_CASE("ideal_to_canonical at a cell vertex preserves the face Gram matrix") {
    const TruncatedOrthoscheme o = build_orthoscheme({3, 6});
    const Mat4 m = ideal_to_canonical(o.verts[kVertA0], o.frame);
    CHECK(coord_norm(m * o.verts[kVertA0] - Vec4{1, 0, 0, 1}) < 1e-11);
    CHECK(form_violation(m) < 1e-11);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(std::abs(lorentz_dot(m * o.faces[i], m * o.faces[j]) - o.mats.B[i][j]) <
                  1e-11);
}
