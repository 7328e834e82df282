#pragma once

#include <array>
#include <span>

// Linear algebra of the signature-(1,3) bilinear form
//
//   <x,y> = -x0*y0 + x1*y1 + x2*y2 + x3*y3
//
// used by the projective (Beltrami-Cayley-Klein) model of hyperbolic
// 3-space.  Points and plane forms are both stored as 4-vectors of
// projective coordinates; a plane is represented by its pole, so that a
// point x lies on the plane with pole u exactly when <x,u> = 0.

namespace hypack {

struct Vec4 {
    double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

    double operator[](int i) const {
        return i == 0 ? x0 : i == 1 ? x1 : i == 2 ? x2 : x3;
    }
    double& operator[](int i) {
        return i == 0 ? x0 : i == 1 ? x1 : i == 2 ? x2 : x3;
    }

    Vec4 operator+(const Vec4& b) const { return {x0 + b.x0, x1 + b.x1, x2 + b.x2, x3 + b.x3}; }
    Vec4 operator-(const Vec4& b) const { return {x0 - b.x0, x1 - b.x1, x2 - b.x2, x3 - b.x3}; }
    Vec4 operator*(double c) const { return {c * x0, c * x1, c * x2, c * x3}; }
    Vec4 operator-() const { return {-x0, -x1, -x2, -x3}; }
};

inline Vec4 operator*(double c, const Vec4& v) { return v * c; }

// The bilinear form itself.
double lorentz_dot(const Vec4& x, const Vec4& y);

// Euclidean norm of the coordinate vector; used only for tolerances.
double coord_norm(const Vec4& v);

enum class PointClass { Proper, Ideal, UltraIdeal };

// Sign of <x,x> with a relative dead band around zero mapped to Ideal.
PointClass classify(const Vec4& x, double tol = 1e-9);

// Representative with x0 = 1 (throws if x0 vanishes).
Vec4 normalize_point(const Vec4& v);

// Hyperbolic distance between two proper points (curvature -1).
double point_distance(const Vec4& x, const Vec4& y);

// Pole <-> polar duality.  In the pole representation the polar plane of a
// point carries the same coordinates; the returned vector is to be read as
// a plane form.
Vec4 polar_plane(const Vec4& x);

// Foot of the perpendicular dropped from a (point, possibly ideal) onto the
// plane with pole u:  a - (<a,u>/<u,u>) u.
Vec4 perpendicular_foot(const Vec4& a, const Vec4& u);

// Distance from a proper point to a plane whose pole is spacelike:
//   sinh d = |<x,u>| / sqrt(-<x,x> <u,u>).
double point_plane_distance(const Vec4& x, const Vec4& u);

struct Mat4 {
    std::array<std::array<double, 4>, 4> m{};

    static Mat4 identity();

    Vec4 apply(const Vec4& v) const;
    Mat4 operator*(const Mat4& b) const;
    Mat4 inverse() const;
    double det() const;
};

inline Vec4 operator*(const Mat4& m, const Vec4& v) { return m.apply(v); }

// Max-norm residual of M^T J M - J; zero for an exact isometry of the form.
double form_violation(const Mat4& m);

bool preserves_form(const Mat4& m, double tol = 1e-12);

// Isometry taking the given representative of an ideal point exactly to
// (1,0,0,1).  The frame must span R^4; it fixes the remaining rotational
// and parabolic freedom, and the construction is equivariant: transporting
// v and the frame by an isometry transports the result.  Built from a null
// companion plus two spacelike directions, Gram-Schmidt orthogonalized in
// the Lorentzian form.
Mat4 ideal_to_canonical(const Vec4& v, std::span<const Vec4> frame);

} // namespace hypack
