#include "hypack/lorentz.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypack {

double lorentz_dot(const Vec4& x, const Vec4& y) {
    return -x.x0 * y.x0 + x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3;
}

double coord_norm(const Vec4& v) {
    return std::sqrt(v.x0 * v.x0 + v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3);
}

PointClass classify(const Vec4& x, double tol) {
    const double n = coord_norm(x);
    if (n == 0.0)
        throw std::invalid_argument("classify: zero vector");
    const double q = lorentz_dot(x, x);
    if (std::abs(q) <= tol * n * n)
        return PointClass::Ideal;
    return q < 0.0 ? PointClass::Proper : PointClass::UltraIdeal;
}

Vec4 normalize_point(const Vec4& v) {
    if (v.x0 == 0.0)
        throw std::domain_error("normalize_point: representative has x0 = 0");
    return v * (1.0 / v.x0);
}

double point_distance(const Vec4& x, const Vec4& y) {
    const double xx = lorentz_dot(x, x);
    const double yy = lorentz_dot(y, y);
    if (xx >= 0.0 || yy >= 0.0)
        throw std::domain_error("point_distance: both points must be proper");
    double c = -lorentz_dot(x, y) / std::sqrt(xx * yy);
    if (c < 1.0) {
        if (c < 1.0 - 1e-9)
            throw std::domain_error("point_distance: acosh argument " + std::to_string(c) +
                                    " below 1");
        c = 1.0; // same point up to roundoff
    }
    return std::acosh(c);
}

Vec4 polar_plane(const Vec4& x) { return x; }

Vec4 perpendicular_foot(const Vec4& a, const Vec4& u) {
    const double uu = lorentz_dot(u, u);
    if (std::abs(uu) <= 1e-14 * coord_norm(u) * coord_norm(u))
        throw std::domain_error("perpendicular_foot: degenerate plane, <u,u> = 0");
    return a - (lorentz_dot(a, u) / uu) * u;
}

double point_plane_distance(const Vec4& x, const Vec4& u) {
    const double xx = lorentz_dot(x, x);
    const double uu = lorentz_dot(u, u);
    if (xx >= 0.0)
        throw std::domain_error("point_plane_distance: point must be proper");
    if (uu <= 0.0)
        throw std::domain_error("point_plane_distance: pole must be spacelike");
    return std::asinh(std::abs(lorentz_dot(x, u)) / std::sqrt(-xx * uu));
}

Mat4 Mat4::identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        r.m[i][i] = 1.0;
    return r;
}

Vec4 Mat4::apply(const Vec4& v) const {
    Vec4 r;
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j)
            s += m[i][j] * v[j];
        r[i] = s;
    }
    return r;
}

Mat4 Mat4::operator*(const Mat4& b) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k)
                s += m[i][k] * b.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Mat4 Mat4::inverse() const {
    // Gauss-Jordan with partial pivoting on the augmented system.
    std::array<std::array<double, 8>, 4> a{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j)
            a[i][j] = m[i][j];
        a[i][4 + i] = 1.0;
    }
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col]))
                piv = r;
        if (std::abs(a[piv][col]) < 1e-300)
            throw std::domain_error("Mat4::inverse: singular matrix");
        std::swap(a[piv], a[col]);
        const double d = a[col][col];
        for (int j = 0; j < 8; ++j)
            a[col][j] /= d;
        for (int r = 0; r < 4; ++r) {
            if (r == col)
                continue;
            const double f = a[r][col];
            if (f == 0.0)
                continue;
            for (int j = 0; j < 8; ++j)
                a[r][j] -= f * a[col][j];
        }
    }
    Mat4 inv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            inv.m[i][j] = a[i][4 + j];
    return inv;
}

double Mat4::det() const {
    std::array<std::array<double, 4>, 4> a = m;
    double d = 1.0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col]))
                piv = r;
        if (a[piv][col] == 0.0)
            return 0.0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            d = -d;
        }
        d *= a[col][col];
        for (int r = col + 1; r < 4; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int j = col; j < 4; ++j)
                a[r][j] -= f * a[col][j];
        }
    }
    return d;
}

double form_violation(const Mat4& m) {
    // columns of M, paired through the form, must reproduce diag(-1,1,1,1)
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Vec4 ci{m.m[0][i], m.m[1][i], m.m[2][i], m.m[3][i]};
            Vec4 cj{m.m[0][j], m.m[1][j], m.m[2][j], m.m[3][j]};
            const double want = (i == j) ? (i == 0 ? -1.0 : 1.0) : 0.0;
            worst = std::max(worst, std::abs(lorentz_dot(ci, cj) - want));
        }
    return worst;
}

bool preserves_form(const Mat4& m, double tol) { return form_violation(m) <= tol; }

Mat4 ideal_to_canonical(const Vec4& v, std::span<const Vec4> frame) {
    if (classify(v) != PointClass::Ideal)
        throw std::domain_error("ideal_to_canonical: center is not ideal");
    if (frame.size() < 4)
        throw std::invalid_argument("ideal_to_canonical: frame needs 4 vectors");

    const double nv = coord_norm(v);

    // Null companion w with <v,w> = -2, built from the first frame vector
    // not orthogonal to v.
    Vec4 w{};
    bool found = false;
    for (const Vec4& f : frame) {
        const double vf = lorentz_dot(v, f);
        if (std::abs(vf) > 1e-10 * nv * coord_norm(f)) {
            Vec4 w0 = f - (lorentz_dot(f, f) / (2.0 * vf)) * v;
            w = w0 * (-2.0 / vf); // <v,w0> = <v,f>
            found = true;
            break;
        }
    }
    if (!found)
        throw std::domain_error("ideal_to_canonical: frame is degenerate (rank)");

    // Two unit spacelike directions orthogonal to the null pair.  The
    // component along span(v,w) is removed with the dual pairing
    // (<v,w> = -2), the rest is ordinary Gram-Schmidt.
    std::array<Vec4, 2> s{};
    int have = 0;
    for (const Vec4& f : frame) {
        Vec4 c = f;
        c = c - (lorentz_dot(c, w) / -2.0) * v;
        c = c - (lorentz_dot(c, v) / -2.0) * w;
        for (int k = 0; k < have; ++k)
            c = c - lorentz_dot(c, s[k]) * s[k];
        const double cc = lorentz_dot(c, c);
        if (cc > 1e-16 * coord_norm(f) * coord_norm(f) && cc > 0.0) {
            s[have] = c * (1.0 / std::sqrt(cc));
            ++have;
            if (have == 2)
                break;
        }
    }
    if (have < 2)
        throw std::domain_error("ideal_to_canonical: frame is degenerate (rank)");

    Mat4 basis; // columns v, w, s1, s2
    for (int i = 0; i < 4; ++i) {
        basis.m[i][0] = v[i];
        basis.m[i][1] = w[i];
        basis.m[i][2] = s[0][i];
        basis.m[i][3] = s[1][i];
    }
    Mat4 target{}; // columns (1,0,0,1), (1,0,0,-1), e1, e2
    target.m[0][0] = 1.0;
    target.m[3][0] = 1.0;
    target.m[0][1] = 1.0;
    target.m[3][1] = -1.0;
    target.m[1][2] = 1.0;
    target.m[2][3] = 1.0;

    return target * basis.inverse();
}

} // namespace hypack
