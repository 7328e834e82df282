#include "hypack/inball.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hypack {

namespace {

// Solve the 4x4 system <c, u_k> = -1 over the chosen faces.  A solution
// that is proper is equidistant from the four planes on their interior
// sides, with sinh(radius) = 1 / sqrt(-<c,c>).
bool equidistant_center(const TruncatedOrthoscheme& o, const std::array<int, 4>& which,
                        Vec4& center, double& radius) {
    Mat4 a;
    for (int row = 0; row < 4; ++row) {
        const Vec4& u = o.faces[which[row]];
        a.m[row][0] = -u.x0;
        a.m[row][1] = u.x1;
        a.m[row][2] = u.x2;
        a.m[row][3] = u.x3;
    }
    if (std::abs(a.det()) < 1e-12)
        return false;
    const Vec4 rhs{-1.0, -1.0, -1.0, -1.0};
    const Vec4 c = a.inverse() * rhs;
    const double cc = lorentz_dot(c, c);
    if (cc >= -1e-14)
        return false;
    center = c;
    radius = std::asinh(1.0 / std::sqrt(-cc));
    return true;
}

} // namespace

bool inball_exists(const SchlafliMatrices& m) {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            sum += m.h.m[i][j];
    return m.det_b * sum > 0.0;
}

bool truncation_preserves_inradius(const TilingParams& params) {
    using std::numbers::pi;
    return std::cos(pi / params.r) >= std::cos(pi / params.q) - 1e-14;
}

double inradius_type1(const SchlafliMatrices& m) {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            sum += m.h.m[i][j];
    if (sum >= 0.0)
        throw std::domain_error("inradius_type1: sum of h entries is not negative");
    return std::asinh(std::sqrt(-1.0 / sum));
}

InballResult incenter_search(const TruncatedOrthoscheme& o) {
    InballResult best;
    best.params = o.params;
    bool have = false;
    std::array<int, 4> best_set{};

    for (int skip = 4; skip >= 0; --skip) {
        std::array<int, 4> which{};
        int k = 0;
        for (int f = 0; f < kFaceCount; ++f)
            if (f != skip)
                which[k++] = f;

        Vec4 c;
        double r;
        if (!equidistant_center(o, which, c, r))
            continue;
        // feasibility against the remaining face
        if (lorentz_dot(c, o.faces[skip]) > 0.0)
            continue;
        const double d5 = point_plane_distance(c, o.faces[skip]);
        if (d5 < r - 1e-9)
            continue;

        const bool better =
            !have || r > best.radius + 1e-10 ||
            (std::abs(r - best.radius) <= 1e-10 && which < best_set);
        if (better) {
            best.center = normalize_point(c);
            best.radius = r;
            best.tangent_faces.assign(which.begin(), which.end());
            if (std::abs(d5 - r) <= 1e-9)
                best.tangent_faces.push_back(skip);
            std::sort(best.tangent_faces.begin(), best.tangent_faces.end());
            best_set = which;
            have = true;
        }
    }
    if (!have)
        throw std::domain_error("incenter_search: no feasible tangency candidate");
    // classify by the solved tangency set; a grazing fifth face (the (4,4)
    // equality case) does not make the ball truncation-bound
    best.type = std::find(best_set.begin(), best_set.end(), 4) != best_set.end()
                    ? InballType::Type2
                    : InballType::Type1;
    return best;
}

double ball_volume(double r) {
    using std::numbers::pi;
    if (r < 0.0)
        throw std::domain_error("ball_volume: negative radius");
    return pi * (std::sinh(2.0 * r) - 2.0 * r);
}

InballResult inball_density(const TilingParams& params) {
    const TruncatedOrthoscheme o = build_orthoscheme(params);
    if (!inball_exists(o.mats))
        throw std::domain_error("inball_density: cell has no inscribed ball");

    InballResult res = incenter_search(o);
    if (truncation_preserves_inradius(params)) {
        // closed form available; the generic search reproduces it
        res.radius = inradius_type1(o.mats);
        res.type = InballType::Type1;
    }
    res.ball_volume = ball_volume(res.radius);
    res.cell_volume = orthoscheme_volume(params);
    res.density = res.ball_volume / res.cell_volume;
    if (res.density <= 0.0 || res.density > 0.2623649 + 1e-6)
        throw std::domain_error("inball_density: density outside the admissible range");
    return res;
}

} // namespace hypack
