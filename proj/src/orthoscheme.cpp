#include "hypack/orthoscheme.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hypack/lobachevsky.hpp"

namespace hypack {

namespace {

using std::numbers::pi;

TilingParams qr(int q, int r) {
    TilingParams p;
    p.q = q;
    p.r = r;
    return p;
}

const std::array<TilingParams, 8> kAdmissible = {
    qr(3, 3), qr(3, 4), qr(3, 5), qr(3, 6), qr(4, 3), qr(4, 4), qr(5, 3), qr(6, 3),
};

// vertex -> incident faces
constexpr std::array<std::array<int, 4>, 5> kVertexFaces = {{
    {1, 2, 3, -1}, // A0
    {0, 2, 3, -1}, // A1
    {0, 1, 3, 4},  // A2 (lies on the truncating plane as well)
    {1, 2, 4, -1}, // P1
    {0, 2, 4, -1}, // P2
}};
constexpr std::array<int, 5> kVertexFaceCount = {3, 3, 4, 3, 3};

// face -> incident vertices
constexpr std::array<std::array<int, 4>, 5> kFaceVerts = {{
    {kVertA1, kVertA2, kVertP2, -1},       // u0
    {kVertA0, kVertA2, kVertP1, -1},       // u1
    {kVertA0, kVertA1, kVertP1, kVertP2},  // u2
    {kVertA0, kVertA1, kVertA2, -1},       // u3
    {kVertA2, kVertP1, kVertP2, -1},       // u4
}};
constexpr std::array<int, 5> kFaceVertCount = {3, 3, 4, 3, 3};

constexpr std::array<std::array<int, 2>, kEdgeCount> kEdges = {{
    {kVertA0, kVertA1},
    {kVertA0, kVertA2},
    {kVertA0, kVertP1},
    {kVertA1, kVertA2},
    {kVertA1, kVertP2},
    {kVertA2, kVertP1},
    {kVertA2, kVertP2},
    {kVertP1, kVertP2},
}};

constexpr std::array<int, 1> kOppositeA2 = {2};
constexpr std::array<int, 2> kOppositeA0 = {0, 4};

// cyclic neighbor order around the ideal vertices
constexpr std::array<int, 4> kCycleA2 = {kVertA0, kVertA1, kVertP2, kVertP1};
constexpr std::array<int, 3> kCycleA0 = {kVertA1, kVertA2, kVertP1};

// Component mu of the vector dual to the span of b, c, d (Euclidean sense):
// cofactor expansion of det[x; b; c; d] along the first row.
Vec4 cross4(const Vec4& b, const Vec4& c, const Vec4& d) {
    auto minor3 = [&](int skip) {
        double a0[3], a1[3], a2[3];
        int k = 0;
        for (int j = 0; j < 4; ++j) {
            if (j == skip)
                continue;
            a0[k] = b[j];
            a1[k] = c[j];
            a2[k] = d[j];
            ++k;
        }
        return a0[0] * (a1[1] * a2[2] - a1[2] * a2[1]) -
               a0[1] * (a1[0] * a2[2] - a1[2] * a2[0]) +
               a0[2] * (a1[0] * a2[1] - a1[1] * a2[0]);
    };
    return {minor3(0), -minor3(1), minor3(2), -minor3(3)};
}

Vec4 lower_index(const Vec4& v) { return {-v.x0, v.x1, v.x2, v.x3}; }

} // namespace

TilingParams::TilingParams(int q_, int r_) : q(q_), r(r_) {
    if (!admissible(q_, r_))
        throw std::invalid_argument("TilingParams: (" + std::to_string(q_) + "," +
                                    std::to_string(r_) + ") is not an admissible pair");
}

std::span<const TilingParams> admissible_tilings() { return kAdmissible; }

SchlafliMatrices build_matrices(const TilingParams& params) {
    if (!TilingParams::admissible(params.q, params.r))
        throw std::invalid_argument("build_matrices: inadmissible parameters");

    const double cq = std::cos(pi / params.q);
    const double cr = std::cos(pi / params.r);
    const double cp = 1.0; // cos(pi/p) at p = infinity: parallel faces u0, u1

    SchlafliMatrices s;
    s.b = Mat4::identity();
    s.b.m[0][1] = s.b.m[1][0] = -cp;
    s.b.m[1][2] = s.b.m[2][1] = -cq;
    s.b.m[2][3] = s.b.m[3][2] = -cr;

    s.det_b = s.b.det();
    s.h = s.b.inverse();

    // coupling of the truncating plane; the closed form collapses to -1
    // when cos(pi/p) = 1
    const double num = 1.0 + cp * cp * cr * cr - cp * cp - cq * cq - cr * cr;
    const double den = 1.0 - cp * cp - cq * cq;
    s.c4 = -std::sqrt(num / den);

    for (auto& row : s.B)
        row.fill(0.0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            s.B[i][j] = s.b.m[i][j];
    s.B[4][4] = 1.0;
    s.B[3][4] = s.B[4][3] = s.c4;

    return s;
}

TruncatedOrthoscheme build_orthoscheme(const TilingParams& params) {
    TruncatedOrthoscheme o;
    o.params = params;
    o.mats = build_matrices(params);
    const Mat4& h = o.mats.h;

    // Direct realization of the vertex Gram matrix h, with A2 pinned to
    // (1,0,0,1), A0 on the x1 = x2 = 0 axis and A1 in the x2 = 0 plane.
    Vec4 a2{1.0, 0.0, 0.0, 1.0};

    const double g00 = h.m[0][0], g01 = h.m[0][1], g02 = h.m[0][2], g03 = h.m[0][3];
    const double g11 = h.m[1][1], g12 = h.m[1][2], g13 = h.m[1][3], g33 = h.m[3][3];

    const double p0 = (g00 - g02 * g02) / (2.0 * g02);
    const double r0 = p0 + g02;
    Vec4 a0{p0, 0.0, 0.0, r0};

    // -e + g1 = g12,  -p0 e + r0 g1 = g01
    const double det = -r0 + p0; // = -g02, never zero
    const double e = (r0 * g12 - g01) / det;
    const double g1 = (p0 * g12 - g01) / det;
    const double f2 = g11 + e * e - g1 * g1;
    if (f2 <= 0.0)
        throw std::domain_error("build_orthoscheme: vertex realization failed (A1)");
    Vec4 a1{e, std::sqrt(f2), 0.0, g1};

    const double alpha = g03 / g02;
    const double beta = (g13 + alpha * (e - g1)) / a1.x1;
    const double gamma2 = g33 - beta * beta;
    if (gamma2 <= 0.0)
        throw std::domain_error("build_orthoscheme: vertex realization failed (A3)");
    Vec4 a3{alpha, beta, std::sqrt(gamma2), alpha};

    o.vert_gram = {a0, a1, a2, a3};

    // Face poles: rows of (J A)^{-1} with A the column matrix of the a_j,
    // so that <n_i, a_j> = delta_ij; their Gram matrix is b.
    Mat4 ja;
    for (int j = 0; j < 4; ++j) {
        Vec4 col = lower_index(o.vert_gram[j]);
        for (int i = 0; i < 4; ++i)
            ja.m[i][j] = col[i];
    }
    const Mat4 n = ja.inverse();
    // Interior orientation: a0+a1+a2+a3 is interior to u0..u3 and pairs
    // positively with every n_i, and A0 certifies the interior side of the
    // truncating plane (<a0, a3> = h_03 < 0).
    for (int i = 0; i < 4; ++i)
        o.faces[i] = Vec4{-n.m[i][0], -n.m[i][1], -n.m[i][2], -n.m[i][3]};
    o.faces[4] = a3; // unit pole already: <a3,a3> = h_33 = 1

    auto plane_point = [&](int fa, int fb, int fc) {
        Vec4 x = cross4(lower_index(o.faces[fa]), lower_index(o.faces[fb]),
                        lower_index(o.faces[fc]));
        if (x.x0 == 0.0 || lorentz_dot(x, x) >= 0.0)
            throw std::domain_error("build_orthoscheme: truncation vertex is not proper");
        return normalize_point(x);
    };

    o.verts[kVertA0] = normalize_point(a0);
    o.verts[kVertA1] = normalize_point(a1);
    o.verts[kVertA2] = a2;
    o.verts[kVertP1] = plane_point(1, 2, 4);
    o.verts[kVertP2] = plane_point(0, 2, 4);
    o.apex = normalize_point(a3);

    o.frame = {o.verts[kVertA0], o.verts[kVertA1], o.verts[kVertA2], o.apex};

    const bool both = params.two_ideal_vertices();
    o.is_ideal = {both, false, true, false, false};

    return o;
}

std::span<const int> TruncatedOrthoscheme::faces_of_vertex(int v) const {
    return {kVertexFaces[v].data(), static_cast<size_t>(kVertexFaceCount[v])};
}

std::span<const int> TruncatedOrthoscheme::vertices_of_face(int f) const {
    return {kFaceVerts[f].data(), static_cast<size_t>(kFaceVertCount[f])};
}

std::span<const std::array<int, 2>> TruncatedOrthoscheme::edges() const { return kEdges; }

std::span<const int> TruncatedOrthoscheme::opposite_faces(int v) const {
    if (v == kVertA2)
        return kOppositeA2;
    if (v == kVertA0)
        return kOppositeA0;
    throw std::domain_error("opposite_faces: only the ideal vertices A0, A2 are supported");
}

std::span<const int> TruncatedOrthoscheme::vertex_cycle(int v) const {
    if (v == kVertA2)
        return kCycleA2;
    if (v == kVertA0)
        return kCycleA0;
    throw std::domain_error("vertex_cycle: only the ideal vertices A0, A2 are supported");
}

double orthoscheme_volume_from_angles(double a01, double a12, double a23) {
    const double rad = std::cos(a12) * std::cos(a12) -
                       std::sin(a01) * std::sin(a01) * std::sin(a23) * std::sin(a23);
    if (rad < 0.0)
        throw std::domain_error("orthoscheme_volume: inadmissible angles (negative radicand)");
    const double theta = std::atan2(std::sqrt(rad), std::cos(a01) * std::cos(a23));
    const auto L = [](double x) { return lobachevsky(x); };
    return 0.25 * (L(a01 + theta) - L(a01 - theta) + L(pi / 2 + a12 - theta) +
                   L(pi / 2 - a12 - theta) + L(a23 + theta) - L(a23 - theta) +
                   2.0 * L(pi / 2 - theta));
}

double orthoscheme_volume(const TilingParams& params) {
    if (!TilingParams::admissible(params.q, params.r))
        throw std::invalid_argument("orthoscheme_volume: inadmissible parameters");
    return orthoscheme_volume_from_angles(0.0, pi / params.q, pi / params.r);
}

} // namespace hypack
