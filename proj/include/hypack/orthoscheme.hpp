#pragma once

#include <array>
#include <span>

#include "hypack/lorentz.hpp"

// Coxeter cells {inf, q, r, inf}: a 3-dimensional orthoscheme with two
// parallel faces whose ultra-ideal apex is cut off by its polar plane.  The
// resulting polyhedron has five faces u0..u4 (u4 the truncating plane),
// vertices A0, A1, A2 and two truncation vertices P1 = u1^u2^u4 and
// P2 = u0^u2^u4.  A2 is always ideal and lies on u4; A0 is ideal exactly
// when 1/q + 1/r = 1/2.

namespace hypack {

struct TilingParams {
    int q = 3;
    int r = 3;

    constexpr TilingParams() = default;
    TilingParams(int q_, int r_); // throws std::invalid_argument when inadmissible

    // 1/q + 1/r >= 1/2 with q,r >= 3, as integers
    static constexpr bool admissible(int q, int r) {
        return q >= 3 && r >= 3 && 2 * (q + r) >= q * r;
    }

    // true when both A0 and A2 are ideal (1/q + 1/r = 1/2)
    bool two_ideal_vertices() const { return 2 * (q + r) == q * r; }

    bool operator==(const TilingParams&) const = default;
};

// All eight admissible parameter pairs, in reference order.
std::span<const TilingParams> admissible_tilings();

struct SchlafliMatrices {
    Mat4 b;                                 // 4x4 Gram matrix of the face forms u0..u3
    Mat4 h;                                 // b^{-1}; <a_i,a_j> for the vertex vectors
    std::array<std::array<double, 5>, 5> B; // singular 5x5 Gram including u4
    double det_b = 0.0;                     // = -cos^2(pi/q)
    double c4 = 0.0;                        // B[3][4] coupling; -1 for this family
};

SchlafliMatrices build_matrices(const TilingParams& params);

// Combinatorics of the truncated cell (identical for all eight tilings).
inline constexpr int kVertA0 = 0, kVertA1 = 1, kVertA2 = 2, kVertP1 = 3, kVertP2 = 4;
inline constexpr int kFaceCount = 5, kVertexCount = 5, kEdgeCount = 8;

struct TruncatedOrthoscheme {
    TilingParams params;
    SchlafliMatrices mats;

    std::array<Vec4, 5> verts;     // A0, A1, A2, P1, P2 with x0 = 1
    Vec4 apex;                     // ultra-ideal A3 with x0 = 1
    std::array<Vec4, 5> faces;     // unit poles, oriented so the interior pairs negative
    std::array<Vec4, 4> vert_gram; // vertex representatives with <a_i,a_j> = h_ij
    std::array<bool, 5> is_ideal;  // per vertex

    // Fixed representatives spanning R^4, used to pin canonical maps at the
    // ideal vertices: the x0 = 1 representatives of A0, A1, A2, A3.
    std::array<Vec4, 4> frame;

    std::span<const int> faces_of_vertex(int v) const;
    std::span<const int> vertices_of_face(int f) const;
    std::span<const std::array<int, 2>> edges() const;

    // Faces not incident to a vertex: these are the ones a horoball centered
    // there must not cross.
    std::span<const int> opposite_faces(int v) const;

    // Neighbor vertices of an ideal vertex in cyclic order (consecutive
    // edges share a face); the horospheric polygon follows this order.
    std::span<const int> vertex_cycle(int v) const;
};

TruncatedOrthoscheme build_orthoscheme(const TilingParams& params);

// Volume of a complete orthoscheme from its essential dihedral angles
// (Lobachevsky-function closed form; Lambert-cube shapes excluded).
double orthoscheme_volume_from_angles(double a01, double a12, double a23);

// Volume of the truncated cell for {inf, q, r, inf}.
double orthoscheme_volume(const TilingParams& params);

} // namespace hypack
