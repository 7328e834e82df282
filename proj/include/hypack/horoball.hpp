#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypack/orthoscheme.hpp"

// Horospheres, horospheric measurement and the optimal horoball packing
// densities of the {inf, q, r, inf} cells.
//
// A horosphere is pinned down by its ideal center and the canonical map T
// carrying the chosen center representative exactly to (1,0,0,1); in that
// frame the surface through the axis point (1,0,0,s) satisfies
//
//   (s - 1) <x,x> - (1 + s) (x0 - x3)^2 = 0,        s in (-1, 1),
//
// an ellipsoid of revolution internally tangent to the absolute.  The
// parameter s decreases as the horoball grows; values at the same vertex of
// the same cell are mutually comparable because the cell fixes one frame.

namespace hypack {

struct Horosphere {
    Vec4 center;      // ideal, x0 = 1
    double s = 0.0;   // axis parameter in the canonical frame
    Mat4 to_canonical;
};

// Horosphere centered at `center` through the proper point `pt`; the frame
// pins the canonical map (use the owning cell's frame).
Horosphere horosphere_through_point(const Vec4& center, const Vec4& pt,
                                    std::span<const Vec4> frame);

// Axis parameter of the canonical horosphere through a canonical-frame
// point (the membership equation is linear in s).
double canonical_s_through(const Vec4& y);

struct MaxHoroball {
    Horosphere ball;
    int tangent_face = -1; // binding face index
    Vec4 foot;             // tangency point, x0 = 1
};

// Largest horoball at an ideal vertex that stays inside every face not
// containing the vertex; tangency happens at the perpendicular foot on the
// binding face.
MaxHoroball max_horoball(const TruncatedOrthoscheme& o, int vertex);

// Signed gap between the horoball and a plane, measured in the canonical
// frame as the Euclidean clearance between the ellipsoid and the mapped
// plane: positive inside, zero at tangency, negative when protruding.
double horoball_plane_clearance(const Horosphere& h, const Vec4& plane);

// Intersection points of the horosphere with the cell edges through its
// center vertex, in the cyclic order of the vertex figure (model
// coordinates, x0 = 1).  Throws when the horoball swallows a far vertex.
std::vector<Vec4> edge_intersections(const Horosphere& h, const TruncatedOrthoscheme& o,
                                     int vertex);

// Horospheric arc length of a chord of hyperbolic length l: 2 sinh(l/2).
double horospheric_arc_length(double l);

// Triangle area from side lengths via the 4x4 Cayley-Menger determinant
// (the horosphere's intrinsic geometry is Euclidean).
double triangle_area_cayley_menger(double a, double b, double c);

// Quadrilateral with cyclic sides s01, s14, s45, s50 split along the
// diagonal d04.
double horospheric_quad_area(double s01, double s14, double s45, double s50, double d04);

// Volume of the horoball sector over a horospheric domain: area / 2.
double sector_volume(double area);

struct HoroballSector {
    Horosphere horosphere;
    std::vector<Vec4> polygon; // model coordinates on the horosphere
    double area = 0.0;
    double volume = 0.0;
};

HoroballSector make_sector(const TruncatedOrthoscheme& o, const Horosphere& h, int vertex);

struct HoroballPiece {
    int vertex = -1;
    double s = 0.0;
    double sector_volume = 0.0;
    int tangent_face = -1; // -1 when the ball is not tangent to any face
};

struct PackingResult {
    TilingParams params;
    std::vector<HoroballPiece> pieces;
    double cell_volume = 0.0;
    double density = 0.0;
    // two-horoball data (NaN / 0 for one-horoball packings)
    double t = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;
    int evaluations = 0;
};

// Optimal packing with a single horoball at the given ideal vertex.
PackingResult one_horoball_density(const TilingParams& params, int vertex);

// Tangency point of the two-horoball family: P(t) = (1-t) A2 + t A0 on the
// ideal edge, in x0 = 1 coordinates.
Vec4 tangency_point(const TruncatedOrthoscheme& o, double t);

// Admissible range [t1, t2] of the tangency parameter: at t1 the ball at A0
// reaches its binding face, at t2 the ball at A2 does.  May degenerate to a
// point.  Requires both vertices ideal.
std::pair<double, double> feasible_t_interval(const TruncatedOrthoscheme& o);
std::pair<double, double> feasible_t_interval(const TilingParams& params);

// Sector volumes of the tangent pair (B0, B2) through P(t), without
// feasibility checks; used by the displacement law and the optimizer.
std::pair<double, double> two_horoball_sector_volumes(const TruncatedOrthoscheme& o, double t);

// Density of the two-horoball packing at tangency parameter t (checked
// against the feasible interval; names the violated face on failure).
PackingResult two_horoball_density(const TilingParams& params, double t);

// Maximize the two-horoball density over the feasible interval: endpoint
// evaluation plus a golden-section sweep as a safety net.  Ties prefer the
// larger t.
PackingResult optimize_two_horoball(const TilingParams& params);

// Parameter where both sectors have equal volume (the displacement-law
// origin), found by bisection on the volume difference.
double equal_volume_t(const TruncatedOrthoscheme& o);

// Signed hyperbolic displacement of P(t) from P(t0) along the edge.
double tangency_displacement(const TruncatedOrthoscheme& o, double t, double t0);

} // namespace hypack
