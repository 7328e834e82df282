#pragma once

#include <vector>

#include "hypack/orthoscheme.hpp"

// Largest inscribed ball of the truncated cell and the resulting packing
// density.  Two regimes: when cos(pi/r) >= cos(pi/q) the inball of the
// complete orthoscheme clears the truncating plane and its radius has a
// closed form; otherwise the optimal ball leans on the truncating plane and
// is found by enumerating centers equidistant from four of the five faces.

namespace hypack {

enum class InballType { Type1, Type2 };

struct InballResult {
    TilingParams params;
    Vec4 center;                   // proper point, x0 = 1
    double radius = 0.0;
    InballType type = InballType::Type1;
    std::vector<int> tangent_faces; // indices into the cell's face list
    double ball_volume = 0.0;
    double cell_volume = 0.0;
    double density = 0.0;
};

// Existence criterion: sum_ij det(b) h_ij > 0.
bool inball_exists(const SchlafliMatrices& m);

// True when the complete-orthoscheme inball is also the truncated cell's
// inball, i.e. cos(pi/r) / cos(pi/q) >= 1.
bool truncation_preserves_inradius(const TilingParams& params);

// Closed-form inradius  arcsinh( sqrt( -1 / sum_ij h_ij ) ).
double inradius_type1(const SchlafliMatrices& m);

// Generic bisector search over all four-face tangency candidates; feasible
// candidate of maximal radius wins (ties: lowest face-index set).  Subsumes
// both regimes; the winner's tangent set contains the truncating plane
// exactly in the Type 2 cases.
InballResult incenter_search(const TruncatedOrthoscheme& o);

// Ball volume  pi (sinh 2r - 2r)  at curvature -1.
double ball_volume(double r);

// Full pipeline: radius, ball volume, density = Vol(ball) / Vol(cell).
InballResult inball_density(const TilingParams& params);

} // namespace hypack
