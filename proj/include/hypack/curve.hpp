#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypack/orthoscheme.hpp"

namespace hypack {

struct CurveRow {
    double t = 0.0;
    double density = 0.0;
    double vol_b0 = 0.0;
    double vol_b2 = 0.0;
    std::string active_constraint; // face closest to tangency at this t
};

// Two-horoball density along the feasible tangency interval, at `samples`
// uniform parameter values (a single row when the interval degenerates).
// Requires a cell with two ideal vertices and samples >= 2.
std::vector<CurveRow> sample_density_curve(const TilingParams& params, int samples);

// CSV with header t,density,vol_b0,vol_b2,active_constraint
void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows);

} // namespace hypack
