#pragma once

#include <string>
#include <vector>

#include "hypack/horoball.hpp"
#include "hypack/inball.hpp"

// One computed row per published-table row, in publication order.  Shared
// by the table renderer and the verification report.

namespace hypack {

struct DistanceRow {
    std::string label; // H0H1, H1H4, H0H4, H4H5, H0H5
    double hyperbolic = 0.0;
    double horospheric = 0.0;
};

struct OneHoroballRow {
    TilingParams params;
    int vertex = 2;
    PackingResult result;
};

std::vector<InballResult> all_inball_rows();

// Pairwise data of the (3,3) maximal-horoball quadrilateral at A2.
std::vector<DistanceRow> distance_rows();

std::vector<OneHoroballRow> all_one_horoball_rows();

std::vector<PackingResult> all_two_horoball_rows();

} // namespace hypack
