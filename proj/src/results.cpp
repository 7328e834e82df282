#include "hypack/results.hpp"

namespace hypack {

std::vector<InballResult> all_inball_rows() {
    std::vector<InballResult> rows;
    for (const TilingParams& p : admissible_tilings())
        rows.push_back(inball_density(p));
    return rows;
}

std::vector<DistanceRow> distance_rows() {
    const TilingParams p33{3, 3};
    const TruncatedOrthoscheme o = build_orthoscheme(p33);
    const MaxHoroball mh = max_horoball(o, kVertA2);
    const std::vector<Vec4> poly = edge_intersections(mh.ball, o, kVertA2);

    // polygon order is H0, H1, H4, H5
    const std::array<std::pair<const char*, std::pair<int, int>>, 5> pairs = {{
        {"H0H1", {0, 1}},
        {"H1H4", {1, 2}},
        {"H0H4", {0, 2}},
        {"H4H5", {2, 3}},
        {"H0H5", {0, 3}},
    }};
    std::vector<DistanceRow> rows;
    for (const auto& [label, ij] : pairs) {
        const double l = point_distance(poly[ij.first], poly[ij.second]);
        rows.push_back({label, l, horospheric_arc_length(l)});
    }
    return rows;
}

std::vector<OneHoroballRow> all_one_horoball_rows() {
    std::vector<OneHoroballRow> rows;
    for (const TilingParams& p : admissible_tilings()) {
        rows.push_back({p, kVertA2, one_horoball_density(p, kVertA2)});
        if (p.two_ideal_vertices())
            rows.push_back({p, kVertA0, one_horoball_density(p, kVertA0)});
    }
    return rows;
}

std::vector<PackingResult> all_two_horoball_rows() {
    std::vector<PackingResult> rows;
    for (const TilingParams& p : admissible_tilings())
        if (p.two_ideal_vertices())
            rows.push_back(optimize_two_horoball(p));
    return rows;
}

} // namespace hypack
