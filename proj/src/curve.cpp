#include "hypack/curve.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "hypack/horoball.hpp"

namespace hypack {

std::vector<CurveRow> sample_density_curve(const TilingParams& params, int samples) {
    if (samples < 2)
        throw std::invalid_argument("sample_density_curve: samples must be >= 2");
    const TruncatedOrthoscheme o = build_orthoscheme(params);
    const auto [t1, t2] = feasible_t_interval(o);
    const double vol = orthoscheme_volume(params);

    const bool single = (t2 - t1) < 1e-12;
    const int n = single ? 1 : samples;

    std::vector<CurveRow> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = single ? t1 : t1 + (t2 - t1) * i / (n - 1);
        const Vec4 p = tangency_point(o, t);
        const Horosphere b0 = horosphere_through_point(o.verts[kVertA0], p, o.frame);
        const Horosphere b2 = horosphere_through_point(o.verts[kVertA2], p, o.frame);

        CurveRow row;
        row.t = t;
        row.vol_b0 = make_sector(o, b0, kVertA0).volume;
        row.vol_b2 = make_sector(o, b2, kVertA2).volume;
        row.density = (row.vol_b0 + row.vol_b2) / vol;

        double best = 1e300;
        int face = -1;
        for (int f : o.opposite_faces(kVertA0)) {
            const double c = horoball_plane_clearance(b0, o.faces[f]);
            if (c < best) {
                best = c;
                face = f;
            }
        }
        for (int f : o.opposite_faces(kVertA2)) {
            const double c = horoball_plane_clearance(b2, o.faces[f]);
            if (c < best) {
                best = c;
                face = f;
            }
        }
        row.active_constraint = "u" + std::to_string(face);
        rows.push_back(row);
    }
    return rows;
}

void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
    os << "t,density,vol_b0,vol_b2,active_constraint\n";
    for (const CurveRow& row : rows) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%.12f,%.12f,%.12f,%.12f,%s\n", row.t, row.density,
                      row.vol_b0, row.vol_b2, row.active_constraint.c_str());
        os << buf;
    }
}

} // namespace hypack
