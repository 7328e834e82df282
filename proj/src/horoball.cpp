#include "hypack/horoball.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hypack {

namespace {

constexpr double kClearanceTol = 1e-9;

std::span<const Vec4> cell_frame(const TruncatedOrthoscheme& o) { return o.frame; }

void require_ideal_vertex(const TruncatedOrthoscheme& o, int vertex, const char* where) {
    if (vertex < 0 || vertex >= kVertexCount || !o.is_ideal[vertex])
        throw std::domain_error(std::string(where) + ": vertex " + std::to_string(vertex) +
                                " is not an ideal vertex of this cell");
}

// Membership residual of a canonical-frame point on the horosphere with
// axis parameter s; zero on the surface, positive inside the horoball.
double canonical_residual(double s, const Vec4& y) {
    const double k = y.x0 - y.x3;
    return (s - 1.0) * lorentz_dot(y, y) - (1.0 + s) * k * k;
}

} // namespace

double canonical_s_through(const Vec4& y) {
    const double q = lorentz_dot(y, y);
    const double k = y.x0 - y.x3;
    const double den = q - k * k;
    if (den >= 0.0)
        throw std::domain_error("canonical_s_through: point does not select a horosphere");
    return (q + k * k) / den;
}

Horosphere horosphere_through_point(const Vec4& center, const Vec4& pt,
                                    std::span<const Vec4> frame) {
    if (classify(pt) != PointClass::Proper)
        throw std::domain_error("horosphere_through_point: point is not proper");
    Horosphere h;
    h.center = center;
    h.to_canonical = ideal_to_canonical(center, frame);
    h.s = canonical_s_through(h.to_canonical * pt);
    if (!(h.s > -1.0 && h.s < 1.0))
        throw std::domain_error("horosphere_through_point: no admissible parameter in (-1,1)");
    return h;
}

MaxHoroball max_horoball(const TruncatedOrthoscheme& o, int vertex) {
    require_ideal_vertex(o, vertex, "max_horoball");
    const Vec4& v = o.verts[vertex];

    MaxHoroball best;
    bool have = false;
    for (int f : o.opposite_faces(vertex)) {
        const Vec4 foot = normalize_point(perpendicular_foot(v, o.faces[f]));
        Horosphere h = horosphere_through_point(v, foot, cell_frame(o));
        if (!have || h.s > best.ball.s) { // larger s = smaller ball = binding face
            best.ball = h;
            best.tangent_face = f;
            best.foot = foot;
            have = true;
        }
    }
    for (int f : o.opposite_faces(vertex))
        if (horoball_plane_clearance(best.ball, o.faces[f]) < -kClearanceTol)
            throw std::domain_error("max_horoball: candidate ball protrudes past face u" +
                                    std::to_string(f));
    return best;
}

double horoball_plane_clearance(const Horosphere& h, const Vec4& plane) {
    const Vec4 p = h.to_canonical * plane;
    const double nn = std::sqrt(p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3);
    if (nn < 1e-14)
        throw std::domain_error("horoball_plane_clearance: degenerate plane");
    // Klein-coordinate ellipsoid: center (0,0,(s+1)/2), semi-axes
    // sqrt((1-s)/2) horizontally and (1-s)/2 along the axis.  The mapped
    // plane reads n . X = d with the interior on the n . X < d side.
    const double axy2 = (1.0 - h.s) / 2.0;
    const double az = (1.0 - h.s) / 2.0;
    const double cz = (h.s + 1.0) / 2.0;
    const double support =
        std::sqrt(axy2 * (p.x1 * p.x1 + p.x2 * p.x2) + az * az * p.x3 * p.x3);
    return (p.x0 - p.x3 * cz - support) / nn;
}

std::vector<Vec4> edge_intersections(const Horosphere& h, const TruncatedOrthoscheme& o,
                                     int vertex) {
    require_ideal_vertex(o, vertex, "edge_intersections");

    std::vector<Vec4> pts;
    const Vec4 c{1.0, 0.0, 0.0, 1.0};
    const Mat4 from_canonical = h.to_canonical.inverse();
    for (int nb : o.vertex_cycle(vertex)) {
        const Vec4 y = h.to_canonical * o.verts[nb];
        // On the ray y + lambda c the membership equation is linear: the
        // second root sits at the ideal center itself.
        const double k = y.x0 - y.x3; // invariant along the ray
        const double slope = 2.0 * (h.s - 1.0) * lorentz_dot(c, y);
        if (std::abs(slope) < 1e-300)
            throw std::domain_error("edge_intersections: edge is tangent to the absolute");
        const double lambda = -((h.s - 1.0) * lorentz_dot(y, y) - (1.0 + h.s) * k * k) / slope;
        if (lambda < -1e-12)
            throw std::domain_error(
                "edge_intersections: horoball too large, swallows the far vertex of edge to " +
                std::to_string(nb));
        pts.push_back(normalize_point(from_canonical * (y + lambda * c)));
    }
    return pts;
}

double horospheric_arc_length(double l) {
    if (l < 0.0)
        throw std::domain_error("horospheric_arc_length: negative chord length");
    return 2.0 * std::sinh(l / 2.0);
}

double triangle_area_cayley_menger(double a, double b, double c) {
    const double a2 = a * a, b2 = b * b, c2 = c * c;
    // det of [[0,1,1,1],[1,0,a2,b2],[1,a2,0,c2],[1,b2,c2,0]] expanded
    const double det = a2 * a2 + b2 * b2 + c2 * c2 -
                       2.0 * (a2 * b2 + b2 * c2 + c2 * a2);
    const double sq = -det / 16.0;
    if (sq < -1e-12 * std::max({a2 * a2, b2 * b2, c2 * c2, 1e-300}))
        throw std::domain_error("triangle_area_cayley_menger: side lengths violate the "
                                "triangle inequality");
    return sq > 0.0 ? std::sqrt(sq) : 0.0;
}

double horospheric_quad_area(double s01, double s14, double s45, double s50, double d04) {
    return triangle_area_cayley_menger(s01, s14, d04) +
           triangle_area_cayley_menger(d04, s45, s50);
}

double sector_volume(double area) {
    if (area < 0.0)
        throw std::domain_error("sector_volume: negative area");
    return area / 2.0;
}

HoroballSector make_sector(const TruncatedOrthoscheme& o, const Horosphere& h, int vertex) {
    HoroballSector sec;
    sec.horosphere = h;
    sec.polygon = edge_intersections(h, o, vertex);

    for (const Vec4& p : sec.polygon) {
        const Vec4 y = h.to_canonical * p;
        if (std::abs(canonical_residual(h.s, y)) > 1e-8 * std::max(1.0, coord_norm(y)))
            throw std::domain_error("make_sector: polygon point left the horosphere");
    }

    const auto n = sec.polygon.size();
    auto arc = [&](size_t i, size_t j) {
        return horospheric_arc_length(point_distance(sec.polygon[i], sec.polygon[j]));
    };
    if (n == 3) {
        sec.area = triangle_area_cayley_menger(arc(0, 1), arc(1, 2), arc(2, 0));
    } else if (n == 4) {
        sec.area = horospheric_quad_area(arc(0, 1), arc(1, 2), arc(2, 3), arc(3, 0), arc(0, 2));
    } else {
        throw std::domain_error("make_sector: unexpected vertex figure");
    }
    sec.volume = sector_volume(sec.area);
    return sec;
}

PackingResult one_horoball_density(const TilingParams& params, int vertex) {
    const TruncatedOrthoscheme o = build_orthoscheme(params);
    require_ideal_vertex(o, vertex, "one_horoball_density");

    const MaxHoroball mh = max_horoball(o, vertex);
    const HoroballSector sec = make_sector(o, mh.ball, vertex);

    PackingResult res;
    res.params = params;
    res.cell_volume = orthoscheme_volume(params);
    res.pieces.push_back({vertex, mh.ball.s, sec.volume, mh.tangent_face});
    res.density = sec.volume / res.cell_volume;
    return res;
}

Vec4 tangency_point(const TruncatedOrthoscheme& o, double t) {
    if (!(t > 0.0 && t < 1.0))
        throw std::domain_error("tangency_point: t must lie in (0,1)");
    return (1.0 - t) * o.verts[kVertA2] + t * o.verts[kVertA0];
}

namespace {

// Worst clearance of the horoball at `vertex` through P(t) against the
// vertex's constraint faces; increases with shrinking ball.
double constraint_clearance(const TruncatedOrthoscheme& o, int vertex, double t,
                            int* binding = nullptr) {
    const Horosphere h =
        horosphere_through_point(o.verts[vertex], tangency_point(o, t), cell_frame(o));
    double worst = 1e300;
    for (int f : o.opposite_faces(vertex)) {
        const double c = horoball_plane_clearance(h, o.faces[f]);
        if (c < worst) {
            worst = c;
            if (binding)
                *binding = f;
        }
    }
    return worst;
}

double bisect_clearance_root(const TruncatedOrthoscheme& o, int vertex) {
    double lo = 1e-9, hi = 1.0 - 1e-9;
    double flo = constraint_clearance(o, vertex, lo);
    double fhi = constraint_clearance(o, vertex, hi);
    // ball at A0 grows as t decreases, ball at A2 grows as t increases
    if (vertex == kVertA2)
        std::swap(flo, fhi);
    if (!(flo < 0.0 && fhi > 0.0))
        throw std::domain_error("feasible_t_interval: clearance does not change sign");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        double fm = constraint_clearance(o, vertex, mid);
        if (vertex == kVertA2)
            fm = -fm;
        (fm < 0.0 ? lo : hi) = mid;
        if (hi - lo < 1e-14)
            break;
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::pair<double, double> feasible_t_interval(const TruncatedOrthoscheme& o) {
    if (!o.params.two_ideal_vertices())
        throw std::domain_error("feasible_t_interval: cell has a single ideal vertex");
    double t1 = bisect_clearance_root(o, kVertA0);
    double t2 = bisect_clearance_root(o, kVertA2);
    if (t1 > t2) {
        if (t1 - t2 > 1e-12)
            throw std::domain_error("feasible_t_interval: no valid packing, t1 > t2");
        t1 = t2 = 0.5 * (t1 + t2); // degenerate single-point interval
    }
    return {t1, t2};
}

std::pair<double, double> feasible_t_interval(const TilingParams& params) {
    return feasible_t_interval(build_orthoscheme(params));
}

std::pair<double, double> two_horoball_sector_volumes(const TruncatedOrthoscheme& o,
                                                      double t) {
    const Vec4 p = tangency_point(o, t);
    const Horosphere b0 = horosphere_through_point(o.verts[kVertA0], p, cell_frame(o));
    const Horosphere b2 = horosphere_through_point(o.verts[kVertA2], p, cell_frame(o));
    return {make_sector(o, b0, kVertA0).volume, make_sector(o, b2, kVertA2).volume};
}

PackingResult two_horoball_density(const TilingParams& params, double t) {
    const TruncatedOrthoscheme o = build_orthoscheme(params);
    const auto [t1, t2] = feasible_t_interval(o);
    if (t < t1 - 1e-9 || t > t2 + 1e-9) {
        int binding = -1;
        // identify which ball's constraint is violated at this t
        if (t < t1)
            constraint_clearance(o, kVertA0, t, &binding);
        else
            constraint_clearance(o, kVertA2, t, &binding);
        throw std::domain_error("two_horoball_density: t = " + std::to_string(t) +
                                " outside [" + std::to_string(t1) + ", " + std::to_string(t2) +
                                "], horoball crosses face u" + std::to_string(binding));
    }
    const double tc = std::clamp(t, t1, t2);

    const Vec4 p = tangency_point(o, tc);
    const Horosphere b0 = horosphere_through_point(o.verts[kVertA0], p, cell_frame(o));
    const Horosphere b2 = horosphere_through_point(o.verts[kVertA2], p, cell_frame(o));
    const HoroballSector s0 = make_sector(o, b0, kVertA0);
    const HoroballSector s2 = make_sector(o, b2, kVertA2);

    auto tangent_face_of = [&](const Horosphere& h, int vertex) {
        int face = -1;
        double best = 1e300;
        for (int f : o.opposite_faces(vertex)) {
            const double c = horoball_plane_clearance(h, o.faces[f]);
            if (c < -kClearanceTol)
                throw std::domain_error("two_horoball_density: ball at vertex " +
                                        std::to_string(vertex) + " protrudes past face u" +
                                        std::to_string(f));
            if (std::abs(c) < best) {
                best = std::abs(c);
                face = f;
            }
        }
        return best <= kClearanceTol ? face : -1;
    };

    PackingResult res;
    res.params = params;
    res.cell_volume = orthoscheme_volume(params);
    res.pieces.push_back({kVertA0, b0.s, s0.volume, tangent_face_of(b0, kVertA0)});
    res.pieces.push_back({kVertA2, b2.s, s2.volume, tangent_face_of(b2, kVertA2)});
    res.density = (s0.volume + s2.volume) / res.cell_volume;
    res.t = tc;
    res.t_lo = t1;
    res.t_hi = t2;
    return res;
}

PackingResult optimize_two_horoball(const TilingParams& params) {
    const TruncatedOrthoscheme o = build_orthoscheme(params);
    const auto [t1, t2] = feasible_t_interval(o);
    const double vol = orthoscheme_volume(params);

    int evals = 0;
    auto density_at = [&](double t) {
        ++evals;
        const auto [v0, v2] = two_horoball_sector_volumes(o, t);
        return (v0 + v2) / vol;
    };

    double best_t = t2;
    double best_d = density_at(t2);
    if (t2 - t1 > 1e-13) {
        const double d1 = density_at(t1);
        if (d1 > best_d + 1e-10) {
            best_t = t1;
            best_d = d1;
        }
        // golden-section sweep for an interior maximum
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = t1, b = t2;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = density_at(x1), f2 = density_at(x2);
        while (b - a > 1e-10) {
            if (f1 < f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + gr * (b - a);
                f2 = density_at(x2);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - gr * (b - a);
                f1 = density_at(x1);
            }
        }
        const double ti = 0.5 * (a + b);
        const double di = density_at(ti);
        if (di > best_d + 1e-10) {
            best_t = ti;
            best_d = di;
        }
    }

    PackingResult res = two_horoball_density(params, best_t);
    res.evaluations = evals;
    return res;
}

double equal_volume_t(const TruncatedOrthoscheme& o) {
    if (!o.params.two_ideal_vertices())
        throw std::domain_error("equal_volume_t: cell has a single ideal vertex");
    auto diff = [&](double t) {
        const auto [v0, v2] = two_horoball_sector_volumes(o, t);
        return v2 - v0;
    };
    // bracket starting from the feasible interval; widening beyond it fails
    // once a ball swallows a cell vertex, in which case the equal-volume
    // configuration is not measurable by sectors
    auto [lo, hi] = feasible_t_interval(o);
    double flo, fhi;
    try {
        flo = diff(lo);
        fhi = diff(hi);
        while (flo > 0.0)
            flo = diff(lo -= 0.01);
        while (fhi < 0.0)
            fhi = diff(hi += 0.01);
    } catch (const std::domain_error&) {
        throw std::domain_error("equal_volume_t: equal-volume configuration leaves the cell");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (diff(mid) < 0.0 ? lo : hi) = mid;
        if (hi - lo < 1e-14)
            break;
    }
    return 0.5 * (lo + hi);
}

double tangency_displacement(const TruncatedOrthoscheme& o, double t, double t0) {
    if (std::abs(t - t0) < 1e-15)
        return 0.0;
    const double d = point_distance(tangency_point(o, t), tangency_point(o, t0));
    return t >= t0 ? d : -d;
}

} // namespace hypack
