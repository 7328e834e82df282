#include "hypack/tables.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hypack/results.hpp"

namespace hypack {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.7f", v);
    return buf;
}

std::string qr(const TilingParams& p) {
    return "(" + std::to_string(p.q) + "," + std::to_string(p.r) + ")";
}

std::string schlafli(const TilingParams& p) {
    return "{inf," + std::to_string(p.q) + "," + std::to_string(p.r) + ",inf}";
}

void render_inball(std::ostream& os) {
    os << "(q,r)  inradius   ball_volume  cell_volume  density\n";
    for (const InballResult& row : all_inball_rows())
        os << qr(row.params) << "  " << num(row.radius) << "  " << num(row.ball_volume)
           << "    " << num(row.cell_volume) << "    " << num(row.density) << "\n";
}

void render_distances(std::ostream& os) {
    os << "edge  hyperbolic_distance  horospheric_distance\n";
    for (const DistanceRow& row : distance_rows())
        os << row.label << "  " << num(row.hyperbolic) << "            " << num(row.horospheric)
           << "\n";
}

void render_one(std::ostream& os) {
    os << "symbol          i  sector_volume  cell_volume  density\n";
    for (const OneHoroballRow& row : all_one_horoball_rows())
        os << schlafli(row.params) << "   " << row.vertex << "  " << num(row.result.pieces[0].sector_volume)
           << "      " << num(row.result.cell_volume) << "    " << num(row.result.density)
           << "\n";
}

void render_two(std::ostream& os) {
    os << "symbol          sector_volume  cell_volume  density\n";
    for (const PackingResult& row : all_two_horoball_rows()) {
        double total = 0.0;
        for (const HoroballPiece& piece : row.pieces)
            total += piece.sector_volume;
        os << schlafli(row.params) << "  " << num(total) << "      " << num(row.cell_volume)
           << "    " << num(row.density) << "\n";
    }
}

} // namespace

void render_table(std::ostream& os, std::string_view name) {
    if (name == "inball")
        render_inball(os);
    else if (name == "distances")
        render_distances(os);
    else if (name == "horoball-one")
        render_one(os);
    else if (name == "horoball-two")
        render_two(os);
    else
        throw std::invalid_argument("render_table: unknown table '" + std::string(name) +
                                    "' (expected inball, distances, horoball-one, horoball-two)");
}

} // namespace hypack
