#include "hypack/verify.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "hypack/results.hpp"

namespace hypack {

namespace {

std::string qr_key(const TilingParams& p) {
    return "(" + std::to_string(p.q) + "," + std::to_string(p.r) + ")";
}

// (table, key, quantity) -> computed value, filled from one run of all
// pipelines
std::map<std::string, double> computed_values() {
    std::map<std::string, double> m;
    auto put = [&](int table, const std::string& key, const std::string& quantity, double v) {
        m[std::to_string(table) + "|" + key + "|" + quantity] = v;
    };

    for (const InballResult& row : all_inball_rows()) {
        const std::string key = qr_key(row.params);
        put(1, key, "inradius", row.radius);
        put(1, key, "ball_volume", row.ball_volume);
        put(1, key, "cell_volume", row.cell_volume);
        put(1, key, "density", row.density);
    }
    for (const DistanceRow& row : distance_rows()) {
        put(2, row.label, "hyperbolic_distance", row.hyperbolic);
        put(2, row.label, "horospheric_distance", row.horospheric);
    }
    for (const OneHoroballRow& row : all_one_horoball_rows()) {
        const std::string key = qr_key(row.params) + " i=" + std::to_string(row.vertex);
        put(3, key, "sector_volume", row.result.pieces[0].sector_volume);
        put(3, key, "cell_volume", row.result.cell_volume);
        put(3, key, "density", row.result.density);
    }
    for (const PackingResult& row : all_two_horoball_rows()) {
        const std::string key = qr_key(row.params);
        double total = 0.0;
        for (const HoroballPiece& piece : row.pieces)
            total += piece.sector_volume;
        put(4, key, "sector_volume", total);
        put(4, key, "cell_volume", row.cell_volume);
        put(4, key, "density", row.density);
    }
    return m;
}

} // namespace

Report run_verify(double tolerance) {
    if (!(tolerance > 0.0))
        throw std::invalid_argument("run_verify: tolerance must be positive");

    const std::map<std::string, double> values = computed_values();

    Report rep;
    rep.tolerance = tolerance;
    rep.all_pass = true;
    for (const ReferenceRecord& rec : reference_records()) {
        const std::string key =
            std::to_string(rec.table) + "|" + rec.key + "|" + rec.quantity;
        const auto it = values.find(key);
        if (it == values.end())
            throw std::runtime_error("run_verify: no computed value for " + key);
        RecordResult rr;
        rr.record = rec;
        rr.computed = it->second;
        rr.abs_error = std::abs(rr.computed - rec.adopted);
        rr.pass = rr.abs_error <= tolerance;
        rep.all_pass = rep.all_pass && rr.pass;
        rep.records.push_back(rr);
    }
    return rep;
}

void write_report_text(std::ostream& os, const Report& rep) {
    int passed = 0;
    for (const RecordResult& rr : rep.records) {
        char line[256];
        std::snprintf(line, sizeof(line), "[%s] table=%d %-11s %-21s ref=%.7f computed=%.7f err=%.2e",
                      rr.pass ? "PASS" : "FAIL", rr.record.table, rr.record.key.c_str(),
                      rr.record.quantity.c_str(), rr.record.adopted, rr.computed, rr.abs_error);
        os << line;
        if (rr.record.adopted != rr.record.reference) {
            char extra[64];
            std::snprintf(extra, sizeof(extra), "  (published %.7f, adopted)", rr.record.reference);
            os << extra;
        }
        os << "\n";
        if (rr.pass)
            ++passed;
    }
    os << "tolerance " << rep.tolerance << ": " << passed << "/" << rep.records.size()
       << " records pass\n";
    for (const RecordResult& rr : rep.records)
        if (rr.record.adopted != rr.record.reference)
            os << "note: table=" << rr.record.table << " " << rr.record.key << " "
               << rr.record.quantity << ": " << rr.record.note << "\n";
    os << "overall: " << (rep.all_pass ? "PASS" : "FAIL") << "\n";
}

void write_report_json(std::ostream& os, const Report& rep) {
    nlohmann::json arr = nlohmann::json::array();
    for (const RecordResult& rr : rep.records) {
        nlohmann::json j = {
            {"table", rr.record.table},   {"key", rr.record.key},
            {"quantity", rr.record.quantity}, {"reference", rr.record.reference},
            {"computed", rr.computed},    {"abs_error", rr.abs_error},
            {"pass", rr.pass},
        };
        if (rr.record.adopted != rr.record.reference) {
            j["adopted"] = rr.record.adopted;
            j["note"] = rr.record.note;
        }
        arr.push_back(j);
    }
    os << arr.dump(2) << "\n";
}

} // namespace hypack
