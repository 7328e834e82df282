#pragma once

#include <iosfwd>
#include <vector>

#include "hypack/reference.hpp"

namespace hypack {

struct RecordResult {
    ReferenceRecord record;
    double computed = 0.0;
    double abs_error = 0.0; // |computed - adopted|
    bool pass = false;
};

struct Report {
    double tolerance = 0.0;
    std::vector<RecordResult> records;
    bool all_pass = false;
};

// Recompute every reference record and compare at the given absolute
// tolerance.
Report run_verify(double tolerance);

void write_report_text(std::ostream& os, const Report& rep);
void write_report_json(std::ostream& os, const Report& rep);

} // namespace hypack
