#pragma once

#include <span>
#include <string>

// Embedded golden dataset: the published values of the four result tables
// (inradii/ball densities, the (3,3) horospheric quadrilateral, one- and
// two-horoball packings).  Three cell-volume entries of the (6,3) rows were
// published as 0.4288923 although the cell is isometric to the (3,6) one
// (volume 0.4228923); six density entries were derived from that misprinted
// volume and disagree with the sector and volume printed beside them.  Each
// such record keeps the published number in `reference` and carries the
// value consistent with its companion records in `adopted`; comparisons run
// against `adopted`.

namespace hypack {

struct ReferenceRecord {
    int table;            // dataset id: 1 inball, 2 distances, 3 horoball-one, 4 horoball-two
    std::string key;      // row key: "(q,r)", "(q,r) i=k", or edge label
    std::string quantity; // column name
    double reference;     // published value
    double adopted;       // value compared against (== reference when consistent)
    std::string note;     // empty, or the reason reference and adopted differ
};

std::span<const ReferenceRecord> reference_records();

} // namespace hypack
