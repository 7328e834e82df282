#pragma once

#include <iosfwd>
#include <string_view>

namespace hypack {

// Render one of the result tables: "inball", "distances", "horoball-one",
// "horoball-two".  Values carry seven decimals.  Throws
// std::invalid_argument for an unknown name.
void render_table(std::ostream& os, std::string_view name);

} // namespace hypack
