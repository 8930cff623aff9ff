#ifndef HGE_EMBEDDED_DATA_HPP
#define HGE_EMBEDDED_DATA_HPP

#include <string_view>

namespace hge {

/// Transitive group catalog shipped with the library (degrees 2-11).
std::string_view embedded_catalog_text();

/// Published result tables used for golden comparison.
std::string_view embedded_golden_text();

} // namespace hge

#endif // HGE_EMBEDDED_DATA_HPP
