#pragma once

#include "rpx/catalog.hpp"
#include "rpx/region.hpp"

#include <string>

namespace rpx {

// Standard OFF file with the region's vertices and finite faces. Infinite
// faces have no OFF representation and go to the sidecar. Coordinates are
// exact finite decimals scaled by `scale`.
void write_off(const ComplexRegion& cr, const std::string& path, const Rat& scale = Rat(1));

// Sidecar JSON: exact vertices, edges (index pairs), finite faces (index
// cycles), infinite faces as window segments with periods, and metadata.
Json region_sidecar(const ComplexRegion& cr, const std::string& entry_name,
                    const Rat& scale = Rat(1));

}  // namespace rpx
