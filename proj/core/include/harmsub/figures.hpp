#pragma once

#include <iosfwd>
#include <string>

#include "harmsub/boundary_map.hpp"

namespace harmsub {

/// Named builtin maps for the figure emitters:
///   "ellipse:M1,M2"  -> q(z) = 1 + M1 z + M2 conj(z) (image: ellipse)
///   "halfplane"      -> q(z) = (1+z)/(1-z) + conj(z)/(1-conj(z))
/// Throws Error on unknown names or malformed parameters.
BoundaryMapQ builtin_map(const std::string& name);

/// CSV rows "theta,re,im" (header line included): boundary polyline first,
/// interior point cloud after it.
void write_map_csv(std::ostream& os, const DiskImage& image);

/// The same data as a canonical report document (kind "disk_image").
std::string render_map_json(const DiskImage& image, bool include_timestamp = true);

} // namespace harmsub
