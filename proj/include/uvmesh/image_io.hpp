#pragma once

#include "uvmesh/codec.hpp"

#include <string>

namespace uvmesh {

/// Writes an 8-bit RGB PNG. `rgb` is h*w*3, row-major.
void write_png(const std::string& path, int height, int width,
               const std::vector<uint8_t>& rgb);

/// Preview with u -> R, v -> G, fore -> B.
void write_iuv_png(const std::string& path, const IUVImage& iuv);

/// Preview with coordinates min-max normalized per channel; invalid texels
/// are black.
void write_location_map_png(const std::string& path, const LocationMap& map);

}  // namespace uvmesh
