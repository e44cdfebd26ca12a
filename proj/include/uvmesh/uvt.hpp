#pragma once

#include "uvmesh/codec.hpp"
#include "uvmesh/mesh.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace uvmesh {

/// UVT tensor container. On-disk layout, all integers little-endian:
///   magic "UVTD" | u32 version = 1 | u32 rank | rank x u32 dims |
///   u32 dtype (0 = float32, 1 = uint8) | payload, row-major.
struct UVTTensor {
  enum class DType : uint32_t { Float32 = 0, Uint8 = 1 };

  DType dtype = DType::Float32;
  std::vector<uint32_t> dims;
  std::vector<float> f32;
  std::vector<uint8_t> u8;

  size_t element_count() const;
};

void write_uvt(const std::string& path, const UVTTensor& tensor);
UVTTensor read_uvt(const std::string& path);

// Raster <-> tensor conversions (file schemas of record):
//   GridTensor     rank 3, H x W x C, float32
//   LocationMap    rank 3, H x W x 4, float32 (x, y, z, mask)
//   IUVImage       rank 3, H x W x 3, float32 (fore, u, v)
//   DistanceMatrix rank 2, n x n, float32
UVTTensor to_uvt(const GridTensor& grid);
UVTTensor to_uvt(const LocationMap& map);
UVTTensor to_uvt(const IUVImage& iuv);
UVTTensor to_uvt(const DistanceMatrix& matrix);

GridTensor grid_from_uvt(const UVTTensor& tensor);
LocationMap location_map_from_uvt(const UVTTensor& tensor);
IUVImage iuv_from_uvt(const UVTTensor& tensor);
DistanceMatrix distance_matrix_from_uvt(const UVTTensor& tensor);

}  // namespace uvmesh
