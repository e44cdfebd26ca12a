#pragma once

#include "uvmesh/atlas.hpp"

#include <cstdint>
#include <vector>

namespace uvmesh {

/// Generic H x W x C raster of scalars, row-major, channel-interleaved.
/// Texel (r, c) covers the UV square [c/W,(c+1)/W) x [r/H,(r+1)/H); its
/// center is ((c+0.5)/W, (r+0.5)/H).
struct GridTensor {
  int height = 0;
  int width = 0;
  int channels = 1;
  std::vector<float> data;

  GridTensor() = default;
  GridTensor(int h, int w, int c)
      : height(h), width(w), channels(c),
        data(static_cast<size_t>(h) * w * c, 0.0f) {}

  float& at(int r, int c, int ch = 0) {
    return data[(static_cast<size_t>(r) * width + c) * channels + ch];
  }
  float at(int r, int c, int ch = 0) const {
    return data[(static_cast<size_t>(r) * width + c) * channels + ch];
  }
};

/// UV-space image whose texels hold 3D surface coordinates; mask flags the
/// texels covered by the chart.
struct LocationMap {
  GridTensor values;          // H x W x 3
  std::vector<uint8_t> mask;  // H * W, 1 = inside chart

  int height() const { return values.height; }
  int width() const { return values.width; }
  bool valid(int r, int c) const { return mask[static_cast<size_t>(r) * width() + c] != 0; }
};

/// Image-space correspondence map: per-pixel foreground probability and,
/// where foreground, the (u,v) of the surface point seen at that pixel.
struct IUVImage {
  GridTensor fore;  // h x w x 1
  GridTensor uv;    // h x w x 2

  int height() const { return fore.height; }
  int width() const { return fore.width; }
};

/// Weak-perspective camera: pixel = scale * (X.x, X.y) + translation. Depth
/// (+z toward the camera) is used only for visibility.
struct Camera {
  double scale = 1.0;  // pixels per meter
  Vec2 translation = Vec2::Zero();

  Vec2 project(const Vec3& x) const {
    return Vec2(scale * x.x() + translation.x(), scale * x.y() + translation.y());
  }
};

/// Camera that centers the mesh in an h x w frame with the given margin
/// fraction on the larger extent.
Camera fit_camera(const TriangleMesh& mesh, int h, int w, double margin = 0.1);

/// Rasterizes the chart into a location map: every texel whose center lies in
/// some UV triangle gets the barycentric blend of that triangle's 3D vertex
/// positions. Top-left fill rule; overlapping writes keep the first face in
/// index order. Throws DataError below 8 x 8.
LocationMap encode_location_map(const TriangleMesh& open_mesh, const UVAtlas& atlas,
                                int height, int width);

/// Alias of encode_location_map applied to the template mesh.
LocationMap reference_location_map(const TriangleMesh& template_mesh, const UVAtlas& atlas,
                                   int height, int width);

/// Mask-aware bilinear sample of the location map at (u, v): weights of
/// invalid neighbors are renormalized over the valid ones; if all four are
/// invalid the nearest valid texel wins.
Vec3 sample_location_map(const LocationMap& map, const Vec2& uv);

/// Reads every vertex position back from the map at its UV coordinate.
/// Throws DataError when the map mask is empty.
std::vector<Vec3> decode_vertices(const LocationMap& map, const UVAtlas& atlas);

/// Z-buffer software rasterization of the mesh under the camera. Foreground
/// pixels get the barycentric UV of the nearest covering face; background
/// pixels have fore = 0 and uv = (0,0). A fully off-frame mesh yields an
/// all-background image (not an error).
IUVImage render_iuv(const TriangleMesh& open_mesh, const UVAtlas& atlas, const Camera& camera,
                    int height, int width);

struct UVTransfer {
  GridTensor values;  // H x W x C, mean of contributions
  GridTensor count;   // H x W x 1
};

/// Scatters every foreground pixel's C-vector to the UV texel nearest to
/// (u*W, v*H). Each texel holds the arithmetic mean of its contributions.
UVTransfer transfer_to_uv(const GridTensor& image, const IUVImage& iuv, int out_height,
                          int out_width, double threshold);

/// Samples the location map at each foreground pixel's (u,v); background
/// pixels are zero. Output is h x w x 3.
GridTensor transfer_to_image(const LocationMap& map, const IUVImage& iuv, double threshold);

/// Rasterized per-vertex weights w_i = 1 + alpha * d_i / max(d), where d_i is
/// the edge-length graph distance from the nearest seed, measured on the
/// closed mesh (seam_map folds the cut back). Seeds are closed-mesh vertex
/// indices. Background texels are 0.
GridTensor weight_map(const TriangleMesh& open_mesh, const UVAtlas& atlas,
                      const std::vector<int>& torso_seeds, double alpha, int height, int width);

}  // namespace uvmesh
