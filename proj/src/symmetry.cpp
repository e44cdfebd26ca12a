#include "uvmesh/atlas.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace uvmesh {

SymmetrizeResult symmetrize_atlas(const UVAtlas& atlas, const TriangleMesh& open_mesh) {
  if (atlas.vertex_count() != open_mesh.vertex_count())
    throw DataError("atlas/mesh vertex count mismatch");
  std::vector<int> mirror = open_mesh.mirror_map();  // throws when pairs missing
  const int n = atlas.vertex_count();

  // Reflection Procrustes between the point set and its pair-permuted copy:
  // orthogonal O with det -1 and translation d minimizing
  // sum || O p_i + d - p_{mirror(i)} ||^2. The permuted set shares the
  // centroid, so d = c - O c.
  Vec2 centroid = Vec2::Zero();
  for (const Vec2& p : atlas.coords) centroid += p;
  centroid /= n;
  Eigen::Matrix2d cross = Eigen::Matrix2d::Zero();
  for (int i = 0; i < n; ++i)
    cross += (atlas.coords[mirror[i]] - centroid) * (atlas.coords[i] - centroid).transpose();
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix2d u = svd.matrixU(), v = svd.matrixV();
  double det_uv = (u * v.transpose()).determinant();
  Eigen::Matrix2d correction = Eigen::Matrix2d::Identity();
  correction(1, 1) = -det_uv;  // force a reflection
  Eigen::Matrix2d reflection = u * correction * v.transpose();
  Vec2 d = centroid - reflection * centroid;

  // Reflection axis: the +1 eigenvector, written from the double angle.
  double theta = 0.5 * std::atan2(reflection(1, 0), reflection(0, 0));
  Vec2 axis_dir(std::cos(theta), std::sin(theta));
  Vec2 axis_normal(-axis_dir.y(), axis_dir.x());
  // Fixed line of x -> O x + d: (I - O) acts as 2 * projection onto the
  // normal, so the line passes through (d . normal) / 2 * normal.
  Vec2 axis_point = 0.5 * d.dot(axis_normal) * axis_normal;

  // Rigid motion taking the fitted axis to the vertical line u = 0.5.
  if (axis_dir.y() < 0.0 || (axis_dir.y() == 0.0 && axis_dir.x() < 0.0)) axis_dir = -axis_dir;
  double rot = M_PI / 2.0 - std::atan2(axis_dir.y(), axis_dir.x());
  Eigen::Rotation2D<double> R(rot);
  Vec2 pivot = axis_point + (centroid - axis_point).dot(axis_dir) * axis_dir;

  SymmetrizeResult result;
  result.atlas.coords.resize(n);
  result.atlas.seam_map = atlas.seam_map;
  for (int i = 0; i < n; ++i)
    result.atlas.coords[i] = R * (atlas.coords[i] - pivot) + Vec2(0.5, centroid.y());

  // Average each coordinate with its partner's mirror across u = 0.5.
  std::vector<Vec2> aligned = result.atlas.coords;
  for (int i = 0; i < n; ++i) {
    if (mirror[i] == i) {
      result.atlas.coords[i] = Vec2(0.5, aligned[i].y());
      continue;
    }
    const Vec2& self = aligned[i];
    const Vec2& partner = aligned[mirror[i]];
    result.atlas.coords[i] =
        Vec2(0.5 * (self.x() + 1.0 - partner.x()), 0.5 * (self.y() + partner.y()));
  }

  // Mirror-preserving rescale into [0,1]^2, only when coordinates escaped.
  double max_du = 0.0, min_v = 0.0, max_v = 1.0;
  for (const Vec2& p : result.atlas.coords) {
    max_du = std::max(max_du, std::abs(p.x() - 0.5));
    min_v = std::min(min_v, p.y());
    max_v = std::max(max_v, p.y());
  }
  if (max_du > 0.5) {
    double s = 0.5 / max_du;
    for (Vec2& p : result.atlas.coords) p.x() = 0.5 + (p.x() - 0.5) * s;
  }
  if (min_v < 0.0 || max_v > 1.0) {
    double s = 1.0 / (max_v - min_v);
    for (Vec2& p : result.atlas.coords) p.y() = (p.y() - min_v) * s;
  }

  for (int i = 0; i < n; ++i) {
    const Vec2& p = result.atlas.coords[i];
    const Vec2& q = result.atlas.coords[mirror[i]];
    result.mirror_residual =
        std::max(result.mirror_residual, std::abs(p.x() - (1.0 - q.x())) + std::abs(p.y() - q.y()));
    result.rms_displacement += (p - atlas.coords[i]).squaredNorm();
  }
  result.rms_displacement = std::sqrt(result.rms_displacement / n);
  return result;
}

}  // namespace uvmesh
