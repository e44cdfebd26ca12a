#pragma once

#include "uvmesh/codec.hpp"

#include <Eigen/Dense>

#include <vector>

namespace uvmesh {

/// Sparse row-stochastic k x n matrix mapping mesh vertices to joints.
struct JointRegressor {
  int joints = 0;
  int vertices = 0;
  std::vector<std::vector<std::pair<int, double>>> rows;  // (vertex, weight)

  /// Row sums 1 within 1e-6, weights nonnegative, indices in range.
  void validate() const;
};

struct JointSet3D {
  std::vector<Vec3> points;
};

struct JointSet2D {
  std::vector<Vec2> points;
  std::vector<uint8_t> visibility;  // empty = all visible
};

/// Paper defaults: lambda_c = 0.2, lambda_r = 1, lambda_con = 1.
struct LossWeights {
  double lambda_c = 0.2;
  double lambda_r = 1.0;
  double lambda_con = 1.0;
};

/// Dense losses are per-pixel / per-joint means by default; Sum reproduces
/// the raw summed form.
enum class Reduction { Mean, Sum };

JointSet3D regress_joints(const std::vector<Vec3>& vertices, const JointRegressor& J);
JointSet2D project_joints(const JointSet3D& joints, const Camera& camera);

struct IUVLoss {
  double total = 0.0;
  double classification = 0.0;  // BCE on fore/back
  double regression = 0.0;      // L1 on uv over gt foreground
};

/// BCE(fore) weighted by lambda_c plus gt-foreground L1(uv) weighted by
/// lambda_r. Probabilities are clamped to [1e-7, 1 - 1e-7].
IUVLoss loss_iuv(const IUVImage& pred, const IUVImage& gt, double lambda_c, double lambda_r,
                 Reduction reduction = Reduction::Mean);

/// Weighted L1 between location maps over gt-valid texels; Mean divides by
/// the summed weight over those texels. Throws DataError when the effective
/// weight is all zero.
double loss_map(const LocationMap& pred, const LocationMap& gt, const GridTensor& weights,
                Reduction reduction = Reduction::Mean);

double loss_joints_3d(const JointSet3D& pred, const JointSet3D& gt,
                      Reduction reduction = Reduction::Mean);

/// Squared-L2 on visible joints; invisible joints contribute 0 (and still
/// count toward the mean).
double loss_joints_2d(const JointSet2D& pred, const JointSet2D& gt,
                      Reduction reduction = Reduction::Mean);

/// Mean (or sum) over gt foreground pixels of
/// || pixel_center - project(X(u,v)) ||^2 in px^2.
double loss_consistent(const LocationMap& map, const IUVImage& gt_iuv, const Camera& camera,
                       Reduction reduction = Reduction::Mean);

struct LossComponents {
  double iuv = 0.0;
  double map = 0.0;
  double joints_3d = 0.0;
  double joints_2d = 0.0;
  double consistent = 0.0;
};

struct TotalLoss {
  double total = 0.0;
  LossComponents weighted;  // per-term contribution to the total
};

/// L = L_IUV + (L_map + L_J3D + L_J2D) + lambda_con * L_con.
TotalLoss loss_total(const LossComponents& components, const LossWeights& weights);

struct SimilarityTransform {
  double scale = 1.0;
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Vec3 translation = Vec3::Zero();

  Vec3 apply(const Vec3& p) const { return scale * (rotation * p) + translation; }
};

struct ProcrustesResult {
  std::vector<Vec3> aligned;
  SimilarityTransform transform;
};

/// Least-squares similarity alignment (scale > 0, proper rotation,
/// translation) of pred onto gt via cross-covariance SVD. Throws DataError
/// for fewer than 3 points or a degenerate (collinear/coincident)
/// configuration.
ProcrustesResult procrustes_align(const std::vector<Vec3>& pred, const std::vector<Vec3>& gt);

enum class Alignment { None, Procrustes };

/// Mean per-joint position error in millimeters (inputs in meters).
double mpjpe(const JointSet3D& pred, const JointSet3D& gt, Alignment alignment);

/// Mean vertex-to-vertex Euclidean error in millimeters.
double surface_error(const std::vector<Vec3>& pred_vertices, const std::vector<Vec3>& gt_vertices);

struct SegmentationMetrics {
  double accuracy = 0.0;
  double f1 = 0.0;
};

/// Binary fore/back segmentation scores. With an empty gt foreground, f1 is
/// 1 when pred is also empty and 0 otherwise.
SegmentationMetrics segmentation_metrics(const GridTensor& pred_mask, const GridTensor& gt_mask);

/// Loads the text sparse-triplet format: header "k n nnz", then nnz lines of
/// "row col value".
JointRegressor load_joint_regressor(const std::string& path);

}  // namespace uvmesh
