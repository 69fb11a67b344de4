#pragma once

// Nearest-neighbour geometry of a sample: distances R_i to the closest other
// observation, ball volumes V_i and weights W_i = 2 sqrt(V_i / (pi n)), plus
// what is needed to drop one observation without rebuilding anything.

#include "wde/types.hpp"

#include <span>
#include <vector>

namespace wde {

/// Immutable n x d observation matrix with its tight bounding box.
class SampleSet {
 public:
  explicit SampleSet(RowMatrix points);

  Index size() const { return points_.rows(); }
  int dim() const { return static_cast<int>(points_.cols()); }
  const RowMatrix& points() const { return points_; }
  Point point(Index i) const { return points_.row(i).transpose(); }
  const Box& bbox() const { return bbox_; }

  /// Copy with observation i removed.
  SampleSet without(Index i) const;

 private:
  RowMatrix points_;
  Box bbox_;
};

/// pi^{d/2} r^d / Gamma(d/2 + 1).
double ball_volume(int d, double r);

struct NeighborTable {
  Index n = 0;
  int dim = 0;
  std::vector<Index> nn1_index;
  std::vector<Index> nn2_index;
  Eigen::VectorXd nn1_dist;  // R_i
  Eigen::VectorXd nn2_dist;
  Eigen::VectorXd volume;    // V_i
  Eigen::VectorXd weight;    // W_i = 2 sqrt(V_i / (pi n))
  // reverse_nn(j) = { i : nn1_index[i] == j }, stored as CSR.
  std::vector<Index> reverse_offsets;
  std::vector<Index> reverse_items;
  Index zero_volume_count = 0;  // duplicated observations get R_i = 0

  std::span<const Index> reverse_nn(Index j) const {
    return {reverse_items.data() + reverse_offsets[j],
            static_cast<std::size_t>(reverse_offsets[j + 1] - reverse_offsets[j])};
  }
  /// 2 sqrt(V_i / pi): the weight without its 1/sqrt(n) factor.
  double unit_weight(Index i) const;
  /// Same, for the volume built on the second-neighbour distance.
  double unit_weight_second(Index i) const;
};

/// Exact first and second nearest neighbours through a kd-tree. Ties are
/// broken towards the lowest index. Requires n >= 2.
NeighborTable build_neighbors(const SampleSet& s);

/// Per-point quantities of the sample with observation `removed` deleted.
/// Arrays keep the original indexing; entry `removed` is set to -1 / NaN.
struct LooNeighbors {
  Index removed = -1;
  Index n = 0;  // size of the reduced sample
  std::vector<Index> nn1_index;
  Eigen::VectorXd nn1_dist;
  Eigen::VectorXd volume;
  Eigen::VectorXd weight;  // uses sample size n - 1
};

/// Points whose nearest neighbour was `i` fall back to their second
/// neighbour; everything else is unchanged. Requires n >= 3.
LooNeighbors loo_view(const NeighborTable& t, Index i);

}  // namespace wde
