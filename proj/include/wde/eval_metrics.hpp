#pragma once

// Tensor midpoint quadrature, Hellinger / Bhattacharyya comparisons between
// densities, and the Gaussian product-kernel baseline with bandwidths chosen
// by leave-one-out likelihood.

#include "wde/sample_geometry.hpp"
#include "wde/sqrt_estimator.hpp"

#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace wde {

/// Midpoint rule on a box: `nodes[a]` equal cells along axis a.
struct QuadratureGrid {
  Box box;
  std::vector<Index> nodes;

  static QuadratureGrid uniform(const Box& box, Index nodes_per_axis);

  int dim() const { return box.dim(); }
  Index size() const;
  double cell_volume() const;
  std::vector<Eigen::VectorXd> axis_nodes() const;
  /// The grid with half the nodes per axis (rounded up), used for the
  /// discretization error estimate.
  QuadratureGrid halved() const;
};

/// Default node count per axis for a dimension: 512 up to d = 2, 128 at d = 3.
Index default_nodes(int dim);

/// Values of a function at every node of a grid, last axis fastest.
using GridFunction = std::function<Eigen::VectorXd(const QuadratureGrid&)>;

/// Pointwise evaluation adapter.
GridFunction on_grid(DensityFunction f);
/// Memoizes grid values per node layout (thread-safe).
GridFunction cached(GridFunction f);
/// A model's g values, through the separable grid evaluator.
GridFunction on_grid(const SqrtDensityModel& m);

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // |I_N - I_{N/2}|
};

/// Sum of cell-volume times integrand over the grid, with the error estimate
/// from the halved grid. Throws QuadratureError when error > tolerance.
inline constexpr double kDefaultQuadratureTolerance = 1e-4;

QuadratureResult integrate(const QuadratureGrid& grid, const GridFunction& f,
                           double tolerance = kDefaultQuadratureTolerance);

/// 1/2 int (sqrt p - sqrt q)^2.
QuadratureResult hellinger_sq(const GridFunction& p, const GridFunction& q, const QuadratureGrid& grid,
                              double tolerance = kDefaultQuadratureTolerance);
/// int sqrt(p q).
QuadratureResult bhattacharyya(const GridFunction& p, const GridFunction& q, const QuadratureGrid& grid,
                               double tolerance = kDefaultQuadratureTolerance);

/// int |g| sqrt f for a square-root model g and grid values of sqrt f.
QuadratureResult model_affinity(const SqrtDensityModel& m, const GridFunction& sqrt_f,
                                const QuadratureGrid& grid,
                                double tolerance = kDefaultQuadratureTolerance);

/// Box for comparing densities: the union of the given boxes padded by
/// `margin` on every side.
Box comparison_box(const Box& a, const Box& b, double margin);

/// Box covering a model's coefficients: every function it uses is zero
/// outside.
Box model_support(const SqrtDensityModel& m);

struct KdeModel {
  RowMatrix points;
  Eigen::VectorXd bandwidth;  // diagonal of H^{1/2}

  int dim() const { return static_cast<int>(points.cols()); }
};

/// sum_i log f^(-i)(X_i) for a diagonal Gaussian product kernel.
double kde_loo_loglik(const RowMatrix& points, const Eigen::VectorXd& bandwidth);

/// Normal-reference bandwidths 1.06 sd_a n^{-1/(d + 4)}.
Eigen::VectorXd normal_reference_bandwidth(const SampleSet& s);

/// Coordinate-wise golden-section search over log h, started at the
/// normal-reference bandwidths, within [h0 / 16, 4 h0] per axis.
KdeModel kde_fit_mlcv(const SampleSet& s);

double kde_eval(const KdeModel& k, const Point& x);
/// Values on a grid, through per-axis kernel matrices.
GridFunction on_grid(const KdeModel& k);

}  // namespace wde
