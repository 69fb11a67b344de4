#pragma once

// Wavelet estimate of g = sqrt(f). Every coefficient is a nearest-neighbour
// sum  c = (2 / sqrt(pi)) n^{-1/2} sum_i b(X_i) sqrt(V_i) = sum_i W_i b(X_i)
// for its basis function b. The estimate keeps fathers at level j0 and mothers
// at levels j0..J; dividing by the coefficient norm makes g^2 a density.

#include "wde/basis_layout.hpp"
#include "wde/sample_geometry.hpp"
#include "wde/wavelet_basis.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wde {

struct Coefficient {
  BasisIndex index;
  double value = 0.0;
};

struct SqrtDensityModel {
  std::shared_ptr<const DyadicTable> table;
  int dim = 0;
  int j0 = 0;
  int J = 0;  // mothers at j0..J; J = j0 - 1 is the father-only form at level j0
  int eval_depth = kDefaultEvalDepth;
  std::vector<Coefficient> coefficients;  // sorted by basis_index_less
  double coeff_norm = 0.0;
  bool normalized = false;
  Index sample_size = 0;
  Index zero_volume_points = 0;

  std::string basis_name() const { return table ? table->family().name() : std::string(); }
  bool father_only() const { return J < j0; }
  /// Interpolation depth used for the functions of a level.
  int depth_at(int level) const { return eval_depth + J + 1 - level; }
  std::optional<double> coefficient(const BasisIndex& idx) const;
};

/// (2/sqrt(pi)) n^{-1/2} sum_i phi(X_i) sqrt(V_i).
double sqrt_functional(const SampleSet& s, const NeighborTable& t, const DensityFunction& phi);

/// Unnormalized estimate with fathers at j0 and mothers at j0..J. The
/// coefficients are computed at level J + 1 and carried down to j0 with the
/// family's filters.
SqrtDensityModel fit(const SampleSet& s, const NeighborTable& t,
                     std::shared_ptr<const DyadicTable> table, int j0, int J,
                     int eval_depth = kDefaultEvalDepth);

/// Father-only estimate at a single level.
SqrtDensityModel fit_single_level(const SampleSet& s, const NeighborTable& t,
                                  std::shared_ptr<const DyadicTable> table, int level,
                                  int eval_depth = kDefaultEvalDepth);

double coefficient_norm(const std::vector<Coefficient>& coefficients);

/// Divides every coefficient by the coefficient norm. Idempotent.
SqrtDensityModel normalize(SqrtDensityModel m);

/// Columns spanning the model's coefficients, one rectangle per (level, type).
BasisLayout layout_of(const SqrtDensityModel& m);

/// Evaluates a model many times without repeated coefficient lookups.
class ModelEvaluator {
 public:
  explicit ModelEvaluator(const SqrtDensityModel& m);

  double operator()(const Point& x) const;
  Eigen::VectorXd operator()(const RowMatrix& points) const;

  /// Values on the tensor grid spanned by per-axis nodes, flattened with the
  /// last axis running fastest.
  Eigen::VectorXd on_grid(const std::vector<Eigen::VectorXd>& axis_nodes) const;

 private:
  std::shared_ptr<const DyadicTable> table_;
  int eval_depth_;
  BasisLayout layout_;
  Eigen::VectorXd values_;
};

double evaluate(const SqrtDensityModel& m, const Point& x);
Eigen::VectorXd evaluate(const SqrtDensityModel& m, const RowMatrix& points);

/// The density estimate evaluate(x)^2.
double density(const SqrtDensityModel& m, const Point& x);

/// Coefficients of the estimate fitted without observation `removed`.
/// Coefficients listed in `changed` are recomputed; every other one is the
/// full-sample value times `rescale` = sqrt(n / (n - 1)).
struct CoeffLooDelta {
  Index removed = -1;
  double rescale = 1.0;
  std::vector<Coefficient> changed;  // sorted by basis_index_less
};

CoeffLooDelta loo_coefficients(const SampleSet& s, const NeighborTable& t,
                               const SqrtDensityModel& m, Index i);

/// The leave-one-out model spelled out from a delta.
SqrtDensityModel apply_loo(const SqrtDensityModel& m, const CoeffLooDelta& delta);

}  // namespace wde
