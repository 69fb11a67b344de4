#pragma once

// Leave-one-out bookkeeping shared by the resolution and threshold criteria.
//
// With unit weights w_k = 2 sqrt(V_k / pi), every coefficient of the layout is
// u_c / sqrt(n) where u_c = sum_k w_k b_c(X_k). Deleting X_i removes its own
// term and moves the points whose nearest neighbour was X_i to their second
// neighbour, so the leave-one-out coefficient is (u_c + e_ic) / sqrt(n - 1)
// with a sparse correction row e_i. The criteria only need u, the basis
// values F_ic = b_c(X_i) and those corrections.

#include "wde/basis_layout.hpp"
#include "wde/sample_geometry.hpp"

#include <Eigen/SparseCore>

#include <span>
#include <vector>

namespace wde {

class LooSystem {
 public:
  using ColMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;

  LooSystem(const SampleSet& s, const NeighborTable& t, const DyadicTable& table,
            BasisLayout layout, int eval_depth);

  Index n() const { return n_; }
  Index columns() const { return layout_.size(); }
  const BasisLayout& layout() const { return layout_; }
  const Eigen::VectorXd& unit_weights() const { return w_; }
  /// u_c = sum_k w_k F_kc.
  const Eigen::VectorXd& sums() const { return u_; }
  /// F_ic = b_c(X_i).
  const ColMatrix& basis() const { return f_; }
  /// e_ic, the change of u_c when X_i is deleted.
  const ColMatrix& changes() const { return e_; }
  /// F_ic on the sparsity pattern of changes() (zero where b_c(X_i) = 0).
  const ColMatrix& basis_on_changes() const { return fe_; }

 private:
  Index n_ = 0;
  BasisLayout layout_;
  Eigen::VectorXd w_;
  Eigen::VectorXd u_;
  ColMatrix f_;
  ColMatrix e_;
  ColMatrix fe_;
};

struct LooCriteria {
  double b_hat = 0.0;       // normalized leave-one-out models
  double b_hat_circ = 0.0;  // unnormalized models minus half the squared norm
  Index zero_norm_terms = 0;
};

/// Running leave-one-out state for a growing set of kept columns.
class LooAccumulator {
 public:
  explicit LooAccumulator(const LooSystem& system);

  void add_column(Index c);
  void reset();

  double b_hat_circ() const;
  /// O(n): the norm of every leave-one-out model changes with each column.
  double b_hat(Index* zero_norm_terms = nullptr) const;
  LooCriteria criteria() const;

 private:
  const LooSystem* sys_;
  Eigen::VectorXd v_;  // sqrt(n - 1) times the leave-one-out model at X_i
  Eigen::VectorXd d_;  // ||u + e_i||^2 - ||u||^2 over kept columns
  double norm_sq_ = 0.0;
  double abs_sum_ = 0.0;  // sum_i w_i |v_i|
};

/// Both criteria with the given columns kept (all columns when empty).
LooCriteria loo_criteria(const LooSystem& system, const std::vector<Index>& kept = {});

/// Jackknife summary of one coefficient beta = u / sqrt(n) from the
/// pseudo-values n beta - (n - 1) beta^(-i).
struct JackknifeStat {
  double beta = 0.0;    // the full-sample coefficient, exactly 0 when no data touches it
  double mean = 0.0;
  double v2 = 0.0;      // sample variance of the pseudo-values (denominator n - 1)
  double sigma2 = 0.0;  // v2 / n
};

JackknifeStat jackknife_column(const LooSystem& system, Index c);

/// The same summary from an explicit list of leave-one-out values.
JackknifeStat jackknife(double beta, std::span<const double> loo_values);

}  // namespace wde
