#pragma once

// Resolution selection by leave-one-out Hellinger-Bhattacharyya criteria,
// and the oracle resolutions against a known density.
//
// B-hat(J)   = n^{-1/2} sum_i w_i |g^(-i)(X_i)|, g^(-i) normalized,
// B-hat-o(J) = same with g^(-i) unnormalized, minus ||g_J||^2 / 2,
// where w_i = 2 sqrt(V_i / pi) uses the full-sample volumes.

#include "wde/eval_metrics.hpp"
#include "wde/loo_engine.hpp"
#include "wde/sim_densities.hpp"
#include "wde/sqrt_estimator.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace wde {

/// Criterion values over a candidate grid (resolutions J or thresholds tau).
struct CvCurve {
  std::vector<Index> candidates;
  std::vector<double> values;
  Index argmax = 0;  // candidate attaining the maximum, lowest candidate on ties

  double max_value() const;
  Index size() const { return static_cast<Index>(candidates.size()); }
};

/// Builds a curve and its argmax. Throws on empty input, size mismatch or
/// non-finite values.
CvCurve make_curve(std::vector<Index> candidates, std::vector<double> values);

/// CSV with header "candidate,criterion,is_argmax".
void write_curve_csv(std::ostream& out, const CvCurve& curve);

enum class Criterion { normalized, unnormalized };
std::string to_string(Criterion c);
Criterion parse_criterion(std::string_view text);  // "norm" / "normalized" / "unnorm" / "unnormalized"

/// All J with n^eps / C' <= 2^J <= C' n^(1 - eps). Needs 0 < eps < 1/2 and
/// C' >= 1; throws std::invalid_argument on bad parameters or an empty range.
std::vector<int> candidate_resolutions(Index n, double epsilon = 0.2, double c_prime = 1.0);

struct ResolutionBounds {
  Index n = 0;
  double epsilon = 0.2;
  double c_prime = 1.0;
  double c = 1.0;    // cardinality bound C n^rho
  double rho = 1.0;

  /// The candidate list; throws if it violates the cardinality bound.
  std::vector<int> candidates() const;
};

/// Both criteria for fathers at j0 and mothers at j0..J over the data box.
LooCriteria resolution_criteria(const SampleSet& s, const NeighborTable& t, const DyadicTable& table,
                                int j0, int J, int eval_depth = kDefaultEvalDepth);

double b_hat(const SampleSet& s, const NeighborTable& t, const DyadicTable& table, int j0, int J,
             int eval_depth = kDefaultEvalDepth);
double b_hat_circ(const SampleSet& s, const NeighborTable& t, const DyadicTable& table, int j0, int J,
                  int eval_depth = kDefaultEvalDepth);

struct ResolutionScan {
  CvCurve normalized;    // B-hat(J)
  CvCurve unnormalized;  // B-hat-o(J)
  std::vector<Index> zero_norm_terms;  // per candidate

  const CvCurve& curve(Criterion c) const { return c == Criterion::normalized ? normalized : unnormalized; }
};

/// Both criteria for every candidate J, using the single-level form with
/// fathers at level J + 1 (which spans the same space as any j0..J).
ResolutionScan scan_resolutions(const SampleSet& s, const NeighborTable& t, const DyadicTable& table,
                                const std::vector<int>& candidates, int eval_depth = kDefaultEvalDepth);

CvCurve select_resolution(const SampleSet& s, const NeighborTable& t, const DyadicTable& table,
                          const ResolutionBounds& bounds, Criterion criterion,
                          int eval_depth = kDefaultEvalDepth);

/// sqrt f of a known density on quadrature grids over a box holding its
/// mass, with values cached per grid.
class Truth {
 public:
  explicit Truth(const AnalyticDensity& density);
  Truth(DensityFunction density, Box box);

  int dim() const { return box_.dim(); }
  const Box& box() const { return box_; }
  const GridFunction& sqrt_density() const { return sqrt_density_; }
  /// Grid over the box with `nodes_per_cell` nodes per 2^-finest_level cell,
  /// never fewer than default_nodes(d) and never more than max_nodes(d) per
  /// axis.
  QuadratureGrid grid_for_level(int finest_level, double nodes_per_cell = 4.0) const;

  /// int |g| sqrt f. Starts at 4 nodes per finest cell and doubles while
  /// error * scale exceeds `tolerance` and the node cap allows. The caller
  /// decides what to do with a result that is still too coarse.
  QuadratureResult affinity(const SqrtDensityModel& m, double tolerance, double scale = 1.0) const;

  /// Per-axis node cap: 65536, 2048, 256, 64 for d = 1..4.
  static Index max_nodes(int dim);

 private:
  Box box_;
  GridFunction sqrt_density_;
};

/// 1 - int |g| sqrt f for a normalized model: its squared Hellinger distance
/// to the truth (both integrate to one exactly).
QuadratureResult hellinger_to_truth(const SqrtDensityModel& normalized_model, const Truth& truth,
                                    double tolerance = kDefaultQuadratureTolerance);

/// 1 - int sqrt(k f) for a kernel estimate over the truth box. The grid
/// doubles from default_nodes(d) until the error estimate meets `tolerance`;
/// QuadratureError is thrown when the node cap is reached first.
QuadratureResult hellinger_to_truth(const KdeModel& kde, const Truth& truth,
                                    double tolerance = kDefaultQuadratureTolerance);

struct OracleResolution {
  CvCurve affinity;        // B(J) = int |g_J| sqrt f, g_J normalized
  CvCurve affinity_circ;   // B-o(J) = int |g_J| sqrt f - ||g_J||^2 / 2, unnormalized
  std::vector<double> affinity_error;       // quadrature error estimate per candidate
  std::vector<double> affinity_circ_error;
  int J_star() const { return static_cast<int>(affinity.argmax); }
  int J_circ_star() const { return static_cast<int>(affinity_circ.argmax); }
};

/// Both oracle curves. The tolerance applies where it matters for the
/// argmax: the maximizer and every candidate whose error bar overlaps it must
/// be computed to within `tolerance`, otherwise QuadratureError is thrown.
OracleResolution oracle_resolution(const Truth& truth, const SampleSet& s, const NeighborTable& t,
                                   std::shared_ptr<const DyadicTable> table,
                                   const std::vector<int>& candidates,
                                   int eval_depth = kDefaultEvalDepth,
                                   double tolerance = 1e-3);

}  // namespace wde
