#pragma once

// Hard thresholding of the mother coefficients. Coefficients are ranked by a
// statistic (sqrt(n) |beta| / gamma_j, or |beta| / sigma_jack), the model
// keeps every father coefficient plus the top tau mothers, and tau is chosen
// by the leave-one-out criteria with the full-sample ranking held fixed.

#include "wde/loo_engine.hpp"
#include "wde/model_selection.hpp"
#include "wde/sqrt_estimator.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wde {

enum class ThresholdKind { universal, level_dependent, jackknife };

std::string to_string(ThresholdKind kind);
/// "universal", "level" / "level_dependent", "jackknife".
ThresholdKind parse_threshold_kind(std::string_view text);

/// gamma_j: 1 for the universal rule, sqrt(j - j0 + 1) for the level-dependent
/// rule. Not used by the jackknife rule.
double gamma(ThresholdKind kind, int level, int j0);

/// Jackknife summaries of every mother coefficient of a model, in the model's
/// coefficient order.
struct JackknifeVariances {
  std::vector<BasisIndex> index;
  std::vector<JackknifeStat> stats;

  const JackknifeStat* find(const BasisIndex& idx) const;
};

/// Leave-one-out system over the columns of a model fitted on (s, t).
LooSystem loo_system_for(const SampleSet& s, const NeighborTable& t, const SqrtDensityModel& m);

/// Pseudo-values n beta - (n - 1) beta^(-i) of every mother coefficient of an
/// unnormalized model fitted on (s, t).
JackknifeVariances jackknife_variances(const SampleSet& s, const NeighborTable& t,
                                       const SqrtDensityModel& m);
JackknifeVariances jackknife_variances(const LooSystem& system, const SqrtDensityModel& m);

struct RankedEntry {
  BasisIndex index;
  double beta = 0.0;
  double statistic = 0.0;  // +inf for sigma = 0 with beta != 0
};

struct RankedCoefficients {
  ThresholdKind rule = ThresholdKind::universal;
  std::vector<RankedEntry> entries;  // statistic descending

  Index size() const { return static_cast<Index>(entries.size()); }
};

/// Ranks the mother coefficients. Ties go to the lexicographically smaller
/// (level, type, z). Under the jackknife rule a zero sigma ranks first when
/// beta != 0 and last when beta = 0; `jack` is then required.
RankedCoefficients rank_coefficients(const SqrtDensityModel& m, ThresholdKind rule, Index n,
                                     const JackknifeVariances* jack = nullptr);

/// Number of statistics strictly greater than kappa.
Index tau_of_kappa(const RankedCoefficients& r, double kappa);

/// Fathers plus the top-tau mothers; the norm is recomputed.
SqrtDensityModel thresholded_model(const SqrtDensityModel& m, const RankedCoefficients& r, Index tau);

/// Grid of thresholds evaluated by the normalized scan when T is large.
struct TauScanOptions {
  Index full_scan_limit = 512;  // scan every tau when T is at most this
  Index coarse_points = 256;    // roughly this many evenly spaced taus otherwise
};

/// The coarse grid: 0..32, floor(T / 2^k), every ceil(T / coarse_points)-th
/// tau, and T.
std::vector<Index> coarse_tau_grid(Index T, const TauScanOptions& options = {});

/// Criterion over tau for a model fitted on (s, t). The unnormalized
/// criterion costs O(1) per tau and is scanned in full; the normalized one
/// costs O(n) per tau and, past full_scan_limit, is evaluated on the coarse
/// grid and then on every tau between the neighbours of the coarse argmax.
CvCurve select_tau(const SampleSet& s, const NeighborTable& t, const SqrtDensityModel& m,
                   const RankedCoefficients& r, Criterion criterion, const TauScanOptions& options = {});
/// Same, reusing a system built by loo_system_for on the same model.
CvCurve select_tau(const LooSystem& system, const SqrtDensityModel& m, const RankedCoefficients& r,
                   Criterion criterion, const TauScanOptions& options = {});

struct ThresholdReport {
  ThresholdKind rule = ThresholdKind::universal;
  Index tau = 0;
  std::optional<double> kappa_at_cut;  // largest dropped statistic; none when nothing is dropped
  Index kept = 0;                      // coefficients in the thresholded model
  Index dropped = 0;
  std::string curve_ref;
};

ThresholdReport make_report(const SqrtDensityModel& m, const RankedCoefficients& r, Index tau,
                            std::string curve_ref);

}  // namespace wde
