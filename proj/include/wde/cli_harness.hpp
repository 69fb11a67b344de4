#pragma once

// Pipelines behind the command-line tool: CSV input, the fit pipeline
// (resolution scan, optional thresholding, normalization), simulation
// batteries against catalog densities, the kernel baseline and summaries.

#include "wde/model_io.hpp"
#include "wde/model_selection.hpp"
#include "wde/sim_densities.hpp"
#include "wde/thresholding.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wde {

/// One observation per row, d numeric columns. A first row with a
/// non-numeric cell is a header. Errors carry "source:line".
RowMatrix read_points_csv(std::istream& in, const std::string& source);
RowMatrix read_points_csv(const std::filesystem::path& path);

/// Rows with 17 significant digits.
void write_points_csv(std::ostream& out, const RowMatrix& points, const std::vector<double>* values = nullptr,
                      const std::string& value_name = "value");

/// `none` is represented by an empty optional.
using ThresholdRule = std::optional<ThresholdKind>;
std::string rule_name(const ThresholdRule& rule);
ThresholdRule parse_rule(std::string_view text);  // universal, level, jackknife, none

struct PipelineOptions {
  std::string basis = "db4";
  int delta_j = 2;
  Criterion criterion = Criterion::normalized;
  ThresholdRule rule = ThresholdKind::jackknife;
  double epsilon = 0.2;
  double c_prime = 1.0;
};

/// j0 = J - delta_j, clamped at 0.
int coarse_level(int J, int delta_j);

struct PipelineResult {
  ResolutionScan scan;
  int J_hat = 0;
  int j0 = 0;
  Index total = 0;                    // coefficients of the unthresholded fit
  std::optional<CvCurve> tau_curve;   // absent for rule none
  std::optional<ThresholdReport> report;
  SqrtDensityModel model;             // final, normalized
};

/// select_resolution, fit at (j0, J-hat), optional thresholding with tau
/// chosen by the same criterion, then normalization.
PipelineResult run_pipeline(const SampleSet& s, const PipelineOptions& options);

/// The text report of a fit: J-hat, tau-hat, kept / total coefficients and
/// the criterion maxima.
void write_fit_report(std::ostream& out, const PipelineResult& r, const PipelineOptions& options,
                      const std::string& source, Index n, int d);

struct SimulationConfig {
  std::string density = "kurtotic-mix-1";
  std::vector<Index> sizes{250, 1000, 2000};
  int replicates = 30;
  std::string basis = "db4";
  std::vector<int> delta_j{1, 2, 3};
  std::vector<Criterion> criteria{Criterion::normalized, Criterion::unnormalized};
  std::vector<ThresholdRule> rules{ThresholdKind::universal, ThresholdKind::level_dependent,
                                   ThresholdKind::jackknife};
  std::uint64_t seed = 1;
  int jobs = 1;
  bool kde = true;
  double epsilon = 0.2;
  double c_prime = 1.0;

  /// The battery behind --full: 100 replicates, n from 250 to 6000.
  static SimulationConfig full_battery();
  void validate() const;  // throws std::invalid_argument
};

struct ResultRow {
  std::string density;
  std::string basis;
  Index n = 0;
  Criterion criterion = Criterion::normalized;
  int delta_j = 0;
  ThresholdRule rule;
  int replicate = 0;
  std::uint64_t seed = 0;
  int J_hat = 0;
  int j0 = 0;
  Index tau = 0;
  Index kept = 0;
  Index total = 0;
  double hellinger_sq = 0.0;
};

struct KdeRow {
  std::string density;
  Index n = 0;
  int replicate = 0;
  std::uint64_t seed = 0;
  Eigen::VectorXd bandwidth;
  double hellinger_sq = 0.0;
};

struct SimulationResult {
  std::vector<ResultRow> rows;  // ordered by (n, replicate, criterion, delta_j, rule)
  std::vector<KdeRow> kde;      // ordered by (n, replicate)
};

/// Replicate r draws its sample with seed + r. Replicates run on up to
/// `jobs` threads; the output order does not depend on scheduling. A failure
/// is rethrown with its replicate index.
SimulationResult simulate(const SimulationConfig& config);

/// The kernel column alone, on the same seeds as simulate.
std::vector<KdeRow> kde_baseline(const SimulationConfig& config);

/// Type-7 quantile (linear interpolation between order statistics).
double quantile7(std::vector<double> values, double p);

void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows);
void write_kde_csv(std::ostream& out, const std::vector<KdeRow>& rows);
/// One line per (n, criterion, delta_j, rule) with Q1 / median / Q3 of the
/// squared Hellinger distances, the median kept count and the kernel
/// quartiles at the same n.
void write_summary_csv(std::ostream& out, const std::vector<ResultRow>& rows, const std::vector<KdeRow>& kde);

}  // namespace wde
