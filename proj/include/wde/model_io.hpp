#pragma once

// JSON persistence of fitted models and threshold reports.
//
// Model: {basis, d, j0, J, normalized, coeff_norm, coefficients: [{j, z, q, value}]}
// with q the tensor type bitmask (bit a set: mother along axis a). Doubles are
// written in shortest round-trip form, so a reload is bit-identical. Optional
// fields: eval_depth, sample_size, zero_volume_points, and `unit_box` when the
// model was fitted on rescaled data.

#include "wde/sqrt_estimator.hpp"
#include "wde/thresholding.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace wde {

/// Affine map of the data box onto [0, 1]^d: x -> (x - lo) / width.
struct UnitBoxMap {
  Point lo;
  Point width;

  static UnitBoxMap fit(const RowMatrix& points);
  int dim() const { return static_cast<int>(lo.size()); }
  Point apply(const Point& x) const;
  RowMatrix apply(const RowMatrix& points) const;
  /// 1 / prod(width): density factor back to the original coordinates.
  double jacobian() const;
};

struct StoredModel {
  SqrtDensityModel model;
  std::optional<UnitBoxMap> unit_box;

  /// Density in the original coordinates.
  double density(const Point& x) const;
};

class ModelFormatError : public DataError {
 public:
  using DataError::DataError;
};

nlohmann::json model_to_json(const SqrtDensityModel& m, const std::optional<UnitBoxMap>& unit_box = {});
/// Throws ModelFormatError on missing fields, bad shapes or an unknown basis.
StoredModel model_from_json(const nlohmann::json& j);

void save_model(const std::filesystem::path& path, const SqrtDensityModel& m,
                const std::optional<UnitBoxMap>& unit_box = {});
StoredModel load_model(const std::filesystem::path& path);

/// {rule, tau, kappa_at_cut, kept, dropped, curve_ref}; kappa_at_cut is null
/// when nothing is dropped and the string "inf" for an infinite statistic.
nlohmann::json report_to_json(const ThresholdReport& r);

}  // namespace wde
