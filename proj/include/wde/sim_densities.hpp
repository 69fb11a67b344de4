#pragma once

// Analytic test densities: finite mixtures of Gaussian, uniform-box and
// tensor-product tent ("pyramid") components, evaluable pointwise and
// sampled exactly from a seeded std::mt19937_64.

#include "wde/types.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wde {

enum class DensityKind { gaussian_mixture, uniform_box, pyramid_mixture, comb, claw };

std::string to_string(DensityKind kind);

using Covariance = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

struct MixtureComponent {
  enum class Shape { gaussian, box, pyramid };
  Shape shape = Shape::gaussian;
  double weight = 1.0;
  Point center;
  Covariance covariance;  // gaussian only
  Point half_width;       // box and pyramid: half side length per axis
};

class AnalyticDensity {
 public:
  AnalyticDensity(std::string name, DensityKind kind, std::vector<MixtureComponent> components);

  const std::string& name() const { return name_; }
  DensityKind kind() const { return kind_; }
  int dim() const { return dim_; }
  const std::vector<MixtureComponent>& components() const { return components_; }

  /// Pointwise density value. Throws on dimension mismatch.
  double operator()(const Point& x) const;

  /// Cumulative distribution of coordinate `axis`.
  double marginal_cdf(int axis, double x) const;

  /// A box holding all but a negligible fraction of the mass (Gaussians are
  /// cut at 8 standard deviations).
  Box support_box() const;

 private:
  struct Factor {
    Covariance precision;
    Covariance cholesky;
    double log_norm = 0.0;
  };

  std::string name_;
  DensityKind kind_;
  int dim_ = 0;
  std::vector<MixtureComponent> components_;
  std::vector<Factor> factors_;
};

double density_eval(const AnalyticDensity& f, const Point& x);

/// n exact draws: component label first, then the component draw. The stream
/// is std::mt19937_64 seeded with `seed`; n = 0 is rejected.
RowMatrix sample(const AnalyticDensity& f, Index n, std::uint64_t seed);

/// The named densities used by the simulations.
std::vector<std::string> catalog_names();
AnalyticDensity catalog(std::string_view name);

/// Convenience constructors.
AnalyticDensity gaussian(std::string name, const Point& mean, const Covariance& covariance);
AnalyticDensity uniform(std::string name, const Box& box);

}  // namespace wde
