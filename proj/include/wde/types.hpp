#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace wde {

/// Largest supported dimension. Tensor products cost 2^d types and S^d
/// translations per point, so anything past 4 is impractical anyway.
inline constexpr int kMaxDim = 4;

using Index = Eigen::Index;
using Point = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using Translation = Eigen::Matrix<int, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using PointRef = Eigen::Ref<const Eigen::VectorXd>;

/// Pointwise density (or any real function) on R^d.
using DensityFunction = std::function<double(const Point&)>;

/// Raised for malformed or degenerate input data (bad CSV, too few points, ...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Axis-aligned box [lo, hi] in R^d.
struct Box {
  Point lo;
  Point hi;

  int dim() const { return static_cast<int>(lo.size()); }
  double width(int axis) const { return hi(axis) - lo(axis); }
  double volume() const { return (hi - lo).prod(); }
  bool contains(const Point& x) const {
    return (x.array() >= lo.array()).all() && (x.array() <= hi.array()).all();
  }
  Box padded(double margin) const {
    Box b{lo, hi};
    b.lo.array() -= margin;
    b.hi.array() += margin;
    return b;
  }
  Box united(const Box& other) const {
    Box b{lo, hi};
    b.lo = b.lo.cwiseMin(other.lo);
    b.hi = b.hi.cwiseMax(other.hi);
    return b;
  }
};

}  // namespace wde
