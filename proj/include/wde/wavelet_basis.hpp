#pragma once

// Compactly supported orthonormal wavelets evaluated from dyadic value tables.
//
// A family is fixed by its lowpass filter h (sum h = sqrt 2). The father
// solves phi(x) = sqrt2 sum_k h_k phi(2x - k) and the mother is
// psi(x) = sqrt2 sum_k g_k phi(2x - k) with g_k = (-1)^k h_{L-1-k}; both live
// on [0, L-1]. Values are tabulated on the grid m 2^-depth and interpolated
// (linearly, or piecewise-constantly for Haar).

#include "wde/types.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wde {

enum class FamilyKind { haar, daubechies, symlet };

struct WaveletFamily {
  FamilyKind kind = FamilyKind::haar;
  int order = 1;                // vanishing moments
  std::vector<double> lowpass;  // h_0 .. h_{L-1}

  std::string name() const;
  int filter_length() const { return static_cast<int>(lowpass.size()); }
  /// The 1-D support of father and mother is [0, support_hi()].
  int support_hi() const { return filter_length() - 1; }
  std::vector<double> highpass() const;
  bool piecewise_constant() const { return kind == FamilyKind::haar; }
};

/// Parses "haar", "db2".."db10", "sym2".."sym10". Throws std::invalid_argument.
WaveletFamily make_family(std::string_view name);
std::vector<std::string> supported_families();

enum class WaveletKind { father, mother };

inline constexpr int kDefaultEvalDepth = 10;
inline constexpr int kDefaultTableDepth = 16;
inline constexpr std::size_t kDefaultTableCap = std::size_t{1} << 26;

/// Father and mother values on the dyadic grid {m 2^-depth : 0 <= m <= S 2^depth}.
/// Immutable once built; every lookup is const and thread-safe.
class DyadicTable {
 public:
  DyadicTable(WaveletFamily family, int depth, std::vector<double> father,
              std::vector<double> mother);

  const WaveletFamily& family() const { return family_; }
  int depth() const { return depth_; }
  int support_hi() const { return family_.support_hi(); }
  std::span<const double> values(WaveletKind kind) const;

  /// Value at the grid node m 2^-node_depth (node_depth <= depth()).
  double node(WaveletKind kind, int node_depth, std::int64_t m) const;

  /// Interpolated value at y using the grid of the given depth.
  double lookup(WaveletKind kind, double y, int at_depth) const;
  double lookup(WaveletKind kind, double y) const { return lookup(kind, y, depth_); }

 private:
  const std::vector<double>& data(WaveletKind kind) const {
    return kind == WaveletKind::father ? father_ : mother_;
  }

  WaveletFamily family_;
  int depth_;
  std::vector<double> father_;
  std::vector<double> mother_;
};

/// Exact values at the integers, then dyadic refinement through the two-scale
/// relation down to the requested depth.
DyadicTable build_table(const WaveletFamily& family, int depth,
                        std::size_t max_entries = kDefaultTableCap);

/// Process-wide cache of tables keyed by (family name, depth).
std::shared_ptr<const DyadicTable> shared_table(std::string_view family_name,
                                                int depth = kDefaultTableDepth);

/// 2^{j/2} f(2^j x - z) with f the father or mother; 0 outside the support.
double eval_1d(const DyadicTable& table, WaveletKind kind, int j, int z, double x);
double eval_1d(const DyadicTable& table, WaveletKind kind, int j, int z, double x,
               int at_depth);

/// Tensor basis index. Bit b of `type` set means the mother is used along
/// coordinate b (bit 0 is the first coordinate); type 0 is the father tensor.
struct BasisIndex {
  int level = 0;
  int type = 0;
  Translation z;

  int dim() const { return static_cast<int>(z.size()); }
  bool is_father() const { return type == 0; }
  WaveletKind kind(int axis) const {
    return (type >> axis) & 1 ? WaveletKind::mother : WaveletKind::father;
  }
  friend bool operator==(const BasisIndex& a, const BasisIndex& b) {
    return a.level == b.level && a.type == b.type && a.z.size() == b.z.size() && a.z == b.z;
  }
};

/// Lexicographic (level, type, z).
bool basis_index_less(const BasisIndex& a, const BasisIndex& b);

struct BasisIndexHash {
  std::size_t operator()(const BasisIndex& idx) const noexcept;
};

double eval_tensor(const DyadicTable& table, const BasisIndex& idx, const Point& x);
double eval_tensor(const DyadicTable& table, const BasisIndex& idx, const Point& x,
                   int at_depth);

/// Translations z whose open support (z, z + S) 2^-j meets the box, per axis:
/// z in (2^j lo - S, 2^j hi). Returned in lexicographic order.
std::vector<Translation> active_translations(const DyadicTable& table, int j, const Box& box);

/// Integer range [first, last] of active_translations along one axis.
std::pair<int, int> active_range(int support_hi, int j, double lo, double hi);

/// 1-D values of the level-j functions at x: translations first, first+1, ...
/// Only translations with 2^j x - z in [0, S) are listed.
struct AxisValues {
  int first = 0;
  int count = 0;
  std::array<double, 24> father{};
  std::array<double, 24> mother{};
};
AxisValues axis_values(const DyadicTable& table, int j, double x, int at_depth);

}  // namespace wde
