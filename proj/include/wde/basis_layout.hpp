#pragma once

// Column layout of a multi-level tensor wavelet basis. Each (level, type)
// pair owns a dense rectangle of translations; columns run through the
// blocks in (level, type) order and through each rectangle lexicographically,
// so column order equals basis_index_less order.

#include "wde/wavelet_basis.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace wde {

struct LayoutBlock {
  int level = 0;
  int type = 0;
  Translation first;   // lowest translation per axis
  Translation extent;  // number of translations per axis
  Index offset = 0;    // first column of the block
  Index size = 0;
};

/// Translations whose half-open support [z, z + S) 2^-j contains some point
/// of [lo, hi]: z in [floor(2^j lo - S) + 1, floor(2^j hi)].
std::pair<int, int> covering_range(int support_hi, int j, double lo, double hi);

class BasisLayout {
 public:
  BasisLayout() = default;

  /// Fathers at j0 and mothers (all 2^d - 1 types) at j0..J, every block
  /// covering the box. J = j0 - 1 gives the father-only form at level j0.
  static BasisLayout for_box(int support_hi, int dim, int j0, int J, const Box& box);

  /// Appends a block; blocks must arrive in (level, type) order.
  void add_block(int level, int type, const Translation& first, const Translation& extent);

  int dim() const { return dim_; }
  int j0() const { return j0_; }
  int top_level() const { return top_; }  // J
  /// Pins J when the highest mother blocks are absent (thresholded models).
  void set_top_level(int J) { top_ = J; }
  Index size() const { return size_; }
  const std::vector<LayoutBlock>& blocks() const { return blocks_; }

  BasisIndex index(Index column) const;
  std::optional<Index> column(const BasisIndex& idx) const;

  /// Interpolation depth of a level so that every level shares the absolute
  /// grid 2^-(eval_depth + J + 1).
  int depth_at(int level, int eval_depth) const { return eval_depth + top_ + 1 - level; }

  /// Calls f(column, value) for every basis function of the layout that is
  /// nonzero at x.
  template <class F>
  void for_each_at(const DyadicTable& table, int eval_depth, const Point& x, F&& f) const;

 private:
  int dim_ = 0;
  int j0_ = 0;
  int top_ = -1;
  Index size_ = 0;
  std::vector<LayoutBlock> blocks_;
};

template <class F>
void BasisLayout::for_each_at(const DyadicTable& table, int eval_depth, const Point& x,
                              F&& f) const {
  std::array<AxisValues, kMaxDim> axes;
  int current_level = 0;
  bool have_level = false;
  for (const LayoutBlock& b : blocks_) {
    if (!have_level || b.level != current_level) {
      current_level = b.level;
      have_level = true;
      const int depth = depth_at(b.level, eval_depth);
      for (int a = 0; a < dim_; ++a) axes[a] = axis_values(table, b.level, x(a), depth);
    }
    // Per-axis window of local translations that fall inside the block.
    std::array<int, kMaxDim> lo{}, hi{}, cur{};
    bool empty = false;
    for (int a = 0; a < dim_; ++a) {
      lo[a] = std::max(0, b.first(a) - axes[a].first);
      hi[a] = std::min(axes[a].count, b.first(a) + b.extent(a) - axes[a].first);
      if (lo[a] >= hi[a]) empty = true;
      cur[a] = lo[a];
    }
    if (empty) continue;
    while (true) {
      double value = 1.0;
      Index col = 0;
      for (int a = 0; a < dim_; ++a) {
        const bool mother = (b.type >> a) & 1;
        value *= mother ? axes[a].mother[cur[a]] : axes[a].father[cur[a]];
        col = col * b.extent(a) + (axes[a].first + cur[a] - b.first(a));
      }
      if (value != 0.0) f(b.offset + col, value);
      int a = dim_ - 1;
      while (a >= 0) {
        if (++cur[a] < hi[a]) break;
        cur[a] = lo[a];
        --a;
      }
      if (a < 0) break;
    }
  }
}

}  // namespace wde
