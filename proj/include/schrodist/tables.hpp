#pragma once

#include <map>
#include <utility>

#include "schrodist/mpoly.hpp"

namespace schrodist {

/// Sparse two-index table of polynomials for a fixed length n. Lookups
/// outside the stored support read as the zero polynomial.
class PolyTable {
 public:
  PolyTable() = default;
  explicit PolyTable(int n) : n_(n) {}

  int n() const { return n_; }
  const MPoly& at(int i, int j) const {
    static const MPoly kZero;
    auto it = values_.find({i, j});
    return it == values_.end() ? kZero : it->second;
  }
  void set(int i, int j, MPoly value) {
    if (value.is_zero()) {
      values_.erase({i, j});
    } else {
      values_[{i, j}] = std::move(value);
    }
  }
  /// Non-zero entries ordered by (i, j).
  const std::map<std::pair<int, int>, MPoly>& entries() const { return values_; }
  friend bool operator==(const PolyTable&, const PolyTable&) = default;

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, MPoly> values_;
};

}  // namespace schrodist
