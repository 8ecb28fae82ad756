// matrix.hpp — dense square matrix over arbitrary-precision integers.
#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "circforest/integers.hpp"

namespace circforest {

class IntegerMatrix {
 public:
  explicit IntegerMatrix(int order) : order_(order), a_(static_cast<std::size_t>(order) * order) {
    assert(order >= 0);
  }

  static IntegerMatrix identity(int order) {
    IntegerMatrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = 1;
    return m;
  }

  int order() const { return order_; }

  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * order_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * order_ + j]; }

  void swap_rows(int i, int j) {
    for (int k = 0; k < order_; ++k) std::swap(at(i, k), at(j, k));
  }

  bool is_symmetric() const {
    for (int i = 0; i < order_; ++i)
      for (int j = i + 1; j < order_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  IntegerMatrix& add_identity() {
    for (int i = 0; i < order_; ++i) at(i, i) += 1;
    return *this;
  }

 private:
  int order_;
  std::vector<Int> a_;
};

}  // namespace circforest
