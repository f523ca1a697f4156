#ifndef SCROLL_CORE_LINALG_HPP
#define SCROLL_CORE_LINALG_HPP

#include <cstdint>
#include <vector>

#include "core/field.hpp"

namespace scroll {

/// Dense row-major matrix over GF(p).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& at(int r, int c) {
    return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
  }
  std::int64_t at(int r, int c) const {
    return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

int rank(const Fp& fp, FpMatrix m);

/// Basis of the right null space {z : Mz = 0}, as coordinate vectors.
std::vector<std::vector<std::int64_t>> nullspace(const Fp& fp, FpMatrix m);

/// Whether v lies in the span of the given vectors.
bool in_span(const Fp& fp, const std::vector<std::vector<std::int64_t>>& span,
             const std::vector<std::int64_t>& v);

}  // namespace scroll

#endif
