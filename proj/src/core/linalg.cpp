#include "core/linalg.hpp"

#include "core/errors.hpp"

namespace scroll {

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelonize(const Fp& fp, FpMatrix& m) {
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = col; c < m.cols(); ++c) {
        std::int64_t tmp = m.at(row, c);
        m.at(row, c) = m.at(pivot, c);
        m.at(pivot, c) = tmp;
      }
    std::int64_t inv = fp.inv(m.at(row, col));
    for (int c = col; c < m.cols(); ++c) m.at(row, c) = fp.mul(m.at(row, c), inv);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      std::int64_t factor = m.at(r, col);
      for (int c = col; c < m.cols(); ++c)
        m.at(r, c) = fp.sub(m.at(r, c), fp.mul(factor, m.at(row, c)));
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

int rank(const Fp& fp, FpMatrix m) {
  return static_cast<int>(echelonize(fp, m).size());
}

std::vector<std::vector<std::int64_t>> nullspace(const Fp& fp, FpMatrix m) {
  std::vector<int> pivots = echelonize(fp, m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<std::int64_t>> basis;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    std::vector<std::int64_t> v(static_cast<size_t>(m.cols()), 0);
    v[static_cast<size_t>(free_col)] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] =
          fp.neg(m.at(static_cast<int>(r), free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const Fp& fp, const std::vector<std::vector<std::int64_t>>& span,
             const std::vector<std::int64_t>& v) {
  if (span.empty()) {
    for (auto x : v)
      if (x != 0) return false;
    return true;
  }
  size_t dim = v.size();
  for (const auto& s : span)
    if (s.size() != dim) throw DimensionError("span vectors of mismatched length");
  FpMatrix without(static_cast<int>(span.size()), static_cast<int>(dim));
  FpMatrix with(static_cast<int>(span.size()) + 1, static_cast<int>(dim));
  for (size_t r = 0; r < span.size(); ++r)
    for (size_t c = 0; c < dim; ++c) {
      without.at(static_cast<int>(r), static_cast<int>(c)) = fp.reduce(span[r][c]);
      with.at(static_cast<int>(r), static_cast<int>(c)) = fp.reduce(span[r][c]);
    }
  for (size_t c = 0; c < dim; ++c)
    with.at(static_cast<int>(span.size()), static_cast<int>(c)) = fp.reduce(v[c]);
  return rank(fp, without) == rank(fp, with);
}

}  // namespace scroll
