#include "btes/sparse.hpp"

#include <algorithm>

#include "btes/errors.hpp"

namespace btes {

CsrMatrix CsrMatrix::from_triplets(int rows, int cols, std::vector<Triplet> triplets) {
  for (const auto& t : triplets) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols) {
      throw ArgumentError("sparse: triplet index out of range");
    }
  }
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  CsrMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.row_ptr_.assign(static_cast<size_t>(rows) + 1, 0);
  m.col_idx_.reserve(triplets.size());
  m.vals_.reserve(triplets.size());

  size_t i = 0;
  for (int r = 0; r < rows; ++r) {
    while (i < triplets.size() && triplets[i].row == r) {
      const int c = triplets[i].col;
      double v = 0;
      while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c) {
        v += triplets[i].value;
        ++i;
      }
      m.col_idx_.push_back(c);
      m.vals_.push_back(v);
    }
    m.row_ptr_[r + 1] = static_cast<int>(m.col_idx_.size());
  }
  return m;
}

void CsrMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  if (static_cast<int>(x.size()) != cols_ || static_cast<int>(y.size()) != rows_) {
    throw ArgumentError("sparse: multiply dimension mismatch");
  }
  for (int r = 0; r < rows_; ++r) {
    double sum = 0;
    for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      sum += vals_[k] * x[col_idx_[k]];
    }
    y[r] = sum;
  }
}

}  // namespace btes
