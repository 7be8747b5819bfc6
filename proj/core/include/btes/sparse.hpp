#pragma once

#include <span>
#include <vector>

namespace btes {

struct Triplet {
  int row;
  int col;
  double value;
};

/// Compressed-row sparse matrix. Column indices are sorted within each row;
/// duplicate triplets are summed on construction.
class CsrMatrix {
 public:
  CsrMatrix() = default;

  static CsrMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nnz() const { return static_cast<int>(vals_.size()); }

  std::span<const int> row_cols(int i) const {
    return {col_idx_.data() + row_ptr_[i], col_idx_.data() + row_ptr_[i + 1]};
  }
  std::span<const double> row_vals(int i) const {
    return {vals_.data() + row_ptr_[i], vals_.data() + row_ptr_[i + 1]};
  }

  /// y = A * x
  void multiply(std::span<const double> x, std::span<double> y) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> row_ptr_ = {0};
  std::vector<int> col_idx_;
  std::vector<double> vals_;
};

}  // namespace btes
