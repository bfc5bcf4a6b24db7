#pragma once

#include <optional>
#include <vector>

#include "iceq/rational.hpp"

namespace iceq {

// Dense exact rational matrix. Small dimensions throughout, so no
// attempt at sparsity or fraction-free pivoting.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool is_zero() const;
  Mat transpose() const;
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  Mat scaled(const Rat& c) const;
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::vector<Rat> apply(const std::vector<Rat>& v) const;  // this * v
  Mat col(int c) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Row reduction in place; returns rank, records pivot columns.
int rref(Mat& m, std::vector<int>* pivot_cols = nullptr);

int rank(Mat m);

// Columns span the null space {x : m x = 0}; cols() == nullity.
Mat kernel_basis(const Mat& m);

// Columns form a basis of the column space, chosen among the input
// columns (pivot columns); indices of the chosen columns optional.
Mat column_space_basis(const Mat& m, std::vector<int>* chosen = nullptr);

// First solution of A x = b with free variables set to zero.
std::optional<std::vector<Rat>> solve(const Mat& A, const std::vector<Rat>& b);

// Solve A X = B column by column; nullopt if any column unsolvable.
std::optional<Mat> solve_matrix(const Mat& A, const Mat& B);

std::optional<Mat> inverse(const Mat& m);

// Horizontal/vertical concatenation.
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

// Coordinates of v in the span of the columns of basis (which must be
// linearly independent); nullopt if v is outside the span.
std::optional<std::vector<Rat>> coordinates_in(const Mat& basis, const std::vector<Rat>& v);

}  // namespace iceq
