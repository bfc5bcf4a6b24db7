#include "iceq/linalg.hpp"

#include <stdexcept>

namespace iceq {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Mat p(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rat& bkj = b.at(k, j);
        if (!bkj.is_zero()) p.at(i, j) += aik * bkj;
      }
    }
  return p;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  Mat s(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) s.a_[i] = a.a_[i] + b.a_[i];
  return s;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  Mat s(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) s.a_[i] = a.a_[i] - b.a_[i];
  return s;
}

Mat Mat::scaled(const Rat& c) const {
  Mat s(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] * c;
  return s;
}

std::vector<Rat> Mat::apply(const std::vector<Rat>& v) const {
  if ((int)v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
  std::vector<Rat> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

Mat Mat::col(int c) const {
  Mat m(rows_, 1);
  for (int r = 0; r < rows_; ++r) m.at(r, 0) = at(r, c);
  return m;
}

int rref(Mat& m, std::vector<int>* pivot_cols) {
  int rank = 0;
  if (pivot_cols) pivot_cols->clear();
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (!m.at(r, c).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
    Rat inv = m.at(rank, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(rank, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m.at(r, c).is_zero()) continue;
      Rat f = m.at(r, c);
      for (int j = c; j < m.cols(); ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++rank;
  }
  return rank;
}

int rank(Mat m) { return rref(m); }

Mat kernel_basis(const Mat& m) {
  Mat r = m;
  std::vector<int> piv;
  int rk = rref(r, &piv);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  Mat k(m.cols(), m.cols() - rk);
  int out = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_piv[c]) continue;
    k.at(c, out) = Rat(1);
    for (int i = 0; i < rk; ++i) k.at(piv[i], out) = -r.at(i, c);
    ++out;
  }
  return k;
}

Mat column_space_basis(const Mat& m, std::vector<int>* chosen) {
  Mat r = m;
  std::vector<int> piv;
  rref(r, &piv);
  if (chosen) *chosen = piv;
  Mat b(m.rows(), (int)piv.size());
  for (int j = 0; j < (int)piv.size(); ++j)
    for (int i = 0; i < m.rows(); ++i) b.at(i, j) = m.at(i, piv[j]);
  return b;
}

std::optional<std::vector<Rat>> solve(const Mat& A, const std::vector<Rat>& b) {
  if ((int)b.size() != A.rows()) throw std::invalid_argument("solve shape mismatch");
  Mat aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  std::vector<int> piv;
  int rk = rref(aug, &piv);
  for (int i = 0; i < rk; ++i)
    if (piv[i] == A.cols()) return std::nullopt;  // inconsistent
  std::vector<Rat> x(A.cols());
  for (int i = 0; i < rk; ++i) x[piv[i]] = aug.at(i, A.cols());
  return x;
}

std::optional<Mat> solve_matrix(const Mat& A, const Mat& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("solve_matrix shape mismatch");
  Mat X(A.cols(), B.cols());
  for (int j = 0; j < B.cols(); ++j) {
    std::vector<Rat> b(B.rows());
    for (int i = 0; i < B.rows(); ++i) b[i] = B.at(i, j);
    auto x = solve(A, b);
    if (!x) return std::nullopt;
    for (int i = 0; i < A.cols(); ++i) X.at(i, j) = (*x)[i];
  }
  return X;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Mat aug = hstack(m, Mat::identity(m.rows()));
  int rk = rref(aug);
  if (rk != m.rows()) return std::nullopt;
  Mat inv(m.rows(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) inv.at(i, j) = aug.at(i, m.cols() + j);
  return inv;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack shape mismatch");
  Mat m(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack shape mismatch");
  Mat m(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

std::optional<std::vector<Rat>> coordinates_in(const Mat& basis, const std::vector<Rat>& v) {
  return solve(basis, v);
}

}  // namespace iceq
