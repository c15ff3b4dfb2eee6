#pragma once

#include <optional>
#include <vector>

#include "liejets/rational.hpp"
#include "liejets/rational_function.hpp"

namespace liejets {

inline bool field_is_zero(const Rational& x) { return x == 0; }
inline bool field_is_zero(const RationalFunction& x) { return x.is_zero(); }

// Pivot selection used during elimination. Running a rank computation under
// both strategies and insisting on agreement is a cheap independent check,
// so several tests do exactly that.
enum class PivotStrategy { FirstNonzero, LastNonzero };

template <typename K>
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0), zero_{} {}

  DenseMatrix(std::size_t rows, std::size_t cols, const K& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static DenseMatrix identity(std::size_t n, const K& zero, const K& one) {
    DenseMatrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const K& zero() const { return zero_; }

  K& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw MathError("matrix dimension mismatch in product");
    DenseMatrix c(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (field_is_zero(a.at(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    return c;
  }

  std::vector<K> apply(const std::vector<K>& x) const {
    if (x.size() != cols_) throw MathError("matrix dimension mismatch in apply");
    std::vector<K> y(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!field_is_zero(at(i, j))) y[i] = y[i] + at(i, j) * x[j];
    return y;
  }

  void append_row(const std::vector<K>& row) {
    if (cols_ == 0 && rows_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw MathError("appended row has wrong length");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

  DenseMatrix augment(const DenseMatrix& right) const {
    if (rows_ != right.rows_) throw MathError("augment row mismatch");
    DenseMatrix m(rows_, cols_ + right.cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
    }
    return m;
  }

  DenseMatrix vstack(const DenseMatrix& below) const {
    if (cols_ != below.cols_ && below.rows_ != 0 && rows_ != 0)
      throw MathError("vstack column mismatch");
    std::size_t cols = rows_ ? cols_ : below.cols_;
    DenseMatrix m(rows_ + below.rows_, cols, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
      for (std::size_t j = 0; j < below.cols_; ++j) m.at(rows_ + i, j) = below.at(i, j);
    return m;
  }

  struct Echelon {
    DenseMatrix reduced;              // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per pivot row
  };

  Echelon rref(PivotStrategy strategy = PivotStrategy::FirstNonzero) const {
    DenseMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t chosen = rows_;
      for (std::size_t i = r; i < rows_; ++i) {
        if (!field_is_zero(m.at(i, c))) {
          chosen = i;
          if (strategy == PivotStrategy::FirstNonzero) break;
        }
      }
      if (chosen == rows_) continue;
      if (chosen != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(chosen, j));
      K inv = m.at(r, c);
      for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = m.at(r, j) / inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || field_is_zero(m.at(i, c))) continue;
        K f = m.at(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          m.at(i, j) = m.at(i, j) - f * m.at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return Echelon{std::move(m), std::move(pivots)};
  }

  std::size_t rank(PivotStrategy strategy = PivotStrategy::FirstNonzero) const {
    return rref(strategy).pivots.size();
  }

  // Basis of the right null space, one vector per free column.
  std::vector<std::vector<K>> kernel_basis(const K& one) const {
    Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<K> v(cols_, zero_);
      v[free] = one;
      for (std::size_t pr = 0; pr < e.pivots.size(); ++pr)
        v[e.pivots[pr]] = zero_ - e.reduced.at(pr, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::vector<std::vector<K>> left_kernel_basis(const K& one) const {
    return transpose().kernel_basis(one);
  }

  // One solution of M x = b, or nothing when the system is inconsistent.
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    if (b.size() != rows_) throw MathError("solve rhs length mismatch");
    DenseMatrix rhs(rows_, 1, zero_);
    for (std::size_t i = 0; i < rows_; ++i) rhs.at(i, 0) = b[i];
    Echelon e = augment(rhs).rref();
    for (std::size_t c : e.pivots)
      if (c == cols_) return std::nullopt;
    std::vector<K> x(cols_, zero_);
    for (std::size_t pr = 0; pr < e.pivots.size(); ++pr)
      x[e.pivots[pr]] = e.reduced.at(pr, cols_);
    return x;
  }

  // Is v in the column span?
  bool column_span_contains(const std::vector<K>& v) const {
    return solve(v).has_value();
  }

  std::optional<DenseMatrix> inverse(const K& one) const {
    if (rows_ != cols_) throw MathError("inverse of non-square matrix");
    Echelon e = augment(identity(rows_, zero_, one)).rref();
    if (e.pivots.size() != rows_) return std::nullopt;
    for (std::size_t i = 0; i < rows_; ++i)
      if (e.pivots[i] != i) return std::nullopt;
    DenseMatrix inv(rows_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < rows_; ++j) inv.at(i, j) = e.reduced.at(i, cols_ + j);
    return inv;
  }

 private:
  std::size_t rows_, cols_;
  K zero_;
  std::vector<K> data_;
};

// Determinant by Laplace expansion along the first row. Exponential in n, so
// reserve it for small matrices; its payoff is that every intermediate value
// is a plain product of entries. Over a fraction field like Q(x) that avoids
// the coefficient blowup elimination suffers from.
template <typename K>
K laplace_determinant(const DenseMatrix<K>& a) {
  if (a.rows() != a.cols()) throw MathError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) throw MathError("determinant of empty matrix");
  if (n == 1) return a.at(0, 0);
  K det = a.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (field_is_zero(a.at(0, j))) continue;
    DenseMatrix<K> minor(n - 1, n - 1, a.zero());
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = a.at(r, c);
      }
    }
    K term = a.at(0, j) * laplace_determinant(minor);
    if (j % 2 == 0)
      det = det + term;
    else
      det = det - term;
  }
  return det;
}

// Inverse via the adjugate, entry (i,j) = cofactor_{ji} / det. Same trade-off
// as laplace_determinant and intended for the same small sizes.
template <typename K>
std::optional<DenseMatrix<K>> adjugate_inverse(const DenseMatrix<K>& a, const K& one) {
  if (a.rows() != a.cols()) throw MathError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  K det = laplace_determinant(a);
  if (field_is_zero(det)) return std::nullopt;
  DenseMatrix<K> inv(n, n, a.zero());
  if (n == 1) {
    inv.at(0, 0) = one / det;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      DenseMatrix<K> minor(n - 1, n - 1, a.zero());
      std::size_t rr = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::size_t cc = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc++) = a.at(r, c);
        }
        ++rr;
      }
      K cof = laplace_determinant(minor);
      if ((i + j) % 2 == 1) cof = a.zero() - cof;
      inv.at(i, j) = cof / det;
    }
  return inv;
}

using QMatrix = DenseMatrix<Rational>;
using FMatrix = DenseMatrix<RationalFunction>;

inline QMatrix make_qmatrix(std::size_t rows, std::size_t cols) {
  return QMatrix(rows, cols, Rational(0));
}

inline FMatrix make_fmatrix(std::size_t rows, std::size_t cols, unsigned nvars) {
  return FMatrix(rows, cols, RationalFunction(nvars));
}

}  // namespace liejets
