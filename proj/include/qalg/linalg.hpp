#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qalg/error.hpp"

namespace qalg {

// Dense matrix over an arbitrary ring T.  A zero exemplar is stored so that
// context-carrying coefficient types work; entries are row-major.
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(static_cast<size_t>(rows) * cols, zero) {}

  static Mat identity(int n, const T& one, const T& zero) {
    Mat m(n, n, zero);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const T& zero_elem() const { return zero_; }

  T& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const T& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  friend Mat operator+(const Mat& a, const Mat& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, errc::non_conformant, "matrix shape mismatch");
    Mat r = a;
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, errc::non_conformant, "matrix shape mismatch");
    Mat r = a;
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    require(a.cols_ == b.rows_, errc::non_conformant, "matrix shape mismatch");
    Mat r(a.rows_, b.cols_, a.zero_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        for (int j = 0; j < b.cols_; ++j) r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
      }
    return r;
  }

  Mat scaled_left(const T& s) const {
    Mat r = *this;
    for (auto& x : r.data_) x = s * x;
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    require(static_cast<int>(v.size()) == cols_, errc::non_conformant, "vector length mismatch");
    std::vector<T> out(static_cast<size_t>(rows_), zero_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(i)] = out[static_cast<size_t>(i)] + at(i, j) * v[static_cast<size_t>(j)];
    return out;
  }

 private:
  int rows_, cols_;
  T zero_;
  std::vector<T> data_;
};

// Determinant over a commutative field (exact Gaussian elimination).
template <class T>
T det_field(Mat<T> m) {
  require(m.is_square(), errc::non_square, "determinant needs a square matrix");
  int n = m.rows();
  if (n == 0) fail(errc::bad_parameters, "empty matrix");
  T det = m.zero_elem();
  bool neg = false;
  det = m.at(0, 0).one();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return m.zero_elem();
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      neg = !neg;
    }
    det = det * m.at(col, col);
    T inv = m.at(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      T factor = m.at(r, col) * inv;
      for (int c = col; c < n; ++c) m.at(r, c) = m.at(r, c) - factor * m.at(col, c);
    }
  }
  return neg ? -det : det;
}

// Determinant over a commutative ring without division: Laplace expansion
// along rows with memoization on column subsets (sizes up to ~12).
// `one` is the multiplicative identity of T (empty-minor base case).
template <class T>
T det_ring(const Mat<T>& m, const T& one) {
  require(m.is_square(), errc::non_square, "determinant needs a square matrix");
  int n = m.rows();
  require(n <= 12, errc::size_cap, "ring determinant capped at 12x12");
  std::map<uint32_t, T> memo;
  // minor over rows [n-|mask| .. n) and the columns in mask
  auto rec = [&](auto&& self, uint32_t mask) -> T {
    if (mask == 0) return one;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int size = __builtin_popcount(mask);
    int row = n - size;
    T acc = m.zero_elem();
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (!(mask >> c & 1)) continue;
      if (!m.at(row, c).is_zero()) {
        T sub = self(self, mask & ~(1u << c));
        T term = m.at(row, c) * sub;
        acc = (sign > 0) ? acc + term : acc - term;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  uint32_t full = (n >= 32) ? 0xffffffffu : ((1u << n) - 1);
  return rec(rec, full);
}

namespace detail {
template <class T>
T one_like_entry(const Mat<T>& m) {
  return m.at(0, 0).one();
}
}  // namespace detail

// division-ring (quaternion) elimination: all row operations multiply from
// the left, preserving the right kernel of the matrix.

// Row echelon reduction in place; returns rank.
template <class T>
int row_reduce_left(Mat<T>& m) {
  int n = m.rows(), cols = m.cols();
  int rank = 0;
  for (int col = 0; col < cols && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    T inv = m.at(rank, col).inverse();
    for (int c = 0; c < cols; ++c) m.at(rank, c) = inv * m.at(rank, c);
    for (int r = 0; r < n; ++r) {
      if (r == rank || m.at(r, col).is_zero()) continue;
      T factor = m.at(r, col);
      for (int c = 0; c < cols; ++c) m.at(r, c) = m.at(r, c) - factor * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

template <class T>
int rank_left(Mat<T> m) {
  return row_reduce_left(m);
}

// One nonzero right-kernel vector (A v = 0), if the kernel is nontrivial.
template <class T>
std::optional<std::vector<T>> kernel_vector(Mat<T> m) {
  int cols = m.cols();
  row_reduce_left(m);
  // locate pivot columns
  std::vector<int> pivot_col;
  for (int r = 0; r < m.rows(); ++r) {
    int c = 0;
    while (c < cols && m.at(r, c).is_zero()) ++c;
    if (c < cols) pivot_col.push_back(c);
  }
  if (static_cast<int>(pivot_col.size()) == cols) return std::nullopt;
  // first free column
  int free_col = 0;
  {
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    while (is_pivot[static_cast<size_t>(free_col)]) ++free_col;
  }
  const T zero = m.zero_elem();
  const T one = detail::one_like_entry(m);
  std::vector<T> v(static_cast<size_t>(cols), zero);
  v[static_cast<size_t>(free_col)] = one;
  for (size_t r = 0; r < pivot_col.size(); ++r)
    v[static_cast<size_t>(pivot_col[r])] = -m.at(static_cast<int>(r), free_col);
  return v;
}

// Two-sided inverse by [A | I] elimination; throws when singular.
template <class T>
Mat<T> inverse_matrix(const Mat<T>& a, const T& one) {
  require(a.is_square(), errc::non_square, "inverse needs a square matrix");
  int n = a.rows();
  Mat<T> aug(n, 2 * n, a.zero_elem());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = one;
  }
  int rank = row_reduce_left(aug);
  require(rank == n, errc::not_invertible, "matrix is singular");
  Mat<T> inv(n, n, a.zero_elem());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace qalg
