#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "comod/field.hpp"

namespace comod {

// Dense row-major matrix over an exact field. All pivoting is "first nonzero"
// and every derived basis (kernel, image, solve) is the canonical one coming
// from reduced row echelon form, so results are deterministic and therefore
// directly comparable across routes.
template <class F>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const F& zero)
      : rows_(rows), cols_(cols), zero_(zero), e_(rows * cols, zero) {}

  static Mat zeros(std::size_t rows, std::size_t cols, const F& zero) { return Mat(rows, cols, zero); }

  static Mat identity(std::size_t n, const F& zero) {
    Mat m(n, n, zero);
    F one = one_like(zero);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field_zero() const { return zero_; }
  F field_one() const { return one_like(zero_); }

  F& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const F& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  bool is_zero_matrix() const {
    for (const F& x : e_)
      if (!is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (!(a.e_[i] == b.e_[i])) return false;
    return true;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  friend Mat operator+(const Mat& a, const Mat& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix addition: shape mismatch");
    Mat r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
    return r;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix subtraction: shape mismatch");
    Mat r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
    return r;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    require(a.cols_ == b.rows_, "matrix product: shape mismatch (" + a.shape() + " vs " + b.shape() + ")");
    Mat r(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a.at(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& bkj = b.at(k, j);
          if (!is_zero(bkj)) r.at(i, j) = r.at(i, j) + aik * bkj;
        }
      }
    return r;
  }

  friend Mat operator*(const F& s, const Mat& a) {
    Mat r = a;
    for (auto& x : r.e_) x = s * x;
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Mat col(std::size_t c) const {
    Mat r(rows_, 1, zero_);
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
    return r;
  }

  void set_col(std::size_t c, const Mat& v) {
    require(v.rows_ == rows_ && v.cols_ == 1, "set_col: shape mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, c) = v.at(i, 0);
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  F zero_{};
  std::vector<F> e_;
};

template <class F>
Mat<F> hstack(const Mat<F>& a, const Mat<F>& b) {
  require(a.rows() == b.rows(), "hstack: row mismatch");
  Mat<F> r(a.rows(), a.cols() + b.cols(), a.field_zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

template <class F>
Mat<F> vstack(const Mat<F>& a, const Mat<F>& b) {
  require(a.cols() == b.cols(), "vstack: column mismatch");
  Mat<F> r(a.rows() + b.rows(), a.cols(), a.field_zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

template <class F>
Mat<F> block_diag(const Mat<F>& a, const Mat<F>& b) {
  Mat<F> r(a.rows() + b.rows(), a.cols() + b.cols(), a.field_zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return r;
}

// Kronecker product. Fixes the shared tensor index convention: the basis
// vector e_i (x) e_j of V (x) W sits at flat index i*dim(W) + j, so kron(a, b)
// is exactly "a on the left factor, b on the right factor".
template <class F>
Mat<F> kron(const Mat<F>& a, const Mat<F>& b) {
  Mat<F> r(a.rows() * b.rows(), a.cols() * b.cols(), a.field_zero());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const F& s = a.at(ia, ja);
      if (is_zero(s)) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          const F& t = b.at(ib, jb);
          if (!is_zero(t)) r.at(ia * b.rows() + ib, ja * b.cols() + jb) = s * t;
        }
    }
  return r;
}

template <class F>
struct Rref {
  Mat<F> mat;
  std::vector<std::size_t> pivots;  // pivot column of row k
};

template <class F>
Rref<F> rref(Mat<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t pr = row;
    while (pr < m.rows() && is_zero(m.at(pr, c))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
    F inv = m.field_one() / m.at(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(row, j) = inv * m.at(row, j);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m.at(r, c))) continue;
      F f = m.at(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) - f * m.at(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Mat<F>& m) {
  return rref(m).pivots.size();
}

// Columns form the canonical basis of the null space: one column per free
// variable, with a 1 in the free position.
template <class F>
Mat<F> kernel(const Mat<F>& m) {
  Rref<F> r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat<F> k(m.cols(), free_cols.size(), m.field_zero());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t fc = free_cols[fi];
    k.at(fc, fi) = m.field_one();
    for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
      k.at(r.pivots[pr], fi) = zero_like(m.field_zero()) - r.mat.at(pr, fc);
  }
  return k;
}

// Solves A X = B columnwise; returns the echelon solution with free variables
// set to zero, or nullopt if some column of B is outside the column space.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& a, const Mat<F>& b) {
  require(a.rows() == b.rows(), "solve: row mismatch");
  Rref<F> r = rref(hstack(a, b));
  // a pivot in the B-part means inconsistency
  for (std::size_t c : r.pivots)
    if (c >= a.cols()) return std::nullopt;
  Mat<F> x(a.cols(), b.cols(), a.field_zero());
  for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(r.pivots[pr], j) = r.mat.at(pr, a.cols() + j);
  return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
  require(m.rows() == m.cols(), "inverse: matrix not square");
  auto x = solve(m, Mat<F>::identity(m.rows(), m.field_zero()));
  if (!x) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return x;
}

// The pivot columns of m, as columns of the original matrix: the canonical
// basis of the column space.
template <class F>
Mat<F> image_basis(const Mat<F>& m) {
  Rref<F> r = rref(m);
  Mat<F> b(m.rows(), r.pivots.size(), m.field_zero());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t row = 0; row < m.rows(); ++row) b.at(row, i) = m.at(row, r.pivots[i]);
  return b;
}

// Is v (a column) in the column space of basis?
template <class F>
bool in_span(const Mat<F>& basis, const Mat<F>& v) {
  return solve(basis, v).has_value();
}

// Basis of the span of the columns of m concatenated (deduplicated by rank).
template <class F>
Mat<F> column_space_union(const std::vector<Mat<F>>& mats, std::size_t nrows, const F& zero) {
  Mat<F> all(nrows, 0, zero);
  for (const auto& m : mats) all = hstack(all, m);
  return image_basis(all);
}

// Builds the matrix of a linear operator on matrix space: op is evaluated on
// each basis matrix E_rc (in row-major order) of shape rows x cols, and the
// result (also read row-major) becomes a column. Used to turn morphism
// conditions into plain linear systems.
template <class F>
Mat<F> operator_matrix(std::size_t rows, std::size_t cols, const F& zero,
                       const std::function<Mat<F>(const Mat<F>&)>& op) {
  Mat<F> probe(rows, cols, zero);
  probe.at(0, 0) = one_like(zero);
  Mat<F> first = op(probe);
  probe.at(0, 0) = zero;
  std::size_t out_dim = first.rows() * first.cols();
  Mat<F> sys(out_dim, rows * cols, zero);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      probe.at(r, c) = one_like(zero);
      Mat<F> img = (r == 0 && c == 0) ? first : op(probe);
      probe.at(r, c) = zero;
      for (std::size_t i = 0; i < img.rows(); ++i)
        for (std::size_t j = 0; j < img.cols(); ++j) sys.at(i * img.cols() + j, r * cols + c) = img.at(i, j);
    }
  return sys;
}

template <class F>
Mat<F> mat_from_vec(const Mat<F>& v, std::size_t rows, std::size_t cols) {
  internal_check(v.rows() == rows * cols && v.cols() == 1, "mat_from_vec: size mismatch");
  Mat<F> m(rows, cols, v.field_zero());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = v.at(r * cols + c, 0);
  return m;
}

template <class F>
Mat<F> vec_of_mat(const Mat<F>& m) {
  Mat<F> v(m.rows() * m.cols(), 1, m.field_zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.at(r * m.cols() + c, 0) = m.at(r, c);
  return v;
}

}  // namespace comod
