#pragma once
#include <cassert>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace dybe {

template <Scalar S>
S rat_like(const S& exemplar, const Rat& r) {
  if constexpr (std::same_as<S, Rat>) {
    (void)exemplar;
    return r;
  } else {
    return RatFun::from_rat(exemplar.nvars(), r);
  }
}

template <Scalar S>
S zero_like(const S& exemplar) {
  return rat_like(exemplar, Rat(0));
}

// Dense matrix over the ground field.  Carries a zero exemplar so RatFun
// matrices know their variable count.
template <Scalar S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), zero_() {}
  Matrix(int rows, int cols, const S& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(size_t(rows) * cols, zero) {}

  static Matrix identity(int n, const S& zero) {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m.at(i, i) = rat_like(zero, Rat(1));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const S& zero() const { return zero_; }

  S& at(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[size_t(r) * cols_ + c];
  }
  const S& at(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[size_t(r) * cols_ + c];
  }

  bool is_zero() const {
    for (const S& x : data_)
      if (!ScalarTraits<S>::is_zero(x)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix r(a.rows_, b.cols_, a.zero_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a.at(i, k);
        if (ScalarTraits<S>::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const S& bkj = b.at(k, j);
          if (ScalarTraits<S>::is_zero(bkj)) continue;
          r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  Matrix scaled(const S& k) const {
    Matrix r = *this;
    for (S& x : r.data_) x = x * k;
    return r;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_, cols_;
  S zero_;
  std::vector<S> data_;
};

// Reduced row echelon form; used for picking pivot columns out of Gram
// matrices and expressing the remaining columns through them.
template <Scalar S>
struct Rref {
  Matrix<S> m;
  std::vector<int> pivot_cols;
};

template <Scalar S>
Rref<S> rref(Matrix<S> m) {
  Rref<S> out{m, {}};
  Matrix<S>& a = out.m;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!ScalarTraits<S>::is_zero(a.at(i, c))) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    S inv = ScalarTraits<S>::inv(a.at(r, c));
    for (int j = c; j < a.cols(); ++j) a.at(r, j) = a.at(r, j) * inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || ScalarTraits<S>::is_zero(a.at(i, c))) continue;
      S f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.at(i, j) = a.at(i, j) - f * a.at(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

namespace detail {

inline Rat ring_divexact(const Rat& a, const Rat& b) { return a / b; }
inline Poly ring_divexact(const Poly& a, const Poly& b) { return a.divexact(b); }

// Fraction-free forward elimination (Bareiss).  Works on the augmented
// matrix in place; throws SingularSystem when a pivot column dies.
template <class R>
void bareiss(std::vector<std::vector<R>>& m, int ncols_system) {
  const int rows = (int)m.size();
  const int cols = rows ? (int)m[0].size() : 0;
  R prev = m.empty() ? R() : m[0][0];  // overwritten before first use
  bool have_prev = false;
  for (int k = 0; k < ncols_system; ++k) {
    int p = -1;
    for (int i = k; i < rows; ++i) {
      bool z;
      if constexpr (std::same_as<R, Rat>) z = m[i][k].is_zero();
      else z = m[i][k].is_zero();
      if (!z) { p = i; break; }
    }
    if (p < 0) throw SingularSystem("system lost rank at column " + std::to_string(k));
    if (p != k) std::swap(m[p], m[k]);
    for (int i = k + 1; i < rows; ++i) {
      for (int j = k + 1; j < cols; ++j) {
        R t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = have_prev ? ring_divexact(t, prev) : t;
      }
      m[i][k] = m[k][k] - m[k][k];  // zero of the right shape
    }
    prev = m[k][k];
    have_prev = true;
  }
}

}  // namespace detail

// Solve A X = B exactly for full-column-rank A (rows >= cols).  The RatFun
// instantiation clears denominators row by row and eliminates fraction-free
// over polynomials; surplus rows must come out consistent.
template <Scalar S>
Matrix<S> linear_solve(const Matrix<S>& A, const Matrix<S>& B, bool reverse_rows = false) {
  assert(A.rows() == B.rows());
  const int m = A.rows(), n = A.cols(), k = B.cols();
  if (m < n) throw SingularSystem("underdetermined system");

  auto solve_rows = [&](auto make_row, auto to_field) {
    using R = std::decay_t<decltype(make_row(0)[0])>;
    std::vector<std::vector<R>> aug;
    aug.reserve(m);
    for (int i = 0; i < m; ++i) aug.push_back(make_row(reverse_rows ? m - 1 - i : i));
    detail::bareiss(aug, n);
    // consistency of the surplus rows
    for (int i = n; i < m; ++i)
      for (int j = n; j < n + k; ++j)
        if (!aug[i][j].is_zero()) throw SingularSystem("inconsistent overdetermined system");
    Matrix<S> X(n, k, A.zero());
    for (int c = 0; c < k; ++c)
      for (int r = n - 1; r >= 0; --r) {
        S acc = to_field(aug[r][n + c]);
        for (int j = r + 1; j < n; ++j) acc -= to_field(aug[r][j]) * X.at(j, c);
        X.at(r, c) = acc / to_field(aug[r][r]);
      }
    return X;
  };

  if constexpr (std::same_as<S, Rat>) {
    auto make_row = [&](int i) {
      std::vector<Rat> row(n + k);
      for (int j = 0; j < n; ++j) row[j] = A.at(i, j);
      for (int j = 0; j < k; ++j) row[n + j] = B.at(i, j);
      return row;
    };
    return solve_rows(make_row, [](const Rat& r) { return r; });
  } else {
    const int nv = A.zero().nvars();
    auto make_row = [&](int i) {
      std::vector<RatFun> entries(n + k);
      for (int j = 0; j < n; ++j) entries[j] = A.at(i, j);
      for (int j = 0; j < k; ++j) entries[n + j] = B.at(i, j);
      // common denominator of the row via lcm
      Poly l = Poly::constant(nv, Rat(1));
      for (const RatFun& e : entries) {
        Poly g = Poly::gcd(l, e.den());
        l = (l * e.den()).divexact(g);
      }
      std::vector<Poly> row(n + k);
      for (int j = 0; j < n + k; ++j)
        row[j] = entries[j].num() * l.divexact(entries[j].den());
      return row;
    };
    return solve_rows(make_row, [nv](const Poly& p) {
      return RatFun(p, Poly::constant(nv, Rat(1)));
    });
  }
}

template <Scalar S>
Matrix<S> inverse(const Matrix<S>& A) {
  assert(A.rows() == A.cols());
  return linear_solve(A, Matrix<S>::identity(A.rows(), A.zero()));
}

}  // namespace dybe
