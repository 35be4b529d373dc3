#pragma once

#include <vector>

#include "hspin/tower.hpp"

namespace hspin {

using TVec = std::vector<TowerElem>;

inline TVec tvec(const TowerSpec* spec, std::initializer_list<TowerElem> xs) {
  TVec v(xs);
  for (auto& x : v) check(x.spec() == spec, Err::SpecMismatch, "vector entry spec mismatch");
  return v;
}

inline TVec promote_vec(const TVec& v, const TowerSpec* super) {
  TVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(promote(x, super));
  return r;
}

inline bool vec_is_zero(const TVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Dense matrix over a single tower spec.  Sizes here are at most 5x5.
class TMat {
 public:
  TMat() : spec_(TowerSpec::rationals()), rows_(0), cols_(0) {}
  TMat(const TowerSpec* spec, int rows, int cols)
      : spec_(spec), rows_(rows), cols_(cols), a_(size_t(rows) * cols, TowerElem(spec)) {}

  static TMat identity(const TowerSpec* spec, int n) {
    TMat m(spec, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = TowerElem::from_rat(spec, 1);
    return m;
  }

  const TowerSpec* spec() const { return spec_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  TowerElem& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const TowerElem& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const TMat& o) const {
    return spec_ == o.spec_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const TMat& o) const { return !(*this == o); }

  TMat operator*(const TMat& o) const {
    check(spec_ == o.spec_, Err::SpecMismatch, "matrix product spec mismatch");
    check(cols_ == o.rows_, Err::DimensionMismatch, "matrix product shape mismatch");
    TMat r(spec_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const TowerElem& aik = at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (o.at(k, j).is_zero()) continue;
          r.at(i, j) += aik * o.at(k, j);
        }
      }
    return r;
  }

  TVec operator*(const TVec& v) const {
    check(int(v.size()) == cols_, Err::DimensionMismatch, "matrix-vector shape mismatch");
    TVec r(rows_, TowerElem(spec_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (at(i, j).is_zero() || v[j].is_zero()) continue;
        r[i] += at(i, j) * v[j];
      }
    return r;
  }

  TMat operator+(const TMat& o) const {
    check(spec_ == o.spec_ && rows_ == o.rows_ && cols_ == o.cols_, Err::DimensionMismatch,
          "matrix sum shape mismatch");
    TMat r(spec_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }
  TMat operator-(const TMat& o) const {
    check(spec_ == o.spec_ && rows_ == o.rows_ && cols_ == o.cols_, Err::DimensionMismatch,
          "matrix difference shape mismatch");
    TMat r(spec_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }
  TMat operator*(const TowerElem& s) const {
    TMat r(spec_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
  }
  TMat operator*(const Rat& s) const {
    TMat r(spec_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
  }
  TMat operator-() const {
    TMat r(spec_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }

  TMat transpose() const {
    TMat r(spec_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  TowerElem trace() const {
    TowerElem t(spec_);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  bool is_identity() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (i == j) {
          if (!(at(i, j) - TowerElem::from_rat(spec_, 1)).is_zero()) return false;
        } else if (!at(i, j).is_zero()) {
          return false;
        }
      }
    return true;
  }

  TowerElem det() const {
    check(rows_ == cols_, Err::DimensionMismatch, "determinant of non-square matrix");
    // fraction-free is unnecessary at these sizes; exact field elimination
    TMat m = *this;
    int n = rows_;
    TowerElem d = TowerElem::from_rat(spec_, 1);
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = col; r < n; ++r)
        if (!m.at(r, col).is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return TowerElem(spec_);
      if (pivot != col) {
        for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
        d = -d;
      }
      d *= m.at(col, col);
      TowerElem inv = m.at(col, col).inverse();
      for (int r = col + 1; r < n; ++r) {
        if (m.at(r, col).is_zero()) continue;
        TowerElem f = m.at(r, col) * inv;
        for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
      }
    }
    return d;
  }

  // Basis of the right kernel.
  std::vector<TVec> kernel() const {
    TMat m = *this;
    int n = rows_, k = cols_;
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < k && r < n; ++col) {
      int pr = -1;
      for (int i = r; i < n; ++i)
        if (!m.at(i, col).is_zero()) {
          pr = i;
          break;
        }
      if (pr < 0) continue;
      if (pr != r)
        for (int j = 0; j < k; ++j) std::swap(m.at(pr, j), m.at(r, j));
      TowerElem inv = m.at(r, col).inverse();
      for (int j = 0; j < k; ++j) m.at(r, j) *= inv;
      for (int i = 0; i < n; ++i) {
        if (i == r || m.at(i, col).is_zero()) continue;
        TowerElem f = m.at(i, col);
        for (int j = 0; j < k; ++j) m.at(i, j) -= f * m.at(r, j);
      }
      pivot_col.push_back(col);
      ++r;
    }
    std::vector<bool> is_pivot(k, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<TVec> basis;
    for (int freec = 0; freec < k; ++freec) {
      if (is_pivot[freec]) continue;
      TVec v(k, TowerElem(spec_));
      v[freec] = TowerElem::from_rat(spec_, 1);
      for (size_t pi = 0; pi < pivot_col.size(); ++pi)
        v[pivot_col[pi]] = -m.at(int(pi), freec);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Characteristic polynomial coefficients c with chi(t) = sum c[k] t^k,
  // monic (c[n] = 1), by the Faddeev-LeVerrier recursion.
  std::vector<TowerElem> charpoly() const {
    check(rows_ == cols_, Err::DimensionMismatch, "charpoly of non-square matrix");
    int n = rows_;
    std::vector<TowerElem> c(n + 1, TowerElem(spec_));
    c[n] = TowerElem::from_rat(spec_, 1);
    TMat M = TMat::identity(spec_, n);
    for (int k = 1; k <= n; ++k) {
      M = *this * M;
      TowerElem ck = -(M.trace() * rat(1, k));
      c[n - k] = ck;
      for (int i = 0; i < n; ++i) M.at(i, i) += ck;
    }
    return c;
  }

  std::uint64_t content_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& x : a_) {
      std::uint64_t xh = x.content_hash();
      hash_mix(h, &xh, sizeof xh);
    }
    return h;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (int j = 0; j < cols_; ++j) s += (j ? ", " : "") + tower_canonical_string(at(i, j));
    }
    return s + "]";
  }

 private:
  const TowerSpec* spec_;
  int rows_, cols_;
  std::vector<TowerElem> a_;
};

inline TMat promote_mat(const TMat& m, const TowerSpec* super) {
  TMat r(super, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = promote(m.at(i, j), super);
  return r;
}

// Divide a polynomial (coefficients low-to-high) by (t - root); remainder must
// vanish.  Used to strip known eigenvalues off characteristic polynomials.
inline std::vector<TowerElem> poly_divide_linear(const std::vector<TowerElem>& c,
                                                 const TowerElem& root) {
  int n = int(c.size()) - 1;
  check(n >= 1, Err::Internal, "polynomial too small");
  std::vector<TowerElem> q(n, TowerElem(root.spec()));
  TowerElem carry = c[n];
  for (int k = n - 1; k >= 0; --k) {
    q[k] = carry;
    carry = c[k] + carry * root;
  }
  check(carry.is_zero(), Err::Internal, "poly_divide_linear: nonzero remainder");
  return q;
}

inline TowerElem poly_eval(const std::vector<TowerElem>& c, const TowerElem& x) {
  TowerElem acc(x.spec());
  for (int k = int(c.size()) - 1; k >= 0; --k) acc = acc * x + c[k];
  return acc;
}

}  // namespace hspin
