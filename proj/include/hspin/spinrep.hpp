#pragma once

#include <array>
#include <vector>

#include "hspin/clifford.hpp"
#include "hspin/cnum.hpp"
#include "hspin/linalg.hpp"

namespace hspin {

// 2x2 matrix over a (possibly non-commutative) *-ring R; R is CVal for the
// n = 2 model and Quat for the n = 4 model.
template <class R>
struct Mat2 {
  R a, b, c, d;  // rows (a b; c d)

  Mat2() = default;
  explicit Mat2(const TowerSpec* spec) : a(spec), b(spec), c(spec), d(spec) {}
  Mat2(R aa, R bb, R cc, R dd)
      : a(std::move(aa)), b(std::move(bb)), c(std::move(cc)), d(std::move(dd)) {}

  static Mat2 identity(const TowerSpec* spec) {
    Mat2 m(spec);
    m.a = R::from_rat(spec, 1);
    m.d = R::from_rat(spec, 1);
    return m;
  }
  static Mat2 zero(const TowerSpec* spec) { return Mat2(spec); }

  const TowerSpec* spec() const { return a.spec(); }

  Mat2 operator*(const Mat2& o) const {
    return Mat2(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
  }
  Mat2 operator+(const Mat2& o) const { return Mat2(a + o.a, b + o.b, c + o.c, d + o.d); }
  Mat2 operator-(const Mat2& o) const { return Mat2(a - o.a, b - o.b, c - o.c, d - o.d); }
  Mat2 operator-() const { return Mat2(-a, -b, -c, -d); }
  Mat2 scaled(const TowerElem& s) const { return Mat2(a * s, b * s, c * s, d * s); }

  Mat2 conj_transpose() const { return Mat2(a.conj(), c.conj(), b.conj(), d.conj()); }

  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Mat2& o) const { return !(*this == o); }
  bool is_identity(const TowerSpec* spec) const { return *this == identity(spec); }

  std::uint64_t content_hash() const;

  std::string str() const {
    return "[" + a.str() + ", " + b.str() + "; " + c.str() + ", " + d.str() + "]";
  }
};

using Spin2 = Mat2<CVal>;  // lives in C(2); group model SU(1,1;C)
using Spin4 = Mat2<Quat>;  // lives in H(2); group model SU(1,1;H)

template <>
inline std::uint64_t Mat2<CVal>::content_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const TowerElem* t : {&a.re, &a.im, &b.re, &b.im, &c.re, &c.im, &d.re, &d.im}) {
    std::uint64_t x = t->content_hash();
    hash_mix(h, &x, sizeof x);
  }
  return h;
}
template <>
inline std::uint64_t Mat2<Quat>::content_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const Quat* q : {&a, &b, &c, &d})
    for (const TowerElem* t : {&q->a, &q->b, &q->c, &q->d}) {
      std::uint64_t x = t->content_hash();
      hash_mix(h, &x, sizeof x);
    }
  return h;
}

// J = E_3 (n = 2) resp. E_5 (n = 4): diag(1, -1).
template <class R>
inline Mat2<R> mat2_J(const TowerSpec* spec) {
  Mat2<R> j(spec);
  j.a = R::from_rat(spec, 1);
  j.d = R::from_rat(spec, Rat(-1));
  return j;
}

inline CVal mat2_det(const Spin2& m) { return m.a * m.d - m.b * m.c; }

template <class R>
inline bool su11_membership(const Mat2<R>& m) {
  Mat2<R> j = mat2_J<R>(m.spec());
  if (!(m.conj_transpose() * j * m == j)) return false;
  if constexpr (std::is_same_v<R, CVal>) {
    if (!(mat2_det(m) == CVal::from_rat(m.spec(), 1))) return false;
  }
  return true;
}

// Inverse of a group element: A^{-1} = J A^* J.
template <class R>
inline Mat2<R> group_inverse(const Mat2<R>& m) {
  Mat2<R> s = m.conj_transpose();
  return Mat2<R>(s.a, -s.b, -s.c, s.d);
}

// --- the printed E-matrix models ----------------------------------------------

inline std::array<Spin2, 3> e_matrices_2(const TowerSpec* spec) {
  auto z = TowerElem(spec);
  auto one = TowerElem::from_rat(spec, 1);
  Spin2 e1(CVal(z, z), CVal(one, z), CVal(-one, z), CVal(z, z));
  Spin2 e2(CVal(z, z), CVal(z, one), CVal(z, one), CVal(z, z));
  Spin2 e3(CVal(one, z), CVal(z, z), CVal(z, z), CVal(-one, z));
  return {e1, e2, e3};
}

inline std::array<Spin4, 5> e_matrices_4(const TowerSpec* spec) {
  auto z = TowerElem(spec);
  auto one = TowerElem::from_rat(spec, 1);
  auto q0 = Quat(spec);
  auto q1 = Quat(one, z, z, z);
  auto qi = Quat(z, one, z, z);
  auto qj = Quat(z, z, one, z);
  auto qk = Quat(z, z, z, one);
  Spin4 e1(q0, q1, -q1, q0);
  Spin4 e2(q0, qi, qi, q0);
  Spin4 e3(q0, qj, qj, q0);
  Spin4 e4(q0, qk, qk, q0);
  Spin4 e5(q1, q0, q0, -q1);
  return {e1, e2, e3, e4, e5};
}

// --- spin representations delta -----------------------------------------------

// Delta_{2,1}: even part of Cl(2,1) -> C(2), determined by e_i -> E_i.
inline Spin2 delta2(const Multivector& x) {
  check(x.sig() == Signature{2, true}, Err::SignatureMismatch, "delta2 wants Cl(2,1)");
  check(x.is_even(), Err::OddElement, "delta2 is defined on even elements");
  auto E = e_matrices_2(x.spec());
  Spin2 acc = Spin2::zero(x.spec());
  for (std::uint32_t mask = 0; mask < x.sig().dim(); ++mask) {
    if (x.coeff(mask).is_zero()) continue;
    Spin2 blade = Spin2::identity(x.spec());
    for (int i = 0; i < 3; ++i)
      if (mask & (1u << i)) blade = blade * E[i];
    acc = acc + blade.scaled(x.coeff(mask));
  }
  return acc;
}

// Delta_{4,1} factored through H(2), determined by e_i -> E_i.
inline Spin4 delta4(const Multivector& x) {
  check(x.sig() == Signature{4, true}, Err::SignatureMismatch, "delta4 wants Cl(4,1)");
  check(x.is_even(), Err::OddElement, "delta4 is defined on even elements");
  auto E = e_matrices_4(x.spec());
  Spin4 acc = Spin4::zero(x.spec());
  for (std::uint32_t mask = 0; mask < x.sig().dim(); ++mask) {
    if (x.coeff(mask).is_zero()) continue;
    Spin4 blade = Spin4::identity(x.spec());
    for (int i = 0; i < 5; ++i)
      if (mask & (1u << i)) blade = blade * E[i];
    acc = acc + blade.scaled(x.coeff(mask));
  }
  return acc;
}

// --- Psi expansions -------------------------------------------------------------

// Small dense complex matrix (4x4 for Psi_2 images, 2x2 for Weyl work).
class CMat {
 public:
  CMat(const TowerSpec* spec, int n) : spec_(spec), n_(n), a_(size_t(n) * n, CVal(spec)) {}
  static CMat identity(const TowerSpec* spec, int n) {
    CMat m(spec, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CVal::from_rat(spec, 1);
    return m;
  }
  int n() const { return n_; }
  const TowerSpec* spec() const { return spec_; }
  CVal& at(int i, int j) { return a_[size_t(i) * n_ + j]; }
  const CVal& at(int i, int j) const { return a_[size_t(i) * n_ + j]; }
  CMat operator*(const CMat& o) const {
    CMat r(spec_, n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < n_; ++j) r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
      }
    return r;
  }
  CMat operator-(const CMat& o) const {
    CMat r(spec_, n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }
  bool operator==(const CMat& o) const { return n_ == o.n_ && a_ == o.a_; }
  CVal trace() const {
    CVal t(spec_);
    for (int i = 0; i < n_; ++i) t = t + at(i, i);
    return t;
  }
  // Right kernel basis over the complex field.
  std::vector<std::vector<CVal>> kernel() const {
    CMat m = *this;
    int n = n_;
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
      int pr = -1;
      for (int i = r; i < n; ++i)
        if (!m.at(i, col).is_zero()) {
          pr = i;
          break;
        }
      if (pr < 0) continue;
      if (pr != r)
        for (int j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(r, j));
      CVal inv = m.at(r, col).inverse();
      for (int j = 0; j < n; ++j) m.at(r, j) = m.at(r, j) * inv;
      for (int i = 0; i < n; ++i) {
        if (i == r || m.at(i, col).is_zero()) continue;
        CVal f = m.at(i, col);
        for (int j = 0; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
      }
      pivot_col.push_back(col);
      ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<CVal>> basis;
    for (int freec = 0; freec < n; ++freec) {
      if (is_pivot[freec]) continue;
      std::vector<CVal> v(n, CVal(spec_));
      v[freec] = CVal::from_rat(spec_, 1);
      for (size_t pi = 0; pi < pivot_col.size(); ++pi) v[pivot_col[pi]] = -m.at(int(pi), freec);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  const TowerSpec* spec_;
  int n_;
  std::vector<CVal> a_;
};

// Psi_1: H -> C(2), a + b j -> (a b; -conj(b) conj(a))
inline CMat psi1_expand(const Quat& q) {
  CMat m(q.spec(), 2);
  CVal alpha = q.complex_alpha(), beta = q.complex_beta();
  m.at(0, 0) = alpha;
  m.at(0, 1) = beta;
  m.at(1, 0) = -beta.conj();
  m.at(1, 1) = alpha.conj();
  return m;
}

// Psi_2: H(2) -> C(4), blockwise Psi_1.
inline CMat psi2_expand(const Spin4& A) {
  CMat m(A.spec(), 4);
  const Quat* qs[4] = {&A.a, &A.b, &A.c, &A.d};
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj) {
      CMat blk = psi1_expand(*qs[bi * 2 + bj]);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.at(2 * bi + i, 2 * bj + j) = blk.at(i, j);
    }
  return m;
}

// --- traces ----------------------------------------------------------------------

inline CVal complex_trace(const Spin2& A) { return A.a + A.d; }

// tr Psi_2(A) = 2(Sc a + Sc d); the imaginary part is identically zero.
inline CVal complex_trace(const Spin4& A) {
  TowerElem re = (A.a.scalar() + A.d.scalar()) * rat(2);
  return CVal::from_real(re);
}

// --- the covering maps eta -------------------------------------------------------

// Closed form of eta: SU(1,1;C) -> SO+(2,1) in the coordinates a = a1 + a2 i,
// b = b1 + b2 i of A = (a b; conj(b) conj(a)).
inline TMat eta2(const Spin2& A) {
  check(su11_membership(A), Err::NotInGroup, "eta2 argument is not in SU(1,1;C)");
  check(A.c == A.b.conj() && A.d == A.a.conj(), Err::NotInGroup,
        "eta2 argument violates the (a b; conj b conj a) form");
  const TowerSpec* s = A.spec();
  const TowerElem &a1 = A.a.re, &a2 = A.a.im, &b1 = A.b.re, &b2 = A.b.im;
  TowerElem one = TowerElem::from_rat(s, 1);
  Rat two(2);
  TMat m(s, 3, 3);
  m.at(0, 0) = one - a2 * a2 * two + b1 * b1 * two;
  m.at(0, 1) = -(a1 * a2 * two) + b1 * b2 * two;
  m.at(0, 2) = -(a1 * b1 * two) + a2 * b2 * two;
  m.at(1, 0) = a1 * a2 * two + b1 * b2 * two;
  m.at(1, 1) = one - a2 * a2 * two + b2 * b2 * two;
  m.at(1, 2) = -(a1 * b2 * two) - a2 * b1 * two;
  m.at(2, 0) = -(a1 * b1 * two) - a2 * b2 * two;
  m.at(2, 1) = -(a1 * b2 * two) + a2 * b1 * two;
  m.at(2, 2) = one + b1 * b1 * two + b2 * b2 * two;
  return m;
}

// eta for n = 2 computed by conjugation on the W-basis; cross-check for eta2.
inline TMat eta2_by_conjugation(const Spin2& A) {
  check(su11_membership(A), Err::NotInGroup, "eta2 argument is not in SU(1,1;C)");
  const TowerSpec* s = A.spec();
  auto E = e_matrices_2(s);
  Spin2 Ainv = group_inverse(A);
  TMat m(s, 3, 3);
  for (int col = 0; col < 3; ++col) {
    Spin2 B = A * E[col] * Ainv;
    // B = (r z; -conj z -r)
    check(B.a.is_real() && B.d == -B.a && B.c == -B.b.conj(), Err::BasisExpansionFailure,
          "conjugate left the W-slice in C(2)");
    m.at(0, col) = B.b.re;
    m.at(1, col) = B.b.im;
    m.at(2, col) = B.a.re;
  }
  return m;
}

// eta: SU(1,1;H) -> SO+(4,1) by conjugation on the basis E_1..E_5 of W.
inline TMat eta4(const Spin4& A) {
  check(su11_membership(A), Err::NotInGroup, "eta4 argument is not in SU(1,1;H)");
  const TowerSpec* s = A.spec();
  auto E = e_matrices_4(s);
  Spin4 Ainv = group_inverse(A);
  TMat m(s, 5, 5);
  for (int col = 0; col < 5; ++col) {
    Spin4 B = A * E[col] * Ainv;
    // B = (r q; -conj q -r) with real r
    check(B.a.is_real() && B.d == -B.a && B.c == -B.b.conj(), Err::BasisExpansionFailure,
          "conjugate left the W-slice in H(2)");
    m.at(0, col) = B.b.a;
    m.at(1, col) = B.b.b;
    m.at(2, col) = B.b.c;
    m.at(3, col) = B.b.d;
    m.at(4, col) = B.a.a;
  }
  return m;
}

// --- Weyl splitting ----------------------------------------------------------------

struct WeylSplit {
  CMat projector;                            // C = i^m Delta_n(omega), C^2 = I
  std::vector<std::vector<CVal>> plus_basis;  // W^+
  std::vector<std::vector<CVal>> minus_basis; // W^-
};

inline WeylSplit weyl_projector(int n, const TowerSpec* spec) {
  check(n == 2 || n == 4, Err::UnsupportedDimension, "weyl_projector wants n in {2,4}");
  CMat C(spec, n == 2 ? 2 : 4);
  if (n == 2) {
    // C = i * E1 E2
    auto E = e_matrices_2(spec);
    Spin2 w = E[0] * E[1];
    CVal i = CVal::i_unit(spec);
    C.at(0, 0) = i * w.a;
    C.at(0, 1) = i * w.b;
    C.at(1, 0) = i * w.c;
    C.at(1, 1) = i * w.d;
  } else {
    // C = i^2 * Psi_2(E1 E2 E3 E4) = -Psi_2(E1 E2 E3 E4)
    auto E = e_matrices_4(spec);
    Spin4 w = E[0] * E[1] * E[2] * E[3];
    CMat p = psi2_expand(w);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) C.at(i, j) = -p.at(i, j);
  }
  int k = C.n();
  check(C * C == CMat::identity(spec, k), Err::Internal, "Weyl projector does not square to I");
  check(C.trace().is_zero(), Err::Internal, "Weyl projector has nonzero trace");
  CMat id = CMat::identity(spec, k);
  WeylSplit out{C, (C - id).kernel(), [&] {
                  CMat sum(spec, k);
                  for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                      sum.at(i, j) = C.at(i, j) + id.at(i, j);
                  return sum.kernel();
                }()};
  check(out.plus_basis.size() == out.minus_basis.size(), Err::Internal,
        "Weyl eigenspaces of unequal dimension");
  return out;
}

}  // namespace hspin
