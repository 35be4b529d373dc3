#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hspin/linalg.hpp"
#include "hspin/tower.hpp"

namespace hspin {

// Cl(n) for lorentz = false, Cl(n,1) for lorentz = true.  Generators e_1..e_n
// square to -1; the extra Lorentz generator e_{n+1} squares to +1.
struct Signature {
  int n = 0;
  bool lorentz = false;

  int gens() const { return n + (lorentz ? 1 : 0); }
  size_t dim() const { return size_t(1) << gens(); }
  bool operator==(const Signature& o) const { return n == o.n && lorentz == o.lorentz; }
  bool operator!=(const Signature& o) const { return !(*this == o); }
};

namespace detail {

// e_A * e_B for basis blades given as bitmasks (bit i = generator e_{i+1}).
// Returns the resulting mask; sign accumulates transpositions and squares.
inline std::pair<std::uint32_t, int> blade_mul(std::uint32_t a, std::uint32_t b,
                                               const Signature& sig) {
  int sign = 1;
  std::uint32_t acc = a;
  while (b) {
    std::uint32_t j = std::countr_zero(b);
    b &= b - 1;
    int swaps = std::popcount(acc >> (j + 1));
    if (swaps & 1) sign = -sign;
    std::uint32_t bit = std::uint32_t(1) << j;
    if (acc & bit) {
      bool is_lorentz_gen = sig.lorentz && int(j) == sig.n;
      if (!is_lorentz_gen) sign = -sign;  // e_i^2 = -1 for spatial generators
      acc ^= bit;
    } else {
      acc |= bit;
    }
  }
  return {acc, sign};
}

}  // namespace detail

class Multivector {
 public:
  Multivector(Signature sig, const TowerSpec* spec)
      : sig_(sig), spec_(spec), c_(sig.dim(), TowerElem(spec)) {}

  static Multivector scalar(Signature sig, const TowerSpec* spec, const Rat& q) {
    Multivector m(sig, spec);
    m.c_[0] = TowerElem::from_rat(spec, q);
    return m;
  }
  static Multivector one(Signature sig, const TowerSpec* spec) { return scalar(sig, spec, 1); }
  // e_i for 1-based index i
  static Multivector basis_vector(Signature sig, const TowerSpec* spec, int i) {
    check(i >= 1 && i <= sig.gens(), Err::Internal, "basis vector index out of range");
    Multivector m(sig, spec);
    m.c_[size_t(1) << (i - 1)] = TowerElem::from_rat(spec, 1);
    return m;
  }
  static Multivector blade(Signature sig, const TowerSpec* spec, std::uint32_t mask,
                           TowerElem coeff) {
    Multivector m(sig, spec);
    m.c_[mask] = std::move(coeff);
    return m;
  }
  static Multivector vector(Signature sig, const TVec& coords) {
    check(int(coords.size()) == sig.gens(), Err::DimensionMismatch, "vector length mismatch");
    Multivector m(sig, coords[0].spec());
    for (size_t i = 0; i < coords.size(); ++i) m.c_[size_t(1) << i] = coords[i];
    return m;
  }

  const Signature& sig() const { return sig_; }
  const TowerSpec* spec() const { return spec_; }
  const TowerElem& coeff(std::uint32_t mask) const { return c_[mask]; }
  TowerElem& coeff(std::uint32_t mask) { return c_[mask]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_scalar() const {
    for (size_t m = 1; m < c_.size(); ++m)
      if (!c_[m].is_zero()) return false;
    return true;
  }
  bool is_even() const {
    for (size_t m = 0; m < c_.size(); ++m)
      if ((std::popcount(m) & 1) && !c_[m].is_zero()) return false;
    return true;
  }
  bool is_odd() const {
    for (size_t m = 0; m < c_.size(); ++m)
      if (!(std::popcount(m) & 1) && !c_[m].is_zero()) return false;
    return true;
  }
  bool is_grade(int k) const {
    for (size_t m = 0; m < c_.size(); ++m)
      if (std::popcount(m) != k && !c_[m].is_zero()) return false;
    return true;
  }
  // Coordinates of a grade-1 element.
  TVec vector_part() const {
    TVec v;
    for (int i = 0; i < sig_.gens(); ++i) v.push_back(c_[size_t(1) << i]);
    return v;
  }

  Multivector operator+(const Multivector& o) const {
    same(o);
    Multivector r(sig_, spec_);
    for (size_t m = 0; m < c_.size(); ++m) r.c_[m] = c_[m] + o.c_[m];
    return r;
  }
  Multivector operator-(const Multivector& o) const {
    same(o);
    Multivector r(sig_, spec_);
    for (size_t m = 0; m < c_.size(); ++m) r.c_[m] = c_[m] - o.c_[m];
    return r;
  }
  Multivector operator-() const {
    Multivector r(sig_, spec_);
    for (size_t m = 0; m < c_.size(); ++m) r.c_[m] = -c_[m];
    return r;
  }
  Multivector operator*(const TowerElem& s) const {
    Multivector r(sig_, spec_);
    for (size_t m = 0; m < c_.size(); ++m) r.c_[m] = c_[m] * s;
    return r;
  }

  bool operator==(const Multivector& o) const {
    return sig_ == o.sig_ && spec_ == o.spec_ && c_ == o.c_;
  }
  bool operator!=(const Multivector& o) const { return !(*this == o); }

  std::string str() const {
    std::string out;
    bool first = true;
    for (size_t m = 0; m < c_.size(); ++m) {
      if (c_[m].is_zero()) continue;
      std::string term = "(" + tower_canonical_string(c_[m]) + ")";
      if (m) {
        term += "*";
        for (int i = 0; i < sig_.gens(); ++i)
          if (m & (size_t(1) << i)) term += "e" + std::to_string(i + 1);
      }
      out += (first ? "" : " + ") + term;
      first = false;
    }
    return first ? "0" : out;
  }

 private:
  void same(const Multivector& o) const {
    check(sig_ == o.sig_, Err::SignatureMismatch, "multivectors over different signatures");
    check(spec_ == o.spec_, Err::SpecMismatch, "multivectors over different towers");
  }

  Signature sig_;
  const TowerSpec* spec_;
  std::vector<TowerElem> c_;
};

inline Multivector cl_mul(const Multivector& a, const Multivector& b) {
  check(a.sig() == b.sig(), Err::SignatureMismatch, "cl_mul signature mismatch");
  check(a.spec() == b.spec(), Err::SpecMismatch, "cl_mul tower mismatch");
  Multivector r(a.sig(), a.spec());
  size_t dim = a.sig().dim();
  for (std::uint32_t ma = 0; ma < dim; ++ma) {
    if (a.coeff(ma).is_zero()) continue;
    for (std::uint32_t mb = 0; mb < dim; ++mb) {
      if (b.coeff(mb).is_zero()) continue;
      auto [mask, sign] = detail::blade_mul(ma, mb, a.sig());
      TowerElem term = a.coeff(ma) * b.coeff(mb);
      if (sign < 0) term = -term;
      r.coeff(mask) += term;
    }
  }
  return r;
}

enum class InvKind { Alpha, Transpose, Norm };

inline Multivector involution(const Multivector& x, InvKind kind) {
  switch (kind) {
    case InvKind::Alpha: {
      Multivector r(x.sig(), x.spec());
      for (std::uint32_t m = 0; m < x.sig().dim(); ++m)
        r.coeff(m) = (std::popcount(m) & 1) ? -x.coeff(m) : x.coeff(m);
      return r;
    }
    case InvKind::Transpose: {
      Multivector r(x.sig(), x.spec());
      for (std::uint32_t m = 0; m < x.sig().dim(); ++m) {
        int k = std::popcount(m);
        r.coeff(m) = ((k * (k - 1) / 2) & 1) ? -x.coeff(m) : x.coeff(m);
      }
      return r;
    }
    case InvKind::Norm:
      return cl_mul(x, involution(involution(x, InvKind::Transpose), InvKind::Alpha));
  }
  fail(Err::Internal, "bad involution kind");
}

inline Multivector cl_transpose(const Multivector& x) { return involution(x, InvKind::Transpose); }
inline Multivector cl_alpha(const Multivector& x) { return involution(x, InvKind::Alpha); }
inline Multivector cl_norm(const Multivector& x) { return involution(x, InvKind::Norm); }

// q(v) for a grade-1 element: v^2 = -q(v), so q(v) = -(v*v) scalar part.
inline TowerElem cl_quadratic_form(const Multivector& v) {
  check(v.is_grade(1), Err::Internal, "quadratic form of non-vector");
  Multivector sq = cl_mul(v, v);
  check(sq.is_scalar(), Err::Internal, "vector square is not scalar");
  return -sq.coeff(0);
}

// Lemma 3.4 membership test: x in Spin+(n,1) iff x is even and x^t x = 1.
inline bool spin_plus_membership(const Multivector& x) {
  const Signature& sig = x.sig();
  check(sig.lorentz, Err::UnsupportedDimension, "spin membership needs a Lorentz signature");
  check(sig.n >= 2 && sig.n <= 4, Err::UnsupportedDimension,
        "spin membership test only valid for n = 2,3,4");
  if (!x.is_even()) return false;
  Multivector p = cl_mul(cl_transpose(x), x);
  return p == Multivector::one(sig, x.spec());
}

// Diagnostic variant of Lemma 3.1/3.2: even and N(x) = +-1.
inline bool spin_norm_diagnostic(const Multivector& x) {
  if (!x.is_even()) return false;
  Multivector n = cl_norm(x);
  if (!n.is_scalar()) return false;
  TowerElem s = n.coeff(0);
  TowerElem one = TowerElem::from_rat(x.spec(), 1);
  return (s - one).is_zero() || (s + one).is_zero();
}

// Ad(x)(v) = x v x^{-1}.  Inverses exist for spin elements (x^{-1} = x^t) and
// invertible vectors (v^{-1} = -v/q(v)); anything else is out of scope.
inline Multivector ad_action(const Multivector& x, const Multivector& v) {
  check(v.is_grade(1), Err::Internal, "ad_action target must be a vector");
  Multivector xt = cl_transpose(x);
  if (x.is_even() && cl_mul(xt, x) == Multivector::one(x.sig(), x.spec()))
    return cl_mul(cl_mul(x, v), xt);
  if (x.is_grade(1)) {
    TowerElem q = cl_quadratic_form(x);
    check(!q.is_zero(), Err::NotInvertible, "null vector has no inverse");
    Multivector xinv = x * (-(q.inverse()));
    return cl_mul(cl_mul(x, v), xinv);
  }
  fail(Err::NotInvertible, "ad_action only for spin elements and invertible vectors");
}

}  // namespace hspin
