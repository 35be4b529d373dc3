#pragma once

#include <string>

#include "hspin/tower.hpp"

namespace hspin {

// Complex value re + im*i with both parts in the same real tower.
struct CVal {
  TowerElem re, im;

  CVal() = default;
  explicit CVal(const TowerSpec* spec) : re(spec), im(spec) {}
  CVal(TowerElem r, TowerElem i) : re(std::move(r)), im(std::move(i)) {
    check(re.spec() == im.spec(), Err::SpecMismatch, "complex parts over different specs");
  }
  static CVal from_real(TowerElem r) {
    TowerElem z(r.spec());
    return CVal(std::move(r), std::move(z));
  }
  static CVal from_rat(const TowerSpec* spec, const Rat& q) {
    return from_real(TowerElem::from_rat(spec, q));
  }
  static CVal i_unit(const TowerSpec* spec) {
    return CVal(TowerElem(spec), TowerElem::from_rat(spec, 1));
  }

  const TowerSpec* spec() const { return re.spec(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  CVal conj() const { return CVal(re, -im); }
  CVal operator-() const { return CVal(-re, -im); }
  CVal operator+(const CVal& o) const { return CVal(re + o.re, im + o.im); }
  CVal operator-(const CVal& o) const { return CVal(re - o.re, im - o.im); }
  CVal operator*(const CVal& o) const {
    return CVal(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  CVal operator*(const TowerElem& s) const { return CVal(re * s, im * s); }
  CVal operator*(const Rat& s) const { return CVal(re * s, im * s); }
  TowerElem norm2() const { return re * re + im * im; }
  CVal inverse() const {
    TowerElem n = norm2();
    check(!n.is_zero(), Err::DivisionByZero, "inverse of zero complex value");
    TowerElem ninv = n.inverse();
    return CVal(re * ninv, -(im * ninv));
  }
  CVal operator/(const CVal& o) const { return *this * o.inverse(); }

  bool operator==(const CVal& o) const { return re == o.re && im == o.im; }
  bool operator!=(const CVal& o) const { return !(*this == o); }

  std::string str() const {
    if (im.is_zero()) return tower_canonical_string(re);
    return "(" + tower_canonical_string(re) + ") + (" + tower_canonical_string(im) + ")*i";
  }
};

// Quaternion a + b i + c j + d k over a real tower.
struct Quat {
  TowerElem a, b, c, d;

  Quat() = default;
  explicit Quat(const TowerSpec* spec) : a(spec), b(spec), c(spec), d(spec) {}
  Quat(TowerElem aa, TowerElem bb, TowerElem cc, TowerElem dd)
      : a(std::move(aa)), b(std::move(bb)), c(std::move(cc)), d(std::move(dd)) {}
  static Quat from_real(TowerElem r) {
    const TowerSpec* s = r.spec();
    return Quat(std::move(r), TowerElem(s), TowerElem(s), TowerElem(s));
  }
  static Quat from_rat(const TowerSpec* spec, const Rat& q) {
    return from_real(TowerElem::from_rat(spec, q));
  }
  // q = alpha + beta j with complex alpha, beta
  static Quat from_complex_pair(const CVal& alpha, const CVal& beta) {
    return Quat(alpha.re, alpha.im, beta.re, beta.im);
  }

  const TowerSpec* spec() const { return a.spec(); }
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
  bool is_real() const { return b.is_zero() && c.is_zero() && d.is_zero(); }

  const TowerElem& scalar() const { return a; }
  CVal complex_alpha() const { return CVal(a, b); }
  CVal complex_beta() const { return CVal(c, d); }

  Quat conj() const { return Quat(a, -b, -c, -d); }
  Quat operator-() const { return Quat(-a, -b, -c, -d); }
  Quat operator+(const Quat& o) const { return Quat(a + o.a, b + o.b, c + o.c, d + o.d); }
  Quat operator-(const Quat& o) const { return Quat(a - o.a, b - o.b, c - o.c, d - o.d); }
  Quat operator*(const Quat& o) const {
    return Quat(a * o.a - b * o.b - c * o.c - d * o.d,
                a * o.b + b * o.a + c * o.d - d * o.c,
                a * o.c - b * o.d + c * o.a + d * o.b,
                a * o.d + b * o.c - c * o.b + d * o.a);
  }
  Quat operator*(const TowerElem& s) const { return Quat(a * s, b * s, c * s, d * s); }
  Quat operator*(const Rat& s) const { return Quat(a * s, b * s, c * s, d * s); }
  TowerElem norm2() const { return a * a + b * b + c * c + d * d; }
  Quat inverse() const {
    TowerElem n = norm2();
    check(!n.is_zero(), Err::DivisionByZero, "inverse of zero quaternion");
    TowerElem ninv = n.inverse();
    return conj() * ninv;
  }

  bool operator==(const Quat& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const Quat& o) const { return !(*this == o); }

  std::string str() const {
    return "(" + tower_canonical_string(a) + ") + (" + tower_canonical_string(b) + ")*i + (" +
           tower_canonical_string(c) + ")*j + (" + tower_canonical_string(d) + ")*k";
  }
};

}  // namespace hspin
