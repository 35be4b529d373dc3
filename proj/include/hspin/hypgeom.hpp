#pragma once

#include <string>
#include <vector>

#include "hspin/linalg.hpp"
#include "hspin/tower.hpp"

namespace hspin {

// x o y = x_1 y_1 + ... + x_n y_n - x_{n+1} y_{n+1}
inline TowerElem lorentz_product(const TVec& x, const TVec& y) {
  check(x.size() == y.size() && !x.empty(), Err::DimensionMismatch,
        "lorentz product dimension mismatch");
  const TowerSpec* spec = x[0].spec();
  TowerElem acc(spec);
  for (size_t i = 0; i + 1 < x.size(); ++i) acc += x[i] * y[i];
  acc -= x.back() * y.back();
  return acc;
}

enum class CausalType { Spacelike, Timelike, Lightlike };

inline CausalType causal_type(const TVec& x) {
  int s = certify_sign(lorentz_product(x, x));
  if (s > 0) return CausalType::Spacelike;
  if (s < 0) return CausalType::Timelike;
  return CausalType::Lightlike;
}

inline TMat lorentz_form_matrix(const TowerSpec* spec, int dim) {
  TMat j = TMat::identity(spec, dim);
  j.at(dim - 1, dim - 1) = TowerElem::from_rat(spec, Rat(-1));
  return j;
}

inline bool preserves_lorentz_form(const TMat& a) {
  TMat j = lorentz_form_matrix(a.spec(), a.rows());
  return a.transpose() * j * a == j;
}

// O+(n,1) with determinant one: preserves the form, preserves the upper
// sheet, and is orientation preserving.
inline bool is_so_plus(const TMat& a) {
  if (!preserves_lorentz_form(a)) return false;
  if (!(a.det() - TowerElem::from_rat(a.spec(), 1)).is_zero()) return false;
  int n = a.rows();
  TowerElem corner = a.at(n - 1, n - 1);
  return certify_sign(corner - TowerElem::from_rat(a.spec(), 1)) >= 0;
}

// x |-> x - 2 (x o s)/(s o s) s, an involutive Lorentz matrix of determinant -1.
inline TMat reflection_from_normal(const TVec& s) {
  check(causal_type(s) == CausalType::Spacelike, Err::NotSpacelike,
        "reflection normal must be spacelike");
  const TowerSpec* spec = s[0].spec();
  int n = int(s.size());
  TowerElem nn = lorentz_product(s, s);
  TowerElem f = TowerElem::from_rat(spec, 2) * nn.inverse();
  TMat r = TMat::identity(spec, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      TowerElem js = (j == n - 1) ? -s[j] : s[j];
      r.at(i, j) -= f * s[i] * js;
    }
  return r;
}

// A point of H^n kept projectively: timelike with positive last coordinate,
// considered up to positive scaling.
struct ProjectivePoint {
  TVec x;

  explicit ProjectivePoint(TVec coords) : x(std::move(coords)) {
    check(causal_type(x) == CausalType::Timelike, Err::NotElliptic,
          "projective point must be timelike");
    if (certify_sign(x.back()) < 0)
      for (auto& c : x) c = -c;
  }

  const TowerSpec* spec() const { return x[0].spec(); }
  size_t dim() const { return x.size(); }
};

inline bool proj_equal(const TVec& a, const TVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  // rule out opposite-sheet proportionality
  return certify_sign(a.back()) == certify_sign(b.back());
}

inline bool proj_equal(const ProjectivePoint& a, const ProjectivePoint& b) {
  return proj_equal(a.x, b.x);
}

// The unique fixed point in H^n of an elliptic isometry.
inline ProjectivePoint elliptic_fixed_point(const TMat& a) {
  TMat ami = a - TMat::identity(a.spec(), a.rows());
  auto ker = ami.kernel();
  check(!ker.empty(), Err::NotElliptic, "no fixed vector");
  check(ker.size() == 1, Err::NotIsolated, "fixed space has dimension > 1");
  check(causal_type(ker[0]) == CausalType::Timelike, Err::NotElliptic,
        "fixed line is not timelike");
  return ProjectivePoint(ker[0]);
}

// Smallest N >= 1 with A^N = I, up to the cap; NotFiniteOrder beyond it.
inline int matrix_order(const TMat& a, int cap = 60) {
  TMat p = a;
  for (int n = 1; n <= cap; ++n) {
    if (p.is_identity()) return n;
    p = p * a;
  }
  fail(Err::NotFiniteOrder, "matrix order exceeds cap " + std::to_string(cap));
}

}  // namespace hspin
