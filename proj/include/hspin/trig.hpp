#pragma once

#include <utility>

#include "hspin/angle.hpp"
#include "hspin/cnum.hpp"
#include "hspin/tower.hpp"

namespace hspin {

// Exact trig values at rational angles 2*pi*p/q with q | 60, expressed in a
// caller-chosen tower.  The atomic values live at denominators 4, 3 and 5;
// everything else is assembled by CRT splitting p/q = a/4 + b/3 + c/5 (mod 1)
// and the angle addition formulas.  Radicals are located inside the target
// tower with tower_sqrt, so the same table serves any tower that contains
// sqrt(3) and sin(2pi/5) as needed by the requested denominator.

enum class TrigKind { Cos, Sin, Csc, CosHalf, CscHalf };

namespace detail {

struct CosSin {
  TowerElem cos, sin;
};

inline TowerElem need_sqrt(const TowerElem& x, const char* what) {
  auto r = tower_sqrt(x);
  check(r.has_value(), Err::UnsupportedDenominator,
        std::string("target tower lacks the radical sqrt(") + what + ")");
  return *r;
}

inline CosSin atom4(int a, const TowerSpec* spec) {
  a = ((a % 4) + 4) % 4;
  auto z = TowerElem(spec);
  auto one = TowerElem::from_rat(spec, 1);
  switch (a) {
    case 0: return {one, z};
    case 1: return {z, one};
    case 2: return {-one, z};
    default: return {z, -one};
  }
}

inline CosSin atom3(int b, const TowerSpec* spec) {
  b = ((b % 3) + 3) % 3;
  if (b == 0) return {TowerElem::from_rat(spec, 1), TowerElem(spec)};
  TowerElem c = TowerElem::from_rat(spec, rat(-1, 2));
  TowerElem s = need_sqrt(TowerElem::from_rat(spec, 3), "3") * rat(1, 2);
  if (b == 1) return {c, s};
  return {c, -s};
}

inline CosSin atom5(int c, const TowerSpec* spec) {
  c = ((c % 5) + 5) % 5;
  if (c == 0) return {TowerElem::from_rat(spec, 1), TowerElem(spec)};
  TowerElem r5 = need_sqrt(TowerElem::from_rat(spec, 5), "5");
  TowerElem cos1 = (r5 - rat(1)) * rat(1, 4);          // cos(2pi/5)
  TowerElem cos2 = -(r5 + rat(1)) * rat(1, 4);         // cos(4pi/5)
  TowerElem ten = TowerElem::from_rat(spec, 10);
  TowerElem sin1 = need_sqrt(ten + r5 * rat(2), "10+2sqrt5") * rat(1, 4);  // sin(2pi/5)
  TowerElem sin2 = need_sqrt(ten - r5 * rat(2), "10-2sqrt5") * rat(1, 4);  // sin(4pi/5)
  switch (c) {
    case 1: return {cos1, sin1};
    case 2: return {cos2, sin2};
    case 3: return {cos2, -sin2};
    default: return {cos1, -sin1};
  }
}

inline CosSin compose(const CosSin& x, const CosSin& y) {
  return {x.cos * y.cos - x.sin * y.sin, x.sin * y.cos + x.cos * y.sin};
}

}  // namespace detail

inline bool trig_supported(long q) { return q >= 1 && 60 % q == 0; }

// cos and sin of 2*pi*p/q in the given tower; q must divide 60.
inline std::pair<TowerElem, TowerElem> cos_sin_in(const RationalAngle& th,
                                                  const TowerSpec* spec) {
  check(trig_supported(th.q), Err::UnsupportedDenominator,
        "angle denominator " + std::to_string(th.q) + " does not divide 60");
  long p = ((th.p % th.q) + th.q) % th.q;
  long p60 = p * (60 / th.q);
  // p60/60 = a/4 + b/3 + c/5 (mod 1):  15a + 20b + 12c = p60 (mod 60)
  int a = int((3 * p60) % 4);  // 15 = 3 mod 4, inverse of 3 is 3
  int b = int((2 * p60) % 3);  // 20 = 2 mod 3, inverse of 2 is 2
  int c = int((3 * p60) % 5);  // 12 = 2 mod 5, inverse of 2 is 3
  check((15 * a + 20 * b + 12 * c - p60) % 60 == 0, Err::Internal, "CRT split failed");
  auto r = detail::compose(detail::compose(detail::atom4(a, spec), detail::atom3(b, spec)),
                           detail::atom5(c, spec));
  return {r.cos, r.sin};
}

inline TowerElem trig_value_in(const RationalAngle& th, TrigKind kind, const TowerSpec* spec) {
  switch (kind) {
    case TrigKind::Cos: return cos_sin_in(th, spec).first;
    case TrigKind::Sin: return cos_sin_in(th, spec).second;
    case TrigKind::Csc: {
      TowerElem s = cos_sin_in(th, spec).second;
      check(!s.is_zero(), Err::PoleAtZero, "csc pole: sin(theta) = 0 at " + th.str());
      return s.inverse();
    }
    case TrigKind::CosHalf: return cos_sin_in(th.half(), spec).first;
    case TrigKind::CscHalf: {
      TowerElem s = cos_sin_in(th.half(), spec).second;
      check(!s.is_zero(), Err::PoleAtZero, "csc pole: sin(theta/2) = 0 at " + th.str());
      return s.inverse();
    }
  }
  fail(Err::Internal, "bad trig kind");
}

// Default home tower for trig values: Q(sqrt5, sqrt3, sqrt(10+2sqrt5)), which
// contains cos and sin of every 2*pi*p/q with q | 60.
inline const TowerSpec* spec_trig60() {
  static const TowerSpec* s = [] {
    const TowerSpec* s5 = spec_sqrt5();
    const TowerSpec* s53 = tower_extend(s5, TowerElem::from_rat(s5, 3));
    TowerElem rad = TowerElem::from_rat(s53, 10) + sqrt5(s53) * rat(2);
    return tower_extend(s53, rad);
  }();
  return s;
}

inline TowerElem trig_value(const RationalAngle& th, TrigKind kind) {
  return trig_value_in(th, kind, spec_trig60());
}

inline CVal root_of_unity_in(const RationalAngle& th, const TowerSpec* spec) {
  auto [c, s] = cos_sin_in(th, spec);
  return CVal(c, s);
}

inline CVal root_of_unity(const RationalAngle& th) {
  return root_of_unity_in(th, spec_trig60());
}

}  // namespace hspin
