#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "hspin/error.hpp"

namespace hspin {

// The angle 2*pi*p/q, stored reduced with the representative in (-pi, pi],
// i.e. -q/2 < p <= q/2.
struct RationalAngle {
  long p = 0;
  long q = 1;

  RationalAngle() = default;
  RationalAngle(long pp, long qq) {
    check(qq > 0, Err::Internal, "angle denominator must be positive");
    long g = std::gcd(pp < 0 ? -pp : pp, qq);
    if (g == 0) g = 1;
    p = pp / g;
    q = qq / g;
    p %= q;
    if (2 * p > q) p -= q;
    if (2 * p <= -q) p += q;
  }

  bool operator==(const RationalAngle& o) const { return p == o.p && q == o.q; }
  bool operator!=(const RationalAngle& o) const { return !(*this == o); }
  bool operator<(const RationalAngle& o) const {
    return p * o.q < o.p * q;  // compare as fractions
  }

  RationalAngle operator-() const { return RationalAngle(-p, q); }
  RationalAngle half() const { return RationalAngle(p, 2 * q); }
  RationalAngle times(long k) const { return RationalAngle(p * k, q); }

  bool is_zero() const { return p == 0; }
  bool is_pi() const { return 2 * p == q; }

  std::string str() const {
    // rendered as a fraction of 2*pi
    if (p == 0) return "0";
    std::string s = std::to_string(p);
    if (q != 1) s += "/" + std::to_string(q);
    return s + "*2pi";
  }
};

}  // namespace hspin
