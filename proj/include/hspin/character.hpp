#pragma once

#include <map>
#include <vector>

#include "hspin/trig.hpp"

namespace hspin {

// The class [p(x)] in Z[x]/(x^N - 1) carrying the equivariant indices of a
// cyclic action: p(e^{2 pi i k / N}) = Spin(phihat^k, M).
struct CharacterPoly {
  int modulus = 0;
  std::vector<long> coeff;  // c_0 .. c_{N-1}

  long at(int j) const { return coeff[size_t(((j % modulus) + modulus) % modulus)]; }

  std::string str() const {
    std::string s;
    for (int j = 0; j < modulus; ++j) {
      if (coeff[size_t(j)] == 0) continue;
      long c = coeff[size_t(j)];
      if (s.empty())
        s += (c < 0 ? "-" : "");
      else
        s += (c < 0 ? " - " : " + ");
      long a = c < 0 ? -c : c;
      if (a != 1 || j == 0) s += std::to_string(a);
      if (j > 0) {
        if (a != 1) s += "*";
        s += "x";
        if (j > 1) s += "^" + std::to_string(j);
      }
    }
    return s.empty() ? "0" : s;
  }
};

// Exact Fourier inversion of the index values over the trig tower; the
// coefficients must come out as rational integers.
inline CharacterPoly character_poly(const std::map<int, CVal>& values, int N) {
  const TowerSpec* T = spec_trig60();
  check(trig_supported(N), Err::UnsupportedDenominator, "modulus must divide 60");
  for (int k = 1; k <= N; ++k)
    check(values.count(k) == 1, Err::Internal,
          "character_poly needs a value for every power 1..N");
  CharacterPoly p;
  p.modulus = N;
  Rat inv_n(1, N);
  inv_n.canonicalize();
  for (int j = 0; j < N; ++j) {
    CVal acc(T);
    for (int k = 1; k <= N; ++k)
      acc = acc + values.at(k) * root_of_unity(RationalAngle(long(-j) * k, N));
    CVal cj = acc * inv_n;
    check(cj.im.is_zero(), Err::NonIntegralCoefficient,
          "Fourier coefficient " + std::to_string(j) + " is not real");
    check(cj.re.is_rational(), Err::NonIntegralCoefficient,
          "Fourier coefficient " + std::to_string(j) + " is irrational");
    const Rat& q = cj.re.rational_part();
    check(rat_is_integer(q), Err::NonIntegralCoefficient,
          "Fourier coefficient " + std::to_string(j) + " is not an integer");
    p.coeff.push_back(q.get_num().get_si());
  }
  return p;
}

inline CVal character_eval(const CharacterPoly& p, int k) {
  const TowerSpec* T = spec_trig60();
  CVal acc(T);
  for (int j = 0; j < p.modulus; ++j)
    acc = acc + root_of_unity(RationalAngle(long(j) * k, p.modulus)) *
                    TowerElem::from_rat(T, p.coeff[size_t(j)]);
  return acc;
}

struct DimBound {
  long per_chirality = 0;
  long total = 0;
};

// Positive coefficients bound dim H^+ from below; the chiral halves agree
// because the plain spinor-index vanishes.
inline DimBound dim_lower_bound(const CharacterPoly& p) {
  DimBound b;
  for (long c : p.coeff)
    if (c > 0) b.per_chirality += c;
  b.total = 2 * b.per_chirality;
  return b;
}

}  // namespace hspin
