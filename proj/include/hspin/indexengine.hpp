#pragma once

#include <map>
#include <vector>

#include "hspin/coherent.hpp"
#include "hspin/polytope.hpp"
#include "hspin/trig.hpp"

namespace hspin {

template <class SpinT>
struct FixedPointRecord {
  int cell_dim = -1;  // -1 = the polytope center
  int cycle_id = -1;
  ProjectivePoint point;
  Word gamma;  // evaluate(gamma) * f^k fixes the point
  std::vector<RationalAngle> angles;
  TowerElem trace;  // in Q(sqrt5)
  int epsilon = 0;
  CVal nu;  // over the trig tower
};

// tr of the spinor-bundle automorphism at a fixed point; real by construction
// in the quaternionic model, asserted real in the complex one.
inline TowerElem local_trace(const Spin2& a) {
  CVal t = complex_trace(a);
  check(t.im.is_zero(), Err::NonRealTrace, "fixed point trace has nonzero imaginary part");
  return t.re;
}
inline TowerElem local_trace(const Spin4& a) { return complex_trace(a).re; }

inline CVal ipow_unit(int m, const TowerSpec* spec) {
  switch (((m % 4) + 4) % 4) {
    case 0: return CVal::from_rat(spec, 1);
    case 1: return CVal::i_unit(spec);
    case 2: return CVal::from_rat(spec, -1);
    default: return -CVal::i_unit(spec);
  }
}

// nu(P) = i^m 2^{-m} tr prod_k csc(theta_k), exact over the trig tower.
inline CVal nu_value(const TowerElem& trace_q5, const std::vector<RationalAngle>& angles, int m) {
  check(int(angles.size()) == m, Err::Internal, "angle count does not match m");
  const TowerSpec* T = spec_trig60();
  for (const auto& th : angles)
    check(!th.is_zero() && !th.is_pi(), Err::AngleOutOfRange,
          "angle outside (0, pi) in absolute value: " + th.str());
  TowerElem prod = TowerElem::from_rat(T, 1);
  for (const auto& th : angles) prod *= trig_value(th, TrigKind::Csc);
  TowerElem scaled = promote(trace_q5, T) * prod * rat(1, 1L << m);
  return ipow_unit(m, T) * scaled;
}

// tr = eps * prod_k 2 cos(theta_k / 2) with eps = +-1.
inline int epsilon_sign(const TowerElem& trace_q5, const std::vector<RationalAngle>& angles) {
  const TowerSpec* T = spec_trig60();
  TowerElem denom = TowerElem::from_rat(T, 1);
  for (const auto& th : angles) {
    TowerElem c = trig_value(th, TrigKind::CosHalf);
    check(!c.is_zero(), Err::NotUnitSign, "cos(theta/2) vanishes");
    denom *= c * rat(2);
  }
  TowerElem q = promote(trace_q5, T) / denom;
  if (q == TowerElem::from_rat(T, 1)) return 1;
  if (q == TowerElem::from_rat(T, -1)) return -1;
  fail(Err::NotUnitSign, "trace / prod 2cos(theta/2) is not a unit sign");
}

namespace detail {

inline TMat lorentz_inverse(const TMat& a) {
  TMat j = lorentz_form_matrix(a.spec(), a.rows());
  return j * a.transpose() * j;
}

}  // namespace detail

// Enumerate the isolated fixed points of the isometry induced by f^k, scanning
// the polytope center and every boundary cell-center cycle.
template <class Case>
auto fixed_points(const Case& cs, int k) {
  using SpinT = std::remove_cv_t<std::remove_reference_t<decltype(cs.f_hat)>>;
  const TowerSpec* g = cs.spec;
  int dim = cs.P.dim;
  int m = (dim - 1) / 2;

  TMat Fk = TMat::identity(g, dim);
  SpinT Fk_hat = SpinT::identity(g);
  for (int i = 0; i < ((k % cs.order) + cs.order) % cs.order; ++i) {
    Fk = Fk * cs.f;
    Fk_hat = Fk_hat * cs.f_hat;
  }
  check(!Fk.is_identity(), Err::Internal, "fixed_points called on the identity power");

  // f^k must normalize the generator set
  TMat Fk_inv = detail::lorentz_inverse(Fk);
  for (int i = 1; i <= int(cs.P.sides.size()); ++i) {
    int j = cs.P.find_neighbor(Fk * cs.P.sides[size_t(i) - 1].neighbor) + 1;
    check(j >= 1, Err::NotNormalizing, "power does not permute the neighbor centers");
    check(Fk * cs.P.gen(i) * Fk_inv == cs.P.gen(j), Err::NotNormalizing,
          "power does not permute the side pairings");
  }

  auto gens = cs.P.generator_list();
  std::vector<FixedPointRecord<SpinT>> out;

  auto emit = [&](int cell_dim, int cycle_id, const TVec& rep, const Word& gamma) {
    TMat A = evaluate_word(gens, gamma, g, dim) * Fk;
    check(A * rep == rep, Err::Internal, "stabilizing word does not fix the point");
    FixedPointRecord<SpinT> r{cell_dim, cycle_id, ProjectivePoint(rep), gamma, {}, TowerElem(), 0,
                              CVal(spec_trig60())};
    r.angles = coherent_angles(A, r.point);
    SpinT A_hat = evaluate_word_spin(cs.lifts, gamma, g) * Fk_hat;
    if constexpr (std::is_same_v<SpinT, Spin4>) {
      check(eta4(A_hat) == A, Err::Internal, "spin stabilizer does not cover its isometry");
    } else {
      check(eta2(A_hat) == A, Err::Internal, "spin stabilizer does not cover its isometry");
    }
    r.trace = demote(local_trace(A_hat), spec_sqrt5(), "fixed point trace");
    r.nu = nu_value(r.trace, r.angles, m);
    r.epsilon = epsilon_sign(r.trace, r.angles);
    out.push_back(std::move(r));
  };

  if (Fk * cs.P.center == cs.P.center) emit(-1, -1, cs.P.center, {});

  for (size_t d = 0; d < cs.P.cells.size(); ++d) {
    const CellClass& layer = cs.P.cells[d];
    for (size_t cid = 0; cid < layer.cycle_rep.size(); ++cid) {
      const TVec& rep = layer.points[size_t(layer.cycle_rep[cid])];
      auto [w, y] = locate(Fk * rep, cs.P);
      int idx = layer.find_point(y);
      check(idx >= 0, Err::Internal, "image of a cell center is not a cell center");
      if (layer.cycle_id[size_t(idx)] != int(cid)) continue;  // not fixed in the quotient
      Word gamma = layer.to_rep[size_t(idx)];
      gamma.insert(gamma.end(), w.begin(), w.end());
      emit(int(d), int(cid), rep, gamma);
    }
  }
  return out;
}

// Spin(phihat^k, M) = sum of nu over the fixed points; the identity power has
// vanishing index because the spinor-index of a hyperbolic manifold is zero.
template <class Case>
CVal spin_index(const Case& cs, int k) {
  const TowerSpec* T = spec_trig60();
  if (((k % cs.order) + cs.order) % cs.order == 0) return CVal(T);
  auto recs = fixed_points(cs, k);
  CVal acc(T);
  for (const auto& r : recs) acc = acc + r.nu;
  return acc;
}

}  // namespace hspin
