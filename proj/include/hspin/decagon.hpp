#pragma once

#include "hspin/polytope.hpp"
#include "hspin/trig.hpp"

namespace hspin {

// The genus-2 surface built from a regular hyperbolic decagon centered at e3,
// with opposite sides glued by hyperbolic translations, together with its spin
// structure and the order-5 rotation f = rho^2 and its lift fhat = -rhohat^2.
struct DecagonCase {
  const TowerSpec* spec = nullptr;
  FundamentalPolytope P;       // cells[0] = vertices, cells[1] = side midpoints
  Presentation pres;
  std::vector<Spin2> lifts;    // ghat_1..ghat_10
  TMat rho;                    // rotation by pi/5 about e3
  Spin2 rho_hat;
  TMat f;                      // rho^2, order 5
  Spin2 f_hat;                 // -rho_hat^2
  int order = 5;
  TVec vertex_rightmost, vertex_A, vertex_B;
};

// Q(sqrt5, sqrt(2+sqrt5), sqrt(10-2sqrt5)): carries the decagon's vertices,
// side pairings, their spin lifts and all trig values at denominators q | 20.
inline const TowerSpec* spec_decagon() {
  static const TowerSpec* s = [] {
    const TowerSpec* a = spec_sqrt5();
    const TowerSpec* b = tower_extend(a, TowerElem::from_rat(a, 2) + sqrt5(a));
    return tower_extend(b, TowerElem::from_rat(b, 10) - sqrt5(b) * rat(2));
  }();
  return s;
}

inline DecagonCase build_decagon() {
  DecagonCase D;
  const TowerSpec* T = spec_decagon();
  D.spec = T;
  TowerElem z(T), one = TowerElem::from_rat(T, 1);
  TowerElem r5 = sqrt5(T);
  auto rt = [&](const TowerElem& x, const char* what) {
    auto r = tower_sqrt(x);
    check(r.has_value(), Err::Internal, std::string("decagon radical missing: ") + what);
    return *r;
  };

  // rotation by pi/5 about the center
  TowerElem c10 = trig_value_in(RationalAngle(1, 10), TrigKind::Cos, T);
  TowerElem s10 = trig_value_in(RationalAngle(1, 10), TrigKind::Sin, T);
  D.rho = TMat(T, 3, 3);
  D.rho.at(0, 0) = c10;
  D.rho.at(0, 1) = -s10;
  D.rho.at(1, 0) = s10;
  D.rho.at(1, 1) = c10;
  D.rho.at(2, 2) = one;
  check(is_so_plus(D.rho) && matrix_order(D.rho) == 10, Err::Internal, "rho is not order 10");

  // the hyperbolic translation pairing the top side to the bottom side
  TowerElem big = one * rat(6) + r5 * rat(3);                    // 6 + 3 sqrt5
  TowerElem rad = rt(one * rat(20) + r5 * rat(9), "20+9sqrt5");  // sqrt(20+9sqrt5)
  TMat g1(T, 3, 3);
  g1.at(0, 0) = one;
  g1.at(1, 1) = big;
  g1.at(1, 2) = -(rad * rat(2));
  g1.at(2, 1) = -(rad * rat(2));
  g1.at(2, 2) = big;
  check(is_so_plus(g1), Err::Internal, "g1 is not in SO+(2,1)");

  // vertices: rightmost (2 sqrt(2+sqrt5), 0, 2+sqrt5) and its rho-rotations
  TowerElem r2p5 = TowerElem::generator(T, 1);
  D.vertex_rightmost = {r2p5 * rat(2), z, one * rat(2) + r5};
  // printed A and B: (-+ sqrt((1+sqrt5)/2), sqrt((15+7 sqrt5)/2), 2+sqrt5)
  TowerElem sA = rt((one + r5) * rat(1, 2), "(1+sqrt5)/2");
  TowerElem sB = rt((one * rat(15) + r5 * rat(7)) * rat(1, 2), "(15+7sqrt5)/2");
  D.vertex_A = {-sA, sB, one * rat(2) + r5};
  D.vertex_B = {sA, sB, one * rat(2) + r5};

  // generators g_k = rho^{k-1} g1 rho^{1-k}
  std::vector<TMat> gens;
  TMat rpow = TMat::identity(T, 3);
  for (int k = 0; k < 10; ++k) {
    TMat rinv = rpow.transpose();  // rho is orthogonal in the first block; inverse = J r^T J
    rinv = lorentz_form_matrix(T, 3) * rinv * lorentz_form_matrix(T, 3);
    gens.push_back(rpow * g1 * rinv);
    rpow = rpow * D.rho;
  }

  // polytope assembly
  D.P.spec = T;
  D.P.dim = 3;
  D.P.center = {z, z, one};
  for (int k = 0; k < 10; ++k) {
    Side s;
    s.pairing = gens[size_t(k)];
    s.neighbor = gens[size_t(k)] * D.P.center;
    s.inverse = 0;
    D.P.sides.push_back(std::move(s));
  }
  for (int i = 0; i < 10; ++i) {
    TMat inv = lorentz_form_matrix(T, 3) * gens[size_t(i)].transpose() * lorentz_form_matrix(T, 3);
    for (int j = 0; j < 10; ++j)
      if (gens[size_t(j)] == inv) D.P.sides[size_t(i)].inverse = j + 1;
    check(D.P.sides[size_t(i)].inverse == (i + 5) % 10 + 1, Err::Internal,
          "decagon pairing inverses are not the opposite sides");
  }
  D.P.build_neighbor_index();

  // boundary cells: vertices and side midpoints
  CellClass verts;
  CellClass mids;
  TVec v = D.vertex_rightmost;
  for (int k = 0; k < 10; ++k) {
    verts.points.push_back(v);
    TVec w = D.rho * v;
    TVec mid(3, z);
    for (int i = 0; i < 3; ++i) mid[i] = v[i] + w[i];
    mids.points.push_back(mid);
    v = w;
  }
  D.P.cells.push_back(std::move(verts));
  D.P.cells.push_back(std::move(mids));
  for (auto& layer : D.P.cells) build_cell_cycles(D.P, layer);
  check(D.P.cells[0].cycle_rep.size() == 2 && D.P.cells[0].cycle_size[0] == 5, Err::Internal,
        "decagon vertex cycles are not 2 x 5");
  check(D.P.cells[1].cycle_rep.size() == 5, Err::Internal, "decagon side cycles are not 5 x 2");

  // keep the direction convention of the printed vertex relators
  D.pres = build_presentation(D.P, D.P.cells[0], /*cover_all_generators=*/false);
  check(D.pres.relators.size() == 7, Err::Internal, "decagon expects 5 + 2 relators");

  // spin lifts
  TowerElem c20 = trig_value_in(RationalAngle(1, 20), TrigKind::Cos, T);
  TowerElem s20 = trig_value_in(RationalAngle(1, 20), TrigKind::Sin, T);
  D.rho_hat = Spin2(CVal(c20, s20), CVal(z, z), CVal(z, z), CVal(c20, -s20));
  check(su11_membership(D.rho_hat) && eta2(D.rho_hat) == D.rho, Err::LiftMismatch,
        "rho_hat does not lift rho");

  TowerElem diag = -((one * rat(3) + r5) * rat(1, 2));
  TowerElem off = rt((one * rat(5) + r5 * rat(3)) * rat(1, 2), "(5+3sqrt5)/2");
  Spin2 g1_hat(CVal(diag, z), CVal(z, -off), CVal(z, off), CVal(diag, z));
  check(su11_membership(g1_hat) && eta2(g1_hat) == g1, Err::LiftMismatch,
        "ghat_1 does not lift g1");

  Spin2 rhat_pow = Spin2::identity(T);
  for (int k = 0; k < 10; ++k) {
    Spin2 rinv = group_inverse(rhat_pow);
    D.lifts.push_back(rhat_pow * g1_hat * rinv);
    rhat_pow = rhat_pow * D.rho_hat;
  }
  for (int k = 0; k < 10; ++k)
    check(eta2(D.lifts[size_t(k)]) == gens[size_t(k)], Err::LiftMismatch,
          "ghat_k does not lift g_k");

  // the order-5 symmetry and its lift
  D.f = D.rho * D.rho;
  D.f_hat = -(D.rho_hat * D.rho_hat);
  D.order = 5;
  check(matrix_order(D.f) == 5, Err::Internal, "f is not order 5");
  Spin2 p = D.f_hat;
  int ord = 1;
  while (!(p == Spin2::identity(T)) && ord <= 10) {
    p = p * D.f_hat;
    ++ord;
  }
  check(ord == 5, Err::Internal, "f_hat is not order 5");
  return D;
}

}  // namespace hspin
