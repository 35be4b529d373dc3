#pragma once

#include <algorithm>

#include "hspin/polytope.hpp"

namespace hspin {

// The Davis manifold: the regular 120-cell centered at e5 in H^4 with opposite
// sides glued by translations, its symmetric spin structure, and the order-15
// symmetry used for the index computations.
struct DavisCase {
  const TowerSpec* spec = nullptr;     // Q(tau)[kappa], kappa^2 = 1 + 3 tau
  std::vector<TVec> simplex_vertices;  // v1..v5 of the (5,3,3,5) simplex
  std::vector<TVec> simplex_normals;   // s1..s5, unit spacelike wall normals
  std::vector<TMat> reflections;       // rho1..rho4 over Q(sqrt5)
  FundamentalPolytope P;               // cells[0]=vertices .. cells[3]=side centers
  Presentation pres;                   // 60 opposite-side + 144 ridge relators
  std::vector<Spin4> lifts;            // ghat_1..ghat_120
  std::vector<Spin4> reflection_lifts; // R1..R4 over Q(sqrt5)
  TMat f;                              // order-15 symmetry
  Spin4 f_hat;
  int order = 15;
  int side_one = 0;  // 1-based side whose direction vector is ((2+2tau)kappa,0,0,0)
};

inline const TowerSpec* spec_davis() {
  static const TowerSpec* s = [] {
    const TowerSpec* s5 = spec_sqrt5();
    return tower_extend(s5, TowerElem::from_rat(s5, 1) + tau(s5) * rat(3));
  }();
  return s;
}

namespace davis_detail {

// Side-pairing translation carrying the polytope onto the adjacent cell with
// center a: entries 1 + a_i a_j / (1 + a_5) on the spatial block, bordered by a.
inline TMat pairing_from_neighbor(const TVec& a) {
  const TowerSpec* spec = a[0].spec();
  TowerElem denom_inv = (a[4] + rat(1)).inverse();
  TMat g(spec, 5, 5);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      g.at(i, j) = a[size_t(i)] * a[size_t(j)] * denom_inv;
      if (i == j) g.at(i, j) += rat(1);
    }
  for (int i = 0; i < 4; ++i) {
    g.at(i, 4) = a[size_t(i)];
    g.at(4, i) = a[size_t(i)];
  }
  g.at(4, 4) = a[4];
  return g;
}

inline std::string point_key(const TVec& v) {
  std::string s;
  for (const auto& x : v) s += tower_canonical_string(x) + "|";
  return s;
}

}  // namespace davis_detail

inline DavisCase build_davis() {
  DavisCase D;
  const TowerSpec* dv = spec_davis();
  const TowerSpec* s5 = spec_sqrt5();
  D.spec = dv;
  TowerElem z(dv), one = TowerElem::from_rat(dv, 1);
  TowerElem t = tau(dv);
  TowerElem k = TowerElem::generator(dv, 1);
  auto r = [&](long n, long d = 1) { return TowerElem::from_rat(dv, rat(n, d)); };

  // (5,3,3,5) Coxeter simplex: vertex, edge center, ridge center, side center,
  // and the polytope center.  v2 is pinned by the incidences v2 . s_j = 0 for
  // j != 2 together with f(v2) = -1.
  D.simplex_vertices = {
      {(r(2) + t * rat(3)) * k, (one + t) * k, z, k, r(5) + t * rat(8)},
      {(one + t) * k, k, z, z, r(2) + t * rat(3)},
      {t * k, (t * rat(2) - rat(1)) * k * rat(1, 5), (r(3) - t) * k * rat(1, 5), z,
       one + t * rat(2)},
      {k, z, z, z, one + t},
      {z, z, z, z, one}};
  D.simplex_normals = {
      {z, z, z, -one, z},
      {z, (one - t) * rat(1, 2), r(1, 2), t * rat(1, 2), z},
      {z, z, -one, z, z},
      {(one - t) * rat(1, 2), t * rat(1, 2), r(1, 2), z, z},
      {one + t, z, z, z, k}};
  for (int i = 0; i < 5; ++i) {
    check(lorentz_product(D.simplex_vertices[i], D.simplex_vertices[i]) == -one, Err::Internal,
          "simplex vertex off the hyperboloid");
    check(lorentz_product(D.simplex_normals[i], D.simplex_normals[i]) == one, Err::Internal,
          "simplex wall normal not unit spacelike");
    for (int j = 0; j < 5; ++j)
      if (i != j)
        check(lorentz_product(D.simplex_vertices[i], D.simplex_normals[j]).is_zero(),
              Err::Internal, "simplex vertex misses its wall");
  }

  // Sym(P) generators: reflections in the four walls through the center.
  // These have no kappa component, so they live over Q(sqrt5).
  for (int i = 0; i < 4; ++i) {
    TVec s_lo;
    for (const auto& x : D.simplex_normals[size_t(i)])
      s_lo.push_back(demote(x, s5, "reflection normal"));
    D.reflections.push_back(reflection_from_normal(s_lo));
  }
  std::vector<TMat> refl_dv;
  for (const auto& m : D.reflections) refl_dv.push_back(promote_mat(m, dv));

  // sides: the orbit of the side center v4 (120 points)
  std::vector<TVec> side_centers = orbit_closure(refl_dv, D.simplex_vertices[3]);
  check(side_centers.size() == 120, Err::OrbitSizeMismatch,
        "side-center orbit has size " + std::to_string(side_centers.size()));

  TVec e5 = {z, z, z, z, one};
  TowerElem a5_expected = r(3) + t * rat(6);
  struct RawSide {
    TVec neighbor;
    std::string key;
  };
  std::vector<RawSide> raw;
  for (const auto& c : side_centers) {
    TVec n(5, z);
    for (int i = 0; i < 5; ++i) n[size_t(i)] = c[4] * c[size_t(i)];
    n[4] -= one;
    check(lorentz_product(n, c).is_zero(), Err::Internal, "side wall normal misses its center");
    TVec a = reflection_from_normal(n) * e5;
    check(a[4] == a5_expected, Err::Internal,
          "neighbor center has unexpected last coordinate: " + tower_canonical_string(a[4]));
    raw.push_back({a, davis_detail::point_key(a)});
  }
  std::sort(raw.begin(), raw.end(),
            [](const RawSide& x, const RawSide& y) { return x.key < y.key; });

  // order sides so g_{121-i} = g_i^{-1} has the negated direction vector
  std::vector<int> order_map(120, -1);
  {
    std::unordered_map<std::string, int> by_key;
    for (int i = 0; i < 120; ++i) by_key[raw[size_t(i)].key] = i;
    int next = 0;
    for (int i = 0; i < 120; ++i) {
      if (order_map[size_t(i)] >= 0) continue;
      TVec neg = raw[size_t(i)].neighbor;
      for (int c = 0; c < 4; ++c) neg[size_t(c)] = -neg[size_t(c)];
      auto it = by_key.find(davis_detail::point_key(neg));
      check(it != by_key.end() && order_map[size_t(it->second)] < 0, Err::Internal,
            "side opposite-pairing failed");
      order_map[size_t(i)] = next;
      order_map[size_t(it->second)] = 119 - next;
      ++next;
    }
  }
  D.P.spec = dv;
  D.P.dim = 5;
  D.P.center = e5;
  D.P.sides.assign(120, Side{});
  for (int i = 0; i < 120; ++i) {
    Side s;
    s.neighbor = raw[size_t(i)].neighbor;
    s.pairing = davis_detail::pairing_from_neighbor(s.neighbor);
    s.inverse = 120 - order_map[size_t(i)];
    check(s.pairing * e5 == s.neighbor, Err::Internal, "pairing does not move the center right");
    check(s.pairing == s.pairing.transpose(), Err::Internal, "pairing is not symmetric");
    check(is_so_plus(s.pairing), Err::Internal, "pairing is not in SO+(4,1)");
    D.P.sides[size_t(order_map[size_t(i)])] = std::move(s);
  }
  for (int i = 1; i <= 120; ++i)
    check((D.P.gen(i) * D.P.gen(D.P.inv(i))).is_identity(), Err::Internal,
          "opposite pairings are not inverse");
  D.P.build_neighbor_index();

  // boundary cell centers by dimension, as Sym(P)-orbits of the simplex points
  const size_t expected_orbits[4] = {600, 1200, 720, 120};
  for (int d = 0; d < 4; ++d) {
    CellClass layer;
    layer.points = orbit_closure(refl_dv, D.simplex_vertices[size_t(d)]);
    check(layer.points.size() == expected_orbits[d], Err::OrbitSizeMismatch,
          "orbit of cell dimension " + std::to_string(d) + " has size " +
              std::to_string(layer.points.size()));
    D.P.cells.push_back(std::move(layer));
  }
  for (auto& layer : D.P.cells) build_cell_cycles(D.P, layer);
  auto expect_cycles = [&](int d, size_t count, int size) {
    const CellClass& L = D.P.cells[size_t(d)];
    check(L.cycle_rep.size() == count, Err::Internal,
          "cell dimension " + std::to_string(d) + " has " + std::to_string(L.cycle_rep.size()) +
              " cycles");
    for (int s : L.cycle_size)
      check(s == size, Err::Internal, "cycle of unexpected size in dimension " + std::to_string(d));
  };
  expect_cycles(0, 1, 600);
  expect_cycles(1, 60, 20);
  expect_cycles(2, 144, 5);
  expect_cycles(3, 60, 2);

  D.pres = build_presentation(D.P, D.P.cells[2]);
  check(D.pres.relators.size() == 204, Err::Internal,
        "expected 60 + 144 relators, got " + std::to_string(D.pres.relators.size()));
  for (const auto& w : D.pres.relators)
    check(w.size() == 2 || w.size() == 5, Err::Internal, "relator of unexpected length");

  // reflection lifts R_i = (r q; -conj q -r) with (q, r) read off the wall normal
  const TowerSpec* q5 = s5;
  for (int i = 0; i < 4; ++i) {
    TVec s_lo;
    for (const auto& x : D.simplex_normals[size_t(i)])
      s_lo.push_back(demote(x, q5, "reflection normal"));
    Quat q(s_lo[0], s_lo[1], s_lo[2], s_lo[3]);
    Spin4 R(Quat::from_real(s_lo[4]), q, -q.conj(), -Quat::from_real(s_lo[4]));
    D.reflection_lifts.push_back(R);
  }
  // even words in the R_i lift the rotation subgroup: eta(R_i R_j) = rho_i rho_j
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Spin4 w = D.reflection_lifts[size_t(i)] * D.reflection_lifts[size_t(j)];
      check(su11_membership(w), Err::LiftMismatch, "R_i R_j is not in SU(1,1;H)");
      check(eta4(w) == D.reflections[size_t(i)] * D.reflections[size_t(j)], Err::LiftMismatch,
            "eta(R_i R_j) != rho_i rho_j");
    }

  // the printed lift of the side pairing with direction ((2+2tau)kappa, 0,0,0)
  TVec a1 = {(r(2) + t * rat(2)) * k, z, z, z, a5_expected};
  D.side_one = D.P.find_neighbor(a1) + 1;
  check(D.side_one >= 1, Err::Internal, "distinguished side not found");
  Spin4 g1_hat(Quat::from_real(-(one + t)), Quat::from_real(k), Quat::from_real(k),
               Quat::from_real(-(one + t)));
  check(su11_membership(g1_hat), Err::LiftMismatch, "ghat_1 is not in SU(1,1;H)");
  check(eta4(g1_hat) == D.P.gen(D.side_one), Err::LiftMismatch, "eta(ghat_1) != g_1");

  // transport the lift to every side by conjugating with even reflection words
  struct PairGen {
    TMat lorentz;   // over the Davis tower
    Spin4 spin;     // over the Davis tower
  };
  std::vector<PairGen> pairs;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      PairGen p{promote_mat(D.reflections[size_t(i)] * D.reflections[size_t(j)], dv),
                Spin4::identity(dv)};
      Spin4 w = D.reflection_lifts[size_t(i)] * D.reflection_lifts[size_t(j)];
      p.spin = Spin4(
          Quat(promote(w.a.a, dv), promote(w.a.b, dv), promote(w.a.c, dv), promote(w.a.d, dv)),
          Quat(promote(w.b.a, dv), promote(w.b.b, dv), promote(w.b.c, dv), promote(w.b.d, dv)),
          Quat(promote(w.c.a, dv), promote(w.c.b, dv), promote(w.c.c, dv), promote(w.c.d, dv)),
          Quat(promote(w.d.a, dv), promote(w.d.b, dv), promote(w.d.c, dv), promote(w.d.d, dv)));
      pairs.push_back(std::move(p));
    }

  D.lifts.assign(120, Spin4::identity(dv));
  std::vector<bool> have(120, false);
  D.lifts[size_t(D.side_one) - 1] = g1_hat;
  have[size_t(D.side_one) - 1] = true;
  std::deque<int> queue{D.side_one};
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (const auto& p : pairs) {
      TVec img = p.lorentz * D.P.sides[size_t(s) - 1].neighbor;
      int u = D.P.find_neighbor(img) + 1;
      check(u >= 1, Err::Internal, "symmetry left the neighbor set");
      if (have[size_t(u) - 1]) continue;
      D.lifts[size_t(u) - 1] = p.spin * D.lifts[size_t(s) - 1] * group_inverse(p.spin);
      have[size_t(u) - 1] = true;
      queue.push_back(u);
    }
  }
  for (int i = 1; i <= 120; ++i) {
    check(have[size_t(i) - 1], Err::LiftMismatch, "side not reached by symmetry transport");
    check(eta4(D.lifts[size_t(i) - 1]) == D.P.gen(i), Err::LiftMismatch,
          "transported lift does not cover its pairing");
  }
  // global equivariance: conjugation by every generator pair permutes the lift
  // set with + signs; a sign flip anywhere here means the symmetric spin
  // structure would be ill-defined
  for (const auto& p : pairs)
    for (int s = 1; s <= 120; ++s) {
      TVec img = p.lorentz * D.P.sides[size_t(s) - 1].neighbor;
      int u = D.P.find_neighbor(img) + 1;
      Spin4 conj = p.spin * D.lifts[size_t(s) - 1] * group_inverse(p.spin);
      check(conj == D.lifts[size_t(u) - 1], Err::LiftMismatch,
            "conjugation orbit produced an inconsistent lift sign");
    }

  // the order-15 symmetry and its lift
  TowerElem half = r(1, 2), th = t * rat(1, 2), mh = t * rat(1, 2) - rat(1, 2);
  D.f = TMat(dv, 5, 5);
  D.f.at(0, 1) = -one;
  D.f.at(1, 0) = th;
  D.f.at(1, 2) = -half;
  D.f.at(1, 3) = mh;
  D.f.at(2, 0) = mh;
  D.f.at(2, 2) = th;
  D.f.at(2, 3) = half;
  D.f.at(3, 0) = -half;
  D.f.at(3, 2) = -mh;
  D.f.at(3, 3) = th;
  D.f.at(4, 4) = one;
  check(is_so_plus(D.f), Err::Internal, "order-15 symmetry is not in SO+(4,1)");
  check(matrix_order(D.f) == 15, Err::Internal, "printed symmetry is not of order 15");

  D.f_hat = Spin4(Quat(-th, -half, half - th, z), Quat(dv), Quat(dv),
                  Quat(-half, th, z, half - th));
  check(su11_membership(D.f_hat), Err::LiftMismatch, "fhat is not in SU(1,1;H)");
  check(eta4(D.f_hat) == D.f, Err::LiftMismatch, "fhat does not lift f");
  {
    Spin4 p = D.f_hat;
    int ord = 1;
    while (!(p == Spin4::identity(dv)) && ord <= 30) {
      p = p * D.f_hat;
      ++ord;
    }
    check(ord == 15, Err::Internal, "fhat is not of order 15");
  }
  return D;
}

// Full symmetry group of the 120-cell: closure of the four wall reflections.
inline std::vector<TMat> davis_symmetry_group(const DavisCase& D) {
  auto g = group_closure(D.reflections);
  check(g.size() == 14400, Err::OrbitSizeMismatch,
        "Sym(P) closure has size " + std::to_string(g.size()));
  return g;
}

}  // namespace hspin
