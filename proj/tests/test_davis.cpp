#include <catch2/catch_amalgamated.hpp>

#include "hspin/davis.hpp"

using namespace hspin;

namespace {
const DavisCase& D() {
  static DavisCase d = build_davis();
  return d;
}
}  // namespace

TEST_CASE("simplex data consistency") {
  const auto& d = D();
  const TowerSpec* dv = d.spec;
  TowerElem one = TowerElem::from_rat(dv, 1), t = tau(dv);
  TowerElem k = TowerElem::generator(dv, 1);
  // v5 = e5 and s5 = (1+tau,0,0,0,kappa) as printed
  REQUIRE(d.simplex_vertices[4] == TVec{TowerElem(dv), TowerElem(dv), TowerElem(dv), TowerElem(dv), one});
  REQUIRE(d.simplex_normals[4] == TVec{one + t, TowerElem(dv), TowerElem(dv), TowerElem(dv), k});
  // v4 o s5 = 0 and all other incidences were asserted during construction
  REQUIRE(lorentz_product(d.simplex_vertices[3], d.simplex_normals[4]).is_zero());
}

TEST_CASE("side structure") {
  const auto& d = D();
  REQUIRE(d.P.sides.size() == 120);
  TowerElem a5 = TowerElem::from_rat(d.spec, 3) + tau(d.spec) * rat(6);
  for (int i = 1; i <= 120; ++i) {
    REQUIRE(d.P.sides[size_t(i) - 1].neighbor[4] == a5);
    REQUIRE(d.P.inv(i) == 121 - i);
  }
  // the distinguished side has direction ((2+2tau)kappa, 0, 0, 0)
  const TVec& a1 = d.P.sides[size_t(d.side_one) - 1].neighbor;
  TowerElem expect = (TowerElem::from_rat(d.spec, 2) + tau(d.spec) * rat(2)) *
                     TowerElem::generator(d.spec, 1);
  REQUIRE(a1[0] == expect);
  REQUIRE(a1[1].is_zero());
  REQUIRE(a1[2].is_zero());
  REQUIRE(a1[3].is_zero());
}

TEST_CASE("orbit sizes and cycle partition") {
  const auto& d = D();
  REQUIRE(d.P.cells[0].points.size() == 600);
  REQUIRE(d.P.cells[1].points.size() == 1200);
  REQUIRE(d.P.cells[2].points.size() == 720);
  REQUIRE(d.P.cells[3].points.size() == 120);
  REQUIRE(d.P.cells[0].cycle_rep.size() == 1);
  REQUIRE(d.P.cells[1].cycle_rep.size() == 60);
  REQUIRE(d.P.cells[2].cycle_rep.size() == 144);
  REQUIRE(d.P.cells[3].cycle_rep.size() == 60);
}

TEST_CASE("presentation relators") {
  const auto& d = D();
  int len2 = 0, len5 = 0;
  for (const auto& w : d.pres.relators) {
    if (w.size() == 2) ++len2;
    if (w.size() == 5) ++len5;
  }
  REQUIRE(len2 == 60);
  REQUIRE(len5 == 144);
  // every relator evaluates to the identity in the Lorentz model, and the
  // lifted relators all evaluate to +I (checked together below)
  auto rep = verify_presentation(d.P.generator_list(), d.lifts, d.pres);
  REQUIRE(rep.all_lorentz_identity);
  REQUIRE(rep.all_spin_plus);
}

TEST_CASE("spin structure uniqueness: flipping any generator lift breaks a ridge relator") {
  const auto& d = D();
  // relator signs flip by (-1)^(occurrences); a flip of ghat_i breaks some
  // length-5 relator iff i occurs an odd number of times in it
  for (int i = 1; i <= 120; ++i) {
    bool breaks_len5 = false;
    for (const auto& w : d.pres.relators) {
      if (w.size() != 5) continue;
      int count = 0;
      for (int L : w)
        if (L == i) ++count;
      if (count % 2 == 1) {
        breaks_len5 = true;
        break;
      }
    }
    REQUIRE(breaks_len5);
  }
}

TEST_CASE("flip of one lift verified by direct evaluation") {
  const auto& d = D();
  auto lifts_neg = d.lifts;
  lifts_neg[size_t(d.side_one) - 1] = -lifts_neg[size_t(d.side_one) - 1];
  auto rep = verify_presentation(d.P.generator_list(), lifts_neg, d.pres);
  REQUIRE(!rep.all_spin_plus);
  bool broken_len5 = false;
  for (size_t r = 0; r < d.pres.relators.size(); ++r)
    if (d.pres.relators[r].size() == 5 && rep.spin_signs[r] == -1) broken_len5 = true;
  REQUIRE(broken_len5);
}

TEST_CASE("printed lift data") {
  const auto& d = D();
  const TowerSpec* dv = d.spec;
  TowerElem one = TowerElem::from_rat(dv, 1), t = tau(dv);
  TowerElem k = TowerElem::generator(dv, 1);
  // ghat_1 = (-1-tau, kappa; kappa, -1-tau)
  const Spin4& g1h = d.lifts[size_t(d.side_one) - 1];
  REQUIRE(g1h.a == Quat::from_real(-(one + t)));
  REQUIRE(g1h.b == Quat::from_real(k));
  REQUIRE(g1h.c == Quat::from_real(k));
  REQUIRE(g1h.d == Quat::from_real(-(one + t)));
  // R_i data: |q|^2 - r^2 = 1
  for (const auto& R : d.reflection_lifts) {
    TowerElem q2 = R.b.norm2();
    TowerElem r2 = R.a.norm2();
    REQUIRE(q2 - r2 == TowerElem::from_rat(spec_sqrt5(), 1));
  }
}

TEST_CASE("order-15 symmetry normalizes the generators with plus signs") {
  const auto& d = D();
  auto rep = normalizer_check(d.f, d.f_hat, d.P.generator_list(), d.lifts);
  REQUIRE(rep.all_plus);
  // traces of the printed lift and its cube
  CVal tr1 = complex_trace(d.f_hat);
  REQUIRE(tr1.re == -(TowerElem::from_rat(d.spec, 1) + tau(d.spec)));
  Spin4 f3 = d.f_hat * d.f_hat * d.f_hat;
  REQUIRE(complex_trace(f3).re == TowerElem::from_rat(d.spec, 1) + tau(d.spec));
  // f^3 фixes e5 and is the printed order-5 matrix: спot-check two entries
  TMat F3 = d.f * d.f * d.f;
  REQUIRE(F3.at(0, 0) == tau(d.spec) * rat(1, 2) - rat(1, 2));
  REQUIRE(F3.at(0, 1) == tau(d.spec) * rat(1, 2));
  REQUIRE(F3.at(4, 4) == TowerElem::from_rat(d.spec, 1));
  // f^3 lift from the printed fhat: diag block form diag(q, 1)
  REQUIRE(f3.b.is_zero());
  REQUIRE(f3.c.is_zero());
  REQUIRE(f3.d == Quat::from_rat(d.spec, 1));
}

TEST_CASE("symmetry group closures", "[slow]") {
  const auto& d = D();
  auto full = davis_symmetry_group(d);
  REQUIRE(full.size() == 14400);
  // even words generate the rotation subgroup of index 2
  std::vector<TMat> even_gens = {d.reflections[0] * d.reflections[1],
                                 d.reflections[1] * d.reflections[2],
                                 d.reflections[2] * d.reflections[3]};
  auto rot = group_closure(even_gens);
  REQUIRE(rot.size() == 7200);
  // closure of the identity alone
  auto triv = group_closure({TMat::identity(spec_sqrt5(), 5)});
  REQUIRE(triv.size() == 1);
}
