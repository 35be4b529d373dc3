// Acceptance suite: runs every criterion end to end at its stated tolerance
// (exact arithmetic throughout, so tolerances are zero unless timing is the
// subject) and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "hspin/cache.hpp"
#include "hspin/character.hpp"
#include "hspin/davis.hpp"
#include "hspin/decagon.hpp"
#include "hspin/indexengine.hpp"
#include "hspin/run.hpp"

using namespace hspin;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void run_criterion(int n, const std::string& what, const std::function<void()>& body) {
  try {
    body();
    std::cout << "PASS criterion " << n << ": " << what << "\n";
  } catch (const std::exception& e) {
    ++g_failures;
    std::cout << "FAIL criterion " << n << ": " << what << " -- " << e.what() << "\n";
  }
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("expectation failed: " + what);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const TowerSpec* T() { return spec_trig60(); }
CVal real_in_T(const TowerElem& x) { return CVal::from_real(promote(x, T())); }
TowerElem sqrtT(const TowerElem& x) {
  auto r = tower_sqrt(x);
  expect(r.has_value(), "radical exists in the trig tower");
  return *r;
}

std::vector<Multivector> unit_letters(Signature sig) {
  const TowerSpec* s5 = spec_sqrt5();
  std::vector<Multivector> out;
  for (int i = 1; i <= sig.n; ++i) out.push_back(Multivector::basis_vector(sig, s5, i));
  TowerElem z(s5), t = tau(s5);
  auto r = [&](long n, long d) { return TowerElem::from_rat(s5, rat(n, d)); };
  if (sig.n == 2) {
    out.push_back(Multivector::vector(sig, {r(5, 3), z, r(4, 3)}));
    out.push_back(Multivector::vector(sig, {z, r(13, 5), r(12, 5)}));
  } else {
    out.push_back(Multivector::vector(sig, {r(5, 3), z, z, z, r(4, 3)}));
    out.push_back(Multivector::vector(sig, {z, r(13, 5), z, z, r(12, 5)}));
    out.push_back(Multivector::vector(
        sig, {z, (TowerElem::from_rat(s5, 1) - t) * rat(1, 2), r(1, 2), t * rat(1, 2), z}));
  }
  return out;
}

}  // namespace

int main() {
  std::cout << "acceptance suite (exact arithmetic; equalities are structural)\n";

  // shared state assembled by the early criteria
  DavisCase davis;
  DecagonCase decagon;
  std::map<int, std::vector<FixedPointRecord<Spin4>>> davis_records;
  std::map<int, CVal> davis_values;

  run_criterion(1,
                "Davis construction: 120 sides with a5 = 3+6tau, orbits 600/1200/720/120, "
                "cycles 1x600 60x20 144x5 60x2, |Sym(P)| = 14400, under 60 s uncached",
                [&] {
    auto t0 = Clock::now();
    davis = build_davis();
    auto sym = davis_symmetry_group(davis);
    double secs = seconds_since(t0);
    expect(davis.P.sides.size() == 120, "120 sides");
    TowerElem a5 = TowerElem::from_rat(davis.spec, 3) + tau(davis.spec) * rat(6);
    for (const auto& s : davis.P.sides) expect(s.neighbor[4] == a5, "a5 = 3+6tau");
    const size_t orbit[4] = {600, 1200, 720, 120};
    const size_t cyc[4] = {1, 60, 144, 60};
    const int cyclen[4] = {600, 20, 5, 2};
    for (int d = 0; d < 4; ++d) {
      expect(davis.P.cells[d].points.size() == orbit[d], "orbit size");
      expect(davis.P.cells[d].cycle_rep.size() == cyc[d], "cycle count");
      for (int s : davis.P.cells[d].cycle_size) expect(s == cyclen[d], "cycle length");
    }
    expect(sym.size() == 14400, "Sym(P) order");
    std::cout << "  (construction + closure took " << secs << " s)\n";
    expect(secs < 60.0, "under 60 seconds");
  });
  if (g_failures) {
    std::cout << "constructions failed; aborting\n";
    return 1;
  }

  run_criterion(2,
                "spin structure: all 60+144 relators lift to +I; flipping any one "
                "generator lift breaks a length-5 relator",
                [&] {
    auto rep = verify_presentation(davis.P.generator_list(), davis.lifts, davis.pres);
    expect(rep.relator_count == 204, "204 relators");
    expect(rep.all_lorentz_identity, "relators hold in SO+(4,1)");
    expect(rep.all_spin_plus, "all lifted relators evaluate to +I");
    for (int i = 1; i <= 120; ++i) {
      bool breaks = false;
      for (const auto& w : davis.pres.relators) {
        if (w.size() != 5) continue;
        int cnt = 0;
        for (int L : w)
          if (L == i) ++cnt;
        if (cnt % 2 == 1) {
          breaks = true;
          break;
        }
      }
      expect(breaks, "flip of lift " + std::to_string(i) + " breaks a length-5 relator");
    }
    // spot-verify the parity argument by direct evaluation for three lifts
    for (int i : {1, 60, 120}) {
      auto flipped = davis.lifts;
      flipped[size_t(i) - 1] = -flipped[size_t(i) - 1];
      auto rep2 = verify_presentation(davis.P.generator_list(), flipped, davis.pres);
      bool broken5 = false;
      for (size_t r = 0; r < davis.pres.relators.size(); ++r)
        if (davis.pres.relators[r].size() == 5 && rep2.spin_signs[r] == -1) broken5 = true;
      expect(broken5, "direct evaluation confirms a broken length-5 relator");
    }
  });

  // all fifteen powers, shared by criteria 3..6 and 9
  for (int k = 1; k <= 14; ++k) davis_records[k] = fixed_points(davis, k);
  for (int k = 1; k <= 15; ++k) {
    CVal acc(T());
    if (k < 15)
      for (const auto& r : davis_records[k]) acc = acc + r.nu;
    davis_values[k] = acc;
  }

  const TowerSpec* s5 = spec_sqrt5();
  TowerElem one5 = TowerElem::from_rat(s5, 1), t5 = tau(s5);

  run_criterion(3,
                "order 15: two fixed points, angles {-8pi/15, 2pi/15} and {-14pi/15, 4pi/15}, "
                "traces -1-tau and -2+tau, nu -tau and 1-tau, Spin = 1-2tau = -sqrt5",
                [&] {
    const auto& recs = davis_records[1];
    expect(recs.size() == 2, "exactly 2 fixed points");
    expect(recs[0].angles == std::vector<RationalAngle>{{-4, 15}, {1, 15}}, "angles at C");
    expect(recs[1].angles == std::vector<RationalAngle>{{-7, 15}, {2, 15}}, "angles at A");
    expect(recs[0].trace == -(one5 + t5), "trace at C");
    expect(recs[1].trace == t5 - rat(2), "trace at A");
    expect(recs[0].nu == real_in_T(-t5), "nu(C) = -tau");
    expect(recs[1].nu == real_in_T(one5 - t5), "nu(A) = 1 - tau");
    expect(davis_values[1] == real_in_T(one5 - t5 * rat(2)), "Spin = 1 - 2tau");
    expect(davis_values[1] == real_in_T(-sqrt5(s5)), "Spin = -sqrt5");
  });

  run_criterion(4,
                "order 5: 26 fixed points, nu(C) = -2/5-tau/5, nu(A) = 3/5-tau/5, "
                "nu(B) = 1/5-2tau/5 for all 24 B-points, Spin = 5-10tau = -5 sqrt5",
                [&] {
    const auto& recs = davis_records[3];
    expect(recs.size() == 26, "exactly 26 fixed points");
    int nC = 0, nA = 0, nB = 0;
    for (const auto& r : recs) {
      if (r.cell_dim == -1) {
        ++nC;
        expect(r.nu == real_in_T(-(one5 * rat(2) + t5) * rat(1, 5)), "nu(C)");
      } else if (r.cell_dim == 0) {
        ++nA;
        expect(r.nu == real_in_T((one5 * rat(3) - t5) * rat(1, 5)), "nu(A)");
      } else {
        ++nB;
        expect(r.cell_dim == 2, "B-points are ridge cycles");
        expect(r.nu == real_in_T((one5 - t5 * rat(2)) * rat(1, 5)), "nu(B)");
      }
    }
    expect(nC == 1 && nA == 1 && nB == 24, "1 + 1 + 24 fixed points");
    expect(davis_values[3] == real_in_T(one5 * rat(5) - t5 * rat(10)), "Spin = 5 - 10tau");
    expect(davis_values[3] == real_in_T(-(sqrt5(s5) * rat(5))), "Spin = -5 sqrt5");
  });

  run_criterion(5, "order 3: exactly 2 fixed points and Spin = 0", [&] {
    expect(davis_records[5].size() == 2, "exactly 2 fixed points");
    expect(davis_values[5].is_zero(), "Spin(phihat^5) = 0");
    expect(davis_records[10].size() == 2, "power 10 likewise");
    expect(davis_values[10].is_zero(), "Spin(phihat^10) = 0");
  });

  run_criterion(6,
                "character polynomial: exact Fourier inversion gives the stated integer "
                "polynomial, p(1) = 0, dim bound 10 per chirality / 20 total",
                [&] {
    CharacterPoly p = character_poly(davis_values, 15);
    std::vector<long> expected{0, -2, 2, 1, -2, 0, -1, 2, 2, -1, 0, -2, 1, 2, -2};
    expect(p.coeff == expected, "coefficient vector");
    long p1 = 0;
    for (long c : p.coeff) p1 += c;
    expect(p1 == 0, "p(1) = 0");
    for (int k = 1; k <= 15; ++k)
      expect(character_eval(p, k) == davis_values[k], "p(zeta^k) round-trips");
    DimBound b = dim_lower_bound(p);
    expect(b.per_chirality == 10 && b.total == 20, "dim bounds 10 / 20");
  });

  run_criterion(7,
                "decagon: lifted relators +I, tr(fhat) = -(1+sqrt5)/2, "
                "nu(C) = -i sqrt((5+sqrt5)/10), nu(A) = nu(B) = -i sqrt((5-sqrt5)/10), "
                "Spin = -i sqrt((5+sqrt5)/2) = e^{-2pi i/5} - e^{2pi i/5}, under 5 s",
                [&] {
    auto t0 = Clock::now();
    decagon = build_decagon();
    auto rep = verify_presentation(decagon.P.generator_list(), decagon.lifts, decagon.pres);
    expect(rep.all_lorentz_identity && rep.all_spin_plus, "lifted relators all +I");
    CVal tr = complex_trace(decagon.f_hat);
    expect(tr.im.is_zero() && tr.re == -((TowerElem::from_rat(decagon.spec, 1) +
                                          sqrt5(decagon.spec)) * rat(1, 2)),
           "tr(fhat) = -(1+sqrt5)/2");
    auto recs = fixed_points(decagon, 1);
    expect(recs.size() == 3, "three fixed points");
    TowerElem five = TowerElem::from_rat(T(), 5);
    CVal nuC(TowerElem(T()), -sqrtT((five + sqrt5(T())) * rat(1, 10)));
    CVal nuAB(TowerElem(T()), -sqrtT((five - sqrt5(T())) * rat(1, 10)));
    int nC = 0, nV = 0;
    CVal total(T());
    for (const auto& r : recs) {
      total = total + r.nu;
      if (r.cell_dim == -1) {
        ++nC;
        expect(r.nu == nuC, "nu(C)");
      } else {
        ++nV;
        expect(r.nu == nuAB, "nu(A) = nu(B)");
      }
    }
    expect(nC == 1 && nV == 2, "C plus the two vertex cycles");
    CVal spin(TowerElem(T()), -sqrtT((five + sqrt5(T())) * rat(1, 2)));
    expect(total == spin, "Spin = -i sqrt((5+sqrt5)/2)");
    expect(total == root_of_unity(RationalAngle(-1, 5)) - root_of_unity(RationalAngle(1, 5)),
           "Spin is the difference of two 5th roots of unity");
    double secs = seconds_since(t0);
    std::cout << "  (decagon case took " << secs << " s)\n";
    expect(secs < 5.0, "under 5 seconds");
  });

  run_criterion(8, "genus-3 identity: -i sqrt3 = e^{-2pi i/3} - e^{2pi i/3} in the tower", [&] {
    CVal lhs(TowerElem(T()), -sqrtT(TowerElem::from_rat(T(), 3)));
    CVal rhs = root_of_unity(RationalAngle(-1, 3)) - root_of_unity(RationalAngle(1, 3));
    expect(lhs == rhs, "exact identity");
  });

  run_criterion(9,
                "property suites: field axioms, 1000-element double-cover checks, "
                "Clifford/matrix agreement, trace identity on every record, nu flip "
                "invariance, conjugate-power symmetry",
                [&] {
    std::mt19937 rng(20260809);
    // field axioms at every case-study tower depth
    for (const TowerSpec* spec :
         {spec_q(), s5, spec_davis(), spec_decagon(), spec_trig60()}) {
      std::uniform_int_distribution<int> num(-9, 9);
      std::uniform_int_distribution<int> den(1, 4);
      for (int it = 0; it < 60; ++it) {
        auto rnd = [&] {
          std::vector<Rat> c;
          for (size_t i = 0; i < spec->dim(); ++i) c.push_back(rat(num(rng), den(rng)));
          return TowerElem(spec, std::move(c));
        };
        TowerElem a = rnd(), b = rnd(), c = rnd();
        expect((a * b) * c == a * (b * c), "associativity");
        expect(a * (b + c) == a * b + a * c, "distributivity");
        if (!a.is_zero())
          expect(a * a.inverse() == TowerElem::from_rat(spec, 1), "multiplicative inverse");
      }
    }
    // 1000 random spin elements: 250 pairs in each of n = 2, 4
    auto letters2 = unit_letters(Signature{2, true});
    auto letters4 = unit_letters(Signature{4, true});
    auto random_spin = [&](const std::vector<Multivector>& letters, Signature sig) {
      std::uniform_int_distribution<size_t> pick(0, letters.size() - 1);
      Multivector x = Multivector::one(sig, s5);
      for (int k = 0; k < 4; ++k) x = cl_mul(x, letters[pick(rng)]);
      return x;
    };
    for (int it = 0; it < 250; ++it) {
      Multivector xa = random_spin(letters4, Signature{4, true});
      Multivector xb = random_spin(letters4, Signature{4, true});
      Spin4 A = delta4(xa), B = delta4(xb);
      expect(delta4(cl_mul(xa, xb)) == A * B, "delta4 is a homomorphism");
      expect(eta4(A * B) == eta4(A) * eta4(B), "eta4 is a homomorphism");
      expect(eta4(-A) == eta4(A), "eta4(-A) = eta4(A)");
      Multivector ya = random_spin(letters2, Signature{2, true});
      Multivector yb = random_spin(letters2, Signature{2, true});
      Spin2 C = delta2(ya), Dm = delta2(yb);
      expect(delta2(cl_mul(ya, yb)) == C * Dm, "delta2 is a homomorphism");
      expect(eta2(C * Dm) == eta2(C) * eta2(Dm), "eta2 is a homomorphism");
      expect(eta2(-C) == eta2(C), "eta2(-A) = eta2(A)");
    }
    // trace identity and nu double-flip invariance on every engine record
    int checked = 0;
    for (auto& [k, recs] : davis_records)
      for (const auto& r : recs) {
        expect(r.epsilon == 1 || r.epsilon == -1, "epsilon is a unit sign");
        std::vector<RationalAngle> flipped = r.angles;
        for (auto& a : flipped) a = -a;
        expect(nu_value(r.trace, flipped, 2) == r.nu, "nu invariant under double flips");
        ++checked;
      }
    expect(checked > 100, "records were actually checked");
    // conjugate-power symmetry for both cases
    for (int k = 1; k <= 14; ++k)
      expect(davis_values[k] == davis_values[15 - k].conj(), "Davis conjugate symmetry");
    for (int k = 1; k <= 4; ++k)
      expect(spin_index(decagon, k) == spin_index(decagon, 5 - k).conj(),
             "decagon conjugate symmetry");
  });

  run_criterion(10, "determinism: two full Davis runs emit byte-identical canonical JSON", [&] {
    RunConfig cfg;
    cfg.kind = CaseKind::Davis;
    cfg.output = OutputKind::Json;
    cfg.verify = VerifyLevel::Full;
    RunResult a = run_case(cfg);
    RunResult b = run_case(cfg);
    expect(a.exit_code == 0 && b.exit_code == 0, "both runs succeed");
    expect(canonical_report_string(a) == canonical_report_string(b), "byte-identical reports");
    expect(Json::parse(canonical_report_string(a)).dump(2) == canonical_report_string(a),
           "parse + re-serialize round-trips");
  });

  if (g_failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " criteria failed\n";
  return 1;
}
