#pragma once

#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "hspin/cache.hpp"
#include "hspin/character.hpp"
#include "hspin/davis.hpp"
#include "hspin/decagon.hpp"
#include "hspin/indexengine.hpp"

namespace hspin {

using Json = nlohmann::ordered_json;

enum class CaseKind { Decagon, Davis };
enum class OutputKind { Text, Json };
enum class VerifyLevel { Fast, Full };

struct RunConfig {
  CaseKind kind = CaseKind::Davis;
  std::vector<int> powers;  // empty = all of 1..N
  std::string cache_path;   // empty = caching off
  OutputKind output = OutputKind::Text;
  VerifyLevel verify = VerifyLevel::Fast;
  int threads = 0;  // 0 = auto
};

// exit codes: 0 ok, 2 construction failure, 3 verification failure,
// 4 index inconsistency
struct RunResult {
  int exit_code = 0;
  Json report;       // canonical body
  Json timing;       // non-canonical
  std::string rendered;
};

namespace report_detail {

inline Json exact_json(const TowerElem& x) {
  return Json{{"exact", tower_canonical_string(x)}, {"decimal", decimal_string(x)}};
}

inline Json cval_json(const CVal& v) {
  Json j;
  j["re"] = tower_canonical_string(v.re);
  j["im"] = tower_canonical_string(v.im);
  j["re_decimal"] = decimal_string(v.re);
  j["im_decimal"] = decimal_string(v.im);
  return j;
}

inline Json angles_json(const std::vector<RationalAngle>& angles) {
  Json arr = Json::array();
  for (const auto& a : angles) arr.push_back(std::to_string(a.p) + "/" + std::to_string(a.q));
  return arr;
}

inline Json point_json(const TVec& x) {
  Json exact = Json::array();
  Json dec = Json::array();
  for (const auto& c : x) {
    exact.push_back(tower_canonical_string(c));
    dec.push_back(decimal_string(c));
  }
  return Json{{"exact", exact}, {"decimal", dec}};
}

template <class SpinT>
Json record_json(const FixedPointRecord<SpinT>& r) {
  Json j;
  j["cell_dim"] = r.cell_dim;
  j["cycle"] = r.cycle_id;
  j["point"] = point_json(r.point.x);
  j["gamma_word"] = r.gamma;
  j["angles"] = angles_json(r.angles);
  j["trace"] = tower_canonical_string(r.trace);
  j["trace_decimal"] = decimal_string(r.trace);
  j["epsilon"] = r.epsilon;
  j["nu"] = cval_json(r.nu);
  return j;
}

// uniqueness of the lift signs: flipping one generator lift must break at
// least one relator; parity of occurrences decides which ones break
struct Uniqueness {
  bool unique = true;
  bool every_flip_breaks_cycle_relator = true;
};

inline Uniqueness uniqueness_scan(const Presentation& pres) {
  Uniqueness u;
  for (int i = 1; i <= pres.ngens; ++i) {
    bool any = false, len5 = false;
    for (const auto& w : pres.relators) {
      int cnt = 0;
      for (int L : w)
        if (L == i) ++cnt;
      if (cnt % 2 == 1) {
        any = true;
        if (w.size() == 5) len5 = true;
      }
    }
    if (!any) u.unique = false;
    if (!len5) u.every_flip_breaks_cycle_relator = false;
  }
  return u;
}

template <class Case>
void run_powers(const RunConfig& cfg, const Case& cs, const std::vector<int>& powers,
                Json& out_powers, std::map<int, CVal>& spin_values) {
  using SpinT = std::remove_cv_t<std::remove_reference_t<decltype(cs.f_hat)>>;
  struct Slot {
    std::vector<FixedPointRecord<SpinT>> records;
    CVal spin{spec_trig60()};
    int order = 1;
    bool identity_power = false;
  };
  std::vector<Slot> slots(powers.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= powers.size()) return;
      int k = powers[i];
      Slot& s = slots[i];
      if (k % cs.order == 0) {
        s.identity_power = true;
        s.order = 1;
        continue;
      }
      s.order = cs.order / std::gcd(cs.order, k);
      s.records = fixed_points(cs, k);
      for (const auto& r : s.records) s.spin = s.spin + r.nu;
    }
  };
  unsigned nthreads = cfg.threads > 0 ? unsigned(cfg.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, std::max<size_t>(powers.size(), 1));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (size_t i = 0; i < powers.size(); ++i) {
    int k = powers[i];
    const Slot& s = slots[i];
    Json pj;
    pj["k"] = k;
    if (s.identity_power) {
      pj["identity_power"] = true;
      pj["spin"] = cval_json(CVal(spec_trig60()));
    } else {
      pj["order"] = s.order;
      Json recs = Json::array();
      for (const auto& r : s.records) recs.push_back(record_json(r));
      pj["fixed_points"] = std::move(recs);
      pj["spin"] = cval_json(s.spin);
      // difference-of-two-roots-of-unity form, when it is one
      CVal diff = root_of_unity(RationalAngle(-k, cs.order)) -
                  root_of_unity(RationalAngle(k, cs.order));
      if (s.spin == diff)
        pj["root_of_unity_form"] = "e^(-2pi i*" + std::to_string(k) + "/" +
                                   std::to_string(cs.order) + ") - e^(2pi i*" +
                                   std::to_string(k) + "/" + std::to_string(cs.order) + ")";
    }
    spin_values[k] = s.identity_power ? CVal(spec_trig60()) : s.spin;
    out_powers.push_back(std::move(pj));
  }
}

template <class Case>
int verify_and_report(const RunConfig& cfg, const Case& cs, Json& rep, int* phase) {
  // --- verification phase (exit 3 on failure) ---------------------------------
  *phase = 1;
  Json ver;
  bool ok = true;
  Presentation checked = cs.pres;
  if (cfg.verify == VerifyLevel::Fast && cs.pres.relators.size() > 72) {
    // fast level: side relators plus a fixed sample of cycle relators
    Presentation sample;
    sample.ngens = cs.pres.ngens;
    size_t cycles_taken = 0;
    for (const auto& w : cs.pres.relators)
      if (w.size() == 2 || cycles_taken++ < 12) sample.relators.push_back(w);
    checked = std::move(sample);
  }
  auto vr = verify_presentation(cs.P.generator_list(), cs.lifts, checked);
  ver["relators_checked"] = vr.relator_count;
  ver["all_relators_identity"] = vr.all_lorentz_identity;
  ver["all_lift_signs_plus"] = vr.all_spin_plus;
  ok = ok && vr.all_lorentz_identity && vr.all_spin_plus;
  if (cfg.verify == VerifyLevel::Full) {
    auto u = uniqueness_scan(cs.pres);
    ver["spin_structure_unique"] = u.unique;
    ver["every_flip_breaks_cycle_relator"] = u.every_flip_breaks_cycle_relator;
    ok = ok && u.unique;
  }
  auto nr = normalizer_check(cs.f, cs.f_hat, cs.P.generator_list(), cs.lifts);
  ver["isometry_order"] = cs.order;
  ver["normalizer_all_plus"] = nr.all_plus;
  ok = ok && nr.all_plus;
  rep["spin_structure"] = std::move(ver);
  if (!ok) return 3;

  // --- index phase (exit 4 on failure) ----------------------------------------
  *phase = 2;
  std::vector<int> powers = cfg.powers;
  if (powers.empty())
    for (int k = 1; k <= cs.order; ++k) powers.push_back(k);
  for (int k : powers)
    check(k >= 1 && k <= cs.order, Err::Internal, "power outside 1..N");
  Json out_powers = Json::array();
  std::map<int, CVal> values;
  run_powers(cfg, cs, powers, out_powers, values);
  rep["powers"] = std::move(out_powers);
  if (int(values.size()) == cs.order) {
    CharacterPoly p = character_poly(values, cs.order);
    Json cj;
    cj["modulus"] = p.modulus;
    cj["coefficients"] = p.coeff;
    cj["rendered"] = p.str();
    long p1 = 0;
    for (long c : p.coeff) p1 += c;
    cj["value_at_1"] = p1;
    check(p1 == 0, Err::Internal, "spinor index at the identity must vanish");
    rep["character_polynomial"] = std::move(cj);
    DimBound b = dim_lower_bound(p);
    rep["dim_bounds"] = Json{{"per_chirality", b.per_chirality}, {"total", b.total}};
  }
  return 0;
}

inline std::string render_text(const Json& rep) {
  std::ostringstream os;
  os << "case: " << rep.at("case").get<std::string>() << "\n";
  os << "construction:\n";
  for (auto& [k, v] : rep.at("construction").items()) os << "  " << k << ": " << v.dump() << "\n";
  os << "spin structure:\n";
  for (auto& [k, v] : rep.at("spin_structure").items())
    os << "  " << k << ": " << v.dump() << "\n";
  if (rep.contains("powers")) {
    for (const auto& pj : rep.at("powers")) {
      os << "power k=" << pj.at("k").get<int>();
      if (pj.contains("identity_power")) {
        os << ": identity power, Spin = 0\n";
        continue;
      }
      os << " (order " << pj.at("order").get<int>() << "): " << pj.at("fixed_points").size()
         << " fixed points\n";
      for (const auto& rj : pj.at("fixed_points")) {
        os << "  point(dim " << rj.at("cell_dim").get<int>() << ") angles " << rj.at("angles").dump()
           << " trace " << rj.at("trace").get<std::string>() << " nu (" << rj.at("nu").at("re").get<std::string>()
           << ") + (" << rj.at("nu").at("im").get<std::string>() << ")*i\n";
      }
      os << "  Spin = (" << pj.at("spin").at("re").get<std::string>() << ") + ("
         << pj.at("spin").at("im").get<std::string>() << ")*i";
      os << "  [" << pj.at("spin").at("re_decimal").get<std::string>() << ", "
         << pj.at("spin").at("im_decimal").get<std::string>() << "]\n";
      if (pj.contains("root_of_unity_form"))
        os << "  = " << pj.at("root_of_unity_form").get<std::string>() << "\n";
    }
  }
  if (rep.contains("character_polynomial")) {
    os << "character polynomial: " << rep.at("character_polynomial").at("rendered").get<std::string>()
       << "\n";
    os << "dim bounds: per chirality " << rep.at("dim_bounds").at("per_chirality").get<long>()
       << ", total " << rep.at("dim_bounds").at("total").get<long>() << "\n";
  }
  return os.str();
}

}  // namespace report_detail

inline RunResult run_case(const RunConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  RunResult rr;
  Json& rep = rr.report;
  int phase = 0;
  auto t0 = Clock::now();
  auto ms_since = [&](Clock::time_point t) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t).count();
  };

  try {
    if (cfg.kind == CaseKind::Decagon) {
      rep["case"] = "decagon";
      DecagonCase cs = build_decagon();
      Json cons;
      cons["generators"] = 10;
      cons["relators"] = Json{{"total", cs.pres.relators.size()}, {"side", 5}, {"vertex", 2}};
      cons["cycle_partition"] =
          Json{{"vertices", "2 x 5"}, {"sides", "5 x 2"}};
      rep["construction"] = std::move(cons);
      rr.timing["construction_ms"] = ms_since(t0);
      auto t1 = Clock::now();
      rr.exit_code = report_detail::verify_and_report(cfg, cs, rep, &phase);
      rr.timing["verify_and_index_ms"] = ms_since(t1);
    } else {
      rep["case"] = "davis";
      DavisCase cs = build_davis();
      Json cons;
      cons["generators"] = 120;
      int side_rel = 0, cycle_rel = 0;
      for (const auto& w : cs.pres.relators) (w.size() == 2 ? side_rel : cycle_rel) += 1;
      cons["relators"] =
          Json{{"total", cs.pres.relators.size()}, {"side", side_rel}, {"ridge", cycle_rel}};
      cons["orbit_sizes"] = Json{{"vertices", cs.P.cells[0].points.size()},
                                 {"edges", cs.P.cells[1].points.size()},
                                 {"ridges", cs.P.cells[2].points.size()},
                                 {"sides", cs.P.cells[3].points.size()}};
      cons["cycle_partition"] = Json{{"vertices", "1 x 600"},
                                     {"edges", "60 x 20"},
                                     {"ridges", "144 x 5"},
                                     {"sides", "60 x 2"}};
      // symmetry group: from cache when available and intact, else recomputed
      std::string cache_status = cfg.cache_path.empty() ? "off" : "miss";
      size_t sym_order = 0;
      if (!cfg.cache_path.empty()) {
        auto loaded = cache::try_load_symmetry_group(cfg.cache_path, cs, &cache_status);
        if (loaded) sym_order = loaded->size();
      }
      if (sym_order == 0) sym_order = davis_symmetry_group(cs).size();
      cons["symmetry_group_order"] = sym_order;
      cons["cache"] = cache_status;
      rep["construction"] = std::move(cons);
      rr.timing["construction_ms"] = ms_since(t0);
      auto t1 = Clock::now();
      rr.exit_code = report_detail::verify_and_report(cfg, cs, rep, &phase);
      rr.timing["verify_and_index_ms"] = ms_since(t1);
    }
  } catch (const Error& e) {
    rr.exit_code = (phase == 0) ? 2 : (phase == 1 ? 3 : 4);
    rep["error"] = e.what();
  }
  rr.timing["total_ms"] = ms_since(t0);
  rr.rendered = (cfg.output == OutputKind::Json)
                    ? Json{{"report", rr.report}, {"timing", rr.timing}}.dump(2)
                    : report_detail::render_text(rr.report);
  return rr;
}

inline std::string canonical_report_string(const RunResult& rr) { return rr.report.dump(2); }

}  // namespace hspin
