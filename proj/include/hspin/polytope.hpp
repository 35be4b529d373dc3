#pragma once

#include <deque>
#include <set>
#include <unordered_map>
#include <vector>

#include "hspin/hypgeom.hpp"
#include "hspin/spinrep.hpp"

namespace hspin {

// Words are sequences of 1-based generator indices, evaluated left to right:
// evaluate([a, b]) = G_a * G_b.
using Word = std::vector<int>;

inline TMat evaluate_word(const std::vector<TMat>& gens, const Word& w, const TowerSpec* spec,
                          int dim) {
  TMat m = TMat::identity(spec, dim);
  for (int i : w) m = m * gens[size_t(i) - 1];
  return m;
}

template <class SpinT>
inline SpinT evaluate_word_spin(const std::vector<SpinT>& lifts, const Word& w,
                                const TowerSpec* spec) {
  SpinT m = SpinT::identity(spec);
  for (int i : w) m = m * lifts[size_t(i) - 1];
  return m;
}

inline Word word_inverse(const Word& w, const std::vector<int>& inv_index) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(inv_index[size_t(*it) - 1]);
  return r;
}

// Exact lookup of vectors by content hash with collision verification.
// Hash index over a point list held by the caller; the same list must be
// passed back to lookups, which keeps the index safely copyable.
class PointIndex {
 public:
  void build(const std::vector<TVec>& pts) {
    map_.clear();
    for (size_t j = 0; j < pts.size(); ++j) map_[key(pts[j])].push_back(int(j));
  }
  void add(const std::vector<TVec>& pts, int idx) {
    map_[key(pts[size_t(idx)])].push_back(idx);
  }
  int find(const std::vector<TVec>& pts, const TVec& v) const {
    auto it = map_.find(key(v));
    if (it == map_.end()) return -1;
    for (int j : it->second)
      if (pts[size_t(j)] == v) return j;
    return -1;
  }

 private:
  static std::uint64_t key(const TVec& v) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& x : v) {
      std::uint64_t xh = x.content_hash();
      hash_mix(h, &xh, sizeof xh);
    }
    return h;
  }
  std::unordered_map<std::uint64_t, std::vector<int>> map_;
};

struct Side {
  TVec neighbor;  // image of the polytope center under the pairing
  TMat pairing;
  int inverse;  // 1-based index of the inverse generator
};

struct Presentation {
  int ngens = 0;
  std::vector<Word> relators;
};

// One dimension layer of boundary cell centers with its side-pairing cycles.
struct CellClass {
  std::vector<TVec> points;
  std::vector<std::vector<int>> sides_on;  // per point: 1-based side indices through it
  std::vector<int> cycle_id;               // per point
  std::vector<Word> to_rep;                // per point: evaluate(w) * point = rep
  std::vector<int> cycle_rep;              // per cycle: point index of the representative
  std::vector<int> cycle_size;
  PointIndex index;

  int find_point(const TVec& v) const { return index.find(points, v); }
};

struct FundamentalPolytope {
  const TowerSpec* spec = nullptr;
  int dim = 0;  // ambient dimension n+1
  TVec center;
  std::vector<Side> sides;
  std::vector<CellClass> cells;  // by cell dimension, 0 .. n-2, plus side centers last
  PointIndex neighbor_index;     // neighbor centers, for transport and normalizer lookups

  const TMat& gen(int i) const { return sides[size_t(i) - 1].pairing; }
  int inv(int i) const { return sides[size_t(i) - 1].inverse; }
  std::vector<TMat> generator_list() const {
    std::vector<TMat> g;
    for (const auto& s : sides) g.push_back(s.pairing);
    return g;
  }
  std::vector<int> inverse_table() const {
    std::vector<int> t;
    for (const auto& s : sides) t.push_back(s.inverse);
    return t;
  }
  void build_neighbor_index() {
    neighbor_points_.clear();
    for (const auto& s : sides) neighbor_points_.push_back(s.neighbor);
    neighbor_index.build(neighbor_points_);
  }
  const std::vector<TVec>& neighbor_points() const { return neighbor_points_; }
  int find_neighbor(const TVec& v) const { return neighbor_index.find(neighbor_points_, v); }

 private:
  std::vector<TVec> neighbor_points_;
};

// --- group and orbit enumeration ------------------------------------------------

// Full closure under multiplication with exact deduplication.
inline std::vector<TMat> group_closure(const std::vector<TMat>& gens, size_t budget = 50000) {
  check(!gens.empty(), Err::Internal, "group_closure with no generators");
  const TowerSpec* spec = gens[0].spec();
  int dim = gens[0].rows();
  std::vector<TMat> elements;
  std::unordered_map<std::uint64_t, std::vector<int>> seen;
  auto insert = [&](const TMat& m) -> bool {
    std::uint64_t h = m.content_hash();
    auto& bucket = seen[h];
    for (int idx : bucket)
      if (elements[size_t(idx)] == m) return false;
    bucket.push_back(int(elements.size()));
    elements.push_back(m);
    return true;
  };
  insert(TMat::identity(spec, dim));
  for (const auto& g : gens) insert(g);
  for (size_t head = 0; head < elements.size(); ++head) {
    TMat cur = elements[head];
    for (const auto& g : gens) {
      TMat next = cur * g;
      if (insert(next))
        check(elements.size() <= budget, Err::ClosureBudgetExceeded,
              "group closure exceeded element cap");
    }
  }
  return elements;
}

inline std::vector<TVec> orbit_closure(const std::vector<TMat>& gens, const TVec& seed,
                                       size_t budget = 50000) {
  std::vector<TVec> pts;
  pts.reserve(1500);
  PointIndex idx;
  pts.push_back(seed);
  idx.add(pts, 0);
  for (size_t head = 0; head < pts.size(); ++head) {
    TVec cur = pts[head];
    for (const auto& g : gens) {
      TVec next = g * cur;
      if (idx.find(pts, next) < 0) {
        pts.push_back(next);
        idx.add(pts, int(pts.size()) - 1);
        check(pts.size() <= budget, Err::ClosureBudgetExceeded, "orbit exceeded cap");
      }
    }
  }
  return pts;
}

// --- cycles of boundary cells under the side-pairing -----------------------------

// A point q on side i is identified with G_{inv(i)} q on side inv(i).
inline void build_cell_cycles(FundamentalPolytope& P, CellClass& layer) {
  size_t n = layer.points.size();
  layer.index.build(layer.points);
  layer.sides_on.assign(n, {});
  // wall through side i = {x : x o (a_i - center) = 0}
  std::vector<TVec> wall_normal;
  for (const auto& s : P.sides) {
    TVec w(s.neighbor.size(), TowerElem(P.spec));
    for (size_t c = 0; c < w.size(); ++c) w[c] = s.neighbor[c] - P.center[c];
    wall_normal.push_back(std::move(w));
  }
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < P.sides.size(); ++i)
      if (lorentz_product(layer.points[j], wall_normal[i]).is_zero())
        layer.sides_on[j].push_back(int(i) + 1);
  layer.cycle_id.assign(n, -1);
  layer.to_rep.assign(n, {});
  layer.cycle_rep.clear();
  layer.cycle_size.clear();
  for (size_t j = 0; j < n; ++j) {
    if (layer.cycle_id[j] >= 0) continue;
    int cid = int(layer.cycle_rep.size());
    layer.cycle_rep.push_back(int(j));
    layer.cycle_size.push_back(0);
    std::deque<int> queue{int(j)};
    layer.cycle_id[j] = cid;
    layer.to_rep[j] = {};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      ++layer.cycle_size[size_t(cid)];
      for (int s : layer.sides_on[size_t(u)]) {
        int L = P.inv(s);
        TVec img = P.gen(L) * layer.points[size_t(u)];
        int v = layer.find_point(img);
        check(v >= 0, Err::NonClosingCycle, "side pairing left the boundary cell set");
        if (layer.cycle_id[size_t(v)] >= 0) continue;
        layer.cycle_id[size_t(v)] = cid;
        // evaluate(to_rep[u]) * u = rep and u = G_s * v
        Word w = layer.to_rep[size_t(u)];
        w.push_back(s);
        layer.to_rep[size_t(v)] = std::move(w);
        queue.push_back(v);
      }
    }
  }
}

// --- Dirichlet-domain point location ---------------------------------------------

// Reduce y into the Dirichlet domain of the polytope center: while some
// neighbor center is strictly nearer than the center, apply the pairing that
// carries that neighbor's cell back (ties broken by lowest side index).
inline std::pair<Word, TVec> locate(const TVec& y0, const FundamentalPolytope& P,
                                    int budget = 10000) {
  check(causal_type(y0) == CausalType::Timelike, Err::Internal, "locate wants a timelike point");
  TVec y = y0;
  Word word;
  for (int step = 0; step < budget; ++step) {
    int best = -1;
    TowerElem yc = lorentz_product(y, P.center);
    for (size_t i = 0; i < P.sides.size(); ++i) {
      if (certify_sign(lorentz_product(y, P.sides[i].neighbor) - yc) > 0) {
        best = int(i) + 1;
        break;
      }
    }
    if (best < 0) return {word, y};
    int L = P.inv(best);
    y = P.gen(L) * y;
    word.insert(word.begin(), L);
  }
  fail(Err::NonTermination, "locate exceeded its step budget");
}

// --- Poincare cycle relations -----------------------------------------------------

// Walk the side-pairing around each codimension-2 cell; every walk must close
// and the word it spells must evaluate to the identity.  Each cycle can be
// read in two directions; the direction per cycle is a free convention, and we
// pick directions so that every generator index occurs somewhere in the
// emitted set (a flipped single lift then always breaks a cycle relator).
inline std::vector<Word> cycle_relations(FundamentalPolytope& P, CellClass& layer,
                                         bool cover_all_generators = true,
                                         int step_budget = 64) {
  const std::vector<int> inv = P.inverse_table();
  auto min_rotation = [](Word w) {
    Word best = w;
    for (size_t r = 1; r < w.size(); ++r) {
      std::rotate(w.begin(), w.begin() + 1, w.end());
      if (w < best) best = w;
    }
    return best;
  };

  struct Cycle {
    Word fwd, bwd;  // min-rotation forms of the two directions
  };
  std::map<Word, Cycle> cycles;  // keyed by min(fwd, bwd)
  auto gens = P.generator_list();
  for (size_t j = 0; j < layer.points.size(); ++j) {
    check(layer.sides_on[j].size() == 2, Err::NonClosingCycle,
          "codimension-2 cell not on exactly two sides");
    for (int start_side : layer.sides_on[j]) {
      int q = int(j);
      int s = start_side;
      Word w;
      bool closed = false;
      for (int step = 0; step < step_budget; ++step) {
        int L = P.inv(s);
        TVec img = P.gen(L) * layer.points[size_t(q)];
        int v = layer.find_point(img);
        check(v >= 0, Err::NonClosingCycle, "ridge walk left the cell set");
        w.insert(w.begin(), L);
        const auto& ss = layer.sides_on[size_t(v)];
        check(ss.size() == 2, Err::NonClosingCycle, "ridge walk hit a degenerate cell");
        int entered = P.inv(s);
        int other = (ss[0] == entered) ? ss[1] : ss[0];
        check(ss[0] == entered || ss[1] == entered, Err::NonClosingCycle,
              "ridge walk image missing its entry side");
        q = v;
        s = other;
        if (q == int(j) && s == start_side) {
          closed = true;
          break;
        }
      }
      check(closed, Err::NonClosingCycle, "ridge walk failed to return");
      check(evaluate_word(gens, w, P.spec, P.dim).is_identity(), Err::NonClosingCycle,
            "ridge cycle word does not evaluate to the identity");
      Word fwd = min_rotation(w);
      Word bwd = min_rotation(word_inverse(w, inv));
      Word key = std::min(fwd, bwd);
      cycles.emplace(key, Cycle{std::min(fwd, bwd), std::max(fwd, bwd)});
    }
  }

  // direction selection: start from the lexicographic choice, then flip
  // cycles (in key order) while some generator is missing, provided the flip
  // never uncovers a letter
  size_t ngens = P.sides.size();
  std::vector<Word> chosen;
  std::vector<const Cycle*> order;
  for (auto& [key, cyc] : cycles) {
    order.push_back(&cyc);
    chosen.push_back(cyc.fwd);
  }
  std::vector<int> cov(ngens + 1, 0);
  for (const Word& w : chosen)
    for (int L : w) ++cov[size_t(L)];
  for (size_t g = 1; cover_all_generators && g <= ngens; ++g) {
    if (cov[g] > 0) continue;
    bool fixed = false;
    for (size_t c = 0; c < order.size() && !fixed; ++c) {
      const Word& alt = (chosen[c] == order[c]->fwd) ? order[c]->bwd : order[c]->fwd;
      if (std::find(alt.begin(), alt.end(), int(g)) == alt.end()) continue;
      bool safe = true;
      for (int L : chosen[c])
        if (cov[size_t(L)] <= 1 &&
            std::find(alt.begin(), alt.end(), L) == alt.end()) {
          safe = false;
          break;
        }
      if (!safe) continue;
      for (int L : chosen[c]) --cov[size_t(L)];
      chosen[c] = alt;
      for (int L : chosen[c]) ++cov[size_t(L)];
      fixed = true;
    }
    check(fixed, Err::Internal, "could not orient cycle relators to cover generator " +
                                    std::to_string(g));
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// Full presentation: opposite-side relators then the codim-2 cycle relators.
inline Presentation build_presentation(FundamentalPolytope& P, CellClass& codim2,
                                       bool cover_all_generators = true) {
  Presentation pres;
  pres.ngens = int(P.sides.size());
  for (int i = 1; i <= pres.ngens; ++i)
    if (i < P.inv(i)) pres.relators.push_back({i, P.inv(i)});
  auto cyc = cycle_relations(P, codim2, cover_all_generators);
  std::sort(cyc.begin(), cyc.end());
  for (auto& w : cyc) pres.relators.push_back(std::move(w));
  return pres;
}

// --- relator verification ----------------------------------------------------------

template <class SpinT>
struct PresentationReport {
  int relator_count = 0;
  bool all_lorentz_identity = true;
  std::vector<int> spin_signs;  // +1 / -1 per relator; 0 = not even +-I
  bool all_spin_plus = true;
};

template <class SpinT>
inline PresentationReport<SpinT> verify_presentation(const std::vector<TMat>& gens,
                                                     const std::vector<SpinT>& lifts,
                                                     const Presentation& pres) {
  check(gens.size() == lifts.size() && int(gens.size()) == pres.ngens, Err::Internal,
        "generator/lift count mismatch");
  PresentationReport<SpinT> rep;
  rep.relator_count = int(pres.relators.size());
  const TowerSpec* gspec = gens.empty() ? TowerSpec::rationals() : gens[0].spec();
  const TowerSpec* sspec = lifts.empty() ? TowerSpec::rationals() : lifts[0].spec();
  for (const Word& w : pres.relators) {
    if (!evaluate_word(gens, w, gspec, gens[0].rows()).is_identity())
      rep.all_lorentz_identity = false;
    SpinT s = evaluate_word_spin(lifts, w, sspec);
    SpinT id = SpinT::identity(sspec);
    int sign = (s == id) ? 1 : ((s == -id) ? -1 : 0);
    rep.spin_signs.push_back(sign);
    if (sign != 1) rep.all_spin_plus = false;
  }
  return rep;
}

template <class SpinT>
struct NormalizerReport {
  std::vector<int> perm;   // 1-based: f g_i f^{-1} = g_{perm[i-1]}
  std::vector<int> signs;  // fhat ghat_i fhat^{-1} = signs[i-1] * ghat_{perm[i-1]}
  bool all_plus = true;
};

// Theorem 2.2 check: lifting succeeds iff conjugation by fhat maps the lift
// set to itself with + signs.
template <class SpinT>
inline NormalizerReport<SpinT> normalizer_check(const TMat& f, const SpinT& fhat,
                                                const std::vector<TMat>& gens,
                                                const std::vector<SpinT>& lifts) {
  NormalizerReport<SpinT> rep;
  TMat finv = lorentz_form_matrix(f.spec(), f.rows()) * f.transpose() *
              lorentz_form_matrix(f.spec(), f.rows());
  SpinT fhat_inv = group_inverse(fhat);
  const TowerSpec* sspec = fhat.spec();
  for (size_t i = 0; i < gens.size(); ++i) {
    TMat c = f * gens[i] * finv;
    int j = -1;
    for (size_t k = 0; k < gens.size(); ++k)
      if (gens[k] == c) {
        j = int(k);
        break;
      }
    check(j >= 0, Err::NotNormalizing, "conjugate of generator " + std::to_string(i + 1) +
                                           " is not a generator");
    SpinT sc = fhat * lifts[i] * fhat_inv;
    int sign = (sc == lifts[size_t(j)]) ? 1 : ((sc == -lifts[size_t(j)]) ? -1 : 0);
    check(sign != 0, Err::Internal, "spin conjugate is not +- a generator lift");
    rep.perm.push_back(j + 1);
    rep.signs.push_back(sign);
    if (sign != 1) rep.all_plus = false;
  }
  return rep;
}

}  // namespace hspin
