#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hspin/error.hpp"
#include "hspin/interval.hpp"
#include "hspin/rational.hpp"

namespace hspin {

// A tower of real quadratic extensions of Q.  Each level adjoins the positive
// square root of a radicand expressed over the level below.  Specs are
// interned; pointer equality is content equality.
class TowerSpec {
 public:
  const TowerSpec* parent() const { return parent_; }
  int depth() const { return depth_; }
  size_t dim() const { return dim_; }
  const std::vector<Rat>& radicand() const { return radicand_; }
  const std::string& gen_label() const { return gen_label_; }

  static const TowerSpec* rationals() {
    static TowerSpec base;
    return &base;
  }

  // Interning constructor; no validity checks (see tower_extend for those).
  static const TowerSpec* extend_unchecked(const TowerSpec* parent, std::vector<Rat> radicand);

  bool is_prefix_of(const TowerSpec* other) const {
    for (const TowerSpec* s = other; s; s = s->parent_)
      if (s == this) return true;
    return false;
  }

 private:
  TowerSpec() : parent_(nullptr), depth_(0), dim_(1) {}
  TowerSpec(const TowerSpec* parent, std::vector<Rat> radicand, std::string label)
      : parent_(parent),
        radicand_(std::move(radicand)),
        depth_(parent->depth_ + 1),
        dim_(parent->dim_ * 2),
        gen_label_(std::move(label)) {}

  const TowerSpec* parent_;
  std::vector<Rat> radicand_;
  int depth_;
  size_t dim_;
  std::string gen_label_;
};

namespace detail {

using CoeffSpan = std::span<const Rat>;
using MutSpan = std::span<Rat>;

inline void add_into(MutSpan dst, CoeffSpan a, CoeffSpan b) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] + b[i];
}
inline void acc_into(MutSpan dst, CoeffSpan a) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] += a[i];
}

// Scratch must be pre-sized to at least 2*spec->dim() by the caller; the
// recursion never reallocates, so spans into it stay valid.
inline void mul_into(MutSpan dst, CoeffSpan a, CoeffSpan b, const TowerSpec* spec,
                     std::vector<Rat>& scratch, size_t scratch_off) {
  size_t d = spec->dim();
  if (d == 1) {
    dst[0] = a[0] * b[0];
    return;
  }
  size_t h = d / 2;
  const TowerSpec* p = spec->parent();
  CoeffSpan al = a.subspan(0, h), ah = a.subspan(h, h);
  CoeffSpan bl = b.subspan(0, h), bh = b.subspan(h, h);
  MutSpan dl = dst.subspan(0, h), dh = dst.subspan(h, h);
  MutSpan t1(scratch.data() + scratch_off, h);
  MutSpan t2(scratch.data() + scratch_off + h, h);
  size_t deeper = scratch_off + 2 * h;

  // high = al*bh + ah*bl
  mul_into(dh, al, bh, p, scratch, deeper);
  mul_into(t1, ah, bl, p, scratch, deeper);
  acc_into(dh, CoeffSpan(t1.data(), h));
  // low = al*bl + (ah*bh)*radicand
  mul_into(t1, ah, bh, p, scratch, deeper);
  mul_into(t2, CoeffSpan(t1.data(), h), CoeffSpan(spec->radicand().data(), h), p, scratch, deeper);
  mul_into(dl, al, bl, p, scratch, deeper);
  acc_into(dl, CoeffSpan(t2.data(), h));
}

inline bool all_zero(CoeffSpan a) {
  for (const Rat& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace detail

class TowerElem {
 public:
  TowerElem() : spec_(TowerSpec::rationals()), c_(1, Rat(0)) {}
  explicit TowerElem(const TowerSpec* spec) : spec_(spec), c_(spec->dim(), Rat(0)) {}
  TowerElem(const TowerSpec* spec, std::vector<Rat> coeffs) : spec_(spec), c_(std::move(coeffs)) {
    check(c_.size() == spec_->dim(), Err::Internal, "coefficient count mismatch");
  }

  static TowerElem from_rat(const TowerSpec* spec, const Rat& q) {
    TowerElem e(spec);
    e.c_[0] = q;
    return e;
  }
  static TowerElem from_rat(const TowerSpec* spec, long num, long den = 1) {
    return from_rat(spec, rat(num, den));
  }
  // The generator adjoined at `level` (0-based), as an element of `spec`.
  static TowerElem generator(const TowerSpec* spec, int level) {
    check(level >= 0 && level < spec->depth(), Err::Internal, "generator level out of range");
    TowerElem e(spec);
    e.c_[size_t(1) << level] = 1;
    return e;
  }

  const TowerSpec* spec() const { return spec_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& coeff(size_t i) const { return c_[i]; }

  // View as (lo + hi * g) with lo, hi over the parent spec.
  std::pair<TowerElem, TowerElem> split_halves() const {
    check(spec_->depth() > 0, Err::Internal, "split_halves at depth 0");
    size_t h = spec_->dim() / 2;
    const TowerSpec* p = spec_->parent();
    TowerElem lo(p), hi(p);
    std::copy(c_.begin(), c_.begin() + h, lo.c_.begin());
    std::copy(c_.begin() + h, c_.end(), hi.c_.begin());
    return {lo, hi};
  }
  static TowerElem join_halves(const TowerSpec* spec, const TowerElem& lo, const TowerElem& hi) {
    check(spec->depth() > 0 && lo.spec() == spec->parent() && hi.spec() == spec->parent(),
          Err::Internal, "join_halves spec mismatch");
    TowerElem out(spec);
    size_t h = spec->dim() / 2;
    std::copy(lo.c_.begin(), lo.c_.end(), out.c_.begin());
    std::copy(hi.c_.begin(), hi.c_.end(), out.c_.begin() + h);
    return out;
  }
  TowerElem radicand_elem() const {
    check(spec_->depth() > 0, Err::Internal, "radicand of depth-0 spec");
    return TowerElem(spec_->parent(), std::vector<Rat>(spec_->radicand()));
  }

  bool is_zero() const { return detail::all_zero(c_); }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }
  const Rat& rational_part() const { return c_[0]; }

  bool operator==(const TowerElem& o) const { return spec_ == o.spec_ && c_ == o.c_; }
  bool operator!=(const TowerElem& o) const { return !(*this == o); }

  TowerElem operator-() const {
    TowerElem r(spec_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
  }
  TowerElem operator+(const TowerElem& o) const {
    same_spec(o);
    TowerElem r(spec_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  TowerElem operator-(const TowerElem& o) const {
    same_spec(o);
    TowerElem r(spec_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }
  TowerElem operator*(const TowerElem& o) const {
    same_spec(o);
    TowerElem r(spec_);
    std::vector<Rat> scratch(2 * spec_->dim());
    detail::mul_into(detail::MutSpan(r.c_), detail::CoeffSpan(c_), detail::CoeffSpan(o.c_), spec_,
                     scratch, 0);
    return r;
  }
  TowerElem& operator+=(const TowerElem& o) { return *this = *this + o; }
  TowerElem& operator-=(const TowerElem& o) { return *this = *this - o; }
  TowerElem& operator*=(const TowerElem& o) { return *this = *this * o; }

  TowerElem operator*(const Rat& q) const {
    TowerElem r(spec_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * q;
    return r;
  }
  TowerElem operator+(const Rat& q) const {
    TowerElem r = *this;
    r.c_[0] += q;
    return r;
  }
  TowerElem operator-(const Rat& q) const {
    TowerElem r = *this;
    r.c_[0] -= q;
    return r;
  }
  TowerElem& operator+=(const Rat& q) {
    c_[0] += q;
    return *this;
  }
  TowerElem& operator-=(const Rat& q) {
    c_[0] -= q;
    return *this;
  }
  TowerElem& operator*=(const Rat& q) {
    for (auto& x : c_) x *= q;
    return *this;
  }

  TowerElem inverse() const {
    check(!is_zero(), Err::DivisionByZero, "inverse of zero tower element");
    return inv_rec(*this);
  }
  TowerElem operator/(const TowerElem& o) const { return *this * o.inverse(); }
  TowerElem operator/(const Rat& q) const {
    check(sgn(q) != 0, Err::DivisionByZero, "division by zero rational");
    return *this * Rat(1 / Rat(q));
  }

  std::uint64_t content_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const Rat& q : c_) hash_mix_rat(h, q);
    return h;
  }

 private:
  void same_spec(const TowerElem& o) const {
    check(spec_ == o.spec_, Err::SpecMismatch, "tower elements over different specs");
  }

  static TowerElem inv_rec(const TowerElem& x) {
    const TowerSpec* s = x.spec_;
    if (s->depth() == 0) {
      check(sgn(x.c_[0]) != 0, Err::DivisionByZero, "inverse of zero");
      return from_rat(s, Rat(1 / x.c_[0]));
    }
    size_t h = s->dim() / 2;
    const TowerSpec* p = s->parent();
    TowerElem a(p), b(p);
    std::copy(x.c_.begin(), x.c_.begin() + h, a.c_.begin());
    std::copy(x.c_.begin() + h, x.c_.end(), b.c_.begin());
    TowerElem r(p, std::vector<Rat>(s->radicand()));
    // (a + b g)^{-1} = (a - b g) / (a^2 - b^2 r)
    TowerElem den = a * a - b * b * r;
    check(!den.is_zero(), Err::Internal, "norm form vanished on nonzero element");
    TowerElem dinv = inv_rec(den);
    TowerElem na = a * dinv;
    TowerElem nb = -(b * dinv);
    TowerElem out(s);
    std::copy(na.c_.begin(), na.c_.end(), out.c_.begin());
    std::copy(nb.c_.begin(), nb.c_.end(), out.c_.begin() + h);
    return out;
  }

  const TowerSpec* spec_;
  std::vector<Rat> c_;

  friend TowerElem promote(const TowerElem&, const TowerSpec*);
  friend std::optional<TowerElem> try_demote(const TowerElem&, const TowerSpec*);
};

inline TowerElem operator*(const Rat& q, const TowerElem& x) { return x * q; }

// --- embedding between specs -------------------------------------------------

inline TowerElem promote(const TowerElem& x, const TowerSpec* super) {
  check(x.spec()->is_prefix_of(super), Err::SpecMismatch, "promote target is not an extension");
  TowerElem r(super);
  std::copy(x.coeffs().begin(), x.coeffs().end(), r.c_.begin());
  return r;
}

inline std::optional<TowerElem> try_demote(const TowerElem& x, const TowerSpec* sub) {
  check(sub->is_prefix_of(x.spec()), Err::SpecMismatch, "demote target is not a prefix");
  for (size_t i = sub->dim(); i < x.coeffs().size(); ++i)
    if (sgn(x.coeff(i)) != 0) return std::nullopt;
  TowerElem r(sub);
  std::copy(x.coeffs().begin(), x.coeffs().begin() + sub->dim(), r.c_.begin());
  return r;
}

inline TowerElem demote(const TowerElem& x, const TowerSpec* sub, const char* what) {
  auto r = try_demote(x, sub);
  check(r.has_value(), Err::Internal, std::string("value does not lie in subtower: ") + what);
  return *r;
}

// --- certified interval evaluation -------------------------------------------

namespace detail {

struct GenIntervals {
  mpfr_prec_t prec = 0;
  std::vector<Interval> sqrts;  // one per tower level
};

inline Interval eval_span(CoeffSpan c, const TowerSpec* spec, const std::vector<Interval>& gens,
                          mpfr_prec_t prec) {
  if (spec->depth() == 0) return Interval::from_rat(c[0], prec);
  size_t h = spec->dim() / 2;
  Interval lo = eval_span(c.subspan(0, h), spec->parent(), gens, prec);
  Interval hi = eval_span(c.subspan(h, h), spec->parent(), gens, prec);
  return lo + hi * gens[spec->depth() - 1];
}

inline const std::vector<Interval>& gen_intervals(const TowerSpec* spec, mpfr_prec_t prec) {
  thread_local std::unordered_map<const TowerSpec*, GenIntervals> cache;
  GenIntervals& slot = cache[spec];
  if (slot.prec == prec) return slot.sqrts;
  slot.prec = prec;
  slot.sqrts.clear();
  std::vector<const TowerSpec*> chain;
  for (const TowerSpec* s = spec; s->depth() > 0; s = s->parent()) chain.push_back(s);
  std::reverse(chain.begin(), chain.end());
  for (const TowerSpec* s : chain) {
    Interval r = eval_span(CoeffSpan(s->radicand()), s->parent(), slot.sqrts, prec);
    slot.sqrts.push_back(r.sqrt());
  }
  return slot.sqrts;
}

}  // namespace detail

inline Interval eval_interval(const TowerElem& x, mpfr_prec_t prec) {
  const auto& gens = detail::gen_intervals(x.spec(), prec);
  return detail::eval_span(detail::CoeffSpan(x.coeffs()), x.spec(), gens, prec);
}

inline constexpr mpfr_prec_t kSignPrecStart = 64;
inline constexpr mpfr_prec_t kSignPrecCap = 4096;

// 0 iff structurally zero; otherwise the certified sign of the real embedding.
inline int certify_sign(const TowerElem& x) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.rational_part());
  for (mpfr_prec_t prec = kSignPrecStart; prec <= kSignPrecCap; prec *= 2) {
    int s = eval_interval(x, prec).definite_sign();
    if (s != 0) return s;
  }
  fail(Err::Internal, "certify_sign precision cap exhausted");
}

inline bool is_positive(const TowerElem& x) { return certify_sign(x) > 0; }
inline bool exceeds(const TowerElem& a, const TowerElem& b) { return certify_sign(a - b) > 0; }

// --- exact square roots within a tower ----------------------------------------

// Positive square root of x within its own tower, if one exists.
inline std::optional<TowerElem> tower_sqrt(const TowerElem& x) {
  const TowerSpec* s = x.spec();
  if (x.is_zero()) return TowerElem(s);
  if (s->depth() == 0) {
    auto r = rat_sqrt(x.rational_part());
    if (!r) return std::nullopt;
    return TowerElem::from_rat(s, *r);
  }
  const TowerSpec* p = s->parent();
  auto [a, b] = x.split_halves();
  TowerElem r = x.radicand_elem();
  auto lift = [&](const TowerElem& u, const TowerElem& v) {
    TowerElem out = TowerElem::join_halves(s, u, v);
    if (certify_sign(out) < 0) return -out;
    return out;
  };
  if (b.is_zero()) {
    if (auto u = tower_sqrt(a)) return lift(*u, TowerElem(p));
    if (auto v = tower_sqrt(a / r)) return lift(TowerElem(p), *v);
    return std::nullopt;
  }
  // (u + v g)^2 = (u^2 + v^2 r) + 2uv g  with  2uv = b, u^2 + v^2 r = a.
  auto disc = tower_sqrt(a * a - r * b * b);
  if (!disc) return std::nullopt;
  for (int sign : {+1, -1}) {
    TowerElem half = (sign > 0 ? a + *disc : a - *disc) * rat(1, 2);
    auto u = tower_sqrt(half);
    if (!u || u->is_zero()) continue;
    TowerElem v = b / (TowerElem::from_rat(p, 2) * *u);
    TowerElem cand = lift(*u, v);
    if (cand * cand == x) return cand;
  }
  return std::nullopt;
}

// --- spec interning and checked extension -------------------------------------

inline std::string tower_canonical_string(const TowerElem& x);

inline const TowerSpec* TowerSpec::extend_unchecked(const TowerSpec* parent,
                                                    std::vector<Rat> radicand) {
  struct Key {
    const TowerSpec* parent;
    std::vector<Rat> rad;
    bool operator<(const Key& o) const {
      if (parent != o.parent) return parent < o.parent;
      for (size_t i = 0; i < rad.size(); ++i) {
        int c = cmp(rad[i], o.rad[i]);
        if (c != 0) return c < 0;
      }
      return false;
    }
  };
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<TowerSpec>> table;
  check(radicand.size() == parent->dim(), Err::Internal, "radicand has wrong dimension");
  std::lock_guard<std::mutex> lock(mu);
  Key key{parent, radicand};
  auto it = table.find(key);
  if (it != table.end()) return it->second.get();
  std::string label =
      "sqrt(" + tower_canonical_string(TowerElem(parent, std::vector<Rat>(radicand))) + ")";
  auto spec = std::unique_ptr<TowerSpec>(new TowerSpec(parent, std::move(radicand), label));
  const TowerSpec* out = spec.get();
  table.emplace(std::move(key), std::move(spec));
  return out;
}

inline std::string tower_canonical_string(const TowerElem& x) {
  // Canonical form "(c0 + c1*sqrt(d1) + c2*sqrt(d2) + c3*sqrt(d1)*sqrt(d2) + ...)".
  std::vector<std::string> gen_labels;
  for (const TowerSpec* s = x.spec(); s->depth() > 0; s = s->parent())
    gen_labels.push_back(s->gen_label());
  std::reverse(gen_labels.begin(), gen_labels.end());
  std::string out;
  bool first = true;
  for (size_t mask = 0; mask < x.coeffs().size(); ++mask) {
    const Rat& q = x.coeff(mask);
    if (sgn(q) == 0) continue;
    Rat aq = abs(q);
    std::string term;
    bool unit_coeff = (aq == 1) && mask != 0;
    if (!unit_coeff) term += rat_str(aq);
    for (size_t bit = 0; bit < gen_labels.size(); ++bit)
      if (mask & (size_t(1) << bit)) {
        if (!term.empty()) term += "*";
        term += gen_labels[bit];
      }
    if (first) {
      out += (sgn(q) < 0 ? "-" : "") + term;
      first = false;
    } else {
      out += (sgn(q) < 0 ? " - " : " + ") + term;
    }
  }
  if (first) out = "0";
  return out;
}

inline std::string decimal_string(const TowerElem& x, int digits = 50) {
  if (x.is_zero()) return "0";
  if (x.is_rational() && rat_is_integer(x.rational_part()) &&
      abs(x.rational_part()) < 1000000000) {
    // small integers render plainly
    return x.rational_part().get_num().get_str();
  }
  for (mpfr_prec_t prec = 256; prec <= 1 << 20; prec *= 2) {
    Interval iv = eval_interval(x, prec);
    if (!iv.contains_zero() && iv.tight_to(digits)) return iv.decimal(digits);
  }
  fail(Err::Internal, "decimal rendering precision exhausted");
}

// Checked extension: radicand must be certified positive and not a square.
inline const TowerSpec* tower_extend(const TowerSpec* spec, const TowerElem& radicand) {
  check(radicand.spec() == spec, Err::SpecMismatch, "radicand not over the given spec");
  check(certify_sign(radicand) > 0, Err::NegativeRadicand,
        "radicand must be certified positive: " + tower_canonical_string(radicand));
  check(!tower_sqrt(radicand).has_value(), Err::AlreadySquare,
        "radicand is a square in the current field: " + tower_canonical_string(radicand));
  return TowerSpec::extend_unchecked(spec, std::vector<Rat>(radicand.coeffs()));
}

enum class ArithOp { Add, Sub, Mul, Div };

inline TowerElem arith(const TowerElem& a, const TowerElem& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div:
      check(!b.is_zero(), Err::DivisionByZero, "arith division by zero");
      return a / b;
  }
  fail(Err::Internal, "bad op");
}

// --- common specs --------------------------------------------------------------

// Q(sqrt 5); tau = (1+sqrt5)/2 generates the golden field.
inline const TowerSpec* spec_q() { return TowerSpec::rationals(); }
inline const TowerSpec* spec_sqrt5() {
  static const TowerSpec* s = TowerSpec::extend_unchecked(spec_q(), {Rat(5)});
  return s;
}

inline TowerElem sqrt5(const TowerSpec* spec) {
  return promote(TowerElem::generator(spec_sqrt5(), 0), spec);
}
inline TowerElem tau(const TowerSpec* spec) {
  return (sqrt5(spec) + rat(1)) * rat(1, 2);
}

}  // namespace hspin
