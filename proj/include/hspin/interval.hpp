#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "hspin/rational.hpp"

namespace hspin {

// Closed interval [lo, hi] with outward-rounded MPFR endpoints.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  Interval& operator=(const Interval& o) {
    if (this != &o) {
      mpfr_set_prec(lo_, o.prec_);
      mpfr_set_prec(hi_, o.prec_);
      prec_ = o.prec_;
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Interval from_rat(const Rat& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  mpfr_prec_t prec() const { return prec_; }

  Interval operator+(const Interval& o) const {
    Interval r(prec_);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
  }
  Interval operator-(const Interval& o) const {
    Interval r(prec_);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
  }
  Interval operator*(const Interval& o) const {
    Interval r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    const mpfr_srcptr xs[2] = {lo_, hi_};
    const mpfr_srcptr ys[2] = {o.lo_, o.hi_};
    bool first = true;
    for (auto x : xs)
      for (auto y : ys) {
        mpfr_mul(t, x, y, MPFR_RNDD);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, x, y, MPFR_RNDU);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }

  // Square root; requires lo >= 0 (caller certifies nonnegativity separately).
  Interval sqrt() const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) < 0)
      mpfr_set_zero(r.lo_, 1);
    else
      mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  // -1, 0 (straddles zero / inconclusive), +1
  int definite_sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
  }
  bool intersects(const Interval& o) const {
    return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
  }
  bool contains(const Interval& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(o.hi_, hi_) <= 0;
  }

  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

  // True once lo and hi agree to `digits` significant decimal digits.
  bool tight_to(int digits) const {
    if ((mpfr_sgn(lo_) <= 0) != (mpfr_sgn(hi_) <= 0)) return false;
    char* slo = nullptr;
    char* shi = nullptr;
    mpfr_asprintf(&slo, "%.*Re", digits - 1, lo_);
    mpfr_asprintf(&shi, "%.*Re", digits - 1, hi_);
    bool same = std::string(slo) == std::string(shi);
    mpfr_free_str(slo);
    mpfr_free_str(shi);
    return same;
  }

  std::string decimal(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits - 1, lo_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

}  // namespace hspin
