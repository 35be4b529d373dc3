#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "hspin/error.hpp"

namespace hspin {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  check(den != 0, Err::DivisionByZero, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// FNV-1a over the limb data; used for content hashing of exact values.
inline void hash_mix(std::uint64_t& h, const void* data, size_t len) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
}

inline void hash_mix_mpz(std::uint64_t& h, const mpz_class& z) {
  int sgn = mpz_sgn(z.get_mpz_t());
  hash_mix(h, &sgn, sizeof sgn);
  size_t n = mpz_size(z.get_mpz_t());
  hash_mix(h, &n, sizeof n);
  const mp_limb_t* limbs = mpz_limbs_read(z.get_mpz_t());
  hash_mix(h, limbs, n * sizeof(mp_limb_t));
}

inline void hash_mix_rat(std::uint64_t& h, const Rat& q) {
  hash_mix_mpz(h, q.get_num());
  hash_mix_mpz(h, q.get_den());
}

// Exact square root of a rational, if it is a perfect square.
inline std::optional<Rat> rat_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rat(0);
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn, rd);
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace hspin
