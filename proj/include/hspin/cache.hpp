#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "hspin/davis.hpp"

namespace hspin {

// Versioned binary cache of the 14,400-element symmetry group and the 120
// side pairings.  Corruption is detected by a content hash over the payload;
// a corrupt cache is reported and ignored.
namespace cache {

inline constexpr char kMagic[] = "HSPINCACHE";
inline constexpr std::uint32_t kVersion = 1;

inline std::uint64_t payload_hash(const std::string& payload) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  hash_mix(h, payload.data(), payload.size());
  return h;
}

inline void write_elem(std::ostream& os, const TowerElem& x) {
  for (size_t i = 0; i < x.coeffs().size(); ++i) os << (i ? " " : "") << rat_str(x.coeff(i));
}

inline bool read_elem(std::istream& is, const TowerSpec* spec, TowerElem& out) {
  std::vector<Rat> c;
  for (size_t i = 0; i < spec->dim(); ++i) {
    std::string tok;
    if (!(is >> tok)) return false;
    mpq_class q;
    if (q.set_str(tok, 10) != 0) return false;
    q.canonicalize();
    c.push_back(q);
  }
  out = TowerElem(spec, std::move(c));
  return true;
}

inline void write_matrix(std::ostream& os, const TMat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (i || j) os << " ";
      write_elem(os, m.at(i, j));
    }
  os << "\n";
}

inline bool read_matrix(std::istream& is, const TowerSpec* spec, int dim, TMat& out) {
  out = TMat(spec, dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!read_elem(is, spec, out.at(i, j))) return false;
  return true;
}

struct Contents {
  std::vector<TMat> symmetry_group;  // over Q(sqrt5)
  std::vector<TMat> pairings;        // over the Davis tower
};

inline std::string encode(const Contents& c) {
  std::ostringstream os;
  os << "davis-symmetry-cache\n";
  os << "sym " << c.symmetry_group.size() << "\n";
  for (const auto& m : c.symmetry_group) write_matrix(os, m);
  os << "pairings " << c.pairings.size() << "\n";
  for (const auto& m : c.pairings) write_matrix(os, m);
  return os.str();
}

inline void write_file(const std::string& path, const Contents& c) {
  std::string payload = encode(c);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  check(f.good(), Err::Internal, "cannot open cache file for writing: " + path);
  std::uint64_t size = payload.size();
  std::uint64_t hash = payload_hash(payload);
  std::uint32_t version = kVersion;
  f.write(kMagic, sizeof(kMagic) - 1);
  f.write(reinterpret_cast<const char*>(&version), sizeof version);
  f.write(reinterpret_cast<const char*>(&size), sizeof size);
  f.write(reinterpret_cast<const char*>(&hash), sizeof hash);
  f.write(payload.data(), std::streamsize(payload.size()));
  check(f.good(), Err::Internal, "cache write failed: " + path);
}

// Header + hash validation; throws CorruptCache on any mismatch.
inline std::string read_payload(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  check(f.good(), Err::CorruptCache, "cache file missing or unreadable: " + path);
  char magic[sizeof(kMagic) - 1];
  std::uint32_t version = 0;
  std::uint64_t size = 0, hash = 0;
  f.read(magic, sizeof magic);
  check(f.good() && std::string(magic, sizeof magic) == kMagic, Err::CorruptCache,
        "cache magic mismatch");
  f.read(reinterpret_cast<char*>(&version), sizeof version);
  check(f.good() && version == kVersion, Err::CorruptCache, "cache version mismatch");
  f.read(reinterpret_cast<char*>(&size), sizeof size);
  f.read(reinterpret_cast<char*>(&hash), sizeof hash);
  check(f.good(), Err::CorruptCache, "cache header truncated");
  std::string payload(size, '\0');
  f.read(payload.data(), std::streamsize(size));
  check(f.good() && std::uint64_t(f.gcount()) == size, Err::CorruptCache,
        "cache payload truncated");
  check(payload_hash(payload) == hash, Err::CorruptCache, "cache content hash mismatch");
  return payload;
}

inline Contents decode(const std::string& payload) {
  std::istringstream is(payload);
  std::string header, tag;
  size_t n = 0;
  check(bool(std::getline(is, header)) && header == "davis-symmetry-cache", Err::CorruptCache,
        "cache payload header mismatch");
  Contents c;
  check(bool(is >> tag >> n) && tag == "sym", Err::CorruptCache, "cache sym section missing");
  for (size_t i = 0; i < n; ++i) {
    TMat m;
    check(read_matrix(is, spec_sqrt5(), 5, m), Err::CorruptCache, "cache sym matrix truncated");
    c.symmetry_group.push_back(std::move(m));
  }
  check(bool(is >> tag >> n) && tag == "pairings", Err::CorruptCache,
        "cache pairings section missing");
  for (size_t i = 0; i < n; ++i) {
    TMat m;
    check(read_matrix(is, spec_davis(), 5, m), Err::CorruptCache,
          "cache pairing matrix truncated");
    c.pairings.push_back(std::move(m));
  }
  return c;
}

inline void build(const std::string& path, const DavisCase& d) {
  Contents c;
  c.symmetry_group = davis_symmetry_group(d);
  for (const auto& s : d.P.sides) c.pairings.push_back(s.pairing);
  write_file(path, c);
}

inline void verify(const std::string& path) { decode(read_payload(path)); }

inline void clear(const std::string& path) { std::filesystem::remove(path); }

// Load and cross-check against the freshly built case; any problem yields
// nullopt so callers fall back to recomputation.
inline std::optional<std::vector<TMat>> try_load_symmetry_group(const std::string& path,
                                                                const DavisCase& d,
                                                                std::string* status) {
  try {
    Contents c = decode(read_payload(path));
    if (c.symmetry_group.size() != 14400 || c.pairings.size() != d.P.sides.size()) {
      if (status) *status = "corrupt";
      return std::nullopt;
    }
    for (size_t i = 0; i < c.pairings.size(); ++i)
      if (c.pairings[i] != d.P.sides[i].pairing) {
        if (status) *status = "corrupt";
        return std::nullopt;
      }
    if (status) *status = "hit";
    return std::move(c.symmetry_group);
  } catch (const Error& e) {
    if (e.code() != Err::CorruptCache) throw;
    if (status) *status = "corrupt";
    return std::nullopt;
  }
}

}  // namespace cache
}  // namespace hspin
