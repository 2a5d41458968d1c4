#pragma once

// The bundled group catalog. Entries are either built by the constructors in
// this library or loaded from data files (the Mathieu groups and their
// friends ship as explicit permutation generators, validated by order at
// load). A few groups referenced by name are flagged unavailable; asking for
// them is an error with a machine-readable reason.

#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvlab/bigint.hpp"
#include "tvlab/groupfile.hpp"
#include "tvlab/linear.hpp"
#include "tvlab/unital.hpp"
#include "tvlab/wreath.hpp"

#ifndef TVLAB_DATA_DIR
#define TVLAB_DATA_DIR "data/catalog"
#endif

namespace tvlab {

inline std::string catalog_data_dir() {
  if (const char *env = std::getenv("TVLAB_DATA_DIR")) return env;
  return TVLAB_DATA_DIR;
}

class UnavailableGroupError : public std::runtime_error {
public:
  explicit UnavailableGroupError(const std::string &name)
      : std::runtime_error("catalog entry '" + name + "' is marked unavailable") {}
};

struct CatalogEntry {
  std::string name;
  unsigned degree = 0;
  BigUint order;
  bool available = true;
  bool in_table_scan = true;  // included in `table` sweeps
  std::function<PermGroup()> build;
};

namespace cat_detail {

inline uint64_t psl2_order(unsigned q) { return uint64_t(q) * (q - 1) * (q + 1) / (q % 2 ? 2 : 1); }
inline uint64_t pgl2_order(unsigned q) { return uint64_t(q) * (q - 1) * (q + 1); }
inline uint64_t pltriple(unsigned q) {  // |PGL(3,q)| = q^3 (q^3-1)(q^2-1)
  return uint64_t(q) * q * q * (uint64_t(q) * q * q - 1) * (uint64_t(q) * q - 1);
}
inline unsigned ext_degree(unsigned q) {
  unsigned p = 2;
  while (true) {
    if (FiniteField::is_prime(p)) {
      unsigned v = q, e = 0;
      while (v % p == 0) { v /= p; ++e; }
      if (v == 1) return e;
    }
    ++p;
    if (p > q) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  }
}
inline unsigned char_of(unsigned q) {
  for (unsigned p = 2; p <= q; ++p)
    if (FiniteField::is_prime(p)) {
      unsigned v = q;
      while (v % p == 0) v /= p;
      if (v == 1) return p;
    }
  throw std::invalid_argument("not a prime power: " + std::to_string(q));
}
inline uint64_t agl_order(unsigned d, unsigned q) {
  uint64_t o = 1, qd = 1;
  for (unsigned i = 0; i < d; ++i) qd *= q;
  o = qd;
  uint64_t qi = 1;
  for (unsigned i = 0; i < d; ++i) { o *= (qd - qi); qi *= q; }
  return o;
}
inline uint64_t sp_order(unsigned d) {  // |Sp(2d,2)|
  uint64_t o = 1;
  for (unsigned i = 1; i <= d; ++i) {
    uint64_t f = 1;
    for (unsigned j = 0; j < i; ++j) f *= 4;
    o *= (f - 1);
  }
  for (unsigned i = 0; i < d * d; ++i) o *= 2;
  return o;
}
inline BigUint factorial(unsigned n) {
  BigUint r(1);
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline FiniteField &field_cache(unsigned p, unsigned e) {
  static std::map<std::pair<unsigned, unsigned>, FiniteField> cache;
  auto key = std::make_pair(p, e);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, FiniteField(p, e)).first;
  return it->second;
}

inline PermGroup psl216_2() {
  FiniteField &F = field_cache(2, 4);
  ProjectiveLine L(F);
  PermGroup psl = projective_line_group(F, LineFlavor::PSL);
  std::vector<Permutation> gens = psl.generators();
  gens.push_back(line_perm_frobenius(L, 2));  // the order-2 field automorphism
  return PermGroup(L.degree(), std::move(gens));
}

}  // namespace cat_detail

// The full named catalog. Data-file entries are loaded from `data_dir`.
inline std::vector<CatalogEntry> catalog_entries(const std::string &data_dir = catalog_data_dir()) {
  using namespace cat_detail;
  std::vector<CatalogEntry> out;

  auto data_entry = [&](const std::string &name, const std::string &file, unsigned degree,
                        uint64_t order) {
    CatalogEntry e;
    e.name = name;
    e.degree = degree;
    e.order = BigUint(order);
    e.build = [data_dir, file, degree, order, name] {
      ParsedGroup pg = load_group_file(data_dir + "/" + file);
      if (pg.degree != degree)
        throw std::runtime_error("catalog data corrupt: " + name + " degree mismatch");
      PermGroup g = pg.group();
      if (!(g.order() == BigUint(order)))
        throw std::runtime_error("catalog data corrupt: " + name + " order mismatch");
      return g;
    };
    out.push_back(std::move(e));
  };

  data_entry("M24", "m24.grp", 24, 244823040ull);
  data_entry("M23", "m23.grp", 23, 10200960ull);
  data_entry("M22", "m22.grp", 22, 443520ull);
  data_entry("M22:2", "m22_2.grp", 22, 887040ull);
  data_entry("M12", "m12.grp", 12, 95040ull);
  data_entry("M11", "m11.grp", 11, 7920ull);
  data_entry("M11_12", "m11_12.grp", 12, 7920ull);
  data_entry("M10", "m10.grp", 10, 720ull);
  data_entry("2^4:A7", "t4a7.grp", 16, 40320ull);
  data_entry("2^4:A6", "t4a6.grp", 16, 5760ull);

  auto line_entry = [&](const std::string &flavor, unsigned q, uint64_t order) {
    CatalogEntry e;
    e.name = flavor + "(2," + std::to_string(q) + ")";
    e.degree = q + 1;
    e.order = BigUint(order);
    e.build = [flavor, q] {
      return projective_line_group(field_cache(char_of(q), ext_degree(q)),
                                   line_flavor_from_string(flavor));
    };
    out.push_back(std::move(e));
  };

  for (unsigned q : {5u, 7u, 9u, 11u, 13u, 17u, 19u, 23u, 25u, 27u, 29u, 31u}) {
    line_entry("PSL", q, psl2_order(q));
    line_entry("PGL", q, pgl2_order(q));
  }
  for (unsigned q : {4u, 8u, 16u, 32u}) line_entry("PGL", q, pgl2_order(q));
  for (unsigned q : {9u, 25u, 27u}) line_entry("PSigmaL", q, psl2_order(q) * ext_degree(q));
  for (unsigned q : {4u, 8u, 9u, 16u, 25u, 27u, 32u})
    line_entry("PGammaL", q, pgl2_order(q) * ext_degree(q));
  for (unsigned q : {9u, 25u}) line_entry("PXL", q, 2 * psl2_order(q));

  {
    CatalogEntry e;
    e.name = "PSL(2,16):2";
    e.degree = 17;
    e.order = BigUint(2 * psl2_order(16));
    e.build = [] { return psl216_2(); };
    out.push_back(std::move(e));
  }

  auto plane_entry = [&](const std::string &flavor, unsigned q, uint64_t order) {
    CatalogEntry e;
    e.name = flavor.substr(0, flavor.size() - 1) + "(3," + std::to_string(q) + ")";
    e.degree = q * q + q + 1;
    e.order = BigUint(order);
    e.build = [flavor, q] {
      return projective_plane_group(field_cache(char_of(q), ext_degree(q)),
                                    plane_flavor_from_string(flavor));
    };
    out.push_back(std::move(e));
  };
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    unsigned g3 = (q - 1) % 3 == 0 ? 3 : 1;
    plane_entry("PSL3", q, pltriple(q) / g3);
    if (g3 != 1) plane_entry("PGL3", q, pltriple(q));
    if (ext_degree(q) > 1) plane_entry("PGammaL3", q, pltriple(q) * ext_degree(q));
  }

  auto affine_entry = [&](const std::string &flavor, unsigned d, unsigned q, uint64_t order) {
    CatalogEntry e;
    e.name = flavor + "(" + std::to_string(d) + "," + std::to_string(q) + ")";
    e.degree = 1;
    for (unsigned i = 0; i < d; ++i) e.degree *= q;
    e.order = BigUint(order);
    e.build = [flavor, d, q] {
      return affine_group(field_cache(char_of(q), ext_degree(q)), d,
                          affine_flavor_from_string(flavor));
    };
    out.push_back(std::move(e));
  };
  for (unsigned q : {5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u, 23u})
    affine_entry("AGL", 1, q, uint64_t(q) * (q - 1));
  for (unsigned q : {8u, 9u, 16u})
    affine_entry("AGammaL", 1, q, uint64_t(q) * (q - 1) * ext_degree(q));
  affine_entry("AGL", 3, 2, agl_order(3, 2));
  affine_entry("AGL", 4, 2, agl_order(4, 2));
  affine_entry("AGL", 2, 3, agl_order(2, 3));
  affine_entry("AGL", 2, 4, agl_order(2, 4));
  affine_entry("ASL", 2, 4, agl_order(2, 4) / 3);
  affine_entry("AGammaL", 2, 4, agl_order(2, 4) * 2);

  for (unsigned d : {2u, 3u}) {
    CatalogEntry e;
    unsigned deg = 1u << (2 * d);
    e.name = "2^" + std::to_string(2 * d) + ":Sp(" + std::to_string(2 * d) + ",2)";
    e.degree = deg;
    e.order = BigUint(uint64_t(deg) * sp_order(d));
    e.build = [d] { return affine_symplectic_group(d); };
    out.push_back(std::move(e));
  }

  auto unital_entry = [&](const std::string &flavor, unsigned q) {
    CatalogEntry e;
    uint64_t pgu = uint64_t(q) * q * q * (uint64_t(q) * q - 1) * (uint64_t(q) * q * q + 1);
    e.name = flavor + "(3," + std::to_string(q) + ")";
    e.degree = q * q * q + 1;
    e.order = BigUint(flavor == "PGU" ? pgu : pgu * 2 * ext_degree(q));
    e.in_table_scan = false;  // heavy degrees; requested explicitly
    e.build = [flavor, q] {
      HermitianUnital u(q);
      return unital_group(u, flavor == "PGU" ? UnitalFlavor::PGU : UnitalFlavor::PGammaU);
    };
    out.push_back(std::move(e));
  };
  for (unsigned q : {3u, 4u, 5u}) {
    unital_entry("PGU", q);
    if (ext_degree(q) > 1 || q > 2) unital_entry("PGammaU", q);
  }

  for (unsigned m : {3u, 4u, 5u}) {
    CatalogEntry e;
    e.name = "S" + std::to_string(m) + "wrS2";
    e.degree = 2 * m;
    e.order = factorial(m);
    e.order *= factorial(m).as_u64();
    e.order *= 2;
    e.build = [m] { return wreath_product_s2(m, WreathMode::Imprimitive); };
    out.push_back(std::move(e));
    CatalogEntry p = e;
    p.name = "S" + std::to_string(m) + "wrS2_prod";
    p.degree = m * m;
    p.build = [m] { return wreath_product_s2(m, WreathMode::ProductAction); };
    out.push_back(std::move(p));
  }

  for (unsigned n = 5; n <= 24; ++n) {
    CatalogEntry s;
    s.name = "S" + std::to_string(n);
    s.degree = n;
    s.order = factorial(n);
    s.build = [n] { return symmetric_group(n); };
    out.push_back(std::move(s));
    CatalogEntry a;
    a.name = "A" + std::to_string(n);
    a.degree = n;
    a.order = factorial(n);
    a.order.div_small(2);
    a.build = [n] { return alternating_group(n); };
    out.push_back(std::move(a));
  }

  auto unavailable = [&](const std::string &name, unsigned degree) {
    CatalogEntry e;
    e.name = name;
    e.degree = degree;
    e.available = false;
    e.in_table_scan = false;
    e.build = [name]() -> PermGroup { throw UnavailableGroupError(name); };
    out.push_back(std::move(e));
  };
  unavailable("Sz(8)", 65);
  unavailable("Sz(32)", 1025);
  unavailable("Sz(32):5", 1025);
  unavailable("Ree(27)", 19684);
  unavailable("HS", 176);
  unavailable("Co3", 276);
  unavailable("PGammaL(2,128)", 129);

  return out;
}

// Normalizes user-facing spellings: "PGL,2,27" == "PGL(2,27)"; unicode-free
// names only.
inline std::string normalize_catalog_name(const std::string &raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  // comma form FAMILY,p1,p2 -> FAMILY(p1,p2)
  auto comma = s.find(',');
  if (comma != std::string::npos && s.find('(') == std::string::npos)
    s = s.substr(0, comma) + "(" + s.substr(comma + 1) + ")";
  return s;
}

inline const CatalogEntry *catalog_find(const std::vector<CatalogEntry> &entries,
                                        const std::string &raw) {
  std::string want = normalize_catalog_name(raw);
  for (const auto &e : entries)
    if (normalize_catalog_name(e.name) == want) return &e;
  return nullptr;
}

// Builds a catalog group by name; validates degree and order.
inline PermGroup catalog_group(const std::string &name,
                               const std::string &data_dir = catalog_data_dir()) {
  auto entries = catalog_entries(data_dir);
  const CatalogEntry *e = catalog_find(entries, name);
  if (!e) throw std::invalid_argument("unknown catalog entry: " + name);
  if (!e->available) throw UnavailableGroupError(e->name);
  PermGroup g = e->build();
  if (g.degree() != e->degree)
    throw std::runtime_error("catalog degree mismatch for " + e->name);
  if (!(g.order() == e->order))
    throw std::runtime_error("catalog order validation failed for " + e->name);
  return g;
}

}  // namespace tvlab
