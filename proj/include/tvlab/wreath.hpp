#pragma once

// Wreath products S_m wr S_2 (imprimitive and product action) and the
// fixed-point extension used for intransitive examples.

#include <stdexcept>
#include <vector>

#include "tvlab/group.hpp"

namespace tvlab {

enum class WreathMode { Imprimitive, ProductAction };

inline PermGroup wreath_product_s2(unsigned m, WreathMode mode) {
  if (m < 2) throw std::invalid_argument("wreath product requires m >= 2");
  if (mode == WreathMode::Imprimitive) {
    unsigned n = 2 * m;
    std::vector<Point> swap01(n), cyc(n), flip(n);
    for (Point i = 0; i < n; ++i) { swap01[i] = i; cyc[i] = i; flip[i] = i; }
    swap01[0] = 1; swap01[1] = 0;
    for (Point i = 0; i < m; ++i) cyc[i] = (i + 1) % m;
    for (Point i = 0; i < m; ++i) { flip[i] = m + i; flip[m + i] = i; }
    return PermGroup(n, {Permutation(swap01), Permutation(cyc), Permutation(flip)});
  }
  unsigned n = m * m;  // grid (i,j) -> i*m + j
  std::vector<Point> rowswap(n), rowcyc(n), transpose(n);
  for (Point i = 0; i < m; ++i)
    for (Point j = 0; j < m; ++j) {
      Point p = i * m + j;
      Point si = i == 0 ? 1 : (i == 1 ? 0 : i);
      rowswap[p] = si * m + j;
      rowcyc[p] = ((i + 1) % m) * m + j;
      transpose[p] = j * m + i;
    }
  return PermGroup(n, {Permutation(rowswap), Permutation(rowcyc), Permutation(transpose)});
}

// Extends a group of degree n-1 to degree n with a new fixed point, labeled
// last.
inline PermGroup point_fixing_extension(const PermGroup &h) {
  unsigned n = h.degree() + 1;
  std::vector<Permutation> gens;
  for (const auto &g : h.generators()) {
    std::vector<Point> im(n);
    for (Point x = 0; x + 1 < n; ++x) im[x] = g[x];
    im[n - 1] = n - 1;
    gens.push_back(Permutation(std::move(im)));
  }
  return PermGroup(n, std::move(gens));
}

inline PermGroup symmetric_group(unsigned n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  if (n == 1) return PermGroup(1, {});
  std::vector<Point> cyc(n), tr(n);
  for (Point i = 0; i < n; ++i) { cyc[i] = (i + 1) % n; tr[i] = i; }
  tr[0] = 1; tr[1] = 0;
  if (n == 2) return PermGroup(2, {Permutation(tr)});
  return PermGroup(n, {Permutation(cyc), Permutation(tr)});
}

inline PermGroup alternating_group(unsigned n) {
  if (n < 3) return PermGroup(n < 1 ? 1 : n, {});
  std::vector<Point> three(n);
  for (Point i = 0; i < n; ++i) three[i] = i;
  three[0] = 1; three[1] = 2; three[2] = 0;
  if (n == 3) return PermGroup(3, {Permutation(three)});
  std::vector<Point> rest(n);
  for (Point i = 0; i < n; ++i) rest[i] = i;
  if (n % 2 == 1) {
    for (Point i = 0; i + 1 < n; ++i) rest[i] = i + 1;  // n-cycle on all points
    rest[n - 1] = 0;
  } else {
    for (Point i = 1; i + 1 < n; ++i) rest[i] = i + 1;  // (n-1)-cycle fixing 0
    rest[n - 1] = 1;
    rest[0] = 0;
  }
  return PermGroup(n, {Permutation(three), Permutation(rest)});
}

inline PermGroup cyclic_group(unsigned n) {
  std::vector<Point> cyc(n);
  for (Point i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return PermGroup(n, {Permutation(cyc)});
}

}  // namespace tvlab
