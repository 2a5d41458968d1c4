#pragma once

// Permutation actions of classical matrix groups: projective line and plane
// families (PSL/PGL/PSigmaL/PGammaL/PXL), affine families (AGL/ASL/AGammaL/
// ASigmaL), and the affine symplectic groups 2^(2d):Sp(2d,2).
//
// Matrices act on row vectors from the right, matching the right action used
// throughout.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvlab/gf.hpp"
#include "tvlab/group.hpp"

namespace tvlab {

struct Mat {
  unsigned d = 0;
  std::array<FF, 16> a{};  // row-major, d x d

  FF &at(unsigned i, unsigned j) { return a[i * d + j]; }
  FF at(unsigned i, unsigned j) const { return a[i * d + j]; }

  static Mat identity(unsigned d) {
    Mat m;
    m.d = d;
    for (unsigned i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
  }
};

inline std::vector<FF> row_times_mat(const FiniteField &F, const std::vector<FF> &v,
                                     const Mat &m) {
  std::vector<FF> out(m.d, 0);
  for (unsigned j = 0; j < m.d; ++j) {
    FF s = 0;
    for (unsigned i = 0; i < m.d; ++i) s = F.add(s, F.mul(v[i], m.at(i, j)));
    out[j] = s;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Projective line PG(1,q), labeled by the affine coordinate:
// point i < q is [i : 1]; point q is the point at infinity [1 : 0].
// ---------------------------------------------------------------------------

struct ProjectiveLine {
  const FiniteField *F;
  explicit ProjectiveLine(const FiniteField &f) : F(&f) {}
  unsigned degree() const { return F->q() + 1; }
  unsigned infinity() const { return F->q(); }

  std::vector<FF> vec(Point pt) const {
    if (pt == infinity()) return {1, 0};
    return {pt, 1};
  }
  Point point(const std::vector<FF> &v) const {
    if (v[1] == 0) {
      if (v[0] == 0) throw std::invalid_argument("zero vector");
      return infinity();
    }
    return F->div(v[0], v[1]);
  }
};

inline Permutation line_perm_from_matrix(const ProjectiveLine &L, const Mat &m) {
  std::vector<Point> im(L.degree());
  for (Point pt = 0; pt < L.degree(); ++pt)
    im[pt] = L.point(row_times_mat(*L.F, L.vec(pt), m));
  return Permutation(std::move(im));
}

inline Permutation line_perm_frobenius(const ProjectiveLine &L, unsigned power) {
  const FiniteField &F = *L.F;
  std::vector<Point> im(L.degree());
  for (Point pt = 0; pt < L.degree(); ++pt) {
    auto v = L.vec(pt);
    for (auto &c : v)
      for (unsigned i = 0; i < power; ++i) c = F.frobenius(c);
    im[pt] = L.point(v);
  }
  return Permutation(std::move(im));
}

enum class LineFlavor { PSL, PGL, PSigmaL, PGammaL, PXL };

inline LineFlavor line_flavor_from_string(const std::string &s) {
  if (s == "PSL") return LineFlavor::PSL;
  if (s == "PGL") return LineFlavor::PGL;
  if (s == "PSigmaL" || s == "PSL:e") return LineFlavor::PSigmaL;
  if (s == "PGammaL") return LineFlavor::PGammaL;
  if (s == "PXL") return LineFlavor::PXL;
  throw std::invalid_argument("unknown projective line flavor: " + s);
}

// Degree q+1 action of groups between PSL(2,q) and PGammaL(2,q).
inline PermGroup projective_line_group(const FiniteField &F, LineFlavor flavor) {
  ProjectiveLine L(F);
  FF zeta = F.generator();
  Mat t = Mat::identity(2), s = Mat::identity(2), dg = Mat::identity(2);
  t.at(0, 0) = 1; t.at(0, 1) = 1; t.at(1, 0) = 0; t.at(1, 1) = 1;      // transvection
  s.at(0, 0) = 0; s.at(0, 1) = 1; s.at(1, 0) = F.neg(1); s.at(1, 1) = 0;  // Weyl element
  dg.at(0, 0) = zeta;

  std::vector<Permutation> gens{line_perm_from_matrix(L, t), line_perm_from_matrix(L, s)};
  switch (flavor) {
    case LineFlavor::PSL:
      break;
    case LineFlavor::PGL:
      gens.push_back(line_perm_from_matrix(L, dg));
      break;
    case LineFlavor::PSigmaL:
      if (F.e() > 1) gens.push_back(line_perm_frobenius(L, 1));
      break;
    case LineFlavor::PGammaL:
      gens.push_back(line_perm_from_matrix(L, dg));
      if (F.e() > 1) gens.push_back(line_perm_frobenius(L, 1));
      break;
    case LineFlavor::PXL: {
      if (F.e() % 2 != 0 || F.p() == 2)
        throw std::invalid_argument("PXL requires an odd square field order");
      gens.push_back(line_perm_from_matrix(L, dg) * line_perm_frobenius(L, F.e() / 2));
      break;
    }
  }
  return PermGroup(L.degree(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Projective plane PG(2,q): 1-spaces of GF(q)^3, normalized so the first
// nonzero coordinate is 1.
// ---------------------------------------------------------------------------

struct ProjectiveSpace {
  const FiniteField *F;
  unsigned dim;  // vector space dimension
  std::vector<std::vector<FF>> points;
  std::vector<int> index_of;  // packed vector -> point index

  ProjectiveSpace(const FiniteField &f, unsigned d) : F(&f), dim(d) {
    unsigned q = f.q();
    uint64_t space = 1;
    for (unsigned i = 0; i < dim; ++i) space *= q;
    index_of.assign(space, -1);
    // enumerate normalized representatives
    for (uint64_t code = 1; code < space; ++code) {
      std::vector<FF> v = unpack(code);
      unsigned lead = 0;
      while (v[lead] == 0) ++lead;
      if (v[lead] != 1) continue;
      int idx = static_cast<int>(points.size());
      // mark every scalar multiple with this index
      for (FF scalar = 1; scalar < q; ++scalar) {
        std::vector<FF> w(dim);
        for (unsigned i = 0; i < dim; ++i) w[i] = f.mul(v[i], scalar);
        index_of[pack(w)] = idx;
      }
      points.push_back(std::move(v));
    }
  }

  unsigned degree() const { return static_cast<unsigned>(points.size()); }

  uint64_t pack(const std::vector<FF> &v) const {
    uint64_t code = 0;
    for (unsigned i = dim; i-- > 0;) code = code * F->q() + v[i];
    return code;
  }
  std::vector<FF> unpack(uint64_t code) const {
    std::vector<FF> v(dim);
    for (unsigned i = 0; i < dim; ++i) { v[i] = code % F->q(); code /= F->q(); }
    return v;
  }

  Point point_of(const std::vector<FF> &v) const {
    int idx = index_of[pack(v)];
    if (idx < 0) throw std::invalid_argument("zero vector has no projective point");
    return static_cast<Point>(idx);
  }

  Permutation perm_from_matrix(const Mat &m) const {
    std::vector<Point> im(degree());
    for (Point pt = 0; pt < degree(); ++pt)
      im[pt] = point_of(row_times_mat(*F, points[pt], m));
    return Permutation(std::move(im));
  }

  Permutation perm_frobenius() const {
    std::vector<Point> im(degree());
    for (Point pt = 0; pt < degree(); ++pt) {
      auto v = points[pt];
      for (auto &c : v) c = F->frobenius(c);
      im[pt] = point_of(v);
    }
    return Permutation(std::move(im));
  }
};

// Elementary transvections generating SL(d,q).
inline std::vector<Mat> sl_generators(const FiniteField &F, unsigned d) {
  std::vector<Mat> out;
  FF z = 1;
  for (unsigned m = 0; m < F.e(); ++m) {
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) {
        if (i == j) continue;
        Mat t = Mat::identity(d);
        t.at(i, j) = z;
        out.push_back(t);
      }
    z = F.mul(z, F.generator());
  }
  return out;
}

enum class PlaneFlavor { PSL3, PGL3, PGammaL3 };

inline PlaneFlavor plane_flavor_from_string(const std::string &s) {
  if (s == "PSL3") return PlaneFlavor::PSL3;
  if (s == "PGL3") return PlaneFlavor::PGL3;
  if (s == "PGammaL3") return PlaneFlavor::PGammaL3;
  throw std::invalid_argument("unknown projective plane flavor: " + s);
}

// Degree q^2+q+1 action on the points of PG(2,q).
inline PermGroup projective_plane_group(const FiniteField &F, PlaneFlavor flavor) {
  ProjectiveSpace S(F, 3);
  std::vector<Permutation> gens;
  for (const auto &m : sl_generators(F, 3)) gens.push_back(S.perm_from_matrix(m));
  if (flavor == PlaneFlavor::PGL3 || flavor == PlaneFlavor::PGammaL3) {
    Mat dg = Mat::identity(3);
    dg.at(0, 0) = F.generator();
    gens.push_back(S.perm_from_matrix(dg));
  }
  if (flavor == PlaneFlavor::PGammaL3 && F.e() > 1) gens.push_back(S.perm_frobenius());
  return PermGroup(S.degree(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Affine groups on GF(q)^d, points packed base q.
// ---------------------------------------------------------------------------

struct AffineSpace {
  const FiniteField *F;
  unsigned dim;
  uint64_t size;

  AffineSpace(const FiniteField &f, unsigned d) : F(&f), dim(d) {
    size = 1;
    for (unsigned i = 0; i < d; ++i) size *= f.q();
    if (size > 1u << 20) throw std::invalid_argument("affine space too large");
  }
  unsigned degree() const { return static_cast<unsigned>(size); }

  std::vector<FF> unpack(uint64_t code) const {
    std::vector<FF> v(dim);
    for (unsigned i = 0; i < dim; ++i) { v[i] = code % F->q(); code /= F->q(); }
    return v;
  }
  uint64_t pack(const std::vector<FF> &v) const {
    uint64_t code = 0;
    for (unsigned i = dim; i-- > 0;) code = code * F->q() + v[i];
    return code;
  }

  Permutation translation(const std::vector<FF> &t) const {
    std::vector<Point> im(degree());
    for (uint64_t c = 0; c < size; ++c) {
      auto v = unpack(c);
      for (unsigned i = 0; i < dim; ++i) v[i] = F->add(v[i], t[i]);
      im[c] = static_cast<Point>(pack(v));
    }
    return Permutation(std::move(im));
  }

  Permutation linear(const Mat &m) const {
    std::vector<Point> im(degree());
    for (uint64_t c = 0; c < size; ++c)
      im[c] = static_cast<Point>(pack(row_times_mat(*F, unpack(c), m)));
    return Permutation(std::move(im));
  }

  Permutation frobenius() const {
    std::vector<Point> im(degree());
    for (uint64_t c = 0; c < size; ++c) {
      auto v = unpack(c);
      for (auto &x : v) x = F->frobenius(x);
      im[c] = static_cast<Point>(pack(v));
    }
    return Permutation(std::move(im));
  }

  std::vector<Permutation> translation_gens() const {
    std::vector<Permutation> out;
    for (unsigned i = 0; i < dim; ++i) {
      FF z = 1;
      for (unsigned m = 0; m < F->e(); ++m) {
        std::vector<FF> t(dim, 0);
        t[i] = z;
        out.push_back(translation(t));
        z = F->mul(z, F->generator());
      }
    }
    return out;
  }
};

enum class AffineFlavor { AGL, ASL, AGammaL, ASigmaL };

inline AffineFlavor affine_flavor_from_string(const std::string &s) {
  if (s == "AGL") return AffineFlavor::AGL;
  if (s == "ASL") return AffineFlavor::ASL;
  if (s == "AGammaL") return AffineFlavor::AGammaL;
  if (s == "ASigmaL") return AffineFlavor::ASigmaL;
  throw std::invalid_argument("unknown affine flavor: " + s);
}

// Degree q^d action on affine points.
inline PermGroup affine_group(const FiniteField &F, unsigned d, AffineFlavor flavor) {
  if (d < 1) throw std::invalid_argument("affine dimension must be >= 1");
  AffineSpace A(F, d);
  std::vector<Permutation> gens = A.translation_gens();
  if (d == 1) {
    Mat m = Mat::identity(1);
    m.at(0, 0) = F.generator();
    if (flavor == AffineFlavor::AGL || flavor == AffineFlavor::AGammaL)
      gens.push_back(A.linear(m));
    // ASL(1,q) is the translation group
  } else {
    for (const auto &m : sl_generators(F, d)) gens.push_back(A.linear(m));
    if (flavor == AffineFlavor::AGL || flavor == AffineFlavor::AGammaL) {
      Mat dg = Mat::identity(d);
      dg.at(0, 0) = F.generator();
      gens.push_back(A.linear(dg));
    }
  }
  if ((flavor == AffineFlavor::AGammaL || flavor == AffineFlavor::ASigmaL) && F.e() > 1)
    gens.push_back(A.frobenius());
  return PermGroup(A.degree(), std::move(gens));
}

// ---------------------------------------------------------------------------
// The affine symplectic group 2^(2d):Sp(2d,2) of degree 2^(2d). Sp(2d,2) is
// generated by the symplectic transvections x -> x + B(x,v) v.
// ---------------------------------------------------------------------------

struct SymplecticSpace {
  unsigned two_d;  // dimension 2d over GF(2)

  explicit SymplecticSpace(unsigned d2) : two_d(d2) {
    if (d2 % 2 != 0 || d2 == 0) throw std::invalid_argument("dimension must be even");
    if (d2 > 20) throw std::invalid_argument("symplectic dimension too large");
  }
  unsigned degree() const { return 1u << two_d; }

  // standard alternating form: pairs (2i, 2i+1)
  static unsigned form(unsigned x, unsigned y, unsigned two_d) {
    unsigned b = 0;
    for (unsigned i = 0; i + 1 < two_d; i += 2) {
      unsigned x0 = (x >> i) & 1, x1 = (x >> (i + 1)) & 1;
      unsigned y0 = (y >> i) & 1, y1 = (y >> (i + 1)) & 1;
      b ^= (x0 & y1) ^ (x1 & y0);
    }
    return b;
  }
  unsigned form(unsigned x, unsigned y) const { return form(x, y, two_d); }

  // quadratic form of type plus (0) or minus (1) polarizing to the form
  unsigned quad(unsigned x, bool minus) const {
    unsigned v = 0;
    for (unsigned i = 0; i + 1 < two_d; i += 2) v ^= ((x >> i) & 1) & ((x >> (i + 1)) & 1);
    if (minus) v ^= ((x >> 0) & 1) ^ ((x >> 1) & 1);
    return v;
  }
};

inline PermGroup affine_symplectic_group(unsigned d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  SymplecticSpace sp(2 * d);
  unsigned n = sp.degree();
  std::vector<Permutation> gens;
  // translations by basis vectors
  for (unsigned i = 0; i < 2 * d; ++i) {
    std::vector<Point> im(n);
    for (unsigned x = 0; x < n; ++x) im[x] = x ^ (1u << i);
    gens.push_back(Permutation(std::move(im)));
  }
  // symplectic transvections
  for (unsigned v = 1; v < n; ++v) {
    std::vector<Point> im(n);
    for (unsigned x = 0; x < n; ++x) im[x] = sp.form(x, v) ? (x ^ v) : x;
    gens.push_back(Permutation(std::move(im)));
  }
  return PermGroup(n, std::move(gens));
}

}  // namespace tvlab
