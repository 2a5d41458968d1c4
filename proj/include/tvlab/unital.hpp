#pragma once

// The Hermitian unital U(q) and the action of PGU(3,q) <= PGammaU(3,q) on its
// q^3+1 points.
//
// V = GF(q^2)^3 carries the nondegenerate Hermitian form
//   H(x,y) = x1 conj(y3) + x2 conj(y2) + x3 conj(y1),   conj(a) = a^q,
// whose Gram matrix is the antidiagonal identity. Unital points are the
// isotropic 1-spaces; any two lie on a unique secant line meeting the unital
// in q+1 points (the blocks).

#include <memory>
#include <stdexcept>
#include <vector>

#include "tvlab/gf.hpp"
#include "tvlab/group.hpp"
#include "tvlab/linear.hpp"
#include "tvlab/partition.hpp"

namespace tvlab {

class HermitianUnital {
public:
  explicit HermitianUnital(unsigned q, unsigned max_q = 9)
      : q_(q), F_(smallest_prime_power_base(q), 2 * prime_power_exponent(q)) {
    if (q > max_q) throw std::invalid_argument("unital field limit exceeded");
    space_ = std::make_shared<ProjectiveSpace>(F_, 3);
    for (Point pt = 0; pt < space_->degree(); ++pt)
      if (hermitian(space_->points[pt], space_->points[pt]) == 0)
        unital_points_.push_back(pt);
    if (unital_points_.size() != uint64_t(q) * q * q + 1)
      throw std::logic_error("unital point count mismatch");
    point_index_.assign(space_->degree(), -1);
    for (size_t i = 0; i < unital_points_.size(); ++i)
      point_index_[unital_points_[i]] = static_cast<int>(i);
  }

  unsigned q() const { return q_; }
  const FiniteField &field() const { return F_; }
  unsigned degree() const { return static_cast<unsigned>(unital_points_.size()); }

  FF conj(FF a) const { return F_.pow(a, q_); }

  FF hermitian(const std::vector<FF> &x, const std::vector<FF> &y) const {
    FF s = F_.mul(x[0], conj(y[2]));
    s = F_.add(s, F_.mul(x[1], conj(y[1])));
    s = F_.add(s, F_.mul(x[2], conj(y[0])));
    return s;
  }

  // The block (secant line intersection) through two unital points.
  PointSet block_through(Point a, Point b) const {
    const auto &va = space_->points[unital_points_[a]];
    const auto &vb = space_->points[unital_points_[b]];
    PointSet out;
    // points on the projective line spanned by va, vb
    for (Point i = 0; i < degree(); ++i) {
      const auto &w = space_->points[unital_points_[i]];
      // w on <va,vb> iff the 3x3 determinant [va; vb; w] vanishes
      if (det3(va, vb, w) == 0) out.push_back(i);
    }
    return out;
  }

  // Restricts a permutation of PG(2,q^2) to the unital points.
  Permutation restrict(const Permutation &g) const {
    std::vector<Point> im(degree());
    for (size_t i = 0; i < unital_points_.size(); ++i) {
      int j = point_index_[g[unital_points_[i]]];
      if (j < 0) throw std::logic_error("permutation does not preserve the unital");
      im[i] = static_cast<Point>(j);
    }
    return Permutation(std::move(im));
  }

  const ProjectiveSpace &space() const { return *space_; }

private:
  FF det3(const std::vector<FF> &a, const std::vector<FF> &b, const std::vector<FF> &c) const {
    const FiniteField &F = F_;
    FF t0 = F.mul(a[0], F.sub(F.mul(b[1], c[2]), F.mul(b[2], c[1])));
    FF t1 = F.mul(a[1], F.sub(F.mul(b[0], c[2]), F.mul(b[2], c[0])));
    FF t2 = F.mul(a[2], F.sub(F.mul(b[0], c[1]), F.mul(b[1], c[0])));
    return F.add(F.sub(t0, t1), t2);
  }

  static unsigned smallest_prime_power_base(unsigned q) {
    for (unsigned p = 2; p <= q; ++p)
      if (FiniteField::is_prime(p)) {
        unsigned v = q;
        while (v % p == 0) v /= p;
        if (v == 1) return p;
      }
    throw std::invalid_argument("q is not a prime power");
  }
  static unsigned prime_power_exponent(unsigned q) {
    unsigned p = smallest_prime_power_base(q), e = 0;
    while (q > 1) { q /= p; ++e; }
    return e;
  }

  unsigned q_;
  FiniteField F_;
  std::shared_ptr<ProjectiveSpace> space_;
  std::vector<Point> unital_points_;
  std::vector<int> point_index_;
};

enum class UnitalFlavor { PGU, PGammaU };

// Generators of GU(3,q) relative to the antidiagonal Gram matrix:
// a torus, the Weyl reflection swapping e1 and e3, and the unipotent
// maps u(a,c) = [[1,a,c],[0,1,-a^q],[0,0,1]] with c + c^q + a^(q+1) = 0.
inline PermGroup unital_group(const HermitianUnital &U, UnitalFlavor flavor) {
  const FiniteField &F = U.field();
  unsigned q = U.q();
  std::vector<Mat> mats;

  Mat t1 = Mat::identity(3);
  t1.at(0, 0) = F.generator();
  t1.at(2, 2) = F.inv(F.pow(F.generator(), q));
  mats.push_back(t1);

  Mat t2 = Mat::identity(3);
  t2.at(1, 1) = F.pow(F.generator(), q - 1);  // a (q+1)-st root of unity
  mats.push_back(t2);

  Mat w;
  w.d = 3;
  w.at(0, 2) = 1; w.at(1, 1) = 1; w.at(2, 0) = 1;
  mats.push_back(w);

  for (FF a = 0; a < F.q(); ++a) {
    FF rhs = F.neg(F.pow(a, q + 1));  // need c + c^q = rhs
    for (FF c = 0; c < F.q(); ++c) {
      if (F.add(c, F.pow(c, q)) != rhs) continue;
      Mat u = Mat::identity(3);
      u.at(0, 1) = a;
      u.at(0, 2) = c;
      u.at(1, 2) = F.neg(F.pow(a, q));
      mats.push_back(u);
      break;  // one solution per a suffices together with the center below
    }
  }
  // center of the unipotent radical: u(0,c) with trace(c) = 0
  for (FF c = 1; c < F.q(); ++c) {
    if (F.add(c, F.pow(c, q)) != 0) continue;
    Mat u = Mat::identity(3);
    u.at(0, 2) = c;
    mats.push_back(u);
  }

  std::vector<Permutation> gens;
  for (const auto &m : mats) gens.push_back(U.restrict(U.space().perm_from_matrix(m)));
  if (flavor == UnitalFlavor::PGammaU && F.e() > 1)
    gens.push_back(U.restrict(U.space().perm_frobenius()));
  return PermGroup(U.degree(), std::move(gens));
}

}  // namespace tvlab
