#pragma once

// Exact arithmetic in GF(p^e), p^e <= 2^14. Elements are encoded as integers
// in [0, q): the value sum c_i p^i encodes the polynomial sum c_i x^i. The
// modulus is the lexicographically smallest monic irreducible of degree e
// over GF(p) (found by trial division), so field tables are reproducible.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tvlab {

using FF = unsigned;  // field element code

class FiniteField {
public:
  static constexpr unsigned kMaxOrder = 1u << 14;

  FiniteField(unsigned p, unsigned e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime");
    q_ = 1;
    for (unsigned i = 0; i < e; ++i) {
      q_ *= p;
      if (q_ > kMaxOrder) throw std::invalid_argument("field order above limit");
    }
    if (e_ == 0) throw std::invalid_argument("extension degree must be positive");
    modulus_ = smallest_irreducible(p_, e_);
    build_tables();
  }

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned q() const { return q_; }
  // monic modulus coefficients c_0..c_e (c_e = 1)
  const std::vector<unsigned> &modulus() const { return modulus_; }

  FF add(FF a, FF b) const {
    FF r = 0, m = 1;
    for (unsigned i = 0; i < e_; ++i, m *= p_)
      r += ((a / pw_[i]) % p_ + (b / pw_[i]) % p_) % p_ * m;
    return r;
  }
  FF neg(FF a) const {
    FF r = 0, m = 1;
    for (unsigned i = 0; i < e_; ++i, m *= p_) r += (p_ - (a / pw_[i]) % p_) % p_ * m;
    return r;
  }
  FF sub(FF a, FF b) const { return add(a, neg(b)); }

  FF mul(FF a, FF b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  FF inv(FF a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  FF div(FF a, FF b) const { return mul(a, inv(b)); }

  FF pow(FF a, long long n) const {
    if (a == 0) {
      if (n <= 0) throw std::domain_error("0^nonpositive");
      return 0;
    }
    long long m = (long long)(q_ - 1);
    long long d = ((n % m) + m) % m;
    return exp_[(log_[a] * (unsigned long long)d) % (q_ - 1)];
  }

  FF frobenius(FF a) const { return pow(a, p_); }

  // a fixed multiplicative generator
  FF generator() const { return gen_; }

  bool is_square(FF a) const {
    if (a == 0) return true;
    if (p_ == 2) return true;
    return log_[a] % 2 == 0;
  }

  unsigned log(FF a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
  }

  // multiplicative order of a nonzero element
  unsigned mult_order(FF a) const {
    unsigned m = q_ - 1, l = log_[a];
    unsigned g = gcd(l, m);
    return m / (g == 0 ? m : g);
  }

  static bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

private:
  static unsigned gcd(unsigned a, unsigned b) { return b ? gcd(b, a % b) : a; }

  // polynomial helpers over GF(p); coefficient vectors, low degree first
  static std::vector<unsigned> poly_mod(std::vector<unsigned> a, const std::vector<unsigned> &m,
                                        unsigned p) {
    while (a.size() >= m.size()) {
      unsigned lead = a.back();
      if (lead != 0) {
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
          a[shift + i] = (a[shift + i] + p * p - lead * m[i] % p + p) % p;
      }
      a.pop_back();
    }
    return a;
  }

  static bool divides(const std::vector<unsigned> &d, const std::vector<unsigned> &f, unsigned p) {
    auto r = poly_mod(f, d, p);
    for (unsigned c : r)
      if (c) return false;
    return true;
  }

  static std::vector<unsigned> smallest_irreducible(unsigned p, unsigned e) {
    if (e == 1) return {0, 1};  // x
    // iterate monic degree-e polynomials in lexicographic coefficient order
    std::vector<unsigned> c(e + 1, 0);
    c[e] = 1;
    uint64_t count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
      uint64_t v = code;
      for (unsigned i = 0; i < e; ++i) { c[i] = v % p; v /= p; }
      if (c[0] == 0) continue;  // divisible by x
      bool irred = true;
      // trial division by all monic polynomials of degree 1..e/2
      for (unsigned d = 1; irred && 2 * d <= e; ++d) {
        uint64_t dc = 1;
        for (unsigned i = 0; i < d; ++i) dc *= p;
        std::vector<unsigned> divp(d + 1, 0);
        divp[d] = 1;
        for (uint64_t dv = 0; dv < dc; ++dv) {
          uint64_t w = dv;
          for (unsigned i = 0; i < d; ++i) { divp[i] = w % p; w /= p; }
          if (divides(divp, c, p)) { irred = false; break; }
        }
      }
      if (irred) return c;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  void build_tables() {
    pw_.resize(e_ + 1);
    pw_[0] = 1;
    for (unsigned i = 1; i <= e_; ++i) pw_[i] = pw_[i - 1] * p_;

    // raw polynomial multiplication mod modulus, on integer codes
    auto raw_mul = [&](FF a, FF b) -> FF {
      std::vector<unsigned> pa(e_), pb(e_), prod(2 * e_ - 1, 0);
      for (unsigned i = 0; i < e_; ++i) { pa[i] = (a / pw_[i]) % p_; pb[i] = (b / pw_[i]) % p_; }
      for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
      auto r = poly_mod(prod, modulus_, p_);
      FF out = 0;
      for (size_t i = 0; i < r.size(); ++i) out += r[i] * pw_[i];
      return out;
    };

    // find a primitive element, then fill exp/log
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (FF cand = 1; cand < q_; ++cand) {
      FF x = 1;
      unsigned ord = 0;
      do {
        x = raw_mul(x, cand);
        ++ord;
      } while (x != 1 && ord <= q_);
      if (ord == q_ - 1) {
        gen_ = cand;
        break;
      }
    }
    if (gen_ == 0) throw std::logic_error("no primitive element found");
    FF x = 1;
    for (unsigned i = 0; i < q_ - 1; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = raw_mul(x, gen_);
    }
  }

  unsigned p_, e_, q_ = 0;
  FF gen_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> pw_;
  std::vector<FF> exp_;
  std::vector<unsigned> log_;
};

}  // namespace tvlab
