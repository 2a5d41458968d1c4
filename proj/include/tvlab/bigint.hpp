#pragma once

// Minimal unsigned big integer: enough for group orders and the binomial
// order bounds. Base 2^32 limbs, little-endian.

#include <cstdint>
#include <string>
#include <vector>

namespace tvlab {

class BigUint {
public:
  BigUint() : limbs_{0} {}
  BigUint(uint64_t v) { limbs_ = {uint32_t(v & 0xffffffffu), uint32_t(v >> 32)}; trim(); }

  static BigUint one() { return BigUint(1); }

  BigUint &operator*=(uint64_t m) {
    if (m == 0) { limbs_ = {0}; return *this; }
    uint64_t lo = m & 0xffffffffu, hi = m >> 32;
    std::vector<uint32_t> out(limbs_.size() + 2, 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
      uint64_t v = uint64_t(limbs_[i]);
      add_at(out, i, v * lo);
      if (hi) add_at(out, i + 1, v * hi);
    }
    limbs_ = std::move(out);
    trim();
    return *this;
  }

  BigUint &operator+=(const BigUint &o) {
    if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
      uint64_t v = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
      limbs_[i] = uint32_t(v);
      carry = v >> 32;
    }
    if (carry) limbs_.push_back(uint32_t(carry));
    return *this;
  }

  // Divides by a small value, returns remainder.
  uint64_t div_small(uint64_t d) {
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | limbs_[i];
      limbs_[i] = uint32_t(cur / d);
      rem = cur % d;
    }
    trim();
    return rem;
  }

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

  bool fits_u64() const { return limbs_.size() <= 2; }
  uint64_t as_u64() const {
    uint64_t v = limbs_[0];
    if (limbs_.size() > 1) v |= uint64_t(limbs_[1]) << 32;
    return v;
  }

  friend bool operator==(const BigUint &a, const BigUint &b) { return a.limbs_ == b.limbs_; }
  friend bool operator<(const BigUint &a, const BigUint &b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
    for (size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
    return false;
  }
  friend bool operator<=(const BigUint &a, const BigUint &b) { return a < b || a == b; }
  friend bool operator>=(const BigUint &a, const BigUint &b) { return b <= a; }

  std::string str() const {
    if (is_zero()) return "0";
    BigUint t = *this;
    std::string s;
    while (!t.is_zero()) s += char('0' + t.div_small(10));
    return std::string(s.rbegin(), s.rend());
  }

  // n! / ((n-k)! k!) exactly.
  static BigUint binomial(unsigned n, unsigned k) {
    if (k > n) return BigUint(0);
    if (k > n - k) k = n - k;
    BigUint r(1);
    for (unsigned i = 1; i <= k; ++i) {
      r *= (n - k + i);
      r.div_small(i);  // exact at every step
    }
    return r;
  }

private:
  static void add_at(std::vector<uint32_t> &v, size_t pos, uint64_t val) {
    while (val) {
      uint64_t cur = v[pos] + (val & 0xffffffffu);
      v[pos] = uint32_t(cur);
      val = (val >> 32) + (cur >> 32);
      ++pos;
    }
  }
  void trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
  }
  std::vector<uint32_t> limbs_;
};

}  // namespace tvlab
