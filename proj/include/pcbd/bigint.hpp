#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace pcbd {
namespace detail {

// Arbitrary precision signed integer.  Just enough arithmetic for exact
// fraction-free elimination: add, subtract, multiply, and the exact division
// by a known divisor.  Magnitudes are little endian base 2^64.
class bigint {
 public:
  bigint() = default;
  bigint(long long v) {
    if (v == 0) return;
    sgn_ = v < 0 ? -1 : 1;
    unsigned long long mag =
        v < 0 ? ~static_cast<unsigned long long>(v) + 1ull : static_cast<unsigned long long>(v);
    mag_.push_back(mag);
  }

  bool is_zero() const { return sgn_ == 0; }
  int sign() const { return sgn_; }

  friend bigint operator+(const bigint& a, const bigint& b) {
    if (a.sgn_ == 0) return b;
    if (b.sgn_ == 0) return a;
    bigint out;
    if (a.sgn_ == b.sgn_) {
      out.sgn_ = a.sgn_;
      out.mag_ = add_mag(a.mag_, b.mag_);
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return out;
      const bigint& big = c > 0 ? a : b;
      const bigint& small = c > 0 ? b : a;
      out.sgn_ = big.sgn_;
      out.mag_ = sub_mag(big.mag_, small.mag_);
    }
    return out;
  }

  friend bigint operator-(const bigint& a, const bigint& b) { return a + b.negated(); }

  friend bigint operator*(const bigint& a, const bigint& b) {
    bigint out;
    if (a.sgn_ == 0 || b.sgn_ == 0) return out;
    out.sgn_ = a.sgn_ * b.sgn_;
    out.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
      unsigned long long carry = 0;
      for (size_t j = 0; j < b.mag_.size(); ++j) {
        unsigned __int128 cur = static_cast<unsigned __int128>(a.mag_[i]) * b.mag_[j] +
                                out.mag_[i + j] + carry;
        out.mag_[i + j] = static_cast<unsigned long long>(cur);
        carry = static_cast<unsigned long long>(cur >> 64);
      }
      out.mag_[i + b.mag_.size()] += carry;
    }
    trim(out.mag_);
    return out;
  }

  // Exact quotient; the caller guarantees divisibility.
  bigint div_exact(const bigint& d) const {
    if (d.sgn_ == 0) throw error("division by zero in exact elimination");
    if (sgn_ == 0) return bigint();
    bigint out;
    out.sgn_ = sgn_ * d.sgn_;
    out.mag_ = div_mag(mag_, d.mag_);
    if (out.mag_.empty()) out.sgn_ = 0;
    return out;
  }

  friend bool operator==(const bigint& a, const bigint& b) {
    return a.sgn_ == b.sgn_ && a.mag_ == b.mag_;
  }

 private:
  int sgn_ = 0;
  std::vector<unsigned long long> mag_;

  bigint negated() const {
    bigint out = *this;
    out.sgn_ = -out.sgn_;
    return out;
  }

  static void trim(std::vector<unsigned long long>& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }

  static int cmp_mag(const std::vector<unsigned long long>& a,
                     const std::vector<unsigned long long>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<unsigned long long> add_mag(const std::vector<unsigned long long>& a,
                                                 const std::vector<unsigned long long>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<unsigned long long> out(big.size() + 1, 0);
    unsigned long long carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
      unsigned __int128 cur = static_cast<unsigned __int128>(big[i]) + carry +
                              (i < small.size() ? small[i] : 0ull);
      out[i] = static_cast<unsigned long long>(cur);
      carry = static_cast<unsigned long long>(cur >> 64);
    }
    out[big.size()] = carry;
    trim(out);
    return out;
  }

  // a - b for a >= b.
  static std::vector<unsigned long long> sub_mag(const std::vector<unsigned long long>& a,
                                                 const std::vector<unsigned long long>& b) {
    std::vector<unsigned long long> out(a.size(), 0);
    unsigned long long borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      unsigned long long bi = i < b.size() ? b[i] : 0ull;
      unsigned long long cur = a[i] - bi - borrow;
      borrow = (a[i] < bi + borrow) || (bi + borrow < bi) ? 1 : 0;
      out[i] = cur;
    }
    trim(out);
    return out;
  }

  // Binary long division of magnitudes, quotient only.
  static std::vector<unsigned long long> div_mag(const std::vector<unsigned long long>& a,
                                                 const std::vector<unsigned long long>& b) {
    if (cmp_mag(a, b) < 0) return {};
    int bits = static_cast<int>(a.size()) * 64;
    while (bits > 0 && !get_bit(a, bits - 1)) --bits;
    std::vector<unsigned long long> q(a.size(), 0), r;
    for (int i = bits - 1; i >= 0; --i) {
      shift_left_one(r);
      if (get_bit(a, i)) {
        if (r.empty()) r.push_back(0);
        r[0] |= 1ull;
      }
      if (cmp_mag(r, b) >= 0) {
        r = sub_mag(r, b);
        q[i / 64] |= 1ull << (i % 64);
      }
    }
    trim(q);
    return q;
  }

  static bool get_bit(const std::vector<unsigned long long>& m, int i) {
    size_t limb = static_cast<size_t>(i) / 64;
    return limb < m.size() && ((m[limb] >> (i % 64)) & 1ull);
  }

  static void shift_left_one(std::vector<unsigned long long>& m) {
    unsigned long long carry = 0;
    for (auto& limb : m) {
      unsigned long long next = limb >> 63;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) m.push_back(carry);
  }
};

}  // namespace detail
}  // namespace pcbd
