#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

#include "error.hpp"

namespace pcbd {

namespace detail {

using int128 = __int128;

inline int128 abs128(int128 x) { return x < 0 ? -x : x; }

inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long long narrow(int128 x, const char* what) {
  if (x > int128(std::numeric_limits<long long>::max()) ||
      x < int128(std::numeric_limits<long long>::min()))
    throw overflow_error(std::string("exact arithmetic overflow in ") + what);
  return static_cast<long long>(x);
}

}  // namespace detail

// Exact rational number on 64-bit numerator/denominator.  Intermediate
// products are taken in 128 bits; results that do not reduce back into 64
// bits throw overflow_error.  Always stored reduced with positive
// denominator.
class rational {
 public:
  rational() : num_(0), den_(1) {}
  rational(long long n) : num_(n), den_(1) {}
  rational(int n) : num_(n), den_(1) {}
  rational(long long n, long long d) {
    if (d == 0) throw error("rational with zero denominator");
    detail::int128 nn = n, dd = d;
    normalize(nn, dd, "construction");
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend rational operator+(const rational& a, const rational& b) {
    detail::int128 n = detail::int128(a.num_) * b.den_ + detail::int128(b.num_) * a.den_;
    detail::int128 d = detail::int128(a.den_) * b.den_;
    return make(n, d, "addition");
  }
  friend rational operator-(const rational& a, const rational& b) {
    detail::int128 n = detail::int128(a.num_) * b.den_ - detail::int128(b.num_) * a.den_;
    detail::int128 d = detail::int128(a.den_) * b.den_;
    return make(n, d, "subtraction");
  }
  friend rational operator*(const rational& a, const rational& b) {
    detail::int128 n = detail::int128(a.num_) * b.num_;
    detail::int128 d = detail::int128(a.den_) * b.den_;
    return make(n, d, "multiplication");
  }
  friend rational operator/(const rational& a, const rational& b) {
    if (b.num_ == 0) throw error("rational division by zero");
    detail::int128 n = detail::int128(a.num_) * b.den_;
    detail::int128 d = detail::int128(a.den_) * b.num_;
    return make(n, d, "division");
  }
  rational operator-() const {
    rational r;
    r.num_ = detail::narrow(-detail::int128(num_), "negation");
    r.den_ = den_;
    return r;
  }
  rational& operator+=(const rational& o) { return *this = *this + o; }
  rational& operator-=(const rational& o) { return *this = *this - o; }
  rational& operator*=(const rational& o) { return *this = *this * o; }
  rational& operator/=(const rational& o) { return *this = *this / o; }

  friend bool operator==(const rational& a, const rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
  friend bool operator<(const rational& a, const rational& b) {
    return detail::int128(a.num_) * b.den_ < detail::int128(b.num_) * a.den_;
  }
  friend bool operator>(const rational& a, const rational& b) { return b < a; }
  friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
  friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

  rational abs() const { return num_ < 0 ? -*this : *this; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const rational& r) {
    return os << r.str();
  }

 private:
  static rational make(detail::int128 n, detail::int128 d, const char* what) {
    rational r;
    r.normalize(n, d, what);
    return r;
  }

  void normalize(detail::int128 n, detail::int128 d, const char* what) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
    num_ = detail::narrow(n, what);
    den_ = detail::narrow(d, what);
  }

  long long num_;
  long long den_;
};

inline rational abs(const rational& r) { return r.abs(); }

namespace detail {

// Exact integer square root, or -1 when v is not a perfect square.
inline long long perfect_sqrt(long long v) {
  if (v < 0) return -1;
  if (v < 2) return v;
  long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r > 0 && static_cast<int128>(r) * r > static_cast<int128>(v)) --r;
  while (static_cast<int128>(r + 1) * (r + 1) <= static_cast<int128>(v)) ++r;
  return static_cast<int128>(r) * r == static_cast<int128>(v) ? r : -1;
}

}  // namespace detail

// Square root when it is again rational, i.e. numerator and denominator are
// both perfect squares.
inline std::optional<rational> exact_sqrt(const rational& r) {
  long long n = detail::perfect_sqrt(r.num());
  if (n < 0) return std::nullopt;
  long long d = detail::perfect_sqrt(r.den());
  if (d < 0) return std::nullopt;
  return rational(n, d);
}

// Parses "p" or "p/q".
inline rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return rational(std::stoll(s));
    long long n = std::stoll(s.substr(0, slash));
    long long d = std::stoll(s.substr(slash + 1));
    return rational(n, d);
  } catch (const std::invalid_argument&) {
    throw error("cannot parse rational from '" + s + "'");
  } catch (const std::out_of_range&) {
    throw overflow_error("rational literal out of range: '" + s + "'");
  }
}

}  // namespace pcbd
