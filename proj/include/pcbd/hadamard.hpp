#pragma once

#include <bit>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"

namespace pcbd {

// Sylvester matrix of order 2^k: H(i,j) = (-1)^popcount(i & j).
inline imat sylvester(int k = 8) {
  if (k < 0 || k > 20) throw error("sylvester exponent out of range");
  const int n = 1 << k;
  imat h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h(i, j) = (std::popcount(static_cast<unsigned>(i & j)) % 2 == 0) ? 1 : -1;
  return h;
}

// GF(p^k) with elements 0..q-1 encoded base p.
class galois_field {
 public:
  galois_field(int p, int k) : p_(p), k_(k) {
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;
    if (k_ > 1) red_ = find_irreducible();
  }

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }

  int add(int a, int b) const { return digitwise(a, b, +1); }
  int sub(int a, int b) const { return digitwise(a, b, -1); }

  int mul(int a, int b) const {
    std::vector<int> pa = poly(a), pb = poly(b);
    std::vector<int> prod(2 * k_ + 1, 0);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    if (!red_.empty()) {
      for (int d = 2 * k_; d >= k_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int t = 0; t <= k_; ++t) {
          int idx = d - k_ + t;
          prod[idx] = ((prod[idx] - c * red_[t]) % p_ + p_) % p_;
        }
      }
    }
    int r = 0;
    for (int i = k_ - 1; i >= 0; --i) r = r * p_ + prod[i];
    return r;
  }

  int pow(int a, long long e) const {
    int r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  // Quadratic character: 0 at zero, +1 on squares, -1 otherwise.
  int chi(int x) const {
    if (x == 0) return 0;
    return pow(x, (q_ - 1) / 2) == 1 ? 1 : -1;
  }

 private:
  std::vector<int> poly(int x) const {
    std::vector<int> c(k_ + 1, 0);
    for (int i = 0; i <= k_; ++i) {
      c[i] = x % p_;
      x /= p_;
    }
    return c;
  }

  int peval(const std::vector<int>& coeffs, int x) const {
    int v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = (v * x + *it) % p_;
    return v;
  }

  // First monic degree-k polynomial without roots in F_p; no-root suffices
  // for irreducibility up to degree 3, which covers every field used here.
  std::vector<int> find_irreducible() const {
    for (int tail = 0; tail < q_; ++tail) {
      std::vector<int> coeffs = poly(tail);
      coeffs.resize(k_);
      coeffs.push_back(1);
      bool rootless = true;
      for (int x = 0; x < p_ && rootless; ++x)
        if (peval(coeffs, x) == 0) rootless = false;
      if (rootless) return coeffs;
    }
    throw error("no irreducible polynomial found");
  }

  int digitwise(int a, int b, int sgn) const {
    int r = 0, m = 1;
    for (int i = 0; i < k_; ++i) {
      int d = ((a % p_ + sgn * (b % p_)) % p_ + p_) % p_;
      r += d * m;
      a /= p_;
      b /= p_;
      m *= p_;
    }
    return r;
  }

  int p_, k_, q_;
  std::vector<int> red_;
};

// Returns (p, k) when q = p^k for a prime p, otherwise nothing.
inline std::optional<std::pair<int, int>> factor_prime_power(int q) {
  if (q < 2) return std::nullopt;
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    int k = 0, rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest == 1) return std::make_pair(p, k);
    return std::nullopt;
  }
  return std::nullopt;
}

// Paley construction over GF(q) for odd prime powers q.  Produces order q+1
// when q = 3 mod 4 and order 2(q+1) when q = 1 mod 4.
inline imat paley(int q) {
  auto pp = factor_prime_power(q);
  if (!pp || q % 2 == 0) throw error("paley requires an odd prime power");
  galois_field f(pp->first, pp->second);
  if (q % 4 == 3) {
    const int n = q + 1;
    imat h(n, n, 1);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        h(1 + a, 1 + b) = (a == b) ? -1 : f.chi(f.sub(b, a));
    return h;
  }
  const int s = q + 1;
  imat c(s, s, 0);
  for (int j = 1; j < s; ++j) c(0, j) = 1;
  for (int i = 1; i < s; ++i) c(i, 0) = 1;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) c(1 + a, 1 + b) = f.chi(f.sub(b, a));
  imat h(2 * s, 2 * s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      long long ci = c(i, j), e = (i == j) ? 1 : 0;
      h(i, j) = ci + e;
      h(i, s + j) = ci - e;
      h(s + i, j) = ci - e;
      h(s + i, s + j) = -ci - e;
    }
  return h;
}

// Sign-normalizes so the first row and first column are all +1 (rows first,
// then columns).
inline imat normalize(imat h) {
  for (int i = 0; i < h.rows(); ++i)
    if (h(i, 0) < 0)
      for (int j = 0; j < h.cols(); ++j) h(i, j) = -h(i, j);
  for (int j = 0; j < h.cols(); ++j)
    if (h(0, j) < 0)
      for (int i = 0; i < h.rows(); ++i) h(i, j) = -h(i, j);
  return h;
}

// Checks entries are +-1 and H H^T = n I.
inline bool is_hadamard(const imat& h) {
  if (h.rows() != h.cols() || h.rows() == 0) return false;
  const int n = h.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (h(i, j) != 1 && h(i, j) != -1) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      long long dot = 0;
      for (int t = 0; t < n; ++t) dot += h(i, t) * h(j, t);
      if (dot != (i == j ? n : 0)) return false;
    }
  return true;
}

namespace detail {

inline std::optional<std::string> hadamard_dir() {
  const char* dir = std::getenv("PCBD_HADAMARD_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::string(dir);
}

inline std::optional<std::filesystem::path> hadamard_file(int n) {
  auto dir = hadamard_dir();
  if (!dir) return std::nullopt;
  std::filesystem::path p = std::filesystem::path(*dir) / ("h" + std::to_string(n) + ".csv");
  std::error_code ec;
  if (!std::filesystem::exists(p, ec)) return std::nullopt;
  return p;
}

inline imat load_hadamard_file(const std::filesystem::path& path, int n) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path.string());
  std::vector<std::vector<long long>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<long long> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stoll(cell));
      } catch (const std::exception&) {
        throw io_error("bad entry '" + cell + "' in " + path.string());
      }
    }
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != n)
    throw io_error(path.string() + ": expected " + std::to_string(n) + " rows");
  imat h(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw io_error(path.string() + ": row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) h(i, j) = rows[i][j];
  }
  if (!is_hadamard(h)) throw io_error(path.string() + " is not a Hadamard matrix");
  return h;
}

inline bool direct_order(int n) {
  if (n == 1 || n == 2) return true;
  if (n < 4 || n % 4 != 0) return false;
  if ((n & (n - 1)) == 0) return true;
  if (auto pp = factor_prime_power(n - 1); pp && (n - 1) % 4 == 3) return true;
  int q = n / 2 - 1;
  if (auto pp = factor_prime_power(q); pp && q % 4 == 1) return true;
  return false;
}

}  // namespace detail

inline bool order_available(int n) {
  if (detail::direct_order(n)) return true;
  if (n >= 8 && n % 8 == 0 && order_available(n / 2)) return true;
  return detail::hadamard_file(n).has_value();
}

inline std::vector<int> known_orders(int max_order = 256) {
  std::vector<int> out;
  for (int n = 1; n <= max_order; ++n)
    if ((n <= 2 || n % 4 == 0) && order_available(n)) out.push_back(n);
  return out;
}

// Resolves an order to a concrete matrix: Sylvester for powers of two, then
// the two Paley branches (normalized), then doubling, then files named
// h<order>.csv under $PCBD_HADAMARD_DIR.
inline imat hadamard(int n) {
  if (n == 1 || n == 2 || (n >= 4 && (n & (n - 1)) == 0))
    return sylvester(std::bit_width(static_cast<unsigned>(n)) - 1);
  if (n >= 4 && n % 4 == 0) {
    if (auto pp = factor_prime_power(n - 1); pp && (n - 1) % 4 == 3)
      return normalize(paley(n - 1));
    int q = n / 2 - 1;
    if (auto pp = factor_prime_power(q); pp && q % 4 == 1) return normalize(paley(q));
    if (n % 8 == 0 && order_available(n / 2)) return kron(sylvester(1), hadamard(n / 2));
  }
  if (auto file = detail::hadamard_file(n)) return detail::load_hadamard_file(*file, n);
  std::string avail;
  for (int o : known_orders(64)) avail += (avail.empty() ? "" : ",") + std::to_string(o);
  throw unsupported_order_error("no Hadamard matrix of order " + std::to_string(n) +
                                " available (have " + avail + ",...)");
}

// Column order by increasing popcount of the index, then by index.  Used to
// pick well-spread column sets from Sylvester matrices.
inline std::vector<int> popcount_order(int n) {
  std::vector<int> idx(n);
  for (int j = 0; j < n; ++j) idx[j] = j;
  std::stable_sort(idx.begin(), idx.end(), [](int a, int b) {
    int pa = std::popcount(static_cast<unsigned>(a));
    int pb = std::popcount(static_cast<unsigned>(b));
    return pa != pb ? pa < pb : a < b;
  });
  return idx;
}

// First k columns in popcount order when n is a power of two, natural order
// otherwise.
inline std::vector<int> preferred_columns(int n, int k) {
  std::vector<int> cols;
  if ((n & (n - 1)) == 0) {
    auto order = popcount_order(n);
    cols.assign(order.begin(), order.begin() + k);
  } else {
    for (int j = 0; j < k; ++j) cols.push_back(j);
  }
  return cols;
}

}  // namespace pcbd
