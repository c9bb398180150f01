#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "design_core.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace pcbd {

// Information matrix for the main effects after eliminating block effects:
// (1/4) (F'F - F'Z (Z'Z)^{-1} Z'F), computed exactly.  Z'Z is diagonal with
// the block sizes, so the correction is a sum of scaled outer products of
// block column sums.
inline qmat information_matrix(const blocked_design& d) {
  const int k = d.attributes();
  qmat m = d.f.gram().cast<rational>();
  const auto& sizes = d.layout.sizes();
  int r = 0;
  for (int mj : sizes) {
    std::vector<long long> s(k, 0);
    for (int t = 0; t < mj; ++t)
      for (int j = 0; j < k; ++j) s[j] += d.f(r + t, j);
    for (int i = 0; i < k; ++i) {
      if (s[i] == 0) continue;
      for (int j = 0; j < k; ++j) m(i, j) -= rational(s[i] * s[j], mj);
    }
    r += mj;
  }
  const rational quarter(1, 4);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i, j) *= quarter;
  return m;
}

// Same matrix scaled by 1/N.
inline qmat normalized_information(const blocked_design& d) {
  qmat m = information_matrix(d);
  const rational inv_n(1, d.pairs());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) *= inv_n;
  return m;
}

// True when every block column sum is zero (F'Z = 0), i.e. the block
// correction vanishes.
inline bool is_orthogonally_blocked(const blocked_design& d) {
  int r = 0;
  for (int mj : d.layout.sizes()) {
    for (int j = 0; j < d.attributes(); ++j) {
      long long s = 0;
      for (int t = 0; t < mj; ++t) s += d.f(r + t, j);
      if (s != 0) return false;
    }
    r += mj;
  }
  return true;
}

struct ij_form {
  bool ok = false;
  rational alpha;
  rational beta;
};

// Detects M = alpha I + beta J (all diagonal entries equal, all off-diagonal
// entries equal).
inline ij_form as_ij_form(const qmat& m) {
  ij_form r;
  const int k = m.rows();
  if (k == 0 || m.cols() != k) return r;
  if (k == 1) {
    r.ok = true;
    r.alpha = m(0, 0);
    r.beta = rational(0);
    return r;
  }
  const rational off = m(0, 1), diag = m(0, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if ((i == j ? diag : off) != m(i, j)) return r;
  r.ok = true;
  r.alpha = diag - off;
  r.beta = off;
  return r;
}

// Spectrum of alpha I + beta J on K attributes: alpha with multiplicity K-1
// and alpha + K beta once (collapsed when beta = 0).  Listed ascending.
inline std::vector<std::pair<rational, int>> ij_eigenvalues(const rational& alpha,
                                                            const rational& beta, int k) {
  if (k < 1) throw error("eigenvalues need at least one attribute");
  if (k == 1) return {{alpha + beta, 1}};
  if (beta == rational(0)) return {{alpha, k}};
  rational big = alpha + rational(k) * beta;
  if (big < alpha) return {{big, 1}, {alpha, k - 1}};
  return {{alpha, k - 1}, {big, 1}};
}

namespace detail {

// Exact positive semidefiniteness via fraction-free symmetric elimination.
// Denominators are cleared by one positive scale (a congruence, so inertia is
// preserved) and the Bareiss update keeps every intermediate an integer minor
// of the scaled matrix, with arbitrary precision so nothing overflows.  A
// zero pivot forces the whole remaining row to vanish, otherwise the matrix
// is indefinite.
inline bool is_psd(const qmat& a) {
  const int n = a.rows();
  if (n == 0) return true;
  int128 scale = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int128 d = a(i, j).den();
      scale = scale / gcd128(scale, d) * d;
      if (scale > static_cast<int128>(std::numeric_limits<long long>::max()))
        throw overflow_error("denominators too large for exact elimination");
    }
  const long long l = static_cast<long long>(scale);
  std::vector<bigint> b(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b[i * n + j] = bigint(a(i, j).num()) * bigint(l / a(i, j).den());
  bigint prev(1);
  for (int i = 0; i < n; ++i) {
    const bigint pivot = b[i * n + i];
    if (pivot.sign() < 0) return false;
    if (pivot.is_zero()) {
      for (int j = i + 1; j < n; ++j)
        if (!b[i * n + j].is_zero()) return false;
      continue;
    }
    for (int r = i + 1; r < n; ++r)
      for (int c = i + 1; c < n; ++c)
        b[r * n + c] = (pivot * b[r * n + c] - b[r * n + i] * b[i * n + c]).div_exact(prev);
    prev = pivot;
  }
  return true;
}

inline qmat shift_diag(qmat m, const rational& lambda) {
  for (int i = 0; i < m.rows(); ++i) m(i, i) -= lambda;
  return m;
}

// Dyadic rational close to x (denominator 2^32).
inline rational dyadic(double x) {
  const double scale = 4294967296.0;
  double scaled = x * scale;
  if (!(std::fabs(scaled) < 9e18)) throw overflow_error("value too large for exact shift");
  return rational(static_cast<long long>(std::llround(scaled)), 1LL << 32);
}

}  // namespace detail

// Exact sign of a + b sqrt(d) for rationals with d >= 0.
inline int sign_with_sqrt(const rational& a, const rational& b, const rational& d) {
  if (d.sign() < 0) throw error("negative discriminant");
  if (b.is_zero() || d.is_zero()) return a.sign();
  if (a.sign() >= 0 && b.sign() > 0) return 1;
  if (a.sign() <= 0 && b.sign() < 0) return -1;
  rational lhs = a * a, rhs = b * b * d;
  int cmp = lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
  if (a.sign() > 0) return cmp >= 0 ? (cmp == 0 ? 0 : 1) : -1;
  return cmp <= 0 ? (cmp == 0 ? 0 : 1) : -1;
}

// The smallest root (t - sqrt(disc)) / 2 of a monic quadratic, kept exact.
struct quadratic_value {
  rational t;
  rational disc;

  double approx() const { return (t.to_double() - std::sqrt(disc.to_double())) / 2.0; }

  // Compares against a rational exactly: (t - sqrt(disc))/2 vs r.
  int compare(const rational& r) const {
    return sign_with_sqrt(t - rational(2) * r, rational(-1), disc);
  }

  // Compares two quadratic values exactly.
  int compare(const quadratic_value& o) const {
    // sign of (t1 - t2) - sqrt(d1) + sqrt(d2)
    rational c = t - o.t;
    // first the sign of c + sqrt(d2) (lhs), compared against sqrt(d1)
    int lhs_sign = sign_with_sqrt(c, rational(1), o.disc);
    if (lhs_sign < 0) return -1;
    // both sides nonnegative: compare (c + sqrt(d2))^2 vs d1
    rational a = c * c + o.disc - disc;
    rational b = rational(2) * c;
    return sign_with_sqrt(a, b, o.disc);
  }
};

enum class design_criterion { determinant, average_variance, smallest_eigenvalue, total_trace };

inline std::string criterion_name(design_criterion c) {
  switch (c) {
    case design_criterion::determinant: return "D";
    case design_criterion::average_variance: return "A";
    case design_criterion::smallest_eigenvalue: return "E";
    case design_criterion::total_trace: return "trace";
  }
  return "?";
}

inline design_criterion parse_criterion(const std::string& s) {
  if (s == "D" || s == "d") return design_criterion::determinant;
  if (s == "A" || s == "a") return design_criterion::average_variance;
  if (s == "E" || s == "e") return design_criterion::smallest_eigenvalue;
  if (s == "trace" || s == "T" || s == "t") return design_criterion::total_trace;
  throw error("unknown criterion '" + s + "' (want D, A, E or trace)");
}

// A computed criterion value: exact rational, exact quadratic irrational, or
// a certified enclosure.
struct criterion_value {
  enum class kind_t { exact, quadratic, interval };
  kind_t kind = kind_t::exact;
  rational exact;
  quadratic_value quad;
  double lo = 0.0, hi = 0.0;

  static criterion_value of(const rational& r) {
    criterion_value v;
    v.kind = kind_t::exact;
    v.exact = r;
    return v;
  }
  static criterion_value of(const quadratic_value& q) {
    criterion_value v;
    if (auto root = exact_sqrt(q.disc)) {
      v.kind = kind_t::exact;
      v.exact = (q.t - *root) / rational(2);
      return v;
    }
    v.kind = kind_t::quadratic;
    v.quad = q;
    return v;
  }
  static criterion_value enclosure(double lo, double hi) {
    criterion_value v;
    v.kind = kind_t::interval;
    v.lo = lo;
    v.hi = hi;
    return v;
  }

  double approx() const {
    switch (kind) {
      case kind_t::exact: return exact.to_double();
      case kind_t::quadratic: return quad.approx();
      case kind_t::interval: return (lo + hi) / 2.0;
    }
    return 0.0;
  }

  bool is_exact() const { return kind != kind_t::interval; }

  std::string str() const {
    switch (kind) {
      case kind_t::exact: return exact.str();
      case kind_t::quadratic:
        return "(" + quad.t.str() + " - sqrt(" + quad.disc.str() + "))/2";
      case kind_t::interval: {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "[%.12g, %.12g]", lo, hi);
        return buf;
      }
    }
    return "";
  }
};

// Smallest eigenvalue.  Exact for alpha I + beta J matrices and for K <= 2;
// otherwise a floating point estimate wrapped in an exactly certified
// enclosure (semidefiniteness of M - lambda I checked in rational
// arithmetic).
inline criterion_value smallest_eigenvalue(const qmat& m) {
  const int k = m.rows();
  if (k == 1) return criterion_value::of(m(0, 0));
  if (auto ij = as_ij_form(m); ij.ok) {
    auto eigs = ij_eigenvalues(ij.alpha, ij.beta, k);
    return criterion_value::of(eigs.front().first);
  }
  if (k == 2) {
    quadratic_value q;
    q.t = m(0, 0) + m(1, 1);
    rational diff = m(0, 0) - m(1, 1);
    q.disc = diff * diff + rational(4) * m(0, 1) * m(1, 0);
    return criterion_value::of(q);
  }
  Eigen::MatrixXd em(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) em(i, j) = m(i, j).to_double();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(em);
  const double estimate = solver.eigenvalues()(0);
  double delta = 1e-10;
  for (int attempt = 0; attempt < 60; ++attempt) {
    rational lo = detail::dyadic(estimate - delta);
    rational hi = detail::dyadic(estimate + delta);
    bool lower_ok = detail::is_psd(detail::shift_diag(m, lo));
    bool upper_ok = !detail::is_psd(detail::shift_diag(m, hi));
    if (lower_ok && upper_ok) return criterion_value::enclosure(lo.to_double(), hi.to_double());
    delta *= 2.0;
  }
  throw error("could not certify an eigenvalue enclosure");
}

// Criterion evaluation on an exact information matrix.
inline criterion_value evaluate(const qmat& m, design_criterion c) {
  switch (c) {
    case design_criterion::determinant: return criterion_value::of(det(m));
    case design_criterion::total_trace: return criterion_value::of(trace(m));
    case design_criterion::average_variance: {
      qmat inv = inverse(m);
      return criterion_value::of(trace(inv));
    }
    case design_criterion::smallest_eigenvalue: return smallest_eigenvalue(m);
  }
  throw error("unknown criterion");
}

inline criterion_value evaluate(const blocked_design& d, design_criterion c) {
  return evaluate(information_matrix(d), c);
}

// Outcome of checking a claimed closed form against the computed matrix.
struct match_result {
  bool exact = false;
  std::string status;
  std::string detail;
  qmat difference;
};

inline qmat ij_matrix(const rational& alpha, const rational& beta, int k) {
  qmat m(k, k, beta);
  for (int i = 0; i < k; ++i) m(i, i) += alpha;
  return m;
}

// Expands prod (x - lambda)^mult, coefficients ascending.
inline std::vector<rational> eigen_poly(const std::vector<std::pair<rational, int>>& eigs) {
  std::vector<rational> p{rational(1)};
  for (const auto& [lambda, mult] : eigs)
    for (int t = 0; t < mult; ++t) {
      std::vector<rational> q(p.size() + 1, rational(0));
      for (size_t i = 0; i < p.size(); ++i) {
        q[i + 1] += p[i];
        q[i] -= lambda * p[i];
      }
      p = std::move(q);
    }
  return p;
}

inline match_result match_closed_form(const qmat& computed, const closed_form_claim& claim) {
  match_result r;
  const int k = computed.rows();
  bool have_matrix_part = false, matrix_ok = false;
  if (claim.has_ij && (claim.beta_lower || claim.beta_upper)) {
    have_matrix_part = true;
    ij_form measured = as_ij_form(computed);
    if (!measured.ok) {
      r.detail = "not of the form alpha I + beta J";
      r.difference = computed - ij_matrix(claim.alpha, rational(0), k);
    } else {
      bool alpha_ok = measured.alpha == claim.alpha;
      bool lo_ok = !claim.beta_lower || *claim.beta_lower < measured.beta;
      bool hi_ok = !claim.beta_upper || measured.beta < *claim.beta_upper;
      matrix_ok = alpha_ok && lo_ok && hi_ok;
      r.detail = "alpha = " + measured.alpha.str() + ", beta = " + measured.beta.str();
      if (!alpha_ok) r.detail += " (alpha should be " + claim.alpha.str() + ")";
      if (!lo_ok || !hi_ok) r.detail += " (beta outside the claimed range)";
      r.difference = computed - ij_matrix(claim.alpha, measured.beta, k);
    }
  } else if (claim.has_ij || claim.explicit_matrix) {
    have_matrix_part = true;
    qmat expected =
        claim.has_ij ? ij_matrix(claim.alpha, claim.beta, k) : *claim.explicit_matrix;
    if (expected.rows() != k || expected.cols() != computed.cols()) {
      r.status = "MISMATCH";
      r.detail = "shape mismatch";
      return r;
    }
    r.difference = computed - expected;
    matrix_ok = true;
    for (int i = 0; i < k && matrix_ok; ++i)
      for (int j = 0; j < k; ++j)
        if (!r.difference(i, j).is_zero()) {
          matrix_ok = false;
          break;
        }
  }
  bool have_eigen_part = !claim.eigenvalues.empty();
  bool eigen_ok = false;
  if (have_eigen_part) {
    int total = 0;
    for (const auto& [lambda, mult] : claim.eigenvalues) total += mult;
    if (total != k) {
      r.detail += (r.detail.empty() ? "" : "; ");
      r.detail += "claimed multiplicities sum to " + std::to_string(total);
    } else {
      eigen_ok = char_poly(computed) == eigen_poly(claim.eigenvalues);
      r.detail += (r.detail.empty() ? "" : "; ");
      r.detail += eigen_ok ? "eigenvalues match" : "eigenvalues differ";
    }
  }
  if (!have_matrix_part && !have_eigen_part) {
    r.status = "MISMATCH";
    r.detail = "claim carries no checkable form";
    return r;
  }
  r.exact = (!have_matrix_part || matrix_ok) && (!have_eigen_part || eigen_ok);
  r.status = r.exact ? "EXACT_MATCH" : "MISMATCH";
  return r;
}

}  // namespace pcbd
