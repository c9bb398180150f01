#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "design_core.hpp"
#include "info_matrix.hpp"

namespace pcbd {

// Per-claim outcome.  ARCHIVED means the stated form disagrees with the
// computed matrix and the claim was marked as a recorded discrepancy.
struct claim_check {
  std::string label;
  std::string status;
  std::string detail;
};

struct certification_report {
  int method = 0;
  std::string class_label;
  int pairs = 0;
  int attributes = 0;
  bool orthogonally_blocked = false;
  std::optional<rational> measured_alpha, measured_beta;
  std::vector<claim_check> checks;
  bool all_exact = false;
  bool certified = false;  // every claim exact or archived
};

inline certification_report certify(const construction_result& cr) {
  certification_report rep;
  rep.method = cr.descriptor.method;
  rep.class_label = cr.descriptor.class_label;
  rep.pairs = cr.design.pairs();
  rep.attributes = cr.design.attributes();
  rep.orthogonally_blocked = is_orthogonally_blocked(cr.design);
  qmat m = information_matrix(cr.design);
  ij_form measured = as_ij_form(m);
  if (measured.ok) {
    rep.measured_alpha = measured.alpha;
    rep.measured_beta = measured.beta;
  }
  bool all_exact = true, certified = true;
  for (const auto& claim : cr.descriptor.claims) {
    match_result mr = match_closed_form(m, claim);
    claim_check cc;
    cc.label = claim.label;
    cc.detail = mr.detail;
    if (mr.exact) {
      cc.status = "EXACT_MATCH";
    } else if (claim.archived) {
      cc.status = "ARCHIVED";
      all_exact = false;
    } else {
      cc.status = "MISMATCH";
      all_exact = false;
      certified = false;
    }
    rep.checks.push_back(std::move(cc));
  }
  rep.all_exact = all_exact && !cr.descriptor.claims.empty();
  rep.certified = certified && !cr.descriptor.claims.empty();
  return rep;
}

namespace detail {

// Exact three-way comparison of two criterion values.  Matrices, when
// given, break interval overlaps through characteristic polynomials.
inline int compare_values(const criterion_value& a, const criterion_value& b, const qmat* ma,
                          const qmat* mb) {
  using kind = criterion_value::kind_t;
  if (a.kind == kind::exact && b.kind == kind::exact)
    return a.exact < b.exact ? -1 : (b.exact < a.exact ? 1 : 0);
  if (a.kind == kind::exact && b.kind == kind::quadratic) return -b.quad.compare(a.exact);
  if (a.kind == kind::quadratic && b.kind == kind::exact) return a.quad.compare(b.exact);
  if (a.kind == kind::quadratic && b.kind == kind::quadratic) return a.quad.compare(b.quad);
  // at least one interval enclosure; its endpoints are exact dyadics
  auto sign_vs = [](const criterion_value& v, const rational& bound) {
    if (v.kind == kind::exact) return v.exact < bound ? -1 : (bound < v.exact ? 1 : 0);
    return v.quad.compare(bound);
  };
  const criterion_value& iv = (a.kind == kind::interval) ? a : b;
  const criterion_value& ov = (a.kind == kind::interval) ? b : a;
  const bool a_is_interval = (a.kind == kind::interval);
  if (ov.kind != kind::interval) {
    int vs_hi = sign_vs(ov, dyadic(iv.hi)), vs_lo = sign_vs(ov, dyadic(iv.lo));
    if (vs_hi > 0) return a_is_interval ? -1 : 1;
    if (vs_lo < 0) return a_is_interval ? 1 : -1;
  } else {
    if (a.lo > b.hi) return 1;
    if (a.hi < b.lo) return -1;
  }
  if (ma && mb && char_poly(*ma) == char_poly(*mb)) return 0;
  throw ambiguity_error(
      "cannot separate two smallest-eigenvalue enclosures: [" + a.str() + "] vs [" + b.str() +
      "] with distinct spectra");
}

}  // namespace detail

// All sign-canonical candidate columns of length n: entries +-2 with the
// first entry +2, or, with zeros allowed, entries in {-2, 0, +2} whose
// first nonzero entry is +2 (plus the zero column).
inline std::vector<std::vector<long long>> canonical_columns(int n, bool include_zero) {
  if (n < 1 || n > 62) throw validation_error("column length out of range");
  std::vector<std::vector<long long>> cols;
  if (!include_zero) {
    const unsigned long long total = 1ull << (n - 1);
    for (unsigned long long mask = 0; mask < total; ++mask) {
      std::vector<long long> c(n);
      c[0] = 2;
      for (int r = 1; r < n; ++r) c[r] = (mask >> (r - 1)) & 1 ? -2 : 2;
      cols.push_back(std::move(c));
    }
  } else {
    if (n > 24) throw budget_error("zero-inclusive column set too large to enumerate");
    unsigned long long total = 1;
    for (int r = 0; r < n; ++r) total *= 3;
    for (unsigned long long code = 0; code < total; ++code) {
      std::vector<long long> c(n);
      unsigned long long x = code;
      int first = 0;
      bool canonical = true;
      for (int r = 0; r < n; ++r) {
        int digit = static_cast<int>(x % 3);
        x /= 3;
        c[r] = digit == 0 ? 0 : (digit == 1 ? 2 : -2);
        if (first == 0 && c[r] != 0) first = static_cast<int>(c[r]);
      }
      canonical = (first == 0 || first == 2);
      if (canonical) cols.push_back(std::move(c));
    }
  }
  return cols;
}

struct oracle_options {
  design_criterion criterion = design_criterion::determinant;
  bool include_zero = false;
  unsigned long long budget = 1ull << 22;
};

struct oracle_result {
  design_criterion criterion;
  unsigned long long candidates = 0;  // multisets enumerated
  unsigned long long evaluated = 0;   // candidates scored (singular ones skipped for A)
  unsigned long long optima = 0;      // candidates attaining the best value
  criterion_value best;
  imat best_design;  // one optimal attribute matrix
};

namespace detail {

inline unsigned long long multiset_count(unsigned long long p, int k,
                                         unsigned long long budget) {
  int128 c = 1;
  for (int t = 1; t <= k; ++t) {
    c = c * static_cast<int128>(p - 1 + t) / t;
    if (c > static_cast<int128>(budget)) {
      unsigned long long shown =
          c > static_cast<int128>(~0ull >> 1) ? (~0ull >> 1) : static_cast<unsigned long long>(c);
      throw budget_error("oracle search needs at least " + std::to_string(shown) +
                         " candidates, over the budget of " + std::to_string(budget) +
                         "; raise the budget to proceed");
    }
  }
  return static_cast<unsigned long long>(c);
}

}  // namespace detail

// Exhaustive search over column multisets for the best value of the chosen
// criterion under the given block layout.
inline oracle_result brute_force_best(int n, int k, const std::vector<int>& sizes,
                                      const oracle_options& opt = {}) {
  if (k < 1) throw validation_error("oracle needs at least one attribute");
  block_layout layout(sizes);
  if (layout.total() != n)
    throw validation_error("block sizes must sum to the number of pairs");
  auto cols = canonical_columns(n, opt.include_zero);
  const unsigned long long p = cols.size();
  if (p > opt.budget)
    throw budget_error("oracle search needs at least " + std::to_string(p) +
                       " candidates, over the budget of " + std::to_string(opt.budget) +
                       "; raise the budget to proceed");
  oracle_result out;
  out.criterion = opt.criterion;
  out.candidates = detail::multiset_count(p, k, opt.budget);
  const bool maximize = opt.criterion != design_criterion::average_variance;
  std::vector<unsigned long long> idx(k, 0);
  imat f(n, k);
  qmat best_m(0, 0);
  bool have_best = false;
  while (true) {
    for (int j = 0; j < k; ++j)
      for (int r = 0; r < n; ++r) f(r, j) = cols[idx[j]][r];
    blocked_design d(f, layout);
    qmat m = information_matrix(d);
    bool scored = true;
    criterion_value value;
    if (opt.criterion == design_criterion::average_variance) {
      if (det(m).is_zero())
        scored = false;
      else
        value = evaluate(m, opt.criterion);
    } else {
      value = evaluate(m, opt.criterion);
    }
    if (scored) {
      ++out.evaluated;
      if (!have_best) {
        have_best = true;
        out.best = value;
        out.best_design = f;
        best_m = m;
        out.optima = 1;
      } else {
        int c = detail::compare_values(value, out.best, &m, &best_m);
        if ((maximize && c > 0) || (!maximize && c < 0)) {
          out.best = value;
          out.best_design = f;
          best_m = m;
          out.optima = 1;
        } else if (c == 0) {
          ++out.optima;
        }
      }
    }
    int j = k - 1;
    while (j >= 0 && idx[j] == p - 1) --j;
    if (j < 0) break;
    ++idx[j];
    for (int t = j + 1; t < k; ++t) idx[t] = idx[j];
  }
  if (!have_best)
    throw singular_error("every candidate design is singular under this criterion");
  return out;
}

struct oracle_comparison {
  oracle_result oracle;
  criterion_value design_value;
  std::string verdict;  // OPTIMAL or SUBOPTIMAL
  std::optional<rational> exact_gap;  // best - value when both are rational
  double approx_gap = 0.0;
};

inline oracle_comparison compare_to_oracle(const blocked_design& d,
                                           const oracle_options& opt = {}) {
  oracle_options local = opt;
  if (!d.is_pure() && !local.include_zero) local.include_zero = true;
  oracle_comparison out;
  out.oracle = brute_force_best(d.pairs(), d.attributes(), d.layout.sizes(), local);
  qmat m = information_matrix(d);
  if (local.criterion == design_criterion::average_variance && det(m).is_zero())
    throw singular_error("the design's information matrix is singular");
  out.design_value = evaluate(m, local.criterion);
  qmat best_m = information_matrix(blocked_design(out.oracle.best_design, d.layout));
  int c = detail::compare_values(out.design_value, out.oracle.best, &m, &best_m);
  const bool maximize = local.criterion != design_criterion::average_variance;
  bool optimal = (c == 0) || (maximize ? c > 0 : c < 0);
  out.verdict = optimal ? "OPTIMAL" : "SUBOPTIMAL";
  if (out.design_value.kind == criterion_value::kind_t::exact &&
      out.oracle.best.kind == criterion_value::kind_t::exact)
    out.exact_gap = out.oracle.best.exact - out.design_value.exact;
  out.approx_gap = out.oracle.best.approx() - out.design_value.approx();
  return out;
}

}  // namespace pcbd
