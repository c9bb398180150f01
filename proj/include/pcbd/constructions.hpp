#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "design_core.hpp"
#include "hadamard.hpp"
#include "info_matrix.hpp"

namespace pcbd {

// Parameters accepted by the construct dispatcher.  Which fields are
// required depends on the method; see catalog().
struct method_params {
  int method = 0;
  std::optional<int> n, k, b, k1, k2, m, m1, i, p, q;
  std::vector<int> sizes;
  std::vector<std::pair<int, int>> groups;
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw validation_error(msg);
}

inline int need(const std::optional<int>& v, const char* what, int method) {
  if (!v)
    throw validation_error("method " + std::to_string(method) + " requires " + what);
  return *v;
}

inline imat sub(const imat& h, int r0, int r1, int c0, int c1) {
  imat out(r1 - r0, c1 - c0);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) out(i - r0, j - c0) = h.at(i, j);
  return out;
}

inline imat ones(int r, int c) { return imat(r, c, 1); }
inline imat neg_ones(int r, int c) { return imat(r, c, -1); }
inline imat full_row(int k, long long v) { return imat(1, k, v); }

inline imat scaled(const imat& m, long long s) {
  imat out = m;
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j) *= s;
  return out;
}

inline imat first_cols(const imat& h, int k) { return sub(h, 0, h.rows(), 0, k); }

inline std::pair<std::vector<int>, std::vector<int>> split_by_col(const imat& h, int col = 1) {
  std::vector<int> plus, minus;
  for (int r = 0; r < h.rows(); ++r) (h(r, col) == 1 ? plus : minus).push_back(r);
  return {plus, minus};
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

inline design_descriptor describe(int method, const std::string& label,
                                  const std::string& optimality) {
  design_descriptor d;
  d.method = method;
  d.class_label = label;
  d.optimality = optimality;
  return d;
}

inline void set_param(design_descriptor& d, const std::string& key, int value) {
  d.params[key] = std::to_string(value);
}

// Attaches an alpha I + beta J claim together with the implied spectrum.
inline void add_ij_claim(design_descriptor& d, const rational& alpha, const rational& beta,
                         int k, bool archived = false) {
  closed_form_claim c;
  c.label = "information matrix";
  c.has_ij = true;
  c.alpha = alpha;
  c.beta = beta;
  c.archived = archived;
  if (!archived) c.eigenvalues = ij_eigenvalues(alpha, beta, k);
  d.claims.push_back(std::move(c));
}

inline void add_ij_range_claim(design_descriptor& d, const rational& alpha,
                               const rational& beta_lower,
                               std::optional<rational> beta_upper) {
  closed_form_claim c;
  c.label = "information matrix";
  c.has_ij = true;
  c.alpha = alpha;
  c.beta_lower = beta_lower;
  c.beta_upper = std::move(beta_upper);
  d.claims.push_back(std::move(c));
}

inline void add_eigen_claim(design_descriptor& d,
                            std::vector<std::pair<rational, int>> eigs) {
  closed_form_claim c;
  c.label = "eigenvalues";
  c.eigenvalues = std::move(eigs);
  d.claims.push_back(std::move(c));
}

// The fixed 12x6 tail used by method 2 when the second part has 14 pairs.
inline imat method2_tail12() {
  static const int raw[12][6] = {
      {+1, -1, +1, +1, +1, -1}, {-1, +1, +1, -1, +1, +1}, {-1, -1, -1, +1, -1, +1},
      {+1, -1, -1, -1, +1, -1}, {+1, +1, -1, -1, -1, +1}, {-1, +1, +1, +1, -1, -1},
      {+1, +1, -1, +1, +1, +1}, {+1, -1, +1, +1, -1, +1}, {-1, +1, -1, +1, +1, -1},
      {-1, -1, +1, -1, +1, +1}, {+1, +1, +1, -1, -1, -1}, {-1, -1, -1, -1, -1, -1}};
  imat m(12, 6);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = raw[i][j];
  return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The 27 construction methods.  Every builder returns the design together
// with a descriptor carrying its class label, claimed closed form and
// optimality statement.

inline construction_result construct_method1(int n, int k, int b) {
  using namespace detail;
  require(n % 4 == 2, "method 1 requires N = 2 (mod 4)");
  require(b >= 1 && n % b == 0, "method 1 requires b to divide N");
  const int m = n / b;
  require(m % 2 == 0, "method 1 requires even block size m = N/b");
  require(k >= 1 && k <= n / 2 - 1, "method 1 requires 1 <= K <= N/2 - 1");
  imat h = normalize(hadamard(n / 2 - 1));
  imat base = hcat(ones(n / 2, 1), vcat(sub(h, 0, n / 2 - 1, 1, k), ones(1, k - 1)));
  blocked_design d(pair_expand(base), block_layout(std::vector<int>(b, m)));
  auto desc = describe(1, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                              ", b=" + std::to_string(b) + ")",
                       "simultaneously phi_f-optimal for main effects (includes D and A)");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  set_param(desc, "b", b);
  desc.notes.push_back("rows come in complementary pairs; blocks merge m/2 consecutive pairs");
  desc.notes.push_back("augmenting base row chosen as all +1");
  add_ij_claim(desc, rational(n - 2), rational(2), k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method2(int n, int k, int b) {
  using namespace detail;
  require(n % 8 == 6, "method 2 requires N = 6 (mod 8)");
  require(b >= 2, "method 2 requires b >= 2");
  const int n1 = n / 2 + 1, n2 = n / 2 - 1;
  require(n1 % (b - 1) == 0, "method 2 requires b-1 to divide N/2 + 1");
  const int m1 = n1 / (b - 1);
  require(m1 % 2 == 0, "method 2 requires even first-part block size");
  require(k >= 1 && k <= n1 / 2, "method 2 requires K <= (N/2 + 1)/2");
  imat h1 = normalize(hadamard(n1 / 2));
  imat d1 = pair_expand(select_columns(h1, preferred_columns(n1 / 2, k)));
  imat tail;
  if (n2 - 2 == 12 && k <= 6)
    tail = sub(method2_tail12(), 0, 12, 0, k);
  else {
    require(k <= n2 - 3, "method 2 requires K <= N/2 - 4 for the second part");
    imat h2 = normalize(hadamard(n2 - 2));
    tail = sub(h2, 0, n2 - 2, 1, k + 1);
  }
  imat d2 = vcat(vcat(full_row(k, 2), full_row(k, -2)), scaled(tail, 2));
  std::vector<int> sizes(b - 1, m1);
  sizes.push_back(n2);
  blocked_design d(vcat(d1, d2), block_layout(sizes));
  auto desc = describe(2, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                              ", b=" + std::to_string(b) + ")",
                       "simultaneously phi_f-optimal for main effects (includes D and A)");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  set_param(desc, "b", b);
  desc.notes.push_back("b-1 blocks of size (N/2+1)/(b-1), one final block of size N/2-1");
  if (n2 - 2 == 12 && k <= 6)
    desc.notes.push_back("second part uses a fixed 12-row array scaled to +-2");
  add_ij_claim(desc, rational(n - 2), rational(2), k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method3(int n, int k, int b) {
  using namespace detail;
  require(n % 8 == 2, "method 3 requires N = 2 (mod 8)");
  require(b >= 1 && n % b == 0, "method 3 requires b to divide N");
  const int m = n / b;
  require(m % 2 == 0 && m > 2, "method 3 requires even block size m > 2");
  auto fine = construct_method1(n, k, n / 2);
  blocked_design d = reblock(fine.design, std::vector<int>(b, m));
  auto desc = describe(3, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                              ", b=" + std::to_string(b) + ")",
                       "D-optimal");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  set_param(desc, "b", b);
  desc.notes.push_back("pairs regrouped into b blocks of m/2 consecutive complementary pairs");
  add_ij_claim(desc, rational(n - 2), rational(2), k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method4(int n, int k, int k1, int b) {
  using namespace detail;
  require(n % 8 == 2, "method 4 requires N = 2 (mod 8)");
  require(b >= 1 && n % b == 0, "method 4 requires b to divide N");
  const int m = n / b;
  require(m % 2 == 0 && m > 2, "method 4 requires even block size m > 2");
  require(b < n / 2, "method 4 requires b < N/2");
  require(k1 >= 1 && k1 <= k, "method 4 requires 1 <= K1 <= K");
  require(k >= 2 && k <= (n - 2) / 2, "method 4 requires 2 <= K <= (N-2)/2");
  imat h = normalize(hadamard((n - 2) / 2));
  imat core = pair_expand(select_columns(h, preferred_columns((n - 2) / 2, k)));
  imat tail = hcat(ones(1, k1), neg_ones(1, k - k1));
  blocked_design d(vcat(vcat(core, full_row(k, 2)), scaled(tail, 2)),
                   block_layout(std::vector<int>(b, m)));
  auto desc = describe(4, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                              ", K1=" + std::to_string(k1) + ", b=" + std::to_string(b) + ")",
                       "D-optimal");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  set_param(desc, "k1", k1);
  set_param(desc, "b", b);
  desc.notes.push_back("final two rows: all +2, then K1 entries +2 and K-K1 entries -2");
  add_ij_claim(desc, rational(n - 2), rational(2) - rational(4, m), k, true);
  add_eigen_claim(desc, {{rational(n - 2), k - 2},
                         {rational(n + 2 * k1 - 2) - rational(4 * k1, m), 1},
                         {rational(n + 2 * k - 2 * k1 - 2), 1}});
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method5(int n, int k, int b) {
  using namespace detail;
  require(n % 4 == 0, "method 5 requires N = 0 (mod 4)");
  require(b >= 1 && n % b == 0, "method 5 requires b to divide N");
  const int m = n / b;
  require(m % 2 == 1, "method 5 requires odd block size m = N/b");
  require(k >= 1 && k <= b, "method 5 requires K <= b");
  imat h = normalize(hadamard(b));
  blocked_design d(kron(first_cols(h, k), alt_vec(m)),
                   block_layout(std::vector<int>(b, m)));
  auto desc = describe(5, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                              ", b=" + std::to_string(b) + ")",
                       "A- and D-optimal");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  set_param(desc, "b", b);
  desc.notes.push_back("columns stretched by the alternating +2/-2 vector of odd length m");
  add_ij_claim(desc, rational(n) - rational(b, m), rational(0), k);
  return {std::move(d), std::move(desc)};
}

namespace detail {

inline construction_result build_foldover(int n, int k, int mode, std::optional<int> m1_opt) {
  imat base;
  if (mode == 6) {
    require(n % 8 == 0, "method 6 requires N = 0 (mod 8)");
    const int p = n / 2;
    require(k >= 1 && k <= p, "method 6 requires K <= N/2");
    base = first_cols(normalize(hadamard(p)), k);
  } else {
    require(n % 8 == 4, "method 7 requires N = 4 (mod 8)");
    const int p = n / 2 - 2;
    require(k >= 1 && k <= p, "method 7 requires K <= N/2 - 2");
    const int kp = (k + 1) / 2;
    imat half = hcat(ones(1, kp), neg_ones(1, k - kp));
    base = vcat(vcat(first_cols(normalize(hadamard(p)), k), ones(1, k)), half);
  }
  int m1 = 0;
  if (m1_opt) {
    m1 = *m1_opt;
    require(m1 >= 2 && m1 % 2 == 0 && n % (2 * m1 + 2) == 0,
            "block size m1 must be even with N divisible by 2(m1 + 1)");
  } else {
    for (int cand = 2; cand < n; cand += 2)
      if (n % (2 * cand + 2) == 0) {
        m1 = cand;
        break;
      }
    require(m1 != 0, "no even m1 with N divisible by 2(m1 + 1)");
  }
  const int b1 = n / (2 * m1 + 2);
  std::vector<int> sizes(b1, m1);
  sizes.insert(sizes.end(), b1, m1 + 2);
  blocked_design d(pair_expand(base), block_layout(sizes));
  auto desc = describe(mode, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) + ")",
                       "A- and D-optimal");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  set_param(desc, "m1", m1);
  desc.notes.push_back("b1 blocks of size m1 followed by b1 blocks of size m1 + 2");
  if (mode == 6) {
    add_ij_claim(desc, rational(n), rational(0), k);
  } else {
    desc.notes.push_back(
        "base rows: Hadamard columns, one +1 row, one row with ceil(K/2) +1s then -1s");
    add_ij_claim(desc, rational(n - 4), rational(4), k, true);
    const int kp = (k + 1) / 2;
    if (k % 2 == 0)
      add_eigen_claim(desc, {{rational(n - 4), k - 2}, {rational(n + 4 * kp - 4), 2}});
    else
      add_eigen_claim(desc, {{rational(n - 4), k - 2},
                             {rational(n + 4 * kp - 6), 1},
                             {rational(n + 4 * (k - kp) - 4), 1}});
  }
  return {std::move(d), std::move(desc)};
}

}  // namespace detail

inline construction_result construct_method6(int n, int k, std::optional<int> m1 = {}) {
  return detail::build_foldover(n, k, 6, m1);
}

inline construction_result construct_method7(int n, int k, std::optional<int> m1 = {}) {
  return detail::build_foldover(n, k, 7, m1);
}

inline construction_result construct_method8(int n, int k) {
  using namespace detail;
  require(n % 3 == 0, "method 8 requires N = 0 (mod 3)");
  const int m = n / 3;
  require(m % 8 == 1, "method 8 requires block size m = 1 (mod 8)");
  require(k >= 1 && k <= (n - 3) / 2 - 1, "method 8 requires K <= (N-3)/2 - 1");
  imat h = normalize(hadamard((n - 3) / 2));
  imat core = pair_expand(sub(h, 0, (n - 3) / 2, 1, k + 1));
  const int per = m - 1;
  imat f(0, k);
  for (int j = 0; j < 3; ++j)
    f = vcat(vcat(f, sub(core, j * per, (j + 1) * per, 0, k)), full_row(k, 2));
  blocked_design d(f, block_layout({m, m, m}));
  auto desc = describe(8, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) + ", b=3)",
                       "E-optimal");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  desc.notes.push_back("each block: m-1 rows from complementary pairs plus one all +2 row");
  add_ij_claim(desc, rational(n - 3), rational(3) - rational(3, m), k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method9(const std::vector<std::pair<int, int>>& groups,
                                             int k) {
  using namespace detail;
  require(!groups.empty(), "method 9 requires at least one (b_i, m_i) group");
  imat f(0, k);
  std::vector<int> sizes;
  rational alpha(0);
  for (auto [bi, mi] : groups) {
    require(bi >= 1 && mi >= 1, "method 9 requires positive b_i and m_i");
    require(k <= bi, "method 9 requires K <= every b_i");
    imat h = normalize(hadamard(bi));
    f = vcat(f, kron(first_cols(h, k), alt_vec(mi)));
    sizes.insert(sizes.end(), bi, mi);
    alpha += rational(bi) * rational(mi);
    if (mi % 2 == 1) alpha -= rational(bi, mi);
  }
  blocked_design d(f, block_layout(sizes));
  std::string glabel;
  for (size_t t = 0; t < groups.size(); ++t) {
    if (t) glabel += "+";
    glabel += std::to_string(groups[t].first) + "x" + std::to_string(groups[t].second);
  }
  auto desc = describe(9, "Xi(N=" + std::to_string(d.pairs()) + ", K=" + std::to_string(k) +
                              ", groups=" + glabel + ")",
                       "optimal for type I criteria (trace is maximal)");
  set_param(desc, "k", k);
  desc.params["groups"] = glabel;
  desc.notes.push_back("one Kronecker group per (b_i, m_i); groups stacked in the given order");
  add_ij_claim(desc, alpha, rational(0), k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method10(int b1, int m1, int i, int k) {
  using namespace detail;
  require(m1 >= 2 && m1 % 2 == 0, "method 10 requires even m1");
  require(i >= 1 && i <= 3, "method 10 requires i in {1, 2, 3}");
  require(b1 >= 2 * i + i * m1, "method 10 requires b1 >= i (m1 + 2)");
  require(k >= 1, "method 10 requires K >= 1");
  imat h = normalize(hadamard(b1));
  imat sel;
  std::vector<int> perm;
  if (i == 1) {
    require(k <= b1, "method 10 requires K <= b1");
    sel = first_cols(h, k);
  } else {
    std::vector<int> stack;
    // lexicographic combinations of i-1 rows from 1..b1-1, joined with row 0
    std::function<bool(int, int)> search = [&](int start, int depth) {
      if (depth == i - 1) {
        std::vector<int> rows{0};
        rows.insert(rows.end(), stack.begin(), stack.end());
        std::vector<int> cols;
        for (int j = 0; j < b1; ++j) {
          bool all_plus = true;
          for (int r : rows)
            if (h(r, j) != 1) {
              all_plus = false;
              break;
            }
          if (all_plus) cols.push_back(j);
        }
        if (static_cast<int>(cols.size()) >= k) {
          perm = rows;
          for (int r = 0; r < b1; ++r)
            if (std::find(rows.begin(), rows.end(), r) == rows.end()) perm.push_back(r);
          cols.resize(k);
          sel = select_columns(select_rows(h, perm), cols);
          return true;
        }
        return false;
      }
      for (int r = start; r < b1; ++r) {
        stack.push_back(r);
        if (search(r + 1, depth + 1)) return true;
        stack.pop_back();
      }
      return false;
    };
    require(search(1, 0),
            "method 10 found no i-row subset supporting K all-positive columns");
  }
  imat f1 = kron(sel, alt_vec(m1));
  std::vector<std::vector<std::vector<long long>>> blocks(b1);
  for (int j = 0; j < b1; ++j)
    for (int t = 0; t < m1; ++t) blocks[j].push_back(f1.row(j * m1 + t));
  std::vector<std::vector<long long>> movers;
  for (int j = 0; j < i; ++j)
    for (auto& r : blocks[j]) movers.push_back(r);
  std::vector<std::vector<std::vector<long long>>> kept(blocks.begin() + i, blocks.end());
  for (size_t t = 0; t < movers.size(); ++t) kept[t].push_back(movers[t]);
  int extras = 0;
  for (auto& blk : kept) {
    if (extras >= i) break;
    if (static_cast<int>(blk.size()) == m1) {
      blk.push_back(std::vector<long long>(k, 2));
      ++extras;
    }
  }
  require(extras == i, "method 10 could not place all augmenting rows");
  std::vector<int> sizes;
  int total = 0;
  for (auto& blk : kept) {
    sizes.push_back(static_cast<int>(blk.size()));
    total += sizes.back();
  }
  imat f(total, k);
  int r = 0;
  for (auto& blk : kept)
    for (auto& row : blk) {
      for (int j = 0; j < k; ++j) f(r, j) = row[j];
      ++r;
    }
  blocked_design d(f, block_layout(sizes));
  auto desc = describe(10, "Xi(N=" + std::to_string(total) + ", K=" + std::to_string(k) +
                               ", b1=" + std::to_string(b1) + ", m1=" + std::to_string(m1) +
                               ", i=" + std::to_string(i) + ")",
                       "optimal for type I criteria (trace is maximal)");
  set_param(desc, "b1", b1);
  set_param(desc, "m1", m1);
  set_param(desc, "i", i);
  set_param(desc, "k", k);
  desc.notes.push_back(
      "the first i blocks are dissolved one row per following block; i rows of all +2 are "
      "appended to the next blocks still of size m1");
  desc.notes.push_back("row-count normalization: total N = b1 m1 + i");
  add_ij_claim(desc, rational(b1) * rational(m1), rational(0), k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method11(int n, int k, const std::vector<int>& sizes) {
  using namespace detail;
  require(n % 8 == 2, "method 11 requires N = 2 (mod 8)");
  std::vector<int> sz = sizes.empty() ? std::vector<int>{n} : sizes;
  int total = 0;
  for (int m : sz) {
    require(m % 2 == 0, "method 11 requires even block sizes");
    total += m;
  }
  require(total == n, "block sizes must sum to N");
  require(k >= 1 && k <= n / 2 - 1, "method 11 requires K <= N/2 - 1");
  imat h = normalize(hadamard(n / 2 - 1));
  imat base = vcat(first_cols(h, k), ones(1, k));
  blocked_design d(pair_expand(base), block_layout(sz));
  auto desc = describe(11, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                               ", sizes=" + join_ints(sz) + ")",
                       "optimal for generalized criteria of type 1 (E member certified)");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  desc.params["sizes"] = join_ints(sz);
  desc.notes.push_back("base: Hadamard columns plus one appended +1 row, complementary pairs");
  add_ij_claim(desc, rational(n - 2), rational(2), k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method12(int n, int k, const std::vector<int>& sizes) {
  using namespace detail;
  require(n % 8 == 6, "method 12 requires N = 6 (mod 8)");
  std::vector<int> sz = sizes.empty() ? std::vector<int>{n} : sizes;
  int total = 0;
  for (int m : sz) {
    require(m % 2 == 0, "method 12 requires even block sizes");
    total += m;
  }
  require(total == n, "block sizes must sum to N");
  require(k >= 1 && k <= n / 2, "method 12 requires K <= N/2");
  imat h = normalize(hadamard(n / 2 + 1));
  imat base = sub(h, 1, n / 2 + 1, 1, k + 1);
  blocked_design d(pair_expand(base), block_layout(sz));
  auto desc = describe(12, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                               ", sizes=" + join_ints(sz) + ")",
                       "optimal for generalized criteria of type 2");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  desc.params["sizes"] = join_ints(sz);
  desc.notes.push_back("base: Hadamard matrix with first row and first column removed");
  add_ij_claim(desc, rational(n + 2), rational(-2), k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method13(int n, int k, const std::vector<int>& sizes) {
  using namespace detail;
  require(n % 4 == 2, "method 13 requires N = 2 (mod 4)");
  require(k >= 3 && k <= n / 2 - 1, "method 13 requires 3 <= K <= N/2 - 1");
  std::vector<int> sz = sizes.empty() ? std::vector<int>{n} : sizes;
  int total = std::accumulate(sz.begin(), sz.end(), 0);
  require(total == n, "block sizes must sum to N");
  imat h = normalize(hadamard(n / 2 - 1));
  imat f = vcat(vcat(pair_expand(first_cols(h, k)), full_row(k, 2)), full_row(k, -2));
  blocked_design d(f, block_layout(sz));
  auto desc = describe(13, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                               ", sizes=" + join_ints(sz) + ")",
                       "E-optimal");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  desc.params["sizes"] = join_ints(sz);
  desc.notes.push_back("complementary pairs plus one all +2 and one all -2 row");
  add_ij_claim(desc, rational(n - 2), rational(2), k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method14(int k, int m = 3) {
  using namespace detail;
  require(m == 3, "method 14 supports only block size m = 3");
  require(k >= 1 && k <= 4, "method 14 requires K <= 4");
  imat h = normalize(hadamard(4));
  imat core = pair_expand(sub(h, 1, 4, 0, k));
  imat f(0, k);
  for (int j = 0; j < 3; ++j) {
    imat blk = sub(core, 2 * j, 2 * j + 2, 0, k);
    blk = vcat(blk, full_row(k, j == 1 ? -2 : 2));
    f = vcat(f, blk);
  }
  blocked_design d(f, block_layout({3, 3, 3}));
  auto desc = describe(14, "Xi(N=9, K=" + std::to_string(k) + ", b=3)",
                       "phi_f-optimal (A and D); trace is maximal");
  set_param(desc, "k", k);
  set_param(desc, "m", m);
  desc.notes.push_back("each block: one complementary pair plus an augmenting row (+2, -2, +2)");
  add_ij_claim(desc, rational(8), rational(0), k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method15(int p, int q, int k) {
  using namespace detail;
  require(p >= 1, "method 15 requires p >= 1");
  require(q >= 1 && q <= p, "method 15 requires q <= p");
  require(k >= 1 && k <= 4, "method 15 requires K <= 4 per base copy");
  imat l = first_cols(normalize(hadamard(p)), q);
  auto base = construct_method14(k);
  imat f = kron(l, base.design.f);
  std::vector<int> sizes;
  for (int t = 0; t < p; ++t) sizes.insert(sizes.end(), {3, 3, 3});
  blocked_design d(f, block_layout(sizes));
  const int kk = q * k;
  auto desc = describe(15, "Xi(N=" + std::to_string(9 * p) + ", K=" + std::to_string(kk) +
                               ", b=" + std::to_string(3 * p) + ")",
                       "phi_f-optimal (A and D); trace is maximal");
  set_param(desc, "p", p);
  set_param(desc, "q", q);
  set_param(desc, "k", k);
  desc.notes.push_back("Kronecker product of q Hadamard columns with the 9-pair base design");
  add_ij_claim(desc, rational(8 * p), rational(0), kk);
  return {std::move(d), std::move(desc)};
}

namespace detail {

struct odd_even_split {
  std::vector<int> evens;
  std::vector<int> odds;
};

inline odd_even_split split_sizes(const std::vector<int>& sizes) {
  odd_even_split s;
  for (int m : sizes) (m % 2 == 0 ? s.evens : s.odds).push_back(m);
  return s;
}

}  // namespace detail

inline construction_result construct_method16(int n, int k, const std::vector<int>& sizes) {
  using namespace detail;
  const int i = n % 4;
  require(i >= 1 && i <= 3, "method 16 requires N not divisible by 4");
  auto split = split_sizes(sizes);
  require(static_cast<int>(split.odds.size()) == i,
          "method 16 requires exactly N mod 4 odd block sizes");
  require(std::accumulate(sizes.begin(), sizes.end(), 0) == n, "block sizes must sum to N");
  std::sort(split.odds.begin(), split.odds.end());
  const int p = (n - i) / 2;
  require(k >= 1 && k <= p, "method 16 requires K <= (N - N mod 4)/2");
  imat pairs = pair_expand(first_cols(normalize(hadamard(p)), k));
  imat f(0, k);
  std::vector<int> final_sizes;
  int r = 0;
  for (int m : split.evens) {
    f = vcat(f, sub(pairs, r, r + m, 0, k));
    final_sizes.push_back(m);
    r += m;
  }
  for (int m : split.odds) {
    imat blk = sub(pairs, r, r + m - 1, 0, k);
    r += m - 1;
    f = vcat(f, vcat(blk, full_row(k, 2)));
    final_sizes.push_back(m);
  }
  blocked_design d(f, block_layout(final_sizes));
  auto desc = describe(16, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                               ", sizes=" + join_ints(final_sizes) + ")",
                       "E-optimal");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  desc.params["sizes"] = join_ints(final_sizes);
  desc.notes.push_back(
      "even blocks first in listed order; odd blocks are placed last (ascending) and "
      "augmented with one all +2 row each");
  rational beta(i);
  for (int m : split.odds) beta -= rational(1, m);
  add_ij_claim(desc, rational(n - i), beta, k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method17(int n, int k, const std::vector<int>& sizes) {
  using namespace detail;
  require(n % 4 == 3, "method 17 requires N = 3 (mod 4)");
  auto split = split_sizes(sizes);
  require(split.odds.size() == 1, "method 17 requires exactly one odd block size");
  require(std::accumulate(sizes.begin(), sizes.end(), 0) == n, "block sizes must sum to N");
  const int p = (n - 3) / 2;
  require(k >= 1 && k <= p, "method 17 requires K <= (N-3)/2");
  imat base = vcat(first_cols(normalize(hadamard(p)), k), ones(1, k));
  imat pairs = pair_expand(base);
  imat f(0, k);
  std::vector<int> final_sizes;
  int r = 0;
  for (int m : split.evens) {
    f = vcat(f, sub(pairs, r, r + m, 0, k));
    final_sizes.push_back(m);
    r += m;
  }
  const int modd = split.odds[0];
  f = vcat(f, vcat(sub(pairs, r, r + modd - 1, 0, k), full_row(k, 2)));
  final_sizes.push_back(modd);
  blocked_design d(f, block_layout(final_sizes));
  auto desc = describe(17, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                               ", sizes=" + join_ints(final_sizes) + ")",
                       "E-optimal");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  desc.params["sizes"] = join_ints(final_sizes);
  desc.notes.push_back("odd block placed last and augmented with one all +2 row");
  add_ij_claim(desc, rational(n - 3), rational(3) - rational(1, modd), k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method18(int p, int m1, int i, int k) {
  using namespace detail;
  require(m1 >= 2 && m1 % 2 == 0, "method 18 requires even m1");
  require(i >= 1 && i <= 3, "method 18 requires i in {1, 2, 3}");
  require(p >= m1 + i + 1, "method 18 requires p >= m1 + i + 1");
  require(k >= 1 && k <= p, "method 18 requires K <= p");
  imat h = first_cols(normalize(hadamard(p)), k);
  imat f1 = kron(h, alt_vec(m1));
  std::vector<std::vector<std::vector<long long>>> blocks(p);
  for (int j = 0; j < p; ++j)
    for (int t = 0; t < m1; ++t) blocks[j].push_back(f1.row(j * m1 + t));
  std::vector<std::vector<std::vector<long long>>> kept(blocks.begin() + 1, blocks.end());
  for (int t = 0; t < m1; ++t) kept[t].push_back(blocks[0][t]);
  int extras = 0;
  for (auto& blk : kept) {
    if (extras >= i) break;
    if (static_cast<int>(blk.size()) == m1) {
      blk.push_back(std::vector<long long>(k, 2));
      ++extras;
    }
  }
  require(extras == i, "method 18 could not place all augmenting rows");
  std::vector<int> sizes;
  int total = 0;
  for (auto& blk : kept) {
    sizes.push_back(static_cast<int>(blk.size()));
    total += sizes.back();
  }
  imat f(total, k);
  int r = 0;
  for (auto& blk : kept)
    for (auto& row : blk) {
      for (int j = 0; j < k; ++j) f(r, j) = row[j];
      ++r;
    }
  blocked_design d(f, block_layout(sizes));
  auto desc = describe(18, "Xi(N=" + std::to_string(total) + ", K=" + std::to_string(k) +
                               ", p=" + std::to_string(p) + ", m1=" + std::to_string(m1) +
                               ", i=" + std::to_string(i) + ")",
                       "E-optimal");
  set_param(desc, "p", p);
  set_param(desc, "m1", m1);
  set_param(desc, "i", i);
  set_param(desc, "k", k);
  desc.notes.push_back(
      "the first block is dissolved one row per following block; i rows of all +2 are "
      "appended to blocks still of size m1");
  desc.notes.push_back("row-count normalization: total N = p m1 + i");
  rational beta = rational(i) - rational(m1 + i, m1 + 1);
  add_ij_claim(desc, rational(p) * rational(m1), beta, k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method19(int n, int k, int b) {
  using namespace detail;
  require(n % 8 == 6, "method 19 requires N = 6 (mod 8)");
  require(b % 2 == 1 && b >= 3, "method 19 requires odd b >= 3");
  require(n % b == 0, "method 19 requires b to divide N");
  const int m = n / b;
  require(m % 2 == 0, "method 19 requires even block size m");
  const int n2 = m * (b - 2);
  require(k >= 1 && k <= std::min(2 * m - 2, (n2 - 2) / 2),
          "method 19 requires K <= min(2m - 2, (N2 - 2)/2)");
  imat h1 = normalize(hadamard(2 * m));
  auto [plus, minus] = split_by_col(h1);
  std::vector<int> order = plus;
  order.insert(order.end(), minus.begin(), minus.end());
  std::vector<int> cols;
  for (int j = 2; j < 2 + k; ++j) cols.push_back(j);
  imat d1 = scaled(select_columns(select_rows(h1, order), cols), 2);
  imat h2 = normalize(hadamard((n2 - 2) / 2));
  imat d2 = pair_expand(vcat(first_cols(h2, k), ones(1, k)));
  blocked_design d(vcat(d1, d2), block_layout(std::vector<int>(b, m)));
  auto desc = describe(19, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                               ", b=" + std::to_string(b) + ")",
                       "E-optimal");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  set_param(desc, "b", b);
  desc.notes.push_back(
      "first two blocks from the order-2m matrix split by its second column; remaining "
      "blocks from complementary pairs over an appended +1 row base");
  add_ij_claim(desc, rational(n - 2), rational(2), k);
  return {std::move(d), std::move(desc)};
}

namespace detail {

// Rows of a Hadamard matrix split by its second column, the all-plus row
// moved last, columns 2..2+k-1, scaled to +-2.
inline imat crossover_rows(const imat& h, int k) {
  auto [plus, minus] = split_by_col(h);
  std::vector<int> order;
  for (int r : plus)
    if (r != 0) order.push_back(r);
  order.insert(order.end(), minus.begin(), minus.end());
  order.push_back(0);
  std::vector<int> cols;
  for (int j = 2; j < 2 + k; ++j) cols.push_back(j);
  return scaled(select_columns(select_rows(h, order), cols), 2);
}

}  // namespace detail

inline construction_result construct_method20(int n, int k, int b) {
  using namespace detail;
  require(n % 8 == 2, "method 20 requires N = 2 (mod 8)");
  require(b % 2 == 0 && b >= 2, "method 20 requires even b");
  require(n % b == 0, "method 20 requires b to divide N");
  const int m = n / b;
  require(m % 2 == 1 && m >= 5, "method 20 requires odd block size m >= 5");
  require(b <= 2 * m, "method 20 requires b <= 2m");
  const int n2 = b - 2 + 2 * m;
  require(k >= 1 && k <= std::min(2 * (m - 2), (n2 - 2) / 2),
          "method 20 requires K <= min(2(m - 2), (N2 - 2)/2)");
  imat hc = crossover_rows(normalize(hadamard(2 * (m - 1))), k);
  imat h3 = normalize(hadamard((n2 - 2) / 2));
  imat allp = pair_expand(vcat(first_cols(h3, k), ones(1, k)));
  imat gen = sub(allp, 0, allp.rows() - 2, 0, k);
  imat sp_plus = sub(allp, allp.rows() - 2, allp.rows() - 1, 0, k);
  imat sp_minus = sub(allp, allp.rows() - 1, allp.rows(), 0, k);
  const int copies = (b - 2) / 2;
  imat f(0, k);
  std::vector<int> sizes;
  int pi = 0;
  for (int c = 0; c < copies; ++c) {
    f = vcat(f, vcat(sub(hc, 0, m - 2, 0, k), sub(gen, pi, pi + 2, 0, k)));
    pi += 2;
    sizes.push_back(m);
    f = vcat(f, sub(hc, m - 2, hc.rows(), 0, k));
    sizes.push_back(m);
  }
  const int t = (m - 1) / 2;
  f = vcat(f, vcat(sub(gen, pi, pi + 2 * t, 0, k), sp_plus));
  pi += 2 * t;
  sizes.push_back(m);
  f = vcat(f, vcat(sub(gen, pi, pi + 2 * t, 0, k), sp_minus));
  pi += 2 * t;
  sizes.push_back(m);
  require(pi == gen.rows(), "method 20 internal pair accounting failed");
  blocked_design d(f, block_layout(sizes));
  auto desc = describe(20, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                               ", b=" + std::to_string(b) + ")",
                       "E-optimal");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  set_param(desc, "b", b);
  desc.notes.push_back(
      "copies use the order-2(m-1) matrix split by its second column with the all-plus row "
      "moved last; the final two blocks carry the +2 and -2 special rows");
  add_ij_claim(desc, rational(n - 2), rational(2) - rational(b, m), k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method21(int n, int k, int b) {
  using namespace detail;
  require(n % 8 == 6, "method 21 requires N = 6 (mod 8)");
  require(b % 2 == 0 && b >= 2, "method 21 requires even b");
  require(n % b == 0, "method 21 requires b to divide N");
  const int m = n / b;
  require(m % 2 == 1 && m >= 3, "method 21 requires odd block size m >= 3");
  int pick_m1 = 0, pick_p = -1;
  for (int cand = 2; cand < m; cand += 2) {
    const int n1 = b * cand, nn2 = b * (m - cand);
    if (n1 % 8 != 4 || nn2 % 8 != 2) continue;
    if (!order_available(2 * cand) || !order_available((nn2 - 2) / 2)) continue;
    const int prot = std::min(2 * (cand - 1), (nn2 - 2) / 2);
    if (prot > pick_p) {
      pick_p = prot;
      pick_m1 = cand;
    }
  }
  require(pick_m1 != 0, "method 21 found no feasible split of the block size");
  const int m1 = pick_m1, m2 = m - pick_m1;
  const int n2 = b * m2;
  require(k >= 1 && k <= pick_p, "method 21 requires K <= min(2(m1 - 1), (N2 - 2)/2)");
  imat hc = crossover_rows(normalize(hadamard(2 * m1)), k);
  imat h3 = normalize(hadamard((n2 - 2) / 2));
  imat allp = pair_expand(vcat(first_cols(h3, k), ones(1, k)));
  imat f(0, k);
  std::vector<int> sizes;
  int pi = 0;
  for (int c = 0; c < b / 2; ++c) {
    const int ns = (m2 + 1) / 2;
    f = vcat(f, vcat(sub(hc, 0, m1 - 1, 0, k), sub(allp, pi, pi + 2 * ns, 0, k)));
    pi += 2 * ns;
    sizes.push_back(m);
    const int nb = (m2 - 1) / 2;
    f = vcat(f, vcat(sub(hc, m1 - 1, hc.rows(), 0, k), sub(allp, pi, pi + 2 * nb, 0, k)));
    pi += 2 * nb;
    sizes.push_back(m);
  }
  require(pi == allp.rows(), "method 21 internal pair accounting failed");
  blocked_design d(f, block_layout(sizes));
  auto desc = describe(21, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                               ", b=" + std::to_string(b) + ")",
                       "E-optimal");
  set_param(desc, "n", n);
  set_param(desc, "k", k);
  set_param(desc, "b", b);
  set_param(desc, "m1", m1);
  desc.notes.push_back(
      "split m = m1 + m2 chosen to maximize min(2(m1 - 1), (N2 - 2)/2), smallest m1 on "
      "ties; feasibility uses the bound m1 + 1");
  add_ij_claim(desc, rational(n - 2), rational(2) - rational(b, m), k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method22(int b, int m, int k) {
  using namespace detail;
  require(b % 2 == 1 && m % 2 == 1, "method 22 requires odd b and odd m");
  require(b >= 3 && b <= m, "method 22 requires 3 <= b <= m");
  const int n = b * m;
  const int nq = (b - 3) / 2;
  std::vector<int> best_q;
  int best_p = -1, best_big = 0;
  std::vector<int> current(nq, 0);
  // lexicographic search over even q_i in [2, m]
  std::function<void(int)> search = [&](int depth) {
    if (depth == nq) {
      int sum = 0;
      for (int q : current) sum += q;
      const int big = (n - 1) - 2 * sum;
      if (big <= 0 || big % 8 != 0) return;
      for (int q : current)
        if (!order_available(2 * q)) return;
      if (!order_available(big / 2)) return;
      int prot = big / 2;
      for (int q : current) prot = std::min(prot, 2 * q - 2);
      if (prot > best_p || (prot == best_p && current < best_q)) {
        best_p = prot;
        best_q = current;
        best_big = big;
      }
      return;
    }
    for (int q = 2; q <= m; q += 2) {
      current[depth] = q;
      search(depth + 1);
    }
  };
  search(0);
  require(best_p >= 0, "method 22 found no feasible q tuple");
  require(k >= 1 && k <= best_p, "method 22 requires K <= min(2 q_i - 2, M/2)");
  imat h = normalize(hadamard(best_big / 2));
  imat gen = pair_expand(sub(h, 1, best_big / 2, 0, k));
  imat f(0, k);
  std::vector<int> sizes;
  int pi = 0;
  for (int q : best_q) {
    imat tc = crossover_rows(normalize(hadamard(2 * q)), k);
    const int ns = (m - q + 1) / 2;
    f = vcat(f, vcat(sub(tc, 0, q - 1, 0, k), sub(gen, pi, pi + 2 * ns, 0, k)));
    pi += 2 * ns;
    sizes.push_back(m);
    const int nb = (m - q - 1) / 2;
    f = vcat(f, vcat(sub(tc, q - 1, tc.rows(), 0, k), sub(gen, pi, pi + 2 * nb, 0, k)));
    pi += 2 * nb;
    sizes.push_back(m);
  }
  const int t = (m - 1) / 2;
  for (int j = 0; j < 3; ++j) {
    f = vcat(f, vcat(sub(gen, pi, pi + 2 * t, 0, k), full_row(k, j == 1 ? -2 : 2)));
    pi += 2 * t;
    sizes.push_back(m);
  }
  require(pi == gen.rows(), "method 22 internal pair accounting failed");
  blocked_design d(f, block_layout(sizes));
  std::string qlabel = best_q.empty() ? "-" : join_ints(best_q);
  auto desc = describe(22, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                               ", b=" + std::to_string(b) + ", m=" + std::to_string(m) + ")",
                       "E-optimal");
  set_param(desc, "b", b);
  set_param(desc, "m", m);
  set_param(desc, "k", k);
  desc.params["q"] = qlabel;
  desc.notes.push_back(
      "q tuple maximizes min(2 q_i - 2, M/2) with M = N - 1 - 2 sum(q), lexicographically "
      "smallest on ties; per-block pair counts are (m - q_i + 1)/2 and (m - q_i - 1)/2");
  desc.notes.push_back("final three blocks carry +2, -2, +2 augmenting rows");
  add_ij_claim(desc, rational(n - 1), rational(1) - rational(b, m), k);
  return {std::move(d), std::move(desc)};
}

inline construction_result construct_method23(int n, int k1, int k2,
                                              const std::vector<int>& sizes) {
  using namespace detail;
  require(n % 4 == 2, "method 23 requires N = 2 (mod 4)");
  require(k1 >= 1 && k2 >= 1, "method 23 requires K1 >= 1 and K2 >= 1");
  const int k = k1 + k2;
  require(k == n / 2 - 1, "method 23 requires K1 + K2 = N/2 - 1");
  std::vector<int> sz = sizes.empty() ? std::vector<int>{n} : sizes;
  require(std::accumulate(sz.begin(), sz.end(), 0) == n, "block sizes must sum to N");
  imat h = normalize(hadamard(n / 2 - 1));
  imat tail = hcat(ones(1, k1), neg_ones(1, k2));
  imat f = vcat(vcat(pair_expand(h), full_row(k, 2)), scaled(tail, 2));
  blocked_design d(f, block_layout(sz));
  auto desc = describe(23, "Xi(N=" + std::to_string(n) + ", K1=" + std::to_string(k1) +
                               ", K2=" + std::to_string(k2) + ")",
                       "E-optimal");
  set_param(desc, "n", n);
  set_param(desc, "k1", k1);
  set_param(desc, "k2", k2);
  desc.notes.push_back("all N/2 - 1 columns used; final row has K1 entries +2 and K2 entries -2");
  add_ij_claim(desc, rational(n - 2), rational(2), k);
  return {std::move(d), std::move(desc)};
}

namespace detail {

// Shared builder for methods 24..27.  Sizes must be listed with even blocks
// first, then sizes = 3 (mod 4), then sizes = 1 (mod 4).  pair_lead selects
// the twin-block opening (24/26); otherwise a single leading block is built
// from the first even size (25/27).
inline construction_result build_mixed_blocks(const std::vector<int>& sizes, int k,
                                              bool pair_lead, int method) {
  require(!sizes.empty(), "at least one block size is required");
  std::vector<int> evens, ys, zs;
  int phase = 0;
  for (int m : sizes) {
    int cls = (m % 2 == 0) ? 0 : (m % 4 == 3 ? 1 : 2);
    require(cls >= phase,
            "block sizes must be listed even first, then 3 (mod 4), then 1 (mod 4)");
    phase = cls;
    (cls == 0 ? evens : (cls == 1 ? ys : zs)).push_back(m);
  }
  std::vector<imat> parts;
  std::vector<int> layout;
  std::vector<int> rest;
  int ell_lead = 0;
  if (pair_lead) {
    if (!evens.empty()) {
      require(evens.size() >= 2 && evens[0] == evens[1],
              "the leading even blocks must be a twin pair of equal size");
      const int t1 = evens[0] / 2;
      require(t1 >= 1, "twin blocks must have size >= 2");
      imat h = normalize(hadamard(4 * t1));
      require(k <= 4 * t1 - 2, "K too large for the twin blocks");
      auto [plus, minus] = split_by_col(h);
      std::vector<int> cols;
      for (int j = 2; j < 2 + k; ++j) cols.push_back(j);
      imat subm = scaled(select_columns(h, cols), 2);
      parts.push_back(select_rows(subm, plus));
      layout.push_back(2 * t1);
      parts.push_back(select_rows(subm, minus));
      layout.push_back(2 * t1);
      rest.assign(evens.begin() + 2, evens.end());
    }
  } else {
    if (!evens.empty()) {
      const int m1 = evens[0];
      int ell1 = -1, t1 = 0;
      for (int cand : {m1 % 4, m1 % 4 + 4}) {
        if (cand > 6 || m1 - cand < 0) continue;
        const int tt = (m1 - cand) / 4;
        if (tt == 0 && cand != m1) continue;
        ell1 = cand;
        t1 = tt;
        break;
      }
      require(ell1 >= 0, "leading block size cannot be split as 4 t1 + ell1");
      imat blk(0, k);
      if (t1 > 0) {
        imat h = normalize(hadamard(4 * t1));
        require(k <= 4 * t1 - 1, "K too large for the leading block");
        blk = vcat(ones(1, k), sub(h, 1, 4 * t1, 1, k + 1));
      }
      blk = vcat(blk, vcat(ones(ell1 / 2, k), neg_ones(ell1 / 2, k)));
      parts.push_back(scaled(blk, 2));
      layout.push_back(m1);
      ell_lead = ell1;
      rest.assign(evens.begin() + 1, evens.end());
    }
  }
  const int rest_sum = std::accumulate(rest.begin(), rest.end(), 0);
  const int ell = rest_sum % 8;
  const int t = rest_sum / 8;
  if (rest_sum > 0) {
    imat base(0, k);
    if (t > 0) {
      require(k <= 4 * t, "K too large for the paired base rows");
      base = first_cols(normalize(hadamard(4 * t)), k);
    }
    if (ell > 0) base = vcat(base, ones(ell / 2, k));
    imat pairs = pair_expand(base);
    int r = 0;
    for (int m : rest) {
      parts.push_back(sub(pairs, r, r + m, 0, k));
      layout.push_back(m);
      r += m;
    }
    require(r == pairs.rows(), "paired base rows not fully consumed");
  }
  for (int m : ys) {
    imat h = normalize(hadamard(m + 1));
    require(k <= m, "K too large for a 3 (mod 4) block");
    parts.push_back(scaled(sub(h, 1, m + 1, 1, k + 1), 2));
    layout.push_back(m);
  }
  for (int m : zs) {
    if (m == 1) {
      parts.push_back(full_row(k, 2));
    } else {
      imat h = normalize(hadamard(m - 1));
      require(k <= m - 2, "K too large for a 1 (mod 4) block");
      parts.push_back(
          scaled(vcat(vcat(ones(1, k), sub(h, 1, m - 1, 1, k + 1)), ones(1, k)), 2));
    }
    layout.push_back(m);
  }
  const int y = static_cast<int>(ys.size()), z = static_cast<int>(zs.size());
  const int ell_total = ell_lead + ell;
  const bool d_variant = (method == 24 || method == 25);
  const int want_mod = d_variant ? 2 : 1;
  const int want_gap = d_variant ? 2 : 1;
  require((ell_total + 3 * y + z) % 4 == want_mod,
          "method " + std::to_string(method) + " requires ell + 3y + z = " +
              std::to_string(want_mod) + " (mod 4)");
  require(ell_total + z == y + want_gap,
          "method " + std::to_string(method) + " requires ell + z = y + " +
              std::to_string(want_gap));
  imat f(0, k);
  for (const auto& part : parts) f = vcat(f, part);
  blocked_design d(f, block_layout(layout));
  const int n = d.pairs();
  auto desc = describe(method, "Xi(N=" + std::to_string(n) + ", K=" + std::to_string(k) +
                                   ", sizes=" + join_ints(layout) + ")",
                       d_variant ? "D-optimal" : "E-optimal");
  set_param(desc, "k", k);
  desc.params["sizes"] = join_ints(layout);
  desc.notes.push_back(
      "sizes listed even first, then 3 (mod 4), then 1 (mod 4); odd blocks are single "
      "Hadamard-derived blocks");
  if (d_variant)
    add_ij_range_claim(desc, rational(n - 2), rational(0), rational(1));
  else
    add_ij_range_claim(desc, rational(n - 1), rational(0), std::nullopt);
  return {std::move(d), std::move(desc)};
}

}  // namespace detail

inline construction_result construct_method24(const std::vector<int>& sizes, int k) {
  return detail::build_mixed_blocks(sizes, k, true, 24);
}
inline construction_result construct_method25(const std::vector<int>& sizes, int k) {
  return detail::build_mixed_blocks(sizes, k, false, 25);
}
inline construction_result construct_method26(const std::vector<int>& sizes, int k) {
  return detail::build_mixed_blocks(sizes, k, true, 26);
}
inline construction_result construct_method27(const std::vector<int>& sizes, int k) {
  return detail::build_mixed_blocks(sizes, k, false, 27);
}

// Dispatcher from a generic parameter bundle.
inline construction_result construct(const method_params& mp) {
  using detail::need;
  switch (mp.method) {
    case 1: return construct_method1(need(mp.n, "--n", 1), need(mp.k, "--k", 1), need(mp.b, "--b", 1));
    case 2: return construct_method2(need(mp.n, "--n", 2), need(mp.k, "--k", 2), need(mp.b, "--b", 2));
    case 3: return construct_method3(need(mp.n, "--n", 3), need(mp.k, "--k", 3), need(mp.b, "--b", 3));
    case 4:
      return construct_method4(need(mp.n, "--n", 4), need(mp.k, "--k", 4),
                               need(mp.k1, "--k1", 4), need(mp.b, "--b", 4));
    case 5: return construct_method5(need(mp.n, "--n", 5), need(mp.k, "--k", 5), need(mp.b, "--b", 5));
    case 6: return construct_method6(need(mp.n, "--n", 6), need(mp.k, "--k", 6), mp.m1);
    case 7: return construct_method7(need(mp.n, "--n", 7), need(mp.k, "--k", 7), mp.m1);
    case 8: return construct_method8(need(mp.n, "--n", 8), need(mp.k, "--k", 8));
    case 9: {
      if (mp.groups.empty())
        throw validation_error("method 9 requires --groups (e.g. 4:2,4:3)");
      return construct_method9(mp.groups, need(mp.k, "--k", 9));
    }
    case 10:
      return construct_method10(need(mp.b, "--b1", 10), need(mp.m1, "--m1", 10),
                                need(mp.i, "--i", 10), need(mp.k, "--k", 10));
    case 11: return construct_method11(need(mp.n, "--n", 11), need(mp.k, "--k", 11), mp.sizes);
    case 12: return construct_method12(need(mp.n, "--n", 12), need(mp.k, "--k", 12), mp.sizes);
    case 13: return construct_method13(need(mp.n, "--n", 13), need(mp.k, "--k", 13), mp.sizes);
    case 14: return construct_method14(need(mp.k, "--k", 14), mp.m.value_or(3));
    case 15:
      return construct_method15(need(mp.p, "--p", 15), need(mp.q, "--q", 15),
                                need(mp.k, "--k", 15));
    case 16: {
      if (mp.sizes.empty()) throw validation_error("method 16 requires --sizes");
      return construct_method16(need(mp.n, "--n", 16), need(mp.k, "--k", 16), mp.sizes);
    }
    case 17: {
      if (mp.sizes.empty()) throw validation_error("method 17 requires --sizes");
      return construct_method17(need(mp.n, "--n", 17), need(mp.k, "--k", 17), mp.sizes);
    }
    case 18:
      return construct_method18(need(mp.p, "--p", 18), need(mp.m1, "--m1", 18),
                                need(mp.i, "--i", 18), need(mp.k, "--k", 18));
    case 19: return construct_method19(need(mp.n, "--n", 19), need(mp.k, "--k", 19), need(mp.b, "--b", 19));
    case 20: return construct_method20(need(mp.n, "--n", 20), need(mp.k, "--k", 20), need(mp.b, "--b", 20));
    case 21: return construct_method21(need(mp.n, "--n", 21), need(mp.k, "--k", 21), need(mp.b, "--b", 21));
    case 22:
      return construct_method22(need(mp.b, "--b", 22), need(mp.m, "--m", 22),
                                need(mp.k, "--k", 22));
    case 23:
      return construct_method23(need(mp.n, "--n", 23), need(mp.k1, "--k1", 23),
                                need(mp.k2, "--k2", 23), mp.sizes);
    case 24: {
      if (mp.sizes.empty()) throw validation_error("method 24 requires --sizes");
      return construct_method24(mp.sizes, detail::need(mp.k, "--k", 24));
    }
    case 25: {
      if (mp.sizes.empty()) throw validation_error("method 25 requires --sizes");
      return construct_method25(mp.sizes, detail::need(mp.k, "--k", 25));
    }
    case 26: {
      if (mp.sizes.empty()) throw validation_error("method 26 requires --sizes");
      return construct_method26(mp.sizes, detail::need(mp.k, "--k", 26));
    }
    case 27: {
      if (mp.sizes.empty()) throw validation_error("method 27 requires --sizes");
      return construct_method27(mp.sizes, detail::need(mp.k, "--k", 27));
    }
    default:
      throw validation_error("unknown method " + std::to_string(mp.method) +
                             " (valid: 1..27)");
  }
}

struct method_info {
  int method;
  std::string parameters;
  std::string description;
  std::string constraints;
  std::string hadamard_orders;
  std::string optimality;
};

inline std::vector<method_info> catalog() {
  return {
      {1, "--n --k --b", "complementary pairs over an augmented Hadamard base, even blocks",
       "N = 2 (mod 4), b | N, m = N/b even, K <= N/2 - 1", "N/2 - 1", "phi_f (D and A)"},
      {2, "--n --k --b", "two-part pairing with a fixed final block of size N/2 - 1",
       "N = 6 (mod 8), (b-1) | (N/2 + 1) with even quotient, K <= (N/2 + 1)/2",
       "(N/2 + 1)/2 and N/2 - 3 (a fixed 12-row array covers N/2 - 1 = 14)",
       "phi_f (D and A)"},
      {3, "--n --k --b", "method 1 rows regrouped into larger even blocks",
       "N = 2 (mod 8), m = N/b even > 2", "N/2 - 1", "D"},
      {4, "--n --k --k1 --b", "pairs plus an all +2 row and a split +2/-2 row",
       "N = 2 (mod 8), m = N/b even > 2, 1 <= K1 <= K, 2 <= K <= (N-2)/2", "(N-2)/2", "D"},
      {5, "--n --k --b", "Hadamard columns stretched by alternating +2/-2, odd blocks",
       "N = 0 (mod 4), m = N/b odd, K <= b", "b", "A and D"},
      {6, "--n --k [--m1]", "full foldover of N/2 Hadamard columns",
       "N = 0 (mod 8), K <= N/2, N divisible by 2(m1 + 1)", "N/2", "A and D"},
      {7, "--n --k [--m1]", "foldover of an augmented base",
       "N = 4 (mod 8), K <= N/2 - 2, N divisible by 2(m1 + 1)", "N/2 - 2", "A and D"},
      {8, "--n --k", "three blocks of m = 1 (mod 8) rows each ending in all +2",
       "N = 0 (mod 3), m = N/3 = 1 (mod 8), K <= (N-3)/2 - 1", "(N-3)/2", "E"},
      {9, "--groups --k", "stacked Kronecker groups (b_i Hadamard columns x alt vector)",
       "K <= every b_i", "each b_i", "type I (maximal trace)"},
      {10, "--b1 --m1 --i --k", "Kronecker design with i dissolved blocks and +2 rows",
       "m1 even, i in {1,2,3}, b1 >= i (m1 + 2)", "b1", "type I (maximal trace)"},
      {11, "--n --k [--sizes]", "pairs over a base with appended +1 row, even blocks",
       "N = 2 (mod 8), even sizes summing to N, K <= N/2 - 1", "N/2 - 1",
       "generalized type 1 (E)"},
      {12, "--n --k [--sizes]", "pairs over a trimmed Hadamard matrix, even blocks",
       "N = 6 (mod 8), even sizes summing to N, K <= N/2", "N/2 + 1", "generalized type 2"},
      {13, "--n --k [--sizes]", "pairs plus one +2 and one -2 row",
       "N = 2 (mod 4), 3 <= K <= N/2 - 1, sizes summing to N", "N/2 - 1", "E"},
      {14, "--k [--m]", "nine pairs in three blocks of three", "m = 3, K <= 4", "4",
       "phi_f; maximal trace"},
      {15, "--p --q --k", "Kronecker extension of the nine-pair design",
       "q <= p, K <= 4 per copy", "p and 4", "phi_f; maximal trace"},
      {16, "--n --k --sizes", "paired blocks, odd blocks augmented with +2 rows",
       "N mod 4 in {1,2,3} odd sizes, sizes summing to N, K <= (N - N mod 4)/2",
       "(N - N mod 4)/2", "E"},
      {17, "--n --k --sizes", "paired blocks over an augmented base, one odd block",
       "N = 3 (mod 4), exactly one odd size, K <= (N-3)/2", "(N-3)/2", "E"},
      {18, "--p --m1 --i --k", "Kronecker design with one dissolved block",
       "m1 even, i in {1,2,3}, p >= m1 + i + 1, K <= p", "p", "E"},
      {19, "--n --k --b", "two crossover blocks plus paired blocks",
       "N = 6 (mod 8), b odd >= 3, m = N/b even, K <= min(2m - 2, (m(b-2) - 2)/2)",
       "2m and (m(b-2) - 2)/2", "E"},
      {20, "--n --k --b", "crossover copies plus special +2/-2 blocks, odd block size",
       "N = 2 (mod 8), b even <= 2m, m = N/b odd >= 5, K <= min(2(m-2), (b + 2m - 4)/2)",
       "2(m-1) and (b + 2m - 4)/2", "E"},
      {21, "--n --k --b", "crossover copies with a searched size split",
       "N = 6 (mod 8), b even, m = N/b odd, feasible split m = m1 + m2",
       "2 m1 and (b m2 - 2)/2 for the chosen split", "E"},
      {22, "--b --m --k", "crossover copies from a searched q tuple plus three special blocks",
       "b, m odd, 3 <= b <= m, feasible q tuple with N - 1 - 2 sum(q) = 0 (mod 8)",
       "2 q_i and (N - 1 - 2 sum(q))/2", "E"},
      {23, "--n --k1 --k2 [--sizes]", "saturated pairing plus +2 row and split row",
       "N = 2 (mod 4), K1, K2 >= 1, K1 + K2 = N/2 - 1", "N/2 - 1", "E"},
      {24, "--sizes --k", "twin leading blocks, mixed odd blocks",
       "sizes listed even, then 3 (mod 4), then 1 (mod 4); twin even lead",
       "2 m_lead, 8t, m+1 and m-1 for odd sizes m", "D"},
      {25, "--sizes --k", "single leading block, mixed odd blocks",
       "sizes listed even, then 3 (mod 4), then 1 (mod 4); split lead 4 t1 + ell1",
       "4 t1, 8t, m+1 and m-1 for odd sizes m", "D"},
      {26, "--sizes --k", "twin leading blocks, mixed odd blocks",
       "sizes listed even, then 3 (mod 4), then 1 (mod 4); twin even lead",
       "2 m_lead, 8t, m+1 and m-1 for odd sizes m", "E"},
      {27, "--sizes --k", "single leading block, mixed odd blocks",
       "sizes listed even, then 3 (mod 4), then 1 (mod 4); split lead 4 t1 + ell1",
       "4 t1, 8t, m+1 and m-1 for odd sizes m", "E"},
  };
}

}  // namespace pcbd
