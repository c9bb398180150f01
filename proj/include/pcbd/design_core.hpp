#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace pcbd {

// One attribute of one comparison: the two levels (1 or 2) shown on the left
// and right profile.
struct level_pair {
  int first;
  int second;
};

// Effects coding of a single level: 1 -> +1, 2 -> -1.  The coded comparison
// is the difference, so (1,2) -> +2, (2,1) -> -2, equal levels -> 0.
inline long long effects_code(const level_pair& p) {
  auto code = [](int level) {
    if (level == 1) return 1;
    if (level == 2) return -1;
    throw error("attribute level must be 1 or 2, got " + std::to_string(level));
  };
  return code(p.first) - code(p.second);
}

inline level_pair decode_effects(long long coded) {
  if (coded == 2) return {1, 2};
  if (coded == -2) return {2, 1};
  if (coded == 0)
    throw ambiguity_error("coded difference 0 does not identify the level pair");
  throw error("coded difference must be one of -2, 0, 2");
}

// Sizes of the consecutive blocks of a design.
class block_layout {
 public:
  block_layout() = default;
  explicit block_layout(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    for (int m : sizes_)
      if (m <= 0) throw layout_error("block sizes must be positive");
  }

  const std::vector<int>& sizes() const { return sizes_; }
  int count() const { return static_cast<int>(sizes_.size()); }
  int total() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

  std::vector<int> starts() const {
    std::vector<int> s;
    int r = 0;
    for (int m : sizes_) {
      s.push_back(r);
      r += m;
    }
    return s;
  }

  // Block indicator matrix Z with one column per block.
  imat indicator() const {
    imat z(total(), count(), 0);
    int r = 0;
    for (int j = 0; j < count(); ++j)
      for (int t = 0; t < sizes_[j]; ++t) z(r++, j) = 1;
    return z;
  }

  friend bool operator==(const block_layout& a, const block_layout& b) {
    return a.sizes_ == b.sizes_;
  }

 private:
  std::vector<int> sizes_;
};

// A paired comparison design: coded difference matrix plus block structure.
// Entries are +-2 for strict comparisons; 0 (tied levels) is representable
// but most constructions never produce it.
struct blocked_design {
  imat f;
  block_layout layout;

  blocked_design() = default;
  blocked_design(imat f_, block_layout layout_) : f(std::move(f_)), layout(std::move(layout_)) {
    if (layout.total() != f.rows())
      throw layout_error("block sizes sum to " + std::to_string(layout.total()) +
                         " but the design has " + std::to_string(f.rows()) + " rows");
    for (int i = 0; i < f.rows(); ++i)
      for (int j = 0; j < f.cols(); ++j)
        if (f(i, j) != 2 && f(i, j) != -2 && f(i, j) != 0)
          throw error("design entries must be -2, 0 or 2");
  }

  int pairs() const { return f.rows(); }
  int attributes() const { return f.cols(); }

  bool is_pure() const {
    for (int i = 0; i < f.rows(); ++i)
      for (int j = 0; j < f.cols(); ++j)
        if (f(i, j) == 0) return false;
    return true;
  }
};

// Each +-1 base row r becomes the complementary pair of rows (2r, -2r).
inline imat pair_expand(const imat& base) {
  imat f(2 * base.rows(), base.cols());
  for (int i = 0; i < base.rows(); ++i)
    for (int j = 0; j < base.cols(); ++j) {
      f(2 * i, j) = 2 * base(i, j);
      f(2 * i + 1, j) = -2 * base(i, j);
    }
  return f;
}

// Alternating column +2, -2, +2, ... of length m.
inline imat alt_vec(int m) {
  imat v(m, 1);
  for (int t = 0; t < m; ++t) v(t, 0) = (t % 2 == 0) ? 2 : -2;
  return v;
}

// Regroups into coarser blocks.  Every new block must be a union of
// consecutive old blocks.
inline blocked_design reblock(const blocked_design& d, const std::vector<int>& new_sizes) {
  const auto& old_sizes = d.layout.sizes();
  size_t oi = 0;
  for (size_t nj = 0; nj < new_sizes.size(); ++nj) {
    int need = new_sizes[nj];
    while (need > 0 && oi < old_sizes.size()) need -= old_sizes[oi++];
    if (need != 0)
      throw layout_error("new block " + std::to_string(nj) +
                         " is not a union of consecutive old blocks");
  }
  if (oi != old_sizes.size()) throw layout_error("regrouping does not cover all old blocks");
  return blocked_design(d.f, block_layout(new_sizes));
}

// A closed form attached to a construction: an alpha I + beta J information
// matrix, an explicit matrix, or an eigenvalue list (with multiplicities).
// Instead of a fixed beta, a claim may bound beta in an open interval.
// archived marks a recorded discrepancy: the stated form is kept for the
// record but the computed matrix is authoritative.
struct closed_form_claim {
  std::string label;
  bool has_ij = false;
  rational alpha;
  rational beta;
  std::optional<rational> beta_lower;
  std::optional<rational> beta_upper;
  std::vector<std::pair<rational, int>> eigenvalues;
  std::optional<qmat> explicit_matrix;
  bool archived = false;
};

// What a construction promises about its output.
struct design_descriptor {
  int method = 0;
  std::string class_label;
  std::map<std::string, std::string> params;
  std::string optimality;
  std::vector<std::string> notes;
  std::vector<closed_form_claim> claims;
};

struct construction_result {
  blocked_design design;
  design_descriptor descriptor;
};

}  // namespace pcbd
