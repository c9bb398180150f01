#include <catch2/catch_amalgamated.hpp>

#include <string>

#include <pcbd/constructions.hpp>
#include <pcbd/optimality.hpp>

using pcbd::design_criterion;
using pcbd::oracle_options;
using pcbd::rational;

TEST_CASE("certification of an exact closed form") {
  auto rep = pcbd::certify(pcbd::construct_method1(18, 6, 9));
  CHECK(rep.method == 1);
  CHECK(rep.orthogonally_blocked);
  REQUIRE(rep.measured_alpha.has_value());
  CHECK(*rep.measured_alpha == rational(16));
  CHECK(*rep.measured_beta == rational(2));
  REQUIRE_FALSE(rep.checks.empty());
  for (const auto& c : rep.checks) CHECK(c.status == "EXACT_MATCH");
  CHECK(rep.all_exact);
  CHECK(rep.certified);
}

TEST_CASE("certification keeps archived discrepancies honest") {
  auto rep = pcbd::certify(pcbd::construct_method4(18, 8, 2, 3));
  bool archived = false, exact = false;
  for (const auto& c : rep.checks) {
    if (c.status == "ARCHIVED") archived = true;
    if (c.status == "EXACT_MATCH") exact = true;
    CHECK(c.status != "MISMATCH");
  }
  CHECK(archived);
  CHECK(exact);  // the eigenvalue statement holds even though the I+J form does not
  CHECK(rep.certified);
  CHECK_FALSE(rep.all_exact);
}

TEST_CASE("certification refutes a wrong closed form") {
  auto rep = pcbd::certify(pcbd::construct_method23(10, 3, 1, {}));
  bool mismatch = false;
  for (const auto& c : rep.checks) mismatch |= c.status == "MISMATCH";
  CHECK(mismatch);
  CHECK_FALSE(rep.certified);
}

TEST_CASE("certification of a range form") {
  auto rep = pcbd::certify(pcbd::construct_method24({4, 4, 2, 3, 1}, 3));
  REQUIRE_FALSE(rep.checks.empty());
  for (const auto& c : rep.checks) CHECK(c.status == "EXACT_MATCH");
  CHECK(rep.certified);
}

TEST_CASE("canonical columns fix the leading sign") {
  auto pure = pcbd::canonical_columns(4, false);
  CHECK(pure.size() == 8);  // 2^3
  for (const auto& col : pure) CHECK(col[0] == 2);

  auto mixed = pcbd::canonical_columns(4, true);
  CHECK(mixed.size() == 41);  // (3^4 + 1)/2
  for (const auto& col : mixed) {
    long long first_nonzero = 0;
    for (long long v : col)
      if (v != 0) {
        first_nonzero = v;
        break;
      }
    CHECK(first_nonzero >= 0);
  }
}

TEST_CASE("exhaustive search over the six pair class") {
  for (auto crit : {design_criterion::determinant, design_criterion::smallest_eigenvalue}) {
    oracle_options opt;
    opt.criterion = crit;
    auto r = pcbd::brute_force_best(6, 2, {2, 2, 2}, opt);
    CHECK(r.candidates == 528);
    CHECK(r.evaluated == 528);
    if (crit == design_criterion::determinant) {
      CHECK(r.best.exact == rational(32));
      CHECK(r.optima == 6);
    } else {
      CHECK(r.best.exact == rational(4));
      CHECK(r.optima == 42);
    }
    auto cmp = pcbd::compare_to_oracle(pcbd::construct_method1(6, 2, 3).design, opt);
    CHECK(cmp.verdict == "OPTIMAL");
    REQUIRE(cmp.exact_gap.has_value());
    CHECK(cmp.exact_gap->is_zero());
  }
}

TEST_CASE("exhaustive search over the eight pair class") {
  for (auto crit : {design_criterion::determinant, design_criterion::smallest_eigenvalue}) {
    oracle_options opt;
    opt.criterion = crit;
    auto r = pcbd::brute_force_best(8, 2, {4, 4}, opt);
    CHECK(r.candidates == 8256);
    CHECK(r.best.exact == (crit == design_criterion::determinant ? rational(64) : rational(8)));
    CHECK(r.optima == 81);
    auto cmp = pcbd::compare_to_oracle(pcbd::construct_method9({{2, 4}}, 2).design, opt);
    CHECK(cmp.verdict == "OPTIMAL");
  }
}

TEST_CASE("average variance search skips singular candidates") {
  oracle_options opt;
  opt.criterion = design_criterion::average_variance;
  auto r = pcbd::brute_force_best(6, 2, {2, 2, 2}, opt);
  CHECK(r.best.exact == rational(3, 8));
  CHECK(r.evaluated == 354);
  CHECK(r.evaluated < r.candidates);
}

TEST_CASE("suboptimal designs are named as such") {
  // all-equal columns: determinant 0, strictly worse than the optimum
  pcbd::imat f(6, 2, 2);
  pcbd::blocked_design d(f, pcbd::block_layout({2, 2, 2}));
  auto cmp = pcbd::compare_to_oracle(d, {});
  CHECK(cmp.verdict == "SUBOPTIMAL");
  REQUIRE(cmp.exact_gap.has_value());
  CHECK(*cmp.exact_gap == rational(32));
}

TEST_CASE("search budget is refused up front") {
  // fewer than the 128 canonical columns
  oracle_options opt;
  opt.budget = 100;
  try {
    pcbd::brute_force_best(8, 2, {4, 4}, opt);
    FAIL("expected a budget refusal");
  } catch (const pcbd::budget_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("128 candidates") != std::string::npos);
    CHECK(msg.find("budget of 100") != std::string::npos);
  }
  // columns fit, the column multisets do not
  opt.budget = 200;
  try {
    pcbd::brute_force_best(8, 2, {4, 4}, opt);
    FAIL("expected a budget refusal");
  } catch (const pcbd::budget_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("8256 candidates") != std::string::npos);
    CHECK(msg.find("budget of 200") != std::string::npos);
  }
}

TEST_CASE("include zero widens the candidate pool") {
  oracle_options z;
  z.include_zero = true;
  auto wide = pcbd::brute_force_best(4, 2, {2, 2}, z);
  CHECK(wide.candidates == 861);
  CHECK(wide.best.exact == rational(16));

  oracle_options nz;
  auto pure = pcbd::brute_force_best(4, 2, {2, 2}, nz);
  CHECK(pure.candidates == 36);
  CHECK(pure.best.exact == rational(16));
}

TEST_CASE("oracle auto widens for designs with zero entries") {
  pcbd::imat f(4, 2, 2);
  f(0, 1) = 0;
  f(1, 1) = 0;
  pcbd::blocked_design d(f, pcbd::block_layout({2, 2}));
  auto cmp = pcbd::compare_to_oracle(d, {});
  CHECK(cmp.oracle.candidates == 861);
}
