#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <string>
#include <vector>

#include <pcbd/constructions.hpp>
#include <pcbd/info_matrix.hpp>

using pcbd::construction_result;
using pcbd::imat;
using pcbd::qmat;
using pcbd::rational;

namespace {

void require_ij(const construction_result& cr, rational alpha, rational beta) {
  qmat m = pcbd::information_matrix(cr.design);
  auto ij = pcbd::as_ij_form(m);
  REQUIRE(ij.ok);
  CHECK(ij.alpha == alpha);
  CHECK(ij.beta == beta);
}

void require_golden(const construction_result& cr, const std::string& name) {
  std::ifstream in(std::string(PCBD_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::vector<long long> vals;
  std::string tok;
  while (in >> tok) vals.push_back(tok == "(1,2)" ? 2 : -2);
  const imat& f = cr.design.f;
  REQUIRE(static_cast<int>(vals.size()) == f.rows() * f.cols());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) {
      INFO("row " << i << " col " << j);
      CHECK(f(i, j) == vals[i * f.cols() + j]);
    }
}

std::string message_of(pcbd::method_params mp) {
  try {
    pcbd::construct(mp);
  } catch (const pcbd::error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("method 1: complementary pairs in even blocks") {
  auto r = pcbd::construct_method1(18, 6, 9);
  require_ij(r, rational(16), rational(2));
  CHECK(pcbd::is_orthogonally_blocked(r.design));
  require_golden(r, "m1_n18_k6_b9.pairs");
  require_ij(pcbd::construct_method1(6, 2, 3), rational(4), rational(2));
}

TEST_CASE("method 2: two part pairing with a fixed tail block") {
  auto r = pcbd::construct_method2(30, 6, 3);
  require_ij(r, rational(28), rational(2));
  CHECK(pcbd::is_orthogonally_blocked(r.design));
  require_golden(r, "m2_n30_k6_b3.pairs");
  require_ij(pcbd::construct_method2(14, 3, 3), rational(12), rational(2));
}

TEST_CASE("method 3: method 1 regrouped into larger blocks") {
  auto r = pcbd::construct_method3(18, 6, 3);
  require_ij(r, rational(16), rational(2));
  CHECK(pcbd::is_orthogonally_blocked(r.design));
  CHECK(r.design.layout.sizes() == std::vector<int>{6, 6, 6});
}

TEST_CASE("method 4: augmented rows break orthogonality") {
  auto r = pcbd::construct_method4(18, 8, 2, 3);
  CHECK_FALSE(pcbd::is_orthogonally_blocked(r.design));
  require_golden(r, "m4_n18_k8_k1_2_b3.pairs");
  qmat m = pcbd::information_matrix(r.design);
  auto want = pcbd::eigen_poly(
      {{rational(16), 6}, {rational(56, 3), 1}, {rational(28), 1}});
  CHECK(pcbd::char_poly(m) == want);
}

TEST_CASE("method 5: alternating stretch in odd blocks") {
  auto r = pcbd::construct_method5(12, 4, 4);
  require_ij(r, rational(32, 3), rational(0));
  require_golden(r, "m5_n12_k4_b4.pairs");
}

TEST_CASE("method 6: full foldover") {
  auto r = pcbd::construct_method6(24, 6);
  require_ij(r, rational(24), rational(0));
  CHECK(pcbd::is_orthogonally_blocked(r.design));
  require_golden(r, "m6_n24_k6.pairs");
}

TEST_CASE("method 7: foldover of an augmented base") {
  auto r = pcbd::construct_method7(12, 4);
  CHECK(pcbd::is_orthogonally_blocked(r.design));
  qmat m = pcbd::information_matrix(r.design);
  qmat want(4, 4, rational(0));
  want(0, 0) = want(1, 1) = want(2, 2) = want(3, 3) = rational(12);
  want(0, 1) = want(1, 0) = want(2, 3) = want(3, 2) = rational(4);
  CHECK(m == want);
  CHECK(pcbd::char_poly(m) ==
        pcbd::eigen_poly({{rational(8), 2}, {rational(16), 2}}));
}

TEST_CASE("method 8: three odd blocks ending in all +2 rows") {
  auto r = pcbd::construct_method8(27, 4);
  require_ij(r, rational(24), rational(8, 3));
  CHECK_FALSE(pcbd::is_orthogonally_blocked(r.design));
}

TEST_CASE("method 9: stacked Kronecker groups") {
  require_ij(pcbd::construct_method9({{4, 2}}, 3), rational(8), rational(0));
  CHECK(pcbd::is_orthogonally_blocked(pcbd::construct_method9({{4, 2}}, 3).design));
  require_ij(pcbd::construct_method9({{4, 2}, {4, 3}}, 3), rational(56, 3), rational(0));
  require_ij(pcbd::construct_method9({{2, 4}}, 2), rational(8), rational(0));
}

TEST_CASE("method 10: dissolved blocks cost orthogonality") {
  auto r = pcbd::construct_method10(4, 2, 1, 3);
  require_ij(r, rational(8), rational(0));
  CHECK(r.design.layout.sizes() == std::vector<int>{3, 3, 3});
  CHECK_FALSE(pcbd::is_orthogonally_blocked(r.design));
  auto r2 = pcbd::construct_method10(8, 2, 1, 4);
  require_ij(r2, rational(16), rational(0));
  CHECK_FALSE(pcbd::is_orthogonally_blocked(r2.design));
}

TEST_CASE("method 11: appended +1 row, even blocks") {
  auto r = pcbd::construct_method11(26, 6, {4, 4, 4, 4, 4, 6});
  require_ij(r, rational(24), rational(2));
  CHECK(pcbd::is_orthogonally_blocked(r.design));
  require_golden(r, "m11_n26_k6.pairs");
  require_ij(pcbd::construct_method11(10, 4, {10}), rational(8), rational(2));
}

TEST_CASE("method 12: trimmed Hadamard pairs") {
  auto r = pcbd::construct_method12(14, 4, {14});
  require_ij(r, rational(16), rational(-2));
  CHECK(pcbd::is_orthogonally_blocked(r.design));
}

TEST_CASE("method 13: one +2 and one -2 row") {
  auto r = pcbd::construct_method13(10, 4, {10});
  require_ij(r, rational(8), rational(2));
  CHECK(pcbd::is_orthogonally_blocked(r.design));
}

TEST_CASE("method 14: nine pairs in three blocks of three") {
  auto r = pcbd::construct_method14(4);
  CHECK(r.design.pairs() == 9);
  require_ij(r, rational(8), rational(0));
}

TEST_CASE("method 15: Kronecker extension of the nine pair design") {
  auto r = pcbd::construct_method15(2, 2, 2);
  CHECK(r.design.pairs() == 18);
  CHECK(r.design.attributes() == 4);
  require_ij(r, rational(16), rational(0));
}

TEST_CASE("method 16: odd blocks carry the augmentation") {
  auto r = pcbd::construct_method16(17, 4, {3, 4, 4, 6});
  require_ij(r, rational(16), rational(2, 3));
  CHECK(r.design.layout.sizes() == std::vector<int>{4, 4, 6, 3});
  require_golden(r, "m16_n17_k4.pairs");
  auto r2 = pcbd::construct_method16(9, 3, {3, 2, 2, 2});
  require_ij(r2, rational(8), rational(2, 3));
  CHECK(r2.design.layout.sizes() == std::vector<int>{2, 2, 2, 3});
}

TEST_CASE("method 17: single odd block") {
  auto r = pcbd::construct_method17(11, 4, {3, 4, 4});
  require_ij(r, rational(8), rational(8, 3));
  CHECK(r.design.layout.sizes() == std::vector<int>{4, 4, 3});
}

TEST_CASE("method 18: one dissolved block") {
  require_ij(pcbd::construct_method18(4, 2, 1, 4), rational(8), rational(0));
}

TEST_CASE("method 19: crossover blocks plus pairs") {
  auto r = pcbd::construct_method19(30, 8, 5);
  require_ij(r, rational(28), rational(2));
  CHECK(pcbd::is_orthogonally_blocked(r.design));
}

TEST_CASE("method 20: crossover copies with special rows") {
  require_ij(pcbd::construct_method20(10, 4, 2), rational(8), rational(8, 5));
}

TEST_CASE("method 21: searched block size split") {
  require_ij(pcbd::construct_method21(14, 2, 2), rational(12), rational(12, 7));
}

TEST_CASE("method 22: searched q tuple") {
  require_ij(pcbd::construct_method22(3, 3, 3), rational(8), rational(0));
  auto r = pcbd::construct_method22(5, 5, 3);
  require_ij(r, rational(24), rational(0));
  CHECK(r.design.layout.sizes() == std::vector<int>{5, 5, 5, 5, 5});
}

TEST_CASE("method 23: saturated pairing, computed matrix is authoritative") {
  auto r = pcbd::construct_method23(10, 3, 1, {});
  qmat m = pcbd::information_matrix(r.design);
  qmat want(4, 4, rational(0));
  for (int i = 0; i < 3; ++i) {
    want(i, i) = rational(48, 5);
    for (int j = 0; j < 3; ++j)
      if (i != j) want(i, j) = rational(8, 5);
  }
  want(3, 3) = rational(10);
  CHECK(m == want);
}

TEST_CASE("methods 24 to 27: mixed odd blocks") {
  require_ij(pcbd::construct_method24({4, 4, 2, 3, 1}, 3), rational(12), rational(2, 3));
  require_ij(pcbd::construct_method25({6, 3, 1}, 3), rational(8), rational(2, 3));
  require_ij(pcbd::construct_method26({4, 4, 5}, 3), rational(12), rational(4, 5));
  require_ij(pcbd::construct_method27({4, 5}, 3), rational(8), rational(4, 5));
}

TEST_CASE("constructions reject bad parameters by name") {
  pcbd::method_params mp;
  mp.method = 1;
  mp.n = 16;
  mp.k = 6;
  mp.b = 8;
  CHECK(message_of(mp).find("2 (mod 4)") != std::string::npos);

  mp.n = 18;
  mp.b = 5;
  CHECK(message_of(mp).find("divide") != std::string::npos);

  mp = {};
  mp.method = 1;
  mp.k = 6;
  mp.b = 9;
  CHECK(message_of(mp).find("--n") != std::string::npos);

  mp = {};
  mp.method = 28;
  mp.n = 10;
  CHECK_FALSE(message_of(mp).empty());

  mp = {};
  mp.method = 6;
  mp.n = 20;
  mp.k = 4;
  CHECK(message_of(mp).find("(mod 8)") != std::string::npos);
}

TEST_CASE("dispatcher runs every catalogued method") {
  auto info = pcbd::catalog();
  REQUIRE(info.size() == 27);
  for (size_t i = 0; i < info.size(); ++i) {
    CHECK(info[i].method == static_cast<int>(i) + 1);
    CHECK_FALSE(info[i].description.empty());
    CHECK_FALSE(info[i].constraints.empty());
    CHECK_FALSE(info[i].hadamard_orders.empty());
    CHECK_FALSE(info[i].optimality.empty());
  }
}

TEST_CASE("descriptors carry claims and parameters") {
  auto r = pcbd::construct_method1(18, 6, 9);
  CHECK(r.descriptor.method == 1);
  REQUIRE_FALSE(r.descriptor.claims.empty());
  const auto& claim = r.descriptor.claims.front();
  CHECK(claim.has_ij);
  CHECK(claim.alpha == rational(16));
  CHECK(claim.beta == rational(2));
  CHECK_FALSE(claim.archived);
  CHECK(r.descriptor.params.at("n") == "18");

  auto r4 = pcbd::construct_method4(18, 8, 2, 3);
  bool has_archived = false;
  for (const auto& c : r4.descriptor.claims) has_archived |= c.archived;
  CHECK(has_archived);
}
