#include <catch2/catch_amalgamated.hpp>

#include <pcbd/design_core.hpp>

using pcbd::block_layout;
using pcbd::blocked_design;
using pcbd::imat;
using pcbd::level_pair;

TEST_CASE("effects coding round trip") {
  CHECK(pcbd::effects_code({1, 2}) == 2);
  CHECK(pcbd::effects_code({2, 1}) == -2);
  CHECK(pcbd::effects_code({1, 1}) == 0);
  CHECK(pcbd::effects_code({2, 2}) == 0);

  level_pair p = pcbd::decode_effects(2);
  CHECK(p.first == 1);
  CHECK(p.second == 2);
  p = pcbd::decode_effects(-2);
  CHECK(p.first == 2);
  CHECK(p.second == 1);
  CHECK_THROWS_AS(pcbd::decode_effects(0), pcbd::ambiguity_error);
  CHECK_THROWS_AS(pcbd::decode_effects(1), pcbd::error);
}

TEST_CASE("block layout bookkeeping") {
  block_layout layout({2, 3, 1});
  CHECK(layout.count() == 3);
  CHECK(layout.total() == 6);
  CHECK(layout.starts() == std::vector<int>{0, 2, 5});
  imat z = layout.indicator();
  CHECK(z.rows() == 6);
  CHECK(z.cols() == 3);
  CHECK(z(0, 0) == 1);
  CHECK(z(2, 1) == 1);
  CHECK(z(5, 2) == 1);
  CHECK(z(5, 0) == 0);
  CHECK_THROWS_AS(block_layout({2, 0}), pcbd::layout_error);
}

TEST_CASE("blocked design validates shape and entries") {
  imat f(4, 2, 2);
  blocked_design d(f, block_layout({2, 2}));
  CHECK(d.pairs() == 4);
  CHECK(d.attributes() == 2);
  CHECK(d.is_pure());

  CHECK_THROWS_AS(blocked_design(f, block_layout({2, 3})), pcbd::layout_error);

  imat bad(2, 1, 1);
  CHECK_THROWS_AS(blocked_design(bad, block_layout({2})), pcbd::error);

  imat with_zero(2, 1, 0);
  blocked_design dz(with_zero, block_layout({2}));
  CHECK_FALSE(dz.is_pure());
}

TEST_CASE("pair expansion doubles and negates") {
  imat base(2, 2);
  base(0, 0) = 1;
  base(0, 1) = -1;
  base(1, 0) = -1;
  base(1, 1) = -1;
  imat e = pcbd::pair_expand(base);
  REQUIRE(e.rows() == 4);
  CHECK(e(0, 0) == 2);
  CHECK(e(0, 1) == -2);
  CHECK(e(1, 0) == -2);
  CHECK(e(1, 1) == 2);
  CHECK(e(2, 0) == -2);
  CHECK(e(3, 0) == 2);
}

TEST_CASE("alternating vector") {
  imat a = pcbd::alt_vec(3);
  REQUIRE(a.rows() == 3);
  REQUIRE(a.cols() == 1);
  CHECK(a(0, 0) == 2);
  CHECK(a(1, 0) == -2);
  CHECK(a(2, 0) == 2);
}

TEST_CASE("reblocking keeps rows but changes the layout") {
  imat f(6, 1, 2);
  blocked_design d(f, block_layout({2, 2, 2}));
  blocked_design r = pcbd::reblock(d, {4, 2});
  CHECK(r.layout.sizes() == std::vector<int>{4, 2});
  CHECK(r.f == d.f);
  CHECK_THROWS_AS(pcbd::reblock(d, {3, 3}), pcbd::layout_error);
  CHECK_THROWS_AS(pcbd::reblock(d, {4, 4}), pcbd::layout_error);
}
