#include <catch2/catch_amalgamated.hpp>

#include <pcbd/matrix.hpp>

using pcbd::imat;
using pcbd::qmat;
using pcbd::rational;

namespace {

qmat from_ints(std::initializer_list<std::initializer_list<int>> rows) {
  qmat m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int v : row) m(i, j++) = rational(v);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("matrix shape and access") {
  imat m(2, 3, 7);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(1, 2) == 7);
  CHECK_THROWS_AS(m.at(2, 0), pcbd::index_error);
  CHECK_THROWS_AS(m.at(0, 3), pcbd::index_error);
}

TEST_CASE("concatenation and selection") {
  imat a(1, 2, 1), b(2, 2, 3);
  imat v = vcat(a, b);
  CHECK(v.rows() == 3);
  CHECK(v(0, 0) == 1);
  CHECK(v(2, 1) == 3);
  CHECK(vcat(imat(0, 0), a).rows() == 1);

  imat h = hcat(b, b);
  CHECK(h.cols() == 4);
  CHECK_THROWS_AS(hcat(a, b), pcbd::error);

  imat sel = select_columns(v, {1});
  CHECK(sel.cols() == 1);
  CHECK(sel(2, 0) == 3);
  CHECK_THROWS_AS(select_columns(v, {5}), pcbd::index_error);
  imat rsel = select_rows(v, {2, 0});
  CHECK(rsel(0, 0) == 3);
  CHECK(rsel(1, 0) == 1);
}

TEST_CASE("kronecker product") {
  imat a(1, 2);
  a(0, 0) = 1;
  a(0, 1) = -1;
  imat b(2, 1);
  b(0, 0) = 2;
  b(1, 0) = 3;
  imat k = kron(a, b);
  REQUIRE(k.rows() == 2);
  REQUIRE(k.cols() == 2);
  CHECK(k(0, 0) == 2);
  CHECK(k(1, 0) == 3);
  CHECK(k(0, 1) == -2);
  CHECK(k(1, 1) == -3);
}

TEST_CASE("gram transpose and trace") {
  imat f(3, 2);
  f(0, 0) = 2;
  f(0, 1) = -2;
  f(1, 0) = -2;
  f(1, 1) = 2;
  f(2, 0) = 2;
  f(2, 1) = 2;
  imat g = f.gram();
  CHECK(g(0, 0) == 12);
  CHECK(g(0, 1) == -4);
  CHECK(g(1, 0) == -4);
  imat t = f.transpose();
  CHECK(t.rows() == 2);
  CHECK(t(1, 0) == -2);
  CHECK(trace(g) == 24);
}

TEST_CASE("exact determinant and inverse") {
  qmat m = from_ints({{2, 1}, {1, 2}});
  CHECK(det(m) == rational(3));
  qmat inv = inverse(m);
  CHECK(inv(0, 0) == rational(2, 3));
  CHECK(inv(0, 1) == rational(-1, 3));
  qmat id = m * inv;
  CHECK(id(0, 0) == rational(1));
  CHECK(id(0, 1) == rational(0));

  qmat s = from_ints({{1, 2}, {2, 4}});
  CHECK(det(s) == rational(0));
  CHECK_THROWS_AS(inverse(s), pcbd::singular_error);
}

TEST_CASE("solve linear system") {
  qmat a = from_ints({{3, 1}, {1, 2}});
  std::vector<rational> x = solve(a, {rational(9), rational(8)});
  REQUIRE(x.size() == 2);
  CHECK(x[0] == rational(2));
  CHECK(x[1] == rational(3));
}

TEST_CASE("characteristic polynomial is monic with ascending coefficients") {
  // [[2,1],[1,2]]: x^2 - 4x + 3
  qmat m = from_ints({{2, 1}, {1, 2}});
  auto p = char_poly(m);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == rational(3));
  CHECK(p[1] == rational(-4));
  CHECK(p[2] == rational(1));

  // diag(1,2,3): (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
  qmat d = from_ints({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  auto q = char_poly(d);
  REQUIRE(q.size() == 4);
  CHECK(q[0] == rational(-6));
  CHECK(q[1] == rational(11));
  CHECK(q[2] == rational(-6));
  CHECK(q[3] == rational(1));
}

TEST_CASE("scalar multiplication") {
  qmat m = from_ints({{1, 2}, {3, 4}});
  qmat s = rational(1, 2) * m;
  CHECK(s(1, 1) == rational(2));
  CHECK(s(0, 1) == rational(1));
}
