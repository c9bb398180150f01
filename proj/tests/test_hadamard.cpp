#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <pcbd/hadamard.hpp>

using pcbd::imat;

TEST_CASE("sylvester matrices") {
  imat h1 = pcbd::sylvester(0);
  CHECK(h1.rows() == 1);
  CHECK(h1(0, 0) == 1);

  imat h4 = pcbd::sylvester(2);
  REQUIRE(h4.rows() == 4);
  CHECK(h4(0, 0) == 1);
  CHECK(h4(1, 1) == -1);
  CHECK(h4(3, 1) == -1);
  CHECK(h4(3, 3) == 1);
  CHECK(pcbd::is_hadamard(h4));
  CHECK(pcbd::is_hadamard(pcbd::sylvester(5)));
}

TEST_CASE("every advertised order multiplies out to n I") {
  for (int n : {1, 2, 4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 44, 48, 52, 64}) {
    imat h = pcbd::hadamard(n);
    INFO("order " << n);
    REQUIRE(h.rows() == n);
    REQUIRE(h.cols() == n);
    CHECK(pcbd::is_hadamard(h));
  }
}

TEST_CASE("paley branches cover prime powers") {
  // q = 27 = 3^3 exercises the odd prime power field
  CHECK(pcbd::is_hadamard(pcbd::hadamard(28)));
  // q = 25 = 5^2 with q = 1 (mod 4) exercises the doubled branch
  CHECK(pcbd::is_hadamard(pcbd::hadamard(52)));
  // q = 17 prime, q = 1 (mod 4)
  CHECK(pcbd::is_hadamard(pcbd::hadamard(36)));
}

TEST_CASE("normalize fixes the first row and column") {
  imat h = pcbd::normalize(pcbd::paley(11));
  for (int j = 0; j < h.cols(); ++j) CHECK(h(0, j) == 1);
  for (int i = 0; i < h.rows(); ++i) CHECK(h(i, 0) == 1);
  CHECK(pcbd::is_hadamard(h));
}

TEST_CASE("order availability and the known order list") {
  CHECK(pcbd::order_available(24));
  CHECK(pcbd::order_available(64));
  CHECK_FALSE(pcbd::order_available(13));
  CHECK_FALSE(pcbd::order_available(92));

  auto orders = pcbd::known_orders(64);
  CHECK(orders == std::vector<int>{1, 2, 4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 44, 48, 52,
                                   56, 60, 64});
}

TEST_CASE("unsupported orders are refused by name") {
  CHECK_THROWS_AS(pcbd::hadamard(13), pcbd::unsupported_order_error);
  try {
    pcbd::hadamard(13);
  } catch (const pcbd::unsupported_order_error& e) {
    CHECK(std::string(e.what()).find("order 13") != std::string::npos);
  }
}

TEST_CASE("column preference") {
  auto order = pcbd::popcount_order(8);
  CHECK(order == std::vector<int>{0, 1, 2, 4, 3, 5, 6, 7});
  CHECK(pcbd::preferred_columns(8, 4) == std::vector<int>{0, 1, 2, 4});
  CHECK(pcbd::preferred_columns(12, 3) == std::vector<int>{0, 1, 2});
}

TEST_CASE("registry files extend and are validated") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "pcbd_hadamard_registry_test";
  fs::create_directories(dir);
  setenv("PCBD_HADAMARD_DIR", dir.c_str(), 1);

  // A registered file makes the order available, but garbage is rejected.
  {
    std::ofstream out(dir / "h92.csv");
    out << "1,1\n1,-1\n";
  }
  CHECK(pcbd::order_available(92));
  CHECK_THROWS_AS(pcbd::hadamard(92), pcbd::io_error);

  // The loader accepts a genuine matrix and rejects a broken one.
  imat h12 = pcbd::hadamard(12);
  {
    std::ofstream out(dir / "h12.csv");
    for (int i = 0; i < 12; ++i) {
      for (int j = 0; j < 12; ++j) out << (j ? "," : "") << h12(i, j);
      out << "\n";
    }
  }
  imat loaded = pcbd::detail::load_hadamard_file(dir / "h12.csv", 12);
  CHECK(loaded == h12);

  h12(0, 0) = -h12(0, 0);  // breaks orthogonality
  {
    std::ofstream out(dir / "h12.csv");
    for (int i = 0; i < 12; ++i) {
      for (int j = 0; j < 12; ++j) out << (j ? "," : "") << h12(i, j);
      out << "\n";
    }
  }
  CHECK_THROWS_AS(pcbd::detail::load_hadamard_file(dir / "h12.csv", 12), pcbd::io_error);

  unsetenv("PCBD_HADAMARD_DIR");
  fs::remove_all(dir);
  CHECK_FALSE(pcbd::order_available(92));
}
