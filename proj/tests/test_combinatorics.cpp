#include "mdsrel/combinatorics.hpp"

#include <doctest.h>

using namespace mdsrel;

TEST_SUITE("combinatorics") {

TEST_CASE("binomials inside the triangle") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(10, 10) == 1);
  CHECK(binom(52, 5) == 2598960);
  CHECK(binom(1000, 500).get_str().size() == 300);
}

TEST_CASE("binomials outside the triangle are zero") {
  CHECK(binom(3, 5) == 0);
  CHECK(binom(-2, 1) == 0);
  CHECK(binom(-1, 0) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK_THROWS_AS(binom(1024, 3), std::out_of_range);
}

TEST_CASE("pascal rule and symmetry") {
  for (long a = 1; a < 200; ++a)
    for (long r = 0; r <= a; ++r) {
      REQUIRE(binom(a, r) == binom(a - 1, r - 1) + binom(a - 1, r));
      REQUIRE(binom(a, r) == binom(a, a - r));
    }
}

TEST_CASE("row sums are powers of two") {
  for (long a = 0; a < 300; a += 7) {
    ExactInt s = 0;
    for (long r = 0; r <= a; ++r) s += binom(a, r);
    REQUIRE(s == int_pow(2, static_cast<unsigned long>(a)));
  }
}

TEST_CASE("integer powers") {
  CHECK(int_pow(0, 0) == 1);
  CHECK(int_pow(0, 3) == 0);
  CHECK(int_pow(127, 3) == 2048383);
  CHECK(int_pow(-1, 5) == -1);
  CHECK(int_pow(128, 117) == int_pow(2, 819));
}

TEST_CASE("identity suite holds") {
  const auto bad = identity_suite(20);
  for (const auto& v : bad) INFO(v.identity << " " << v.args);
  CHECK(bad.empty());
  CHECK_THROWS_AS(identity_suite(0), std::invalid_argument);
}

}
