#include "mdsrel/enumerator.hpp"

#include <doctest.h>

using namespace mdsrel;

namespace {

IrweTable table_of(const CodeParams& p, std::vector<std::vector<long>> rows) {
  IrweTable t(p);
  for (int i = 0; i <= p.k; ++i)
    for (int j = 0; j <= p.redundancy(); ++j) t(i, j) = rows[i][j];
  return t;
}

std::vector<ExactInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("enumerator") {

TEST_CASE("code parameters") {
  const auto p = CodeParams::make(7, 3, 8, 3);
  CHECK(p.redundancy() == 4);
  CHECK(p.min_distance() == 5);
  CHECK(p.radius() == 2);
  CHECK(CodeParams::binary_extension(127, 117, 7).q == 128);
  CHECK_THROWS_AS(CodeParams::make(4, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(CodeParams::make(4, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(CodeParams::make(4, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(CodeParams::make(7, 3, 8, 2), std::invalid_argument);
}

TEST_CASE("f examples") {
  CHECK(f_recurrence(5, 1, 1) == 0);
  CHECK(f_recurrence(5, 2, 1) == 4);
  CHECK(f_recurrence(5, 3, 1) == 12);
  CHECK(f_recurrence(5, 3, 0) == 64);
  CHECK(f_closed(5, 3, 2) == 4);
  CHECK(f_closed(2, 3, 1) == 0);
  CHECK(f_closed(7, 2, 2) == 0);
  CHECK_THROWS_AS(f_closed(5, 0, 1), std::invalid_argument);
}

TEST_CASE("f closed form equals recurrence") {
  for (int q = 2; q <= 9; ++q)
    for (int i = 1; i <= 20; ++i)
      for (int j = 1; j <= 12; ++j) REQUIRE(f_closed(q, i, j) == f_recurrence(q, i, j));
}

TEST_CASE("IRWE of [4,2]_5") {
  const auto p = CodeParams::make(4, 2, 5);
  const auto expected = table_of(p, {{1, 0, 0}, {0, 0, 8}, {0, 8, 8}});
  CHECK(irwe_table(p, IrweMethod::closed) == expected);
  CHECK(irwe_table(p, IrweMethod::inclusion_exclusion) == expected);
  CHECK(irwe_table(p, IrweMethod::partition) == expected);
}

TEST_CASE("single cells") {
  CHECK(irwe_closed(CodeParams::make(6, 2, 7), 1, 4) == 12);
  CHECK(pwe_partition(CodeParams::make(3, 1, 2), 1, 2) == 1);
  CHECK(irwe_inclusion_exclusion(CodeParams::make(4, 2, 5), 2, 0) == 0);
  CHECK(irwe_inclusion_exclusion(CodeParams::make(4, 2, 5), 0, 0) == 1);
}

TEST_CASE("three IRWE methods agree, [7,3]_8 and a sweep") {
  for (int q : {2, 3, 4, 5, 7, 8, 16})
    for (int n = 2; n <= 12; ++n)
      for (int k = 1; k < n; ++k) {
        const auto p = CodeParams::make(n, k, q);
        const auto closed = irwe_table(p);
        REQUIRE(irwe_table(p, IrweMethod::inclusion_exclusion) == closed);
        REQUIRE(irwe_table(p, IrweMethod::partition) == closed);
      }
}

TEST_CASE("IRWE invariants") {
  for (int q : {2, 3, 8, 32, 128})
    for (int n : {3, 9, 17, 31})
      for (int k = 1; k < n; k += 3) {
        const auto p = CodeParams::make(n, k, q);
        const auto t = irwe_table(p);
        CHECK(t(0, 0) == 1);
        for (int j = 1; j <= p.redundancy(); ++j) CHECK(t(0, j) == 0);
        for (int i = 0; i <= k; ++i)
          for (int j = 0; j <= p.redundancy(); ++j) {
            // counts only where an MDS code can exist; elsewhere the
            // formulas are symbolic in q and go negative
            if (n <= q + 1) CHECK(t(i, j) >= 0);
            if (i + j > 0 && i + j <= p.redundancy()) CHECK(t(i, j) == 0);
          }
        CHECK(t.total() == int_pow(q, k));
      }
}

TEST_CASE("normalization at n = 127") {
  for (int k : {87, 107, 117}) CHECK(irwe_table(CodeParams::binary_extension(127, k, 7)).total() == int_pow(128, k));
}

TEST_CASE("weight distributions") {
  CHECK(weight_distribution(CodeParams::make(4, 2, 5), WeightMethod::mds_formula) == ints({1, 0, 0, 16, 8}));
  CHECK(weight_distribution(CodeParams::make(3, 1, 2), WeightMethod::corollary) == ints({1, 0, 0, 1}));
  ExactInt s = 0;
  for (const auto& a : weight_distribution(CodeParams::make(7, 3, 8), WeightMethod::marginal)) s += a;
  CHECK(s == 512);
  for (int q : {8, 16, 32})
    for (int n = 2; n <= 31; ++n)
      for (int k = 1; k < n; ++k) {
        const auto p = CodeParams::make(n, k, q);
        const auto a = weight_distribution(p, WeightMethod::marginal);
        REQUIRE(weight_distribution(p, WeightMethod::mds_formula) == a);
        REQUIRE(weight_distribution(p, WeightMethod::corollary) == a);
        for (int r = 1; r < p.min_distance(); ++r) REQUIRE(a[r] == 0);
      }
}

}
