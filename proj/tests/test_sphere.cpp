#include "mdsrel/sphere.hpp"

#include <doctest.h>

using namespace mdsrel;

TEST_SUITE("sphere") {

TEST_CASE("worked cells") {
  const auto t3 = CodeParams::make(6, 2, 7);
  CHECK(sphere_count(t3, {1, 4}, {0, 3}) == 4);
  CHECK(sphere_count_cases(t3, {1, 4}, {0, 3}) == 4);
  const auto st = decoder_change_stats(t3, {1, 4}, {0, 3});
  CHECK(st.count == 4);
  CHECK(st.change_total == 4);
  CHECK(st.average_change() == 1);

  const auto t2 = CodeParams::make(4, 2, 5);
  CHECK(sphere_count(t2, {1, 2}, {0, 2}) == 1);

  const auto t4 = CodeParams::make(7, 3, 8, 3);
  CHECK(sphere_count_cases(t4, {1, 4}, {2, 5}) == sphere_count(t4, {1, 4}, {2, 5}));
}

TEST_CASE("unreachable cells are empty") {
  const auto p = CodeParams::make(7, 3, 8);
  const auto st = decoder_change_stats(p, {1, 4}, {3, 3});
  CHECK(st.alpha < 0);
  CHECK(st.count == 0);
  CHECK(st.change_total == 0);
  CHECK(st.average_change() == 0);
  CHECK(sphere_count(p, {0, 0}, {2, 1}) == 0);
  CHECK_FALSE(sphere_reaches(p, {1, 4}, {3, 3}));
}

TEST_CASE("ball volumes") {
  CHECK(ball_volume(CodeParams::make(6, 2, 7)) == 577);
  CHECK(ball_volume(CodeParams::make(4, 2, 5)) == 17);
  CHECK(ball_volume(CodeParams::make(3, 2, 5)) == 1);
}

TEST_CASE("unified formula equals the case expansions") {
  for (int q : {2, 3, 5, 8})
    for (int n = 2; n <= 10; ++n)
      for (int k = 1; k < n; ++k) {
        const auto p = CodeParams::make(n, k, q);
        for (int c1 = 0; c1 <= k; ++c1)
          for (int c2 = 0; c2 <= n - k; ++c2)
            for (int r1 = 0; r1 <= k; ++r1)
              for (int r2 = 0; r2 <= n - k; ++r2)
                REQUIRE(sphere_count(p, {c1, c2}, {r1, r2}) == sphere_count_cases(p, {c1, c2}, {r1, r2}));
      }
}

TEST_CASE("sphere decomposes by split weight") {
  for (int q : {2, 4, 7, 16})
    for (int n = 2; n <= 12; ++n)
      for (int k = 1; k < n; ++k) {
        const auto p = CodeParams::make(n, k, q);
        const auto vol = ball_volume(p);
        for (int c1 = 0; c1 <= k; ++c1)
          for (int c2 = 0; c2 <= n - k; ++c2) {
            ExactInt sum = 0;
            for (int r1 = 0; r1 <= k; ++r1)
              for (int r2 = 0; r2 <= n - k; ++r2) {
                const auto st = decoder_change_stats(p, {c1, c2}, {r1, r2});
                REQUIRE(st.count >= 0);
                REQUIRE(st.change_total >= 0);
                REQUIRE(st.change_total <= st.count * k);
                REQUIRE(st.average_change() <= k);
                sum += st.count;
              }
            REQUIRE(sum == vol);
            REQUIRE(sphere_count(p, {c1, c2}, {c1, c2}) >= 1);
          }
      }
}

TEST_CASE("kernels agree when the information weight does not grow") {
  const auto p = CodeParams::make(15, 9, 16);
  for (int c1 = 0; c1 <= 9; ++c1)
    for (int c2 = 0; c2 <= 6; ++c2)
      for (int r1 = 0; r1 <= c1; ++r1)
        for (int r2 = 0; r2 <= 6; ++r2)
          REQUIRE(decoder_change_stats(p, {c1, c2}, {r1, r2}, ChangeKernel::printed).change_total ==
                  decoder_change_stats(p, {c1, c2}, {r1, r2}, ChangeKernel::residual).change_total);
}

}
