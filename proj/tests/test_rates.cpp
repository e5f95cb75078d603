#include "mdsrel/rates.hpp"

#include <doctest.h>

#include <cmath>

using namespace mdsrel;

namespace {

Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Real real_of(const Rational& r) { return to_scalar<Real>(r.get_num()) / to_scalar<Real>(r.get_den()); }

}  // namespace

TEST_SUITE("rates") {

TEST_CASE("channel from the bit error rate") {
  const auto p = CodeParams::make(7, 3, 4, 2);
  const auto pt = derive_channel(frac(1, 2), p);
  CHECK(pt.q_s == frac(1, 4));
  CHECK(pt.p_s == frac(1, 4));
  REQUIRE(pt.p_bgs);
  CHECK(*pt.p_bgs == frac(2, 3));
  CHECK(pt.bit_capable);

  const auto zero = derive_channel(Rational(0), p);
  CHECK(zero.q_s == 1);
  CHECK_FALSE(zero.p_bgs);
  CHECK_THROWS_AS(derive_channel(Rational(-1), p), std::invalid_argument);
  CHECK_THROWS_AS(derive_channel(frac(3, 2), p), std::invalid_argument);
}

TEST_CASE("direct mode reads p as the symbol error rate") {
  const auto p = CodeParams::make(4, 2, 5);
  const auto pt = derive_channel(frac(4, 5), p);
  CHECK(pt.p_s == frac(1, 5));
  CHECK(pt.q_s == frac(1, 5));
  CHECK_FALSE(pt.bit_capable);
  CodeAnalysis a(p);
  CHECK_THROWS_AS(p_fn(a, pt, Level::bit), std::invalid_argument);
  const auto [ct, rc] = trivial_rates(p, pt);
  CHECK(ct == frac(1, 625));
  CHECK(rc == frac(16, 625));
}

TEST_CASE("false positive counts") {
  const auto t2 = irwe_table(CodeParams::make(4, 2, 5));
  CHECK(c_corrected_count(t2, 2) == 8);
  CHECK(fp_count(t2, 2) == 8);
  const auto t1 = irwe_table(CodeParams::make(3, 1, 2));
  CHECK(c_corrected_count(t1, 2) == 1);
  CHECK(fp_count(t1, 2) == 0);
  CHECK_THROWS_AS(c_corrected_count(t2, 1), std::out_of_range);
  CHECK_THROWS_AS(c_corrected_count(t2, 3), std::out_of_range);

  const auto p = CodeParams::make(4, 2, 5);
  CodeAnalysis a(p);
  const auto pt = derive_channel(frac(1, 3), p);
  CHECK(p_fp(a, pt) == 8 * pt.p_s * pt.p_s * pt.q_s * pt.q_s);
}

TEST_CASE("six events partition the word space") {
  for (const auto& p : {CodeParams::make(3, 1, 2, 1), CodeParams::make(4, 2, 5), CodeParams::make(6, 2, 7),
                        CodeParams::make(7, 3, 8, 3), CodeParams::make(9, 4, 16, 4)}) {
    CodeAnalysis a(p);
    for (const auto& x : {Rational(0), frac(1, 100), frac(1, 3), frac(1, 2), Rational(1)}) {
      const auto e = event_budget(a, derive_channel(x, p), Mode::corrected);
      CHECK(e.residual == 0);
      for (const Rational* v : {&e.ct_word, &e.rc_word, &e.fn_word, &e.wc_word, &e.fp_word, &e.ped_word}) CHECK(*v >= 0);
    }
  }
}

TEST_CASE("zero error rate") {
  const auto p = CodeParams::make(7, 3, 8, 3);
  CodeAnalysis a(p);
  const auto e = event_budget(a, derive_channel(Rational(0), p), Mode::corrected);
  CHECK(e.ct_word == 1);
  CHECK(e.wc_word == 0);
  REQUIRE(e.wc_bit);
  CHECK(*e.wc_bit == 0);
  CHECK(*e.fn_bit == 0);
}

TEST_CASE("literal wrong-correction value as printed") {
  const auto p = CodeParams::make(4, 2, 5);
  CodeAnalysis a(p);
  const auto pt = derive_channel(frac(1, 4), p);
  // (V - cells) * sum_c A_c ws(|c|) = 8 * (16 ws(3) + 8 ws(4))
  CHECK(p_wc(a, pt, Level::word, Mode::literal) == frac(25, 1024));
  CHECK(p_wc(a, pt, Level::word, Mode::corrected) == frac(287, 2048));
}

TEST_CASE("float arithmetic tracks rational arithmetic") {
  const auto p = CodeParams::make(15, 9, 16, 4);
  CodeAnalysis a(p);
  for (const auto& x : {frac(1, 1000), frac(1, 20), frac(2, 5)}) {
    const auto ex = event_budget(a, derive_channel(x, p), Mode::corrected);
    const auto fl = event_budget(a, derive_channel(real_of(x), p), Mode::corrected);
    auto close = [](Real f, const Rational& r) {
      const Real e = real_of(r);
      return std::fabs(f - e) <= 1e-15L * std::fabs(e) + 1e-300L;
    };
    CHECK(close(fl.fn_word, ex.fn_word));
    CHECK(close(fl.wc_symbol, ex.wc_symbol));
    CHECK(close(*fl.wc_bit, *ex.wc_bit));
    CHECK(close(fl.fp_word, ex.fp_word));
    CHECK(close(*fl.ped_bit, *ex.ped_bit));
    CHECK(std::fabs(fl.residual) < 1e-15L);
  }
}

TEST_CASE("to_scalar keeps large counts") {
  const ExactInt big = int_pow(128, 117);
  CHECK(std::fabs(to_scalar<Real>(big) / std::pow(2.0L, 819) - 1) < 1e-18L);
  CHECK(to_scalar<Real>(ExactInt(-12345)) == -12345);
}

TEST_CASE("curves validate their grid and do not depend on the worker count") {
  const auto p = CodeParams::make(15, 9, 16, 4);
  CodeAnalysis a(p);
  std::vector<Real> grid;
  for (int i = 1; i <= 12; ++i) grid.push_back(i / 40.0L);
  const auto one = curve(a, grid, Quantity::wc, Level::bit, Mode::corrected, 1);
  const auto four = curve(a, grid, Quantity::wc, Level::bit, Mode::corrected, 4);
  CHECK(one == four);
  for (std::size_t i = 1; i < one.size(); ++i) CHECK(one[i - 1].second < one[i].second);
  CHECK_THROWS_AS(curve(a, std::vector<Real>{0.2L, 0.1L}, Quantity::fn, Level::word, Mode::corrected), std::invalid_argument);
  CHECK_THROWS_AS(curve(a, std::vector<Real>{0.1L, 1.5L}, Quantity::fn, Level::word, Mode::corrected), std::invalid_argument);
  CHECK_THROWS_AS(curve(a, grid, Quantity::fp, Level::bit, Mode::corrected), std::invalid_argument);
}

TEST_CASE("supplied sphere tables must match the code") {
  CodeAnalysis a(CodeParams::make(7, 3, 8));
  CHECK_THROWS_AS(a.set_spheres(sphere_aggregate(irwe_table(CodeParams::make(6, 2, 7)))), std::invalid_argument);
  CHECK_FALSE(a.has_spheres());
  a.spheres();
  CHECK(a.has_spheres());
}

TEST_CASE("false negative and PED bit rates stay below the channel") {
  const auto p = CodeParams::binary_extension(31, 25, 5);
  CodeAnalysis a(p);
  for (Real x : {1e-4L, 1e-2L, 0.3L}) {
    const auto pt = derive_channel(x, p);
    CHECK(p_fn(a, pt, Level::bit) < x);
    CHECK(p_ped(a, pt, Level::bit, Mode::corrected) < x);
  }
}

}
