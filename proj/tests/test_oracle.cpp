#include "mdsrel/oracle/census.hpp"
#include "mdsrel/oracle/monte_carlo.hpp"
#include "mdsrel/verify.hpp"

#include <doctest.h>

using namespace mdsrel;
using namespace mdsrel::oracle;

namespace {

const SystematicCode& code(int which) {
  static const auto codes = verify::reference_codes();
  return codes.at(which);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("field examples") {
  CHECK(make_field(5).mul(2, 3) == 1);
  CHECK(make_field(8).mul(2, 4) == 3);
  CHECK_THROWS_AS(make_field(6), std::invalid_argument);
  CHECK_THROWS_AS(make_field(512), std::invalid_argument);
  CHECK(make_field(256).mul(0x80, 2) == 0x1b);
}

TEST_CASE("field axioms") {
  for (int q : {2, 3, 4, 5, 7, 8, 11, 13, 16}) {
    const auto f = make_field(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(static_cast<Symbol>(a), f.neg(static_cast<Symbol>(a))) == 0);
      if (a) CHECK(f.mul(static_cast<Symbol>(a), f.inv(static_cast<Symbol>(a))) == 1);
      for (int b = 0; b < q; ++b) {
        const auto x = static_cast<Symbol>(a), y = static_cast<Symbol>(b);
        REQUIRE(f.mul(x, y) == f.mul(y, x));
        for (int c = 0; c < q; ++c) {
          const auto z = static_cast<Symbol>(c);
          REQUIRE(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
          REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        }
      }
    }
  }
}

TEST_CASE("reference codes are systematic MDS codes") {
  for (int w = 0; w < 4; ++w) {
    const auto& c = code(w);
    const auto& p = c.params();
    CHECK(c.minimum_distance() == p.min_distance());
    CHECK(c.redundancy_totally_full_rank());
    for (int r = 0; r < p.k; ++r)
      for (int col = 0; col < p.k; ++col) CHECK(c.generator(r, col) == (r == col ? 1 : 0));
  }
  CHECK(code(1).codewords().size() == 25);
  CHECK(code(3).minimum_distance() == 5);
  CHECK_THROWS_AS(rs_systematic(make_field(5), 7, 2), std::invalid_argument);
}

TEST_CASE("larger codes use the submatrix test") {
  const auto c = rs_systematic(make_field(32), 31, 25);
  CHECK(c.redundancy_totally_full_rank());
  CHECK_THROWS_AS(c.codewords(), std::length_error);
}

TEST_CASE("decoding and classification") {
  const auto& t2 = code(1);
  const auto& cws = t2.codewords();
  for (std::size_t i = 0; i < cws.size(); ++i) {
    const auto out = bdd_decode(t2, cws[i]);
    CHECK(out.corrected);
    CHECK(out.codeword == i);
    CHECK(out.distance == 0);
  }
  const Word zero(4, 0);
  CHECK(classify_event(t2, zero) == Event::ct);
  CHECK(classify_event(t2, Word{0, 3, 0, 0}) == Event::rc);
  CHECK(classify_event(t2, cws[1]) == Event::fn);

  // a split-(1,2) codeword with its information symbol erased sits at
  // distance 1 and decodes back to it
  const Word& row = cws[1];
  Word y = row;
  y[0] = 0;
  std::size_t decoded = 0;
  CHECK(classify_event(t2, y, &decoded) == Event::wc);
  CHECK(decoded == 1);

  int fp = 0;
  for (int a = 1; a < 5; ++a)
    for (int b = 1; b < 5; ++b)
      fp += classify_event(t2, Word{0, 0, static_cast<Symbol>(a), static_cast<Symbol>(b)}) == Event::fp;
  CHECK(fp == 8);
}

TEST_CASE("censuses") {
  const auto& t2 = code(1);
  IrweTable want(t2.params());
  want(0, 0) = 1;
  want(1, 2) = 8;
  want(2, 1) = 8;
  want(2, 2) = 8;
  CHECK(census_irwe(t2) == want);

  const auto& t3 = code(2);
  int found = 0;
  for (const auto& c : t3.codewords()) {
    if (!(split_weight(c, 2) == SplitWeight{1, 4})) continue;
    const auto cell = census_sphere(t3, c, {0, 3});
    CHECK(cell.count == 4);
    CHECK(cell.change_total == 4);
    ++found;
  }
  CHECK(found == 12);

  Rational ps(1, 5);
  const auto pt = derive_channel(Rational(4, 5), t2.params());
  const auto e = census_events(t2, pt);
  CHECK(e.fp_word == 8 * ps * ps * ps * ps);
  CHECK(e.residual == 0);
}

TEST_CASE("Cauchy systems") {
  const auto f = make_field(5);
  CHECK(count_totally_nonzero(f, cauchy_matrix(f, 2, 3), 2, 3) == 4);
  CHECK(count_totally_nonzero(f, cauchy_matrix(f, 1, 3), 1, 3) == 12);
  const auto f2 = make_field(2);
  CHECK(count_totally_nonzero(f2, std::vector<Symbol>{1, 1, 1}, 1, 3) == 0);
  CHECK_THROWS_AS(cauchy_matrix(f, 3, 3), std::invalid_argument);
}

TEST_CASE("event census matches the analytic budget on [4,2]_5 and [3,1]_2") {
  for (int w : {0, 1}) {
    const auto& c = code(w);
    const auto tally = census_tally(c, 2);
    CodeAnalysis a(c.params());
    for (const auto& x : {Rational(1, 10), Rational(1, 2)}) {
      const auto pt = derive_channel(x, c.params());
      const auto got = tally_rates(tally, c.params(), pt);
      const auto want = event_budget(a, pt, Mode::corrected);
      CHECK(got.wc_word == want.wc_word);
      CHECK(got.wc_symbol == want.wc_symbol);
      CHECK(got.ped_symbol == want.ped_symbol);
      CHECK(got.fp_word == want.fp_word);
    }
  }
}

TEST_CASE("Monte Carlo") {
  const auto& t4 = code(3);
  SimulationConfig cfg;
  cfg.trials = 2000;
  cfg.seed = 7;
  const auto clean = monte_carlo(t4, 0.0, cfg);
  CHECK(clean.events[static_cast<int>(Event::ct)] == 2000);

  cfg.trials = 20000;
  const auto a = monte_carlo(t4, 0.05, cfg);
  const auto b = monte_carlo(t4, 0.05, cfg);
  cfg.workers = 3;
  const auto c = monte_carlo(t4, 0.05, cfg);
  CHECK(a.events == b.events);
  CHECK(a.events == c.events);
  CHECK(a.info_bit_errors == c.info_bit_errors);
  std::uint64_t total = 0;
  for (auto v : a.events) total += v;
  CHECK(total == 20000);

  cfg.seed = 8;
  CHECK(monte_carlo(t4, 0.05, cfg).events != a.events);

  SimulationConfig sym;
  sym.trials = 100;
  sym.sampling = Sampling::symbols;
  CHECK_NOTHROW(monte_carlo(code(1), 0.1, sym));
  sym.sampling = Sampling::bits;
  CHECK_THROWS_AS(monte_carlo(code(1), 0.1, sym), std::invalid_argument);
}

}
