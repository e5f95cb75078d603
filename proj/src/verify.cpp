#include "mdsrel/verify.hpp"

#include "mdsrel/oracle/census.hpp"
#include "mdsrel/oracle/monte_carlo.hpp"
#include "mdsrel/rates.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace mdsrel::verify {

namespace {

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Mismatch(what);
}

std::string code_name(const CodeParams& p) {
  std::ostringstream os;
  os << '[' << p.n << ',' << p.k << "]_" << p.q;
  return os.str();
}

template <class Body>
SuiteResult timed(const std::string& name, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r{name, false, "", 0};
  try {
    r.detail = body();
    r.passed = true;
  } catch (const Mismatch& e) {
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::string at(int q, int i, int j) {
  return " at q=" + std::to_string(q) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
}

}  // namespace

std::vector<oracle::SystematicCode> reference_codes() {
  std::vector<oracle::SystematicCode> out;
  out.push_back(oracle::rs_systematic(oracle::make_field(2), 3, 1));
  // the prime-field codes run in direct mode: no bits per symbol
  auto direct = [](int q, int n, int k) {
    auto c = oracle::rs_systematic(oracle::make_field(q), n, k);
    std::vector<oracle::Symbol> g;
    for (int r = 0; r < k; ++r)
      for (int col = 0; col < n; ++col) g.push_back(c.generator(r, col));
    return oracle::SystematicCode(c.field(), CodeParams::make(n, k, q), std::move(g));
  };
  out.push_back(direct(5, 4, 2));
  out.push_back(direct(7, 6, 2));
  out.push_back(oracle::rs_systematic(oracle::make_field(8), 7, 3));
  return out;
}

SuiteResult identities(int bound) {
  return timed("identities", [&] {
    const auto bad = identity_suite(bound);
    require(bad.empty(), bad.empty() ? "" : bad.front().identity + " at " + bad.front().args);
    return "all identities hold for parameters <= " + std::to_string(bound);
  });
}

SuiteResult f_grids() {
  return timed("f-grids", [&] {
    std::size_t checked = 0;
    for (int q = 2; q <= 9; ++q)
      for (int i = 1; i <= 20; ++i)
        for (int j = 1; j <= 12; ++j, ++checked)
          require(f_closed(q, i, j) == f_recurrence(q, i, j), "f_closed != f_recurrence" + at(q, i, j));
    for (int q : {5, 7}) {
      const auto field = oracle::make_field(q);
      for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 3 && i + j <= q; ++j, ++checked) {
          const auto m = oracle::cauchy_matrix(field, j, i);
          require(oracle::count_totally_nonzero(field, m, j, i) == f_closed(q, i, j),
                  "brute-force count != f_closed" + at(q, i, j));
        }
    }
    return std::to_string(checked) + " values agree";
  });
}

SuiteResult irwe_agreement() {
  return timed("irwe", [&] {
    for (const auto& code : reference_codes()) {
      const auto& p = code.params();
      const auto closed = irwe_table(p, IrweMethod::closed);
      require(irwe_table(p, IrweMethod::inclusion_exclusion) == closed, "inclusion-exclusion differs on " + code_name(p));
      require(irwe_table(p, IrweMethod::partition) == closed, "partition enumerator differs on " + code_name(p));
      require(oracle::census_irwe(code) == closed, "census differs on " + code_name(p));
    }
    for (int k : {87, 107, 117}) {
      const auto p = CodeParams::binary_extension(127, k, 7);
      require(irwe_table(p).total() == int_pow(128, k), "sum != q^k on " + code_name(p));
    }
    return std::string("four-way agreement on 4 codes; normalization at n=127");
  });
}

SuiteResult weight_distributions() {
  return timed("weight-distribution", [&] {
    std::size_t codes = 0;
    auto check = [&](const CodeParams& p) {
      ++codes;
      const auto a = weight_distribution(p, WeightMethod::marginal);
      require(weight_distribution(p, WeightMethod::mds_formula) == a, "MDS formula differs on " + code_name(p));
      require(weight_distribution(p, WeightMethod::corollary) == a, "corollary differs on " + code_name(p));
    };
    for (int q : {8, 16, 32})
      for (int n = 2; n <= 31; ++n)
        for (int k = 1; k < n; ++k) check(CodeParams::make(n, k, q));
    check(CodeParams::binary_extension(127, 117, 7));
    for (const auto& code : reference_codes()) {
      const auto& p = code.params();
      std::vector<ExactInt> census(p.n + 1, 0);
      for (const auto& c : code.codewords()) census[oracle::hamming_weight(c)] += 1;
      require(weight_distribution(p, WeightMethod::marginal) == census, "census differs on " + code_name(p));
    }
    return std::to_string(codes) + " parameter sets, census on 4 codes";
  });
}

SuiteResult spheres() {
  return timed("spheres", [&] {
    for (const auto& code : reference_codes()) {
      const auto& p = code.params();
      const auto vol = ball_volume(p);
      std::map<SplitWeight, std::vector<SphereStats>> by_class;
      for (int c1 = 0; c1 <= p.k; ++c1)
        for (int c2 = 0; c2 <= p.redundancy(); ++c2) {
          ExactInt sum = 0;
          auto& row = by_class[{c1, c2}];
          for (int r1 = 0; r1 <= p.k; ++r1)
            for (int r2 = 0; r2 <= p.redundancy(); ++r2) {
              const ExactInt n = sphere_count(p, {c1, c2}, {r1, r2});
              require(n == sphere_count_cases(p, {c1, c2}, {r1, r2}), "unified != cases on " + code_name(p));
              row.push_back(decoder_change_stats(p, {c1, c2}, {r1, r2}));
              require(row.back().count == n, "change statistics count differs on " + code_name(p));
              sum += n;
            }
          require(sum == vol, "sphere counts do not sum to the ball volume on " + code_name(p));
        }
      for (const auto& c : code.codewords()) {
        const auto cells = oracle::census_ball(code, c);
        const auto& row = by_class.at(oracle::split_weight(c, p.k));
        for (std::size_t idx = 0; idx < cells.size(); ++idx)
          require(cells[idx].count == row[idx].count && cells[idx].change_total == row[idx].change_total,
                  "ball census differs on " + code_name(p));
      }
    }
    return std::string("formulas match ball censuses on 4 codes");
  });
}

namespace {

void require_equal(const EventRates<Rational>& a, const EventRates<Rational>& b, const std::string& where) {
  auto eq = [&](const char* name, const Rational& x, const Rational& y) {
    require(x == y, std::string(name) + " differs" + where + ": " + x.get_str() + " vs " + y.get_str());
  };
  auto eq_opt = [&](const char* name, const std::optional<Rational>& x, const std::optional<Rational>& y) {
    require(x.has_value() == y.has_value(), std::string(name) + " availability differs" + where);
    if (x) eq(name, *x, *y);
  };
  eq("ct", a.ct_word, b.ct_word);
  eq("rc", a.rc_word, b.rc_word);
  eq("fn", a.fn_word, b.fn_word);
  eq("fn symbol", a.fn_symbol, b.fn_symbol);
  eq("wc", a.wc_word, b.wc_word);
  eq("wc symbol", a.wc_symbol, b.wc_symbol);
  eq("fp", a.fp_word, b.fp_word);
  eq("ped", a.ped_word, b.ped_word);
  eq("ped symbol", a.ped_symbol, b.ped_symbol);
  eq_opt("fn bit", a.fn_bit, b.fn_bit);
  eq_opt("wc bit", a.wc_bit, b.wc_bit);
  eq_opt("ped bit", a.ped_bit, b.ped_bit);
  eq("residual", a.residual, b.residual);
}

}  // namespace

SuiteResult event_census(int workers) {
  return timed("event-census", [&] {
    const std::vector<Rational> grid{0, frac(1, 50), frac(1, 7), frac(1, 3), frac(1, 2), 1};
    // [7,3]_8 is the only one where the channel/decoder split of bit errors
    // is visible: q = 2 weighs both alike and the prime-field codes have no b
    const auto codes = reference_codes();
    for (const auto& code : codes) {
      const auto& p = code.params();
      const auto tally = oracle::census_tally(code, workers);
      std::uint64_t space = 1;
      for (int i = 0; i < p.n; ++i) space *= static_cast<std::uint64_t>(p.q);
      require(tally.total() == space, "classification does not cover the word space of " + code_name(p));
      CodeAnalysis a(p);
      for (const auto& x : grid) {
        const auto pt = derive_channel(x, p);
        const auto analytic = event_budget(a, pt, Mode::corrected);
        require_equal(analytic, oracle::tally_rates(tally, p, pt), " on " + code_name(p) + " at p=" + x.get_str());
        require(analytic.residual == 0, "nonzero residual on " + code_name(p));
      }
    }
    return std::to_string(codes.size()) + " codes x " + std::to_string(grid.size()) + " points agree exactly";
  });
}

SuiteResult monte_carlo(const MonteCarloCheck& check) {
  return timed("monte-carlo", [&] {
    const auto code = reference_codes().back();
    const auto& p = code.params();
    oracle::SimulationConfig cfg;
    cfg.trials = check.trials;
    cfg.seed = check.seed;
    cfg.workers = check.workers;
    const auto sim = oracle::monte_carlo(code, check.p, cfg);
    CodeAnalysis a(p);
    const auto exact = event_budget(a, derive_channel(Real(check.p), p), Mode::corrected);
    const std::pair<oracle::Event, Real> expected[] = {
        {oracle::Event::ct, exact.ct_word}, {oracle::Event::rc, exact.rc_word}, {oracle::Event::fn, exact.fn_word},
        {oracle::Event::wc, exact.wc_word}, {oracle::Event::fp, exact.fp_word}, {oracle::Event::ped, exact.ped_word}};
    std::ostringstream os;
    os << std::setprecision(3);
    std::string worst_event;
    Real worst = 0;
    for (const auto& [ev, pi] : expected) {
      const Real se = oracle::standard_error(pi, check.trials);
      const Real diff = std::fabs(sim.word_rate(ev) - pi);
      const Real z = se > 0 ? diff / se : (diff > 0 ? INFINITY : 0);
      if (z >= worst) {
        worst = z;
        worst_event = oracle::event_name(ev);
      }
      os << oracle::event_name(ev) << " z=" << static_cast<double>(z) << ' ';
    }
    require(worst <= check.sigmas, os.str() + "; " + worst_event + " exceeds " + std::to_string(check.sigmas) + " sigma");
    return os.str();
  });
}

std::vector<Suite> default_suites(int workers, const MonteCarloCheck& mc) {
  return {
      {"identities", [] { return identities(20); }},
      {"f-grids", [] { return f_grids(); }},
      {"irwe", [] { return irwe_agreement(); }},
      {"weight-distribution", [] { return weight_distributions(); }},
      {"spheres", [] { return spheres(); }},
      {"event-census", [workers] { return event_census(workers); }},
      {"monte-carlo", [mc] { return monte_carlo(mc); }},
  };
}

bool run_suites(const std::vector<Suite>& suites, std::ostream& os, bool keep_going) {
  bool all = true;
  int passed = 0, run = 0;
  for (const auto& s : suites) {
    const SuiteResult r = s.run();
    ++run;
    passed += r.passed;
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << r.seconds << 's';
    os << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(20) << r.name << std::right << std::setw(9)
       << secs.str() << "  " << r.detail << '\n';
    if (!r.passed) {
      all = false;
      if (!keep_going) break;
    }
  }
  os << passed << '/' << run << " suites passed";
  if (run < static_cast<int>(suites.size())) os << " (stopped after first failure)";
  os << '\n';
  return all;
}

}  // namespace mdsrel::verify
