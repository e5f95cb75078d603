// mdsrel: exact reliability tables and curves for MDS codes under
// bounded-distance reproducing decoding.

#include "mdsrel/oracle/monte_carlo.hpp"
#include "mdsrel/parallel.hpp"
#include "mdsrel/rates.hpp"
#include "mdsrel/table_io.hpp"
#include "mdsrel/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>

namespace {

using namespace mdsrel;

constexpr int kExitVerify = 1;
constexpr int kExitAssert = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0, k = 0;
  std::optional<int> q, b;
  std::string p_min = "1e-4", p_max = "1e-1";
  int points = 30;
  bool log = false;
  std::string quantity = "fn", level = "word", mode = "corrected", arithmetic = "float";
  std::string out;
  std::uint64_t seed = 20240607, trials = 1'000'000;
  int workers = 1;
  std::vector<std::string> asserts;
  bool keep_going = false;
  std::string p = "0.02";
  std::optional<std::string> cache;
  std::string method;
  std::string sampling;
  std::optional<int> c1, c2;
};

// ------------------------------------------------------------------ parsing

CodeParams code_params(const Options& o) {
  if (o.n == 0 || o.k == 0) throw UsageError("--n and --k are required");
  if (!o.q && !o.b) throw UsageError("one of --q or --b is required");
  if (o.b && (*o.b < 1 || *o.b > 30)) throw UsageError("--b must lie in [1, 30]");
  const int q = o.b ? 1 << *o.b : *o.q;
  if (o.q && *o.q != q) throw UsageError("--q and --b disagree");
  try {
    return CodeParams::make(o.n, o.k, q, o.b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// "3/40", "0.025", "2.5e-2" -> exact rational
Rational parse_rational(const std::string& s) {
  static const std::regex dec(R"(([0-9]*)(?:\.([0-9]*))?(?:[eE]([+-]?[0-9]+))?)");
  Rational r;
  if (s.find('/') != std::string::npos) {
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw UsageError("bad number '" + s + "'");
    r.canonicalize();
    return r;
  }
  std::smatch m;
  if (s.empty() || !std::regex_match(s, m, dec) || (m[1].length() == 0 && m[2].length() == 0))
    throw UsageError("bad number '" + s + "'");
  const std::string frac_digits = m[2].str();
  const std::string digits = m[1].str() + frac_digits;
  ExactInt num(digits, 10);
  long exp = m[3].matched ? std::stol(m[3].str()) : 0;
  exp -= static_cast<long>(frac_digits.size());
  if (std::labs(exp) > 400) throw UsageError("exponent out of range in '" + s + "'");
  ExactInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp)));
  r = exp >= 0 ? Rational(num * scale) : Rational(num, scale);
  r.canonicalize();
  return r;
}

template <class E>
E pick(const std::string& v, const std::map<std::string, E>& table, const char* what) {
  auto it = table.find(v);
  if (it == table.end()) throw UsageError(std::string("unknown ") + what + " '" + v + "'");
  return it->second;
}

Level level_of(const Options& o) {
  return pick<Level>(o.level, {{"word", Level::word}, {"symbol", Level::symbol}, {"bit", Level::bit}}, "level");
}
Mode mode_of(const Options& o) {
  return pick<Mode>(o.mode, {{"literal", Mode::literal}, {"corrected", Mode::corrected}}, "mode");
}
bool rational_of(const Options& o) {
  return pick<bool>(o.arithmetic, {{"rational", true}, {"float", false}}, "arithmetic");
}

// ------------------------------------------------------------------ output

std::string fmt(const Rational& x) { return x.get_str(); }

std::string fmt(Real x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17Lg", x);
  return buf;
}

Real to_real(const Rational& r) { return to_scalar<Real>(r.get_num()) / to_scalar<Real>(r.get_den()); }

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// ------------------------------------------------------------------ grids

template <class S>
std::vector<S> make_grid(const Options& o) {
  const Rational lo = parse_rational(o.p_min), hi = parse_rational(o.p_max);
  if (o.points < 2) throw UsageError("--points must be >= 2");
  if (lo < 0 || hi > 1 || !(lo < hi)) throw UsageError("grid needs 0 <= p-min < p-max <= 1");
  if (o.log && lo == 0) throw UsageError("log grid needs p-min > 0");
  const int m = o.points;
  std::vector<S> grid(m);
  for (int i = 0; i < m; ++i) {
    if (i == 0 || i == m - 1) {
      const Rational& end = i == 0 ? lo : hi;
      if constexpr (std::is_same_v<S, Rational>) grid[i] = end;
      else grid[i] = to_real(end);
      continue;
    }
    if (!o.log) {
      Rational v = lo + (hi - lo) * Rational(i, m - 1);
      v.canonicalize();
      if constexpr (std::is_same_v<S, Rational>) grid[i] = v;
      else grid[i] = to_real(v);
      continue;
    }
    const Real l0 = std::log(to_real(lo)), l1 = std::log(to_real(hi));
    const Real v = std::exp(l0 + (l1 - l0) * i / (m - 1));
    // rational grids use the printed 17-digit value exactly
    if constexpr (std::is_same_v<S, Rational>) grid[i] = parse_rational(fmt(v));
    else grid[i] = v;
  }
  return grid;
}

// ------------------------------------------------------------------ assertions

template <class S>
void check_assertions(const std::vector<std::string>& asserts, const RateCurve<S>& c) {
  for (const auto& a : asserts) {
    if (a == "monotone") {
      for (std::size_t i = 1; i < c.size(); ++i)
        if (!(c[i - 1].second < c[i].second)) throw AssertionFailure("monotone fails at p=" + fmt(c[i].first));
    } else if (a == "below-p") {
      for (const auto& [p, v] : c)
        if (!(v < p)) throw AssertionFailure("below-p fails at p=" + fmt(p));
    } else if (a == "interior-max") {
      std::size_t arg = 0;
      for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i].second > c[arg].second) arg = i;
      if (arg == 0 || arg + 1 == c.size() || !(c.front().second < c[arg].second) ||
          !(c.back().second < c[arg].second))
        throw AssertionFailure("interior-max fails: maximum at p=" + fmt(c[arg].first));
    } else if (a == "nonnegative") {
      for (const auto& [p, v] : c)
        if (v < S(0)) throw AssertionFailure("nonnegative fails at p=" + fmt(p));
    } else {
      throw UsageError("unknown curve assertion '" + a + "' (monotone, below-p, interior-max, nonnegative)");
    }
  }
}

// ------------------------------------------------------------------ commands

int cmd_irwe(const Options& o) {
  const auto p = code_params(o);
  IrweTable t;
  if (o.method.empty() || o.method == "closed") {
    t = open_analysis(p, TableCache::resolve(o.cache), false, o.workers)->irwe();
  } else {
    t = irwe_table(p, pick<IrweMethod>(o.method,
                                       {{"inclusion-exclusion", IrweMethod::inclusion_exclusion},
                                        {"partition", IrweMethod::partition}},
                                       "method"));
  }
  Output out(o.out);
  auto& os = out.os();
  os << "i,j,A_ij\n";
  for (int i = 0; i <= p.k; ++i)
    for (int j = 0; j <= p.redundancy(); ++j) os << i << ',' << j << ',' << t(i, j).get_str() << '\n';
  const bool ok = t.total() == int_pow(p.q, p.k);
  os << "# sum=q^k " << (ok ? "ok" : "FAILED") << '\n';
  if (!ok) throw AssertionFailure("IRWE does not sum to q^k");
  return 0;
}

int cmd_wdist(const Options& o) {
  const auto p = code_params(o);
  const auto method = pick<WeightMethod>(o.method.empty() ? "marginal" : o.method,
                                         {{"marginal", WeightMethod::marginal},
                                          {"mds", WeightMethod::mds_formula},
                                          {"corollary", WeightMethod::corollary}},
                                         "method");
  const auto a = weight_distribution(p, method);
  Output out(o.out);
  auto& os = out.os();
  os << "r,A_r\n";
  ExactInt sum = 0;
  for (int r = 0; r <= p.n; ++r) {
    os << r << ',' << a[r].get_str() << '\n';
    sum += a[r];
  }
  const bool ok = sum == int_pow(p.q, p.k);
  os << "# sum=q^k " << (ok ? "ok" : "FAILED") << '\n';
  if (!ok) throw AssertionFailure("weight distribution does not sum to q^k");
  return 0;
}

int cmd_sphere(const Options& o) {
  const auto p = code_params(o);
  const auto vol = ball_volume(p);
  Output out(o.out);
  auto& os = out.os();
  os << "c1,c2,r1,r2,N,change_total\n";
  bool ok = true;
  for (int c1 = 0; c1 <= p.k; ++c1)
    for (int c2 = 0; c2 <= p.redundancy(); ++c2) {
      if ((o.c1 && *o.c1 != c1) || (o.c2 && *o.c2 != c2)) continue;
      ExactInt sum = 0;
      for (int r1 = std::max(0, c1 - p.radius()); r1 <= std::min(p.k, c1 + p.radius()); ++r1)
        for (int r2 = std::max(0, c2 - p.radius()); r2 <= std::min(p.redundancy(), c2 + p.radius()); ++r2) {
          const auto st = decoder_change_stats(p, {c1, c2}, {r1, r2});
          if (st.count == 0) continue;
          sum += st.count;
          os << c1 << ',' << c2 << ',' << r1 << ',' << r2 << ',' << st.count.get_str() << ','
             << st.change_total.get_str() << '\n';
        }
      ok = ok && sum == vol;
    }
  os << "# ball_volume=" << vol.get_str() << ' ' << (ok ? "ok" : "FAILED") << '\n';
  if (!ok) throw AssertionFailure("sphere counts do not sum to the ball volume");
  return 0;
}

template <class S>
int run_curve(const Options& o, const CodeParams& p, Quantity quantity) {
  const auto grid = make_grid<S>(o);
  const Level level = level_of(o);
  const Mode mode = mode_of(o);
  if (level == Level::bit && !p.bits) throw UsageError("bit level needs --b");
  if (quantity == Quantity::fp && level != Level::word) throw UsageError("fp is word level only");
  const bool spheres = quantity == Quantity::wc || quantity == Quantity::ped;
  const auto a = open_analysis(p, TableCache::resolve(o.cache), spheres, o.workers);
  const auto c = curve(*a, grid, quantity, level, mode, o.workers);
  Output out(o.out);
  auto& os = out.os();
  os << "p,value\n";
  for (const auto& [x, v] : c) os << fmt(x) << ',' << fmt(v) << '\n';
  os.flush();
  check_assertions(o.asserts, c);
  return 0;
}

template <class S>
int run_budget(const Options& o, const CodeParams& p) {
  const auto grid = make_grid<S>(o);
  const Mode mode = mode_of(o);
  for (const auto& a : o.asserts)
    if (a != "unity") throw UsageError("unknown budget assertion '" + a + "' (unity)");
  const auto a = open_analysis(p, TableCache::resolve(o.cache), true, o.workers);
  std::vector<EventRates<S>> rows(grid.size());
  parallel_for(grid.size(), o.workers, [&](std::size_t i) { rows[i] = event_budget(*a, derive_channel(grid[i], p), mode); });
  Output out(o.out);
  auto& os = out.os();
  os << "p,ct,rc,fn,wc,fp,ped,residual\n";
  for (const auto& r : rows)
    os << fmt(r.p) << ',' << fmt(r.ct_word) << ',' << fmt(r.rc_word) << ',' << fmt(r.fn_word) << ',' << fmt(r.wc_word)
       << ',' << fmt(r.fp_word) << ',' << fmt(r.ped_word) << ',' << fmt(r.residual) << '\n';
  os.flush();
  if (!o.asserts.empty())
    for (const auto& r : rows) {
      bool ok;
      if constexpr (std::is_same_v<S, Rational>) ok = r.residual == 0;
      else ok = std::fabs(r.residual) <= 1e-12L;
      if (!ok) throw AssertionFailure("unity fails at p=" + fmt(r.p));
    }
  return 0;
}

int cmd_curve(const Options& o) {
  const auto p = code_params(o);
  if (o.quantity == "budget") return rational_of(o) ? run_budget<Rational>(o, p) : run_budget<Real>(o, p);
  const auto q = pick<Quantity>(
      o.quantity, {{"fn", Quantity::fn}, {"wc", Quantity::wc}, {"fp", Quantity::fp}, {"ped", Quantity::ped}},
      "quantity");
  return rational_of(o) ? run_curve<Rational>(o, p, q) : run_curve<Real>(o, p, q);
}

int cmd_budget(const Options& o) {
  const auto p = code_params(o);
  return rational_of(o) ? run_budget<Rational>(o, p) : run_budget<Real>(o, p);
}

template <class S>
int run_diff(const Options& o, const CodeParams& p, Quantity quantity) {
  const auto grid = make_grid<S>(o);
  const Level level = level_of(o);
  if (level == Level::bit && !p.bits) throw UsageError("bit level needs --b");
  const auto a = open_analysis(p, TableCache::resolve(o.cache), true, o.workers);
  const auto lit = curve(*a, grid, quantity, level, Mode::literal, o.workers);
  const auto cor = curve(*a, grid, quantity, level, Mode::corrected, o.workers);
  Output out(o.out);
  auto& os = out.os();
  os << "p,literal,corrected,abs_diff,rel_diff\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const S l = lit[i].second, c = cor[i].second;
    S d = l - c;
    if (d < S(0)) d = -d;
    std::string rel;
    if (d == S(0)) rel = "0";
    else if (c == S(0)) rel = "inf";
    else rel = fmt(S(d / (c < S(0) ? S(-c) : c)));
    os << fmt(grid[i]) << ',' << fmt(l) << ',' << fmt(c) << ',' << fmt(d) << ',' << rel << '\n';
  }
  return 0;
}

int cmd_diff_modes(const Options& o) {
  const auto p = code_params(o);
  if (o.quantity == "fn" || o.quantity == "fp")
    throw UsageError("diff-modes: " + o.quantity + " is identical in both modes; use wc or ped");
  const auto q = pick<Quantity>(o.quantity, {{"wc", Quantity::wc}, {"ped", Quantity::ped}}, "quantity");
  return rational_of(o) ? run_diff<Rational>(o, p, q) : run_diff<Real>(o, p, q);
}

int cmd_verify(const Options& o) {
  verify::MonteCarloCheck mc;
  mc.seed = o.seed;
  mc.trials = o.trials;
  mc.workers = o.workers;
  Output out(o.out);
  const bool ok = verify::run_suites(verify::default_suites(o.workers, mc), out.os(), o.keep_going);
  return ok ? 0 : kExitVerify;
}

int cmd_simulate(const Options& o) {
  const auto p = code_params(o);
  const Rational pr = parse_rational(o.p);
  if (pr < 0 || pr > 1) throw UsageError("--p must lie in [0, 1]");
  const std::string how = o.sampling.empty() ? (p.bits ? "bits" : "symbols") : o.sampling;
  oracle::SimulationConfig cfg;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  cfg.sampling = pick<oracle::Sampling>(how, {{"bits", oracle::Sampling::bits}, {"symbols", oracle::Sampling::symbols}},
                                        "sampling");
  if (cfg.sampling == oracle::Sampling::bits && !p.bits) throw UsageError("bit sampling needs --b");
  for (const auto& a : o.asserts)
    if (a != "agree") throw UsageError("unknown simulate assertion '" + a + "' (agree)");

  std::optional<oracle::SystematicCode> code;
  try {
    const auto rs = oracle::rs_systematic(oracle::make_field(p.q), p.n, p.k);
    std::vector<oracle::Symbol> g;
    for (int r = 0; r < p.k; ++r)
      for (int c = 0; c < p.n; ++c) g.push_back(rs.generator(r, c));
    code.emplace(rs.field(), p, std::move(g));
    code->codewords();
  } catch (const std::exception& e) {
    throw UsageError(std::string("simulate: cannot build the code: ") + e.what());
  }
  const Real pv = to_real(pr);
  const auto sim = oracle::monte_carlo(*code, static_cast<double>(pv), cfg);

  // symbol sampling draws symbol errors with probability p directly
  const CodeParams channel = cfg.sampling == oracle::Sampling::bits ? p : CodeParams::make(p.n, p.k, p.q);
  CodeAnalysis a(channel);
  const auto exact = event_budget(a, derive_channel(pv, channel), Mode::corrected);
  const std::pair<oracle::Event, Real> rows[] = {
      {oracle::Event::ct, exact.ct_word}, {oracle::Event::rc, exact.rc_word}, {oracle::Event::fn, exact.fn_word},
      {oracle::Event::wc, exact.wc_word}, {oracle::Event::fp, exact.fp_word}, {oracle::Event::ped, exact.ped_word}};
  Output out(o.out);
  auto& os = out.os();
  os << "# trials=" << sim.trials << " seed=" << o.seed << " sampling=" << how << '\n';
  os << "event,count,rate,std_error,analytic,z\n";
  Real worst = 0;
  for (const auto& [ev, pi] : rows) {
    const Real rate = sim.word_rate(ev);
    const Real se = oracle::standard_error(pi, sim.trials);
    const Real z = se > 0 ? (rate - pi) / se : 0;
    worst = std::max(worst, std::fabs(z));
    os << oracle::event_name(ev) << ',' << sim.events[static_cast<int>(ev)] << ',' << fmt(rate) << ',' << fmt(se)
       << ',' << fmt(pi) << ',' << fmt(z) << '\n';
  }
  os.flush();
  if (!o.asserts.empty() && worst > 4) throw AssertionFailure("simulation deviates by " + fmt(worst) + " sigma");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reliability analysis of MDS codes under bounded-distance reproducing decoding"};
  app.require_subcommand(1);
  Options o;

  auto code_flags = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "code length")->required();
    sub->add_option("--k", o.k, "dimension")->required();
    sub->add_option("--q", o.q, "alphabet size");
    sub->add_option("--b", o.b, "bits per symbol (q = 2^b)");
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--cache", o.cache, "table cache directory (default $MDSREL_CACHE)");
  };
  auto grid_flags = [&](CLI::App* sub) {
    sub->add_option("--p-min", o.p_min, "first grid point (decimal or a/b)");
    sub->add_option("--p-max", o.p_max, "last grid point (decimal or a/b)");
    sub->add_option("--points", o.points, "grid size");
    sub->add_flag("--log", o.log, "log-spaced grid");
    sub->add_option("--mode", o.mode, "literal | corrected");
    sub->add_option("--arithmetic", o.arithmetic, "float | rational");
    sub->add_option("--assert", o.asserts, "assertions checked after output");
  };

  auto* irwe = app.add_subcommand("irwe", "input-redundancy weight enumerator A_ij");
  code_flags(irwe);
  irwe->add_option("--method", o.method, "closed | inclusion-exclusion | partition");

  auto* wdist = app.add_subcommand("wdist", "weight distribution A_r");
  code_flags(wdist);
  wdist->add_option("--method", o.method, "marginal | mds | corollary");

  auto* sphere = app.add_subcommand("sphere", "sphere counts N and decoder change totals");
  code_flags(sphere);
  sphere->add_option("--c1", o.c1, "restrict to codeword information weight");
  sphere->add_option("--c2", o.c2, "restrict to codeword redundancy weight");

  auto* curve = app.add_subcommand("curve", "one quantity over a p grid");
  code_flags(curve);
  grid_flags(curve);
  curve->add_option("--quantity", o.quantity, "fn | wc | fp | ped | budget");
  curve->add_option("--level", o.level, "word | symbol | bit");

  auto* budget = app.add_subcommand("budget", "all six word-level event probabilities over a p grid");
  code_flags(budget);
  grid_flags(budget);

  auto* diff = app.add_subcommand("diff-modes", "literal vs corrected formulas");
  code_flags(diff);
  grid_flags(diff);
  diff->add_option("--quantity", o.quantity, "wc | ped");
  diff->add_option("--level", o.level, "word | symbol | bit");

  auto* ver = app.add_subcommand("verify", "formula-vs-oracle suites");
  ver->add_flag("--keep-going", o.keep_going, "run every suite even after a failure");
  ver->add_option("--seed", o.seed, "Monte Carlo seed");
  ver->add_option("--trials", o.trials, "Monte Carlo trials");
  ver->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--out", o.out, "report file (default stdout)");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo channel simulation against the analytic budget");
  code_flags(sim);
  sim->add_option("--p", o.p, "bit error rate (symbol error rate with --sampling symbols)");
  sim->add_option("--trials", o.trials, "trials")->check(CLI::PositiveNumber);
  sim->add_option("--seed", o.seed, "seed");
  sim->add_option("--sampling", o.sampling, "bits | symbols");
  sim->add_option("--assert", o.asserts, "agree: fail beyond 4 standard errors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*irwe) return cmd_irwe(o);
    if (*wdist) return cmd_wdist(o);
    if (*sphere) return cmd_sphere(o);
    if (*curve) return cmd_curve(o);
    if (*budget) return cmd_budget(o);
    if (*diff) return cmd_diff_modes(o);
    if (*ver) return cmd_verify(o);
    if (*sim) return cmd_simulate(o);
  } catch (const UsageError& e) {
    std::cerr << "mdsrel: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mdsrel: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AssertionFailure& e) {
    std::cerr << "mdsrel: assertion failed: " << e.what() << '\n';
    return kExitAssert;
  } catch (const FormulaInconsistency& e) {
    std::cerr << "mdsrel: invariant violated: " << e.what() << '\n';
    return kExitAssert;
  } catch (const std::exception& e) {
    std::cerr << "mdsrel: " << e.what() << '\n';
    return kExitAssert;
  }
  return kExitUsage;
}
