#include "mdsrel/rates.hpp"

#include "mdsrel/parallel.hpp"

#include <cmath>

namespace mdsrel {

template <>
Rational to_scalar<Rational>(const ExactInt& z) {
  return Rational(z);
}

template <>
Real to_scalar<Real>(const ExactInt& z) {
  const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  if (z == 0) return 0;
  ExactInt mag = abs(z);
  Real v;
  if (bits <= 64) {
    v = static_cast<Real>(mpz_get_ui(mag.get_mpz_t()));
  } else {
    const std::size_t shift = bits - 64;
    ExactInt top = mag >> static_cast<mp_bitcnt_t>(shift);
    v = std::ldexp(static_cast<Real>(mpz_get_ui(top.get_mpz_t())), static_cast<int>(shift));
  }
  return sgn(z) < 0 ? -v : v;
}

namespace {

Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Real rational_to_real(const Rational& r) { return to_scalar<Real>(r.get_num()) / to_scalar<Real>(r.get_den()); }

template <class S>
S from_rational(const Rational& r);
template <>
Rational from_rational<Rational>(const Rational& r) {
  return r;
}
template <>
Real from_rational<Real>(const Rational& r) {
  return rational_to_real(r);
}

// Plain sum for exact scalars, Neumaier-compensated for floating ones.
template <class S>
struct Accumulator {
  S sum{0};
  void add(const S& x) { sum += x; }
  S value() const { return sum; }
};

template <>
struct Accumulator<Real> {
  Real sum = 0, comp = 0;
  void add(Real x) {
    const Real t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  Real value() const { return sum + comp; }
};

// p_s^w q_s^{n-w} for w = 0..n
template <class S>
std::vector<S> word_weights(const ChannelPoint<S>& pt, int n) {
  std::vector<S> ps(n + 1), qs(n + 1), out(n + 1);
  ps[0] = 1;
  qs[0] = 1;
  for (int w = 1; w <= n; ++w) {
    ps[w] = ps[w - 1] * pt.p_s;
    qs[w] = qs[w - 1] * pt.q_s;
  }
  for (int w = 0; w <= n; ++w) out[w] = ps[w] * qs[n - w];
  return out;
}

template <class S>
bool is_zero(const S& x) {
  return x == S(0);
}

template <class S>
const S& bit_factor(const ChannelPoint<S>& pt) {
  if (!pt.bit_capable) throw std::invalid_argument("bit level needs bits per symbol (q = 2^b)");
  return *pt.p_bgs;
}

// Expected bit-error fraction of a uniformly wrong symbol: q / (2 (q-1)).
template <class S>
S decoder_bit_factor(int q) {
  return from_rational<S>(ratio(q, 2L * (q - 1)));
}

std::vector<Rational> literal_change_terms(const IrweTable& irwe);

}  // namespace

// ---------------------------------------------------------------- channel

template <class S>
ChannelPoint<S> derive_channel(const S& p, const CodeParams& params) {
  if (p < S(0) || p > S(1)) throw std::invalid_argument("bit-error rate must lie in [0, 1]");
  ChannelPoint<S> pt;
  pt.p = p;
  const S qm1(params.q - 1);
  if (params.bits) {
    S qs(1);
    for (int i = 0; i < *params.bits; ++i) qs *= (S(1) - p);
    pt.q_s = qs;
    const S err = S(1) - qs;
    pt.p_s = err / qm1;
    pt.bit_capable = true;
    if (!is_zero(p)) pt.p_bgs = p / err;
  } else {
    pt.q_s = S(1) - p;
    pt.p_s = p / qm1;
  }
  return pt;
}

// ---------------------------------------------------------------- spheres

CellCoverage cell_coverage(const IrweTable& irwe, SplitWeight r) {
  const auto& p = irwe.params();
  const int t = p.radius();
  CellCoverage out{0, 0, 0};
  for (int c1 = std::max(0, r.info - t); c1 <= std::min(p.k, r.info + t); ++c1) {
    const int slack = t - std::abs(c1 - r.info);
    for (int c2 = std::max(0, r.red - slack); c2 <= std::min(p.redundancy(), r.red + slack); ++c2) {
      if (c1 == 0 && c2 == 0) continue;
      const ExactInt& a = irwe(c1, c2);
      if (a == 0) continue;
      const SphereStats st = decoder_change_stats(p, {c1, c2}, r);
      if (st.count == 0) continue;
      const ExactInt an = a * st.count;
      out.covered += an;
      out.info += an * c1;
      out.changes += a * st.change_total;
    }
  }
  return out;
}

SphereAggregate sphere_aggregate(const IrweTable& irwe, int workers) {
  const auto& p = irwe.params();
  SphereAggregate agg{p, {}, {}, {}};
  const std::size_t cells = static_cast<std::size_t>(p.k + 1) * (p.redundancy() + 1);
  agg.covered.resize(cells);
  agg.info.resize(cells);
  agg.changes.resize(cells);
  parallel_for(cells, workers, [&](std::size_t idx) {
    const int r1 = static_cast<int>(idx / (p.redundancy() + 1));
    const int r2 = static_cast<int>(idx % (p.redundancy() + 1));
    CellCoverage c = cell_coverage(irwe, {r1, r2});
    agg.covered[idx] = std::move(c.covered);
    agg.info[idx] = std::move(c.info);
    agg.changes[idx] = std::move(c.changes);
  });
  return agg;
}

CodeAnalysis::CodeAnalysis(const CodeParams& params) : irwe_(irwe_table(params)) {}
CodeAnalysis::CodeAnalysis(IrweTable irwe) : irwe_(std::move(irwe)) {}

const SphereAggregate& CodeAnalysis::spheres() const {
  std::lock_guard lock(mu_);
  if (!spheres_) spheres_ = std::make_shared<const SphereAggregate>(sphere_aggregate(irwe_, workers_));
  return *spheres_;
}

void CodeAnalysis::set_spheres(SphereAggregate agg) {
  if (!(agg.params == params())) throw std::invalid_argument("sphere table belongs to another code");
  std::lock_guard lock(mu_);
  spheres_ = std::make_shared<const SphereAggregate>(std::move(agg));
}

bool CodeAnalysis::has_spheres() const {
  std::lock_guard lock(mu_);
  return spheres_ != nullptr;
}

// ---------------------------------------------------------------- rates

template <class S>
S p_fn(const CodeAnalysis& a, const ChannelPoint<S>& pt, Level level) {
  const auto& p = a.params();
  const auto& irwe = a.irwe();
  if (level == Level::bit) {
    bit_factor(pt);
    if (is_zero(pt.p)) return S(0);
  }
  const auto ws = word_weights(pt, p.n);
  Accumulator<S> acc;
  for (int i = 1; i <= p.k; ++i)
    for (int j = 0; j <= p.redundancy(); ++j) {
      const ExactInt& cnt = irwe(i, j);
      if (cnt == 0) continue;
      S v = to_scalar<S>(cnt) * ws[i + j];
      if (level != Level::word) v = v * S(i) / S(p.k);
      if (level == Level::bit) v *= *pt.p_bgs;
      acc.add(v);
    }
  return acc.value();
}

template <class S>
S p_wc(const CodeAnalysis& a, const ChannelPoint<S>& pt, Level level, Mode mode) {
  const auto& p = a.params();
  const auto& irwe = a.irwe();
  if (level == Level::bit) {
    bit_factor(pt);
    if (is_zero(pt.p)) return S(0);
  }
  const auto ws = word_weights(pt, p.n);
  const S kk(p.k);
  Accumulator<S> acc;

  if (mode == Mode::corrected) {
    const auto& agg = a.spheres();
    const S dec = decoder_bit_factor<S>(p.q);
    for (int r1 = 0; r1 <= p.k; ++r1)
      for (int r2 = 0; r2 <= p.redundancy(); ++r2) {
        const std::size_t idx = agg.index(r1, r2);
        if (agg.covered[idx] == 0) continue;
        // drop the codewords themselves: they are false negatives
        const ExactInt& centers = irwe(r1, r2);
        const S w = ws[r1 + r2];
        if (level == Level::word) {
          acc.add(to_scalar<S>(agg.covered[idx] - centers) * w);
        } else if (level == Level::symbol) {
          acc.add(to_scalar<S>(agg.info[idx] - centers * r1) * w / kk);
        } else {
          const ExactInt channel = agg.info[idx] - centers * r1 - agg.changes[idx];
          acc.add((to_scalar<S>(channel) * *pt.p_bgs + to_scalar<S>(agg.changes[idx]) * dec) * w / kk);
        }
      }
    return acc.value();
  }

  // As printed: (N - 1) in every received cell, weight of the codeword as
  // exponent, decoder bit factor 1 + 1/(q-1).
  const ExactInt cells = ExactInt(p.k + 1) * (p.redundancy() + 1);
  const ExactInt per_class = ball_volume(p) - cells;  // sum_r (N_r - 1)
  std::vector<Rational> lit;
  if (level == Level::bit) lit = literal_change_terms(irwe);
  const S printed = from_rational<S>(ratio(p.q, p.q - 1));
  for (int c1 = 1; c1 <= p.k; ++c1)
    for (int c2 = 0; c2 <= p.redundancy(); ++c2) {
      const ExactInt& cnt = irwe(c1, c2);
      if (cnt == 0) continue;
      const S base = to_scalar<S>(cnt) * ws[c1 + c2];
      if (level == Level::word) {
        acc.add(base * to_scalar<S>(per_class));
      } else if (level == Level::symbol) {
        acc.add(base * to_scalar<S>(per_class) * S(c1) / kk);
      } else {
        const S lc = from_rational<S>(lit[static_cast<std::size_t>(c1) * (p.redundancy() + 1) + c2]);
        acc.add(base / kk * (S(c1) * *pt.p_bgs * to_scalar<S>(per_class) + (printed - *pt.p_bgs) * lc));
      }
    }
  return acc.value();
}

namespace {

// sum over received cells with N > 0 of (N - 1) * D, D from the printed kernel
std::vector<Rational> literal_change_terms(const IrweTable& irwe) {
  const auto& p = irwe.params();
  const int t = p.radius();
  std::vector<Rational> out(static_cast<std::size_t>(p.k + 1) * (p.redundancy() + 1));
  for (int c1 = 1; c1 <= p.k; ++c1)
    for (int c2 = 0; c2 <= p.redundancy(); ++c2) {
      if (irwe(c1, c2) == 0) continue;
      Rational s = 0;
      for (int r1 = std::max(0, c1 - t); r1 <= std::min(p.k, c1 + t); ++r1)
        for (int r2 = std::max(0, c2 - t); r2 <= std::min(p.redundancy(), c2 + t); ++r2) {
          const SphereStats st = decoder_change_stats(p, {c1, c2}, {r1, r2}, ChangeKernel::printed);
          if (st.count == 0) continue;
          s += Rational(st.count - 1) * st.average_change();
        }
      out[static_cast<std::size_t>(c1) * (p.redundancy() + 1) + c2] = s;
    }
  return out;
}

}  // namespace

ExactInt c_corrected_count(const IrweTable& irwe, int r) {
  const auto& p = irwe.params();
  if (r < p.radius() + 1 || r > p.redundancy()) throw std::out_of_range("c_corrected_count: r outside [t+1, n-k]");
  return cell_coverage(irwe, {0, r}).covered;
}

ExactInt fp_count(const IrweTable& irwe, int r) {
  const auto& p = irwe.params();
  const ExactInt fp = binom(p.redundancy(), r) * int_pow(p.q - 1, r) - c_corrected_count(irwe, r);
  if (fp < 0) throw FormulaInconsistency("negative false-positive count");
  return fp;
}

template <class S>
S p_fp(const CodeAnalysis& a, const ChannelPoint<S>& pt) {
  const auto& p = a.params();
  const auto ws = word_weights(pt, p.n);
  Accumulator<S> acc;
  for (int r = p.radius() + 1; r <= p.redundancy(); ++r) acc.add(to_scalar<S>(fp_count(a.irwe(), r)) * ws[r]);
  return acc.value();
}

namespace {

ExactInt cell_total(const CodeParams& p, int i1, int i2) {
  return binom(p.k, i1) * binom(p.redundancy(), i2) * int_pow(p.q - 1, static_cast<unsigned long>(i1 + i2));
}

ExactInt checked(ExactInt v) {
  if (v < 0) throw FormulaInconsistency("negative pure-error-detection count");
  return v;
}

}  // namespace

ExactInt ped_count(const IrweTable& irwe, int i1, int i2, Mode mode) {
  const auto& p = irwe.params();
  if (i1 < 0 || i1 > p.k || i2 < 0 || i2 > p.redundancy()) throw std::out_of_range("ped_count: index out of range");
  if (i1 + i2 <= p.radius()) return 0;
  if (mode == Mode::corrected) {
    if (i1 == 0) return 0;
    return checked(cell_total(p, i1, i2) - cell_coverage(irwe, {i1, i2}).covered);
  }
  ExactInt fp = 0;
  if (i1 == 0 && i2 >= p.radius() + 1) fp = fp_count(irwe, i2);
  return checked(cell_total(p, i1, i2) - fp - cell_coverage(irwe, {i1, i2}).covered);
}

template <class S>
S p_ped(const CodeAnalysis& a, const ChannelPoint<S>& pt, Level level, Mode mode) {
  const auto& p = a.params();
  if (level == Level::bit) {
    bit_factor(pt);
    if (is_zero(pt.p)) return S(0);
  }
  const auto& agg = a.spheres();
  const auto ws = word_weights(pt, p.n);
  const int first_red = mode == Mode::literal ? 1 : 0;
  Accumulator<S> acc;
  for (int i1 = 1; i1 <= p.k; ++i1)
    for (int i2 = first_red; i2 <= p.redundancy(); ++i2) {
      if (i1 + i2 <= p.radius()) continue;
      const ExactInt cnt = checked(cell_total(p, i1, i2) - agg.covered[agg.index(i1, i2)]);
      if (cnt == 0) continue;
      S v = to_scalar<S>(cnt) * ws[i1 + i2];
      if (level != Level::word) v = v * S(i1) / S(p.k);
      if (level == Level::bit) v *= *pt.p_bgs;
      acc.add(v);
    }
  return acc.value();
}

template <class S>
std::pair<S, S> trivial_rates(const CodeParams& params, const ChannelPoint<S>& pt) {
  const auto ws = word_weights(pt, params.n);
  Accumulator<S> rc;
  for (int s = 1; s <= params.radius(); ++s)
    rc.add(to_scalar<S>(binom(params.n, s) * int_pow(params.q - 1, s)) * ws[s]);
  return {ws[0], rc.value()};
}

template <class S>
EventRates<S> event_budget(const CodeAnalysis& a, const ChannelPoint<S>& pt, Mode mode) {
  EventRates<S> e;
  e.p = pt.p;
  std::tie(e.ct_word, e.rc_word) = trivial_rates(a.params(), pt);
  e.fn_word = p_fn(a, pt, Level::word);
  e.fn_symbol = p_fn(a, pt, Level::symbol);
  e.wc_word = p_wc(a, pt, Level::word, mode);
  e.wc_symbol = p_wc(a, pt, Level::symbol, mode);
  e.fp_word = p_fp(a, pt);
  e.ped_word = p_ped(a, pt, Level::word, mode);
  e.ped_symbol = p_ped(a, pt, Level::symbol, mode);
  if (pt.bit_capable) {
    e.fn_bit = p_fn(a, pt, Level::bit);
    e.wc_bit = p_wc(a, pt, Level::bit, mode);
    e.ped_bit = p_ped(a, pt, Level::bit, mode);
  }
  Accumulator<S> total;
  for (const S* x : {&e.ct_word, &e.rc_word, &e.fn_word, &e.wc_word, &e.fp_word, &e.ped_word}) total.add(*x);
  e.residual = S(1) - total.value();
  return e;
}

template <class S>
RateCurve<S> curve(const CodeAnalysis& a, const std::vector<S>& grid, Quantity quantity, Level level, Mode mode,
                   int workers) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < S(0) || grid[i] > S(1)) throw std::invalid_argument("curve grid must lie in [0, 1]");
    if (i > 0 && !(grid[i - 1] < grid[i])) throw std::invalid_argument("curve grid must be strictly increasing");
  }
  if (quantity == Quantity::fp && level != Level::word) throw std::invalid_argument("FP has word level only");
  // Build shared tables before fanning out.
  if (quantity == Quantity::wc || quantity == Quantity::ped) a.spheres();

  RateCurve<S> out(grid.size());
  parallel_for(grid.size(), workers, [&](std::size_t i) {
    const auto pt = derive_channel(grid[i], a.params());
    S v{};
    switch (quantity) {
      case Quantity::fn: v = p_fn(a, pt, level); break;
      case Quantity::wc: v = p_wc(a, pt, level, mode); break;
      case Quantity::fp: v = p_fp(a, pt); break;
      case Quantity::ped: v = p_ped(a, pt, level, mode); break;
    }
    out[i] = {grid[i], v};
  });
  return out;
}

#define MDSREL_INSTANTIATE(S)                                                                                    \
  template ChannelPoint<S> derive_channel<S>(const S&, const CodeParams&);                                       \
  template S p_fn<S>(const CodeAnalysis&, const ChannelPoint<S>&, Level);                                        \
  template S p_wc<S>(const CodeAnalysis&, const ChannelPoint<S>&, Level, Mode);                                  \
  template S p_fp<S>(const CodeAnalysis&, const ChannelPoint<S>&);                                               \
  template S p_ped<S>(const CodeAnalysis&, const ChannelPoint<S>&, Level, Mode);                                 \
  template std::pair<S, S> trivial_rates<S>(const CodeParams&, const ChannelPoint<S>&);                          \
  template EventRates<S> event_budget<S>(const CodeAnalysis&, const ChannelPoint<S>&, Mode);                     \
  template RateCurve<S> curve<S>(const CodeAnalysis&, const std::vector<S>&, Quantity, Level, Mode, int);

MDSREL_INSTANTIATE(Rational)
MDSREL_INSTANTIATE(Real)

}  // namespace mdsrel
