#include "mdsrel/oracle/census.hpp"

#include "mdsrel/parallel.hpp"

#include <stdexcept>

namespace mdsrel::oracle {

namespace {

double space_size(int q, int len) {
  double s = 1;
  for (int i = 0; i < len; ++i) s *= q;
  return s;
}

// Calls fn(word) for every word within distance t of `center`.
template <class Fn>
void for_each_in_ball(const SystematicCode& code, std::span<const Symbol> center, Fn&& fn) {
  const int n = code.params().n, q = code.params().q, t = code.params().radius();
  Word y(center.begin(), center.end());
  auto rec = [&](auto&& self, int from, int left) -> void {
    fn(static_cast<const Word&>(y));
    if (left == 0) return;
    for (int pos = from; pos < n; ++pos) {
      const Symbol orig = y[pos];
      for (int v = 1; v < q; ++v) {
        y[pos] = code.field().add(orig, static_cast<Symbol>(v));
        self(self, pos + 1, left - 1);
      }
      y[pos] = orig;
    }
  };
  rec(rec, 0, t);
}

int decoder_changes(std::span<const Symbol> codeword, std::span<const Symbol> word, int k) {
  int d = 0;
  for (int l = 0; l < k; ++l) d += codeword[l] != 0 && word[l] != codeword[l];
  return d;
}

}  // namespace

std::vector<Symbol> cauchy_matrix(const FiniteField& f, int rows, int cols) {
  if (rows + cols > f.order()) throw std::invalid_argument("Cauchy matrix needs rows + cols <= q");
  std::vector<Symbol> m(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m[r * cols + c] = f.inv(f.sub(static_cast<Symbol>(r), static_cast<Symbol>(rows + c)));
  return m;
}

ExactInt count_totally_nonzero(const FiniteField& f, const std::vector<Symbol>& m, int rows, int cols) {
  const int q = f.order();
  std::vector<Symbol> x(cols, 1);
  std::uint64_t hits = 0;
  while (true) {
    bool ok = true;
    for (int r = 0; r < rows && ok; ++r) {
      Symbol s = 0;
      for (int c = 0; c < cols; ++c) s = f.add(s, f.mul(m[r * cols + c], x[c]));
      ok = s == 0;
    }
    hits += ok;
    int c = 0;
    while (c < cols && x[c] == q - 1) x[c++] = 1;
    if (c == cols) break;
    ++x[c];
  }
  return ExactInt(static_cast<unsigned long>(hits));
}

IrweTable census_irwe(const SystematicCode& code) {
  IrweTable t(code.params());
  for (const auto& c : code.codewords()) {
    const SplitWeight w = split_weight(c, code.params().k);
    t(w.info, w.red) += 1;
  }
  return t;
}

std::vector<BallCell> census_ball(const SystematicCode& code, std::span<const Symbol> codeword) {
  const auto& p = code.params();
  std::vector<BallCell> cells(static_cast<std::size_t>(p.k + 1) * (p.redundancy() + 1), BallCell{0, 0});
  for_each_in_ball(code, codeword, [&](const Word& y) {
    const SplitWeight w = split_weight(y, p.k);
    auto& cell = cells[static_cast<std::size_t>(w.info) * (p.redundancy() + 1) + w.red];
    cell.count += 1;
    cell.change_total += decoder_changes(codeword, y, p.k);
  });
  return cells;
}

BallCell census_sphere(const SystematicCode& code, std::span<const Symbol> codeword, SplitWeight r) {
  const auto& p = code.params();
  if (r.info < 0 || r.info > p.k || r.red < 0 || r.red > p.redundancy()) return {0, 0};
  return census_ball(code, codeword)[static_cast<std::size_t>(r.info) * (p.redundancy() + 1) + r.red];
}

std::uint64_t EventTally::total() const {
  std::uint64_t s = 0;
  for (const auto& row : words)
    for (auto v : row) s += v;
  return s;
}

EventTally census_tally(const SystematicCode& code, int workers) {
  const auto& p = code.params();
  if (space_size(p.q, p.n) > double(1 << 24)) throw std::length_error("event census limited to q^n <= 2^24");
  const auto& cws = code.codewords();
  const auto total = static_cast<std::size_t>(space_size(p.q, p.n));

  // split the space into fixed blocks so the merge order never depends on
  // the worker count
  const std::size_t block = 4096;
  const std::size_t blocks = (total + block - 1) / block;
  std::vector<EventTally> parts(blocks);
  parallel_for(blocks, workers, [&](std::size_t b) {
    EventTally& part = parts[b];
    for (int e = 0; e < kEventCount; ++e) {
      part.words[e].assign(p.n + 1, 0);
      part.info_symbols[e].assign(p.n + 1, 0);
      part.decoder_symbols[e].assign(p.n + 1, 0);
    }
    Word y(p.n);
    for (std::size_t idx = b * block; idx < std::min(total, (b + 1) * block); ++idx) {
      std::size_t v = idx;
      for (int i = 0; i < p.n; ++i) {
        y[i] = static_cast<Symbol>(v % p.q);
        v /= p.q;
      }
      std::size_t decoded = 0;
      const Event ev = classify_event(code, y, &decoded);
      const int e = static_cast<int>(ev);
      const int w = hamming_weight(y);
      part.words[e][w] += 1;
      if (ev == Event::wc) {
        const Word& c = cws[decoded];
        part.info_symbols[e][w] += hamming_weight(std::span<const Symbol>(c).first(p.k));
        part.decoder_symbols[e][w] += decoder_changes(c, y, p.k);
      } else if (ev == Event::fn || ev == Event::ped) {
        part.info_symbols[e][w] += hamming_weight(std::span<const Symbol>(y).first(p.k));
      }
    }
  });

  EventTally out;
  out.n = p.n;
  for (int e = 0; e < kEventCount; ++e) {
    out.words[e].assign(p.n + 1, 0);
    out.info_symbols[e].assign(p.n + 1, 0);
    out.decoder_symbols[e].assign(p.n + 1, 0);
  }
  for (const auto& part : parts)
    for (int e = 0; e < kEventCount; ++e)
      for (int w = 0; w <= p.n; ++w) {
        out.words[e][w] += part.words[e][w];
        out.info_symbols[e][w] += part.info_symbols[e][w];
        out.decoder_symbols[e][w] += part.decoder_symbols[e][w];
      }
  return out;
}

EventRates<Rational> tally_rates(const EventTally& tally, const CodeParams& params, const ChannelPoint<Rational>& pt) {
  const int n = params.n;
  std::vector<Rational> ws(n + 1);
  for (int w = 0; w <= n; ++w) {
    Rational v = 1;
    for (int i = 0; i < w; ++i) v *= pt.p_s;
    for (int i = w; i < n; ++i) v *= pt.q_s;
    ws[w] = v;
  }
  Rational dec(params.q, 2L * (params.q - 1));
  dec.canonicalize();
  const Rational k(params.k);
  auto big = [](std::uint64_t v) {
    ExactInt z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return z;
  };

  auto word = [&](Event e) {
    Rational s = 0;
    for (int w = 0; w <= n; ++w) s += Rational(big(tally.words[int(e)][w])) * ws[w];
    return s;
  };
  auto symbol = [&](Event e) {
    Rational s = 0;
    for (int w = 0; w <= n; ++w) s += Rational(big(tally.info_symbols[int(e)][w])) * ws[w];
    return Rational(s / k);
  };
  auto bit = [&](Event e) {
    if (pt.p == 0) return Rational(0);
    Rational s = 0;
    for (int w = 0; w <= n; ++w) {
      const auto& row_i = tally.info_symbols[int(e)];
      const auto& row_d = tally.decoder_symbols[int(e)];
      const Rational channel(big(row_i[w] - row_d[w]));
      s += (channel * *pt.p_bgs + Rational(big(row_d[w])) * dec) * ws[w];
    }
    return Rational(s / k);
  };

  EventRates<Rational> r;
  r.p = pt.p;
  r.ct_word = word(Event::ct);
  r.rc_word = word(Event::rc);
  r.fn_word = word(Event::fn);
  r.fn_symbol = symbol(Event::fn);
  r.wc_word = word(Event::wc);
  r.wc_symbol = symbol(Event::wc);
  r.fp_word = word(Event::fp);
  r.ped_word = word(Event::ped);
  r.ped_symbol = symbol(Event::ped);
  if (pt.bit_capable) {
    r.fn_bit = bit(Event::fn);
    r.wc_bit = bit(Event::wc);
    r.ped_bit = bit(Event::ped);
  }
  r.residual = 1 - (r.ct_word + r.rc_word + r.fn_word + r.wc_word + r.fp_word + r.ped_word);
  return r;
}

}  // namespace mdsrel::oracle
