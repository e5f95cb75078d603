#include "mdsrel/oracle/monte_carlo.hpp"

#include "mdsrel/parallel.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace mdsrel::oracle {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct TrialRng {
  std::uint64_t state;
  TrialRng(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t s = seed;
    state = splitmix64(s) ^ trial * 0xd1b54a32d192ed03ULL;
  }
  std::uint64_t next() { return splitmix64(state); }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace

Real SimulationResult::word_rate(Event e) const {
  return static_cast<Real>(events[static_cast<int>(e)]) / static_cast<Real>(trials);
}

Real SimulationResult::symbol_rate(Event e) const {
  return static_cast<Real>(info_symbol_errors[static_cast<int>(e)]) / (static_cast<Real>(trials) * k);
}

Real SimulationResult::bit_rate(Event e) const {
  if (bits == 0) throw std::logic_error("bit errors were not measured");
  return static_cast<Real>(info_bit_errors[static_cast<int>(e)]) / (static_cast<Real>(trials) * k * bits);
}

EventRates<Real> SimulationResult::rates(Real p) const {
  EventRates<Real> r;
  r.p = p;
  r.ct_word = word_rate(Event::ct);
  r.rc_word = word_rate(Event::rc);
  r.fn_word = word_rate(Event::fn);
  r.fn_symbol = symbol_rate(Event::fn);
  r.wc_word = word_rate(Event::wc);
  r.wc_symbol = symbol_rate(Event::wc);
  r.fp_word = word_rate(Event::fp);
  r.ped_word = word_rate(Event::ped);
  r.ped_symbol = symbol_rate(Event::ped);
  if (bits > 0) {
    r.fn_bit = bit_rate(Event::fn);
    r.wc_bit = bit_rate(Event::wc);
    r.ped_bit = bit_rate(Event::ped);
  }
  r.residual = 1 - (r.ct_word + r.rc_word + r.fn_word + r.wc_word + r.fp_word + r.ped_word);
  return r;
}

Real standard_error(Real pi, std::uint64_t trials) {
  return std::sqrt(pi * (1 - pi) / static_cast<Real>(trials));
}

SimulationResult monte_carlo(const SystematicCode& code, double p, const SimulationConfig& config) {
  const auto& params = code.params();
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("error probability must lie in [0, 1]");
  const bool by_bits = config.sampling == Sampling::bits;
  const int b = code.field().bits();
  if (by_bits && b == 0) throw std::invalid_argument("bit sampling needs q = 2^b");

  const int n = params.n, k = params.k, q = params.q;
  const double symbol_error = by_bits ? 1 - std::pow(1 - p, b) : p;
  const auto& cws = code.codewords();

  const int w = std::max(1, config.workers);
  std::vector<SimulationResult> parts(static_cast<std::size_t>(w));
  parallel_for(parts.size(), w, [&](std::size_t worker) {
    SimulationResult& acc = parts[worker];
    Word y(n);
    for (std::uint64_t trial = worker; trial < config.trials; trial += static_cast<std::uint64_t>(w)) {
      TrialRng rng(config.seed, trial);
      for (int i = 0; i < n; ++i) {
        Symbol s = 0;
        if (by_bits) {
          for (int bit = 0; bit < b; ++bit)
            if (rng.uniform() < p) s ^= static_cast<Symbol>(1u << bit);
        } else if (rng.uniform() < symbol_error) {
          s = static_cast<Symbol>(1 + rng.next() % static_cast<std::uint64_t>(q - 1));
        }
        y[i] = s;
      }
      std::size_t decoded = 0;
      const Event ev = classify_event(code, y, &decoded);
      const int e = static_cast<int>(ev);
      acc.events[e] += 1;
      const Word* out = nullptr;
      if (ev == Event::wc) out = &cws[decoded];
      else if (ev == Event::fn || ev == Event::ped) out = &y;
      if (!out) continue;
      for (int l = 0; l < k; ++l) {
        const Symbol s = (*out)[l];
        if (s == 0) continue;
        acc.info_symbol_errors[e] += 1;
        acc.info_bit_errors[e] += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(s)));
      }
    }
  });

  SimulationResult r;
  r.trials = config.trials;
  r.k = k;
  r.bits = b;
  for (const auto& part : parts)
    for (int e = 0; e < kEventCount; ++e) {
      r.events[e] += part.events[e];
      r.info_symbol_errors[e] += part.info_symbol_errors[e];
      r.info_bit_errors[e] += part.info_bit_errors[e];
    }
  return r;
}

}  // namespace mdsrel::oracle
