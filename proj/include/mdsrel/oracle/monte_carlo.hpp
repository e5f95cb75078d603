#pragma once

#include "mdsrel/oracle/code.hpp"
#include "mdsrel/rates.hpp"

#include <array>
#include <cstdint>

namespace mdsrel::oracle {

enum class Sampling {
  bits,     // flip each bit of every symbol with probability p; needs q = 2^b
  symbols,  // symbol error with probability 1 - q_s, uniform nonzero error value
};

struct SimulationConfig {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  Sampling sampling = Sampling::bits;
};

struct SimulationResult {
  std::uint64_t trials = 0;
  int k = 0;
  int bits = 0;  // 0 when bit errors were not measured
  std::array<std::uint64_t, kEventCount> events{};
  std::array<std::uint64_t, kEventCount> info_symbol_errors{};
  std::array<std::uint64_t, kEventCount> info_bit_errors{};

  Real word_rate(Event e) const;
  Real symbol_rate(Event e) const;
  Real bit_rate(Event e) const;  // requires bits > 0
  EventRates<Real> rates(Real p) const;
};

/// Binomial standard error sqrt(pi (1 - pi) / trials).
Real standard_error(Real pi, std::uint64_t trials);

/// Sends the zero codeword `trials` times. Trial i draws its noise from a
/// generator keyed by (seed, i), so results do not depend on the worker
/// count.
SimulationResult monte_carlo(const SystematicCode& code, double p, const SimulationConfig& config);

}  // namespace mdsrel::oracle
