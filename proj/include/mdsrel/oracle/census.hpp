#pragma once

#include "mdsrel/oracle/code.hpp"
#include "mdsrel/rates.hpp"

#include <array>
#include <cstdint>

namespace mdsrel::oracle {

/// rows x cols Cauchy matrix 1/(x_r - y_c) with x_r = r and y_c = rows + c.
/// Every square submatrix is nonsingular. Needs rows + cols <= q.
std::vector<Symbol> cauchy_matrix(const FiniteField& f, int rows, int cols);

/// Number of solutions of M x = 0 with every x_c nonzero, by enumeration
/// of the (q-1)^cols candidates.
ExactInt count_totally_nonzero(const FiniteField& f, const std::vector<Symbol>& m, int rows, int cols);

/// Codewords counted by split weight. Needs q^k <= 2^20.
IrweTable census_irwe(const SystematicCode& code);

/// Ball members around one codeword, by split weight of the member.
///
/// `change_total` sums, over the members, the information positions where
/// the codeword is nonzero and differs from the member: the symbols a
/// decoder outputting the codeword gets wrong although the channel did not
/// put that value there.
struct BallCell {
  ExactInt count;
  ExactInt change_total;
};

/// Whole radius-t ball of `codeword`, indexed r1 * (n-k+1) + r2.
std::vector<BallCell> census_ball(const SystematicCode& code, std::span<const Symbol> codeword);

BallCell census_sphere(const SystematicCode& code, std::span<const Symbol> codeword, SplitWeight r);

/// Integer tallies of a full classification of the word space, by event and
/// received weight.
struct EventTally {
  int n = 0;
  // [event][weight]
  std::array<std::vector<std::uint64_t>, kEventCount> words;
  // information symbols in error after decoding
  std::array<std::vector<std::uint64_t>, kEventCount> info_symbols;
  // of those, symbols left wrong by the decoder (value not from the channel)
  std::array<std::vector<std::uint64_t>, kEventCount> decoder_symbols;

  std::uint64_t total() const;
};

/// Classifies all q^n words. Needs q^n <= 2^24 and q^k <= 2^20.
EventTally census_tally(const SystematicCode& code, int workers = 1);

/// Exact event rates from a tally at one channel point.
EventRates<Rational> tally_rates(const EventTally& tally, const CodeParams& params, const ChannelPoint<Rational>& pt);

inline EventRates<Rational> census_events(const SystematicCode& code, const ChannelPoint<Rational>& pt,
                                          int workers = 1) {
  return tally_rates(census_tally(code, workers), code.params(), pt);
}

}  // namespace mdsrel::oracle
