#pragma once

#include "mdsrel/enumerator.hpp"
#include "mdsrel/oracle/field.hpp"
#include "mdsrel/sphere.hpp"

#include <optional>
#include <span>
#include <vector>

namespace mdsrel::oracle {

using Word = std::vector<Symbol>;

/// Linear code with generator G = (I_k | R), stored row-major.
class SystematicCode {
 public:
  SystematicCode(FiniteField field, CodeParams params, std::vector<Symbol> generator);

  const FiniteField& field() const { return field_; }
  const CodeParams& params() const { return params_; }
  Symbol generator(int row, int col) const { return g_[static_cast<std::size_t>(row) * params_.n + col]; }
  Symbol redundancy(int row, int col) const { return generator(row, params_.k + col); }

  Word encode(std::span<const Symbol> message) const;

  /// All q^k codewords, index = message in base-q little-endian digits.
  /// Built at construction when q^k <= 2^20; throws otherwise.
  const std::vector<Word>& codewords() const;

  /// True when every square submatrix of R is nonsingular.
  bool redundancy_totally_full_rank() const;

  /// Minimum weight over nonzero codewords (enumeration).
  int minimum_distance() const;

 private:
  FiniteField field_;
  CodeParams params_;
  std::vector<Symbol> g_;
  std::vector<Word> codewords_;
};

/// Reed-Solomon evaluation code at the field elements 0, 1, ..., n-1 (plus
/// the point at infinity when n = q + 1), row-reduced to systematic form.
/// Checks that the result is MDS.
SystematicCode rs_systematic(const FiniteField& field, int n, int k);

/// Determinant-free rank test over the field.
bool is_nonsingular(const FiniteField& f, std::vector<Symbol> square, int size);

int hamming_weight(std::span<const Symbol> w);
int hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b);
SplitWeight split_weight(std::span<const Symbol> w, int k);

/// Outcome of bounded-distance reproducing decoding.
struct DecodeOutcome {
  bool corrected = false;        // false: received word reproduced
  std::size_t codeword = 0;      // index into codewords() when corrected
  int distance = 0;
};

/// Exhaustive scan for the unique codeword within distance t.
DecodeOutcome bdd_decode(const SystematicCode& code, std::span<const Symbol> word);

enum class Event { ct, rc, fn, wc, fp, ped };
inline constexpr int kEventCount = 6;
const char* event_name(Event e);

/// Classifies a received word assuming the zero codeword was sent.
/// When the word decodes to a nonzero codeword, its index is stored in
/// `decoded` (for WC and FN).
Event classify_event(const SystematicCode& code, std::span<const Symbol> received,
                     std::size_t* decoded = nullptr);

}  // namespace mdsrel::oracle
