#pragma once

#include "mdsrel/combinatorics.hpp"

#include <optional>
#include <vector>

namespace mdsrel {

/// Parameters of an [n, k] MDS code over an alphabet of size q.
///
/// When `bits` is set the alphabet is GF(2^bits) and bit-level rates are
/// available; otherwise only word and symbol levels are.
struct CodeParams {
  int n = 0;
  int k = 0;
  int q = 0;
  std::optional<int> bits;

  /// Validating constructor. Throws std::invalid_argument.
  static CodeParams make(int n, int k, int q, std::optional<int> bits = std::nullopt);
  /// GF(2^b) shorthand.
  static CodeParams binary_extension(int n, int k, int b);

  int redundancy() const { return n - k; }
  int min_distance() const { return n - k + 1; }
  int radius() const { return (n - k) / 2; }

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// A_{i,j}: number of codewords with i nonzero information symbols and j
/// nonzero redundancy symbols, for 0 <= i <= k and 0 <= j <= n - k.
class IrweTable {
 public:
  IrweTable() = default;
  explicit IrweTable(CodeParams params);

  const CodeParams& params() const { return params_; }
  const ExactInt& operator()(int i, int j) const { return counts_[index(i, j)]; }
  ExactInt& operator()(int i, int j) { return counts_[index(i, j)]; }

  ExactInt total() const;

  friend bool operator==(const IrweTable& a, const IrweTable& b) {
    return a.params_ == b.params_ && a.counts_ == b.counts_;
  }

 private:
  std::size_t index(int i, int j) const;

  CodeParams params_;
  std::vector<ExactInt> counts_;
};

/// Totally nonzero solutions of a homogeneous system with `vars` unknowns
/// and `eqs` equations whose coefficient matrix has totally full rank.
///
/// Recurrence form, memoized per thread. eqs == 0 is accepted and gives
/// (q-1)^vars (every nonzero assignment solves the empty system).
ExactInt f_recurrence(int q, int vars, int eqs);

/// Closed form of the same count; requires vars >= 1 and eqs >= 1.
ExactInt f_closed(int q, int vars, int eqs);

/// A_{i,j} by inclusion-exclusion over f.
ExactInt irwe_inclusion_exclusion(const CodeParams& p, int i, int j);

/// A_{i,j} by the closed single-sum formula. Production path.
ExactInt irwe_closed(const CodeParams& p, int i, int j);

/// A_{i,j} as the two-block partition weight enumerator (double
/// alternating sum over q^{k-n+j1+j2} - 1). The formula counts nonzero
/// codewords, so the zero word is added back at (0, 0).
ExactInt pwe_partition(const CodeParams& p, int i, int j);

enum class IrweMethod { closed, inclusion_exclusion, partition };

IrweTable irwe_table(const CodeParams& p, IrweMethod method = IrweMethod::closed);

enum class WeightMethod { marginal, mds_formula, corollary };

/// A_r for r = 0..n.
std::vector<ExactInt> weight_distribution(const CodeParams& p, WeightMethod method);

/// Marginal of an existing table: A_r = sum_i A_{i, r-i}.
std::vector<ExactInt> weight_distribution(const IrweTable& table);

}  // namespace mdsrel
