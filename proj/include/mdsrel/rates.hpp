#pragma once

#include "mdsrel/combinatorics.hpp"
#include "mdsrel/enumerator.hpp"
#include "mdsrel/sphere.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mdsrel {

/// Float-mode scalar. 64-bit mantissa and a wide exponent: counts at n = 127
/// reach 1e305 and weights p_s^n go far below the double range.
using Real = long double;

enum class Level { word, symbol, bit };
enum class Mode { literal, corrected };
enum class Quantity { fn, wc, fp, ped };

/// Raised when a count that must be nonnegative comes out negative.
struct FormulaInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

/// Channel state at one operating point.
///
/// With bits per symbol b: q_s = (1-p)^b, p_s = (1 - (1-p)^b)/(q-1) and
/// p_bgs = p / (1 - (1-p)^b). Without b the input p is the symbol error
/// probability, so q_s = 1 - p, p_s = p/(q-1), and bit level is disabled.
template <class S>
struct ChannelPoint {
  S p{};
  S q_s{};
  S p_s{};
  std::optional<S> p_bgs;  // empty without b, or at p = 0
  bool bit_capable = false;
};

template <class S>
ChannelPoint<S> derive_channel(const S& p, const CodeParams& params);

/// Word-level probabilities of the six disjoint outcomes plus the
/// information-symbol and information-bit rates of the three that leave
/// information errors. Bit fields are empty when the channel has no b.
template <class S>
struct EventRates {
  S p{};
  S ct_word{}, rc_word{};
  S fn_word{}, fn_symbol{};
  S wc_word{}, wc_symbol{};
  S fp_word{};
  S ped_word{}, ped_symbol{};
  std::optional<S> fn_bit, wc_bit, ped_bit;
  S residual{};
};

/// Per received split weight r: how many (codeword, word) incidences the
/// radius-t spheres of the nonzero codewords put there, weighted three ways.
struct SphereAggregate {
  CodeParams params;
  std::vector<ExactInt> covered;   // sum_c A_c N_c^r
  std::vector<ExactInt> info;      // sum_c A_c N_c^r c1
  std::vector<ExactInt> changes;   // sum_c A_c (N D)_c^r, residual kernel

  std::size_t index(int r1, int r2) const { return static_cast<std::size_t>(r1) * (params.n - params.k + 1) + r2; }
};

/// Coverage of a single received cell by every nonzero codeword class.
struct CellCoverage {
  ExactInt covered, info, changes;
};
CellCoverage cell_coverage(const IrweTable& irwe, SplitWeight r);

SphereAggregate sphere_aggregate(const IrweTable& irwe, int workers = 1);

/// IRWE plus the lazily built sphere aggregate for one code.
class CodeAnalysis {
 public:
  explicit CodeAnalysis(const CodeParams& params);
  explicit CodeAnalysis(IrweTable irwe);

  const CodeParams& params() const { return irwe_.params(); }
  const IrweTable& irwe() const { return irwe_; }

  /// Built on first use (thread-safe) unless supplied beforehand.
  const SphereAggregate& spheres() const;
  void set_spheres(SphereAggregate agg);
  bool has_spheres() const;
  void set_workers(int w) { workers_ = w; }

 private:
  IrweTable irwe_;
  int workers_ = 1;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const SphereAggregate> spheres_;
};

template <class S>
S p_fn(const CodeAnalysis& a, const ChannelPoint<S>& pt, Level level);

template <class S>
S p_wc(const CodeAnalysis& a, const ChannelPoint<S>& pt, Level level, Mode mode);

/// Words of split weight (0, r) decoded to a nonzero codeword; t+1 <= r <= n-k.
ExactInt c_corrected_count(const IrweTable& irwe, int r);
ExactInt fp_count(const IrweTable& irwe, int r);

template <class S>
S p_fp(const CodeAnalysis& a, const ChannelPoint<S>& pt);

ExactInt ped_count(const IrweTable& irwe, int i1, int i2, Mode mode);

template <class S>
S p_ped(const CodeAnalysis& a, const ChannelPoint<S>& pt, Level level, Mode mode);

template <class S>
std::pair<S, S> trivial_rates(const CodeParams& params, const ChannelPoint<S>& pt);

template <class S>
EventRates<S> event_budget(const CodeAnalysis& a, const ChannelPoint<S>& pt, Mode mode);

template <class S>
using RateCurve = std::vector<std::pair<S, S>>;

/// Evaluates one quantity over a strictly increasing grid in [0, 1].
/// FP is word level only.
template <class S>
RateCurve<S> curve(const CodeAnalysis& a, const std::vector<S>& grid, Quantity quantity, Level level, Mode mode,
                   int workers = 1);

template <class S>
S to_scalar(const ExactInt& z);

}  // namespace mdsrel
