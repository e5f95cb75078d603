#pragma once

#include "mdsrel/combinatorics.hpp"
#include "mdsrel/enumerator.hpp"

namespace mdsrel {

/// Weight of a word split between the k information coordinates and the
/// n - k redundancy coordinates.
struct SplitWeight {
  int info = 0;
  int red = 0;

  int total() const { return info + red; }
  friend bool operator==(const SplitWeight&, const SplitWeight&) = default;
  friend auto operator<=>(const SplitWeight&, const SplitWeight&) = default;
};

/// How decoder-introduced information errors are counted per sphere word.
///
/// `residual` counts information positions where the decoded codeword is
/// nonzero and differs from the received word: (c1 - r1 + i) + j in the
/// index set of the unified count, for every sign of r1 - c1. `printed`
/// switches to the kernel i + j when r1 > c1, read with the unified i.
enum class ChangeKernel { residual, printed };

struct SphereStats {
  ExactInt count;         // N
  ExactInt change_total;  // N * D, summed over the N words
  int alpha = 0;
  int beta = 0;

  /// Average change count D; 0 when the cell is empty.
  Rational average_change() const;
};

/// Number of words of split weight r within Hamming distance t of a
/// codeword of split weight c.
ExactInt sphere_count(const CodeParams& p, SplitWeight c, SplitWeight r);

/// Same count, dispatched over the sign pattern of (r1 - c1, r2 - c2) and
/// evaluated by the matching per-case expansion.
ExactInt sphere_count_cases(const CodeParams& p, SplitWeight c, SplitWeight r);

SphereStats decoder_change_stats(const CodeParams& p, SplitWeight c, SplitWeight r,
                                 ChangeKernel kernel = ChangeKernel::residual);

/// sum_{s <= t} C(n, s) (q-1)^s
ExactInt ball_volume(const CodeParams& p);

/// True when the radius-t sphere around weight c can reach weight r.
inline bool sphere_reaches(const CodeParams& p, SplitWeight c, SplitWeight r) {
  const int dist = std::abs(c.info - r.info) + std::abs(c.red - r.red);
  return dist <= p.radius();
}

}  // namespace mdsrel
