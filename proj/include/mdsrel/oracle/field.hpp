#pragma once

#include <cstdint>
#include <vector>

namespace mdsrel::oracle {

using Symbol = std::uint8_t;

/// GF(q) for q prime or q = 2^b (b <= 8), with full log/antilog tables.
///
/// Elements are encoded as integers in [0, q). Prime fields use residues;
/// binary extensions use the polynomial-basis bit pattern, reduced by a
/// fixed modulus:
///   GF(4) x^2+x+1, GF(8) x^3+x+1, GF(16) x^4+x+1, GF(32) x^5+x^2+1,
///   GF(64) x^6+x+1, GF(128) x^7+x+1, GF(256) x^8+x^4+x^3+x+1.
class FiniteField {
 public:
  int order() const { return q_; }
  int characteristic() const { return p_; }
  bool is_binary_extension() const { return p_ == 2 && q_ > 2; }
  /// Bits per symbol when q is a power of two, else 0.
  int bits() const { return bits_; }

  Symbol add(Symbol a, Symbol b) const { return add_[a * q_ + b]; }
  Symbol sub(Symbol a, Symbol b) const { return add(a, neg_[b]); }
  Symbol neg(Symbol a) const { return neg_[a]; }
  Symbol mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
  Symbol pow(Symbol a, unsigned e) const;

  friend FiniteField make_field(int q);

 private:
  int q_ = 0, p_ = 0, bits_ = 0;
  std::vector<Symbol> add_;
  std::vector<Symbol> neg_;
  std::vector<Symbol> exp_;  // doubled so log a + log b never wraps
  std::vector<int> log_;
};

/// Throws std::invalid_argument for unsupported q.
FiniteField make_field(int q);

}  // namespace mdsrel::oracle
