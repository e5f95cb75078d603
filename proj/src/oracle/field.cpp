#include "mdsrel/oracle/field.hpp"

#include <stdexcept>
#include <string>

namespace mdsrel::oracle {

namespace {

bool is_prime(int v) {
  if (v < 2) return false;
  for (int d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// modulus bit patterns including the leading term
int binary_modulus(int bits) {
  switch (bits) {
    case 1: return 0b11;
    case 2: return 0b111;
    case 3: return 0b1011;
    case 4: return 0b10011;
    case 5: return 0b100101;
    case 6: return 0b1000011;
    case 7: return 0b10000011;
    case 8: return 0b100011011;
    default: return 0;
  }
}

int poly_mulmod(int a, int b, int bits, int modulus) {
  int r = 0;
  for (int i = 0; i < bits; ++i)
    if ((b >> i) & 1) r ^= a << i;
  for (int s = 2 * bits - 2; s >= bits; --s)
    if ((r >> s) & 1) r ^= modulus << (s - bits);
  return r;
}

}  // namespace

Symbol FiniteField::inv(Symbol a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Symbol FiniteField::pow(Symbol a, unsigned e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<unsigned long>(log_[a]) * e) % (q_ - 1)];
}

FiniteField make_field(int q) {
  FiniteField f;
  f.q_ = q;
  std::vector<int> mul_table;
  auto mul_raw = [&](int a, int b) { return mul_table[a * q + b]; };

  if (q >= 2 && q <= 251 && is_prime(q)) {
    f.p_ = q;
    f.bits_ = q == 2 ? 1 : 0;
    f.add_.resize(q * q);
    mul_table.resize(q * q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        f.add_[a * q + b] = static_cast<Symbol>((a + b) % q);
        mul_table[a * q + b] = (a * b) % q;
      }
  } else {
    int bits = 0;
    while ((1 << bits) < q) ++bits;
    if ((1 << bits) != q || bits > 8) throw std::invalid_argument("unsupported field order " + std::to_string(q));
    f.p_ = 2;
    f.bits_ = bits;
    const int modulus = binary_modulus(bits);
    f.add_.resize(q * q);
    mul_table.resize(q * q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        f.add_[a * q + b] = static_cast<Symbol>(a ^ b);
        mul_table[a * q + b] = poly_mulmod(a, b, bits, modulus);
      }
  }

  f.neg_.resize(q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (f.add_[a * q + b] == 0) f.neg_[a] = static_cast<Symbol>(b);

  // find a primitive element and build log tables
  for (int g = (q == 2 ? 1 : 2); g < q; ++g) {
    std::vector<int> seen(q, -1);
    int x = 1, ord = 0;
    do {
      seen[x] = ord;
      x = mul_raw(x, g);
      ++ord;
    } while (x != 1 && ord < q);
    if (ord != q - 1) continue;
    f.exp_.resize(2 * (q - 1));
    f.log_.assign(q, 0);
    x = 1;
    for (int e = 0; e < 2 * (q - 1); ++e) {
      f.exp_[e] = static_cast<Symbol>(x);
      if (e < q - 1) f.log_[x] = e;
      x = mul_raw(x, g);
    }
    return f;
  }
  throw std::logic_error("no primitive element found; modulus not primitive");
}

}  // namespace mdsrel::oracle
