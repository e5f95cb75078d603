#include "mdsrel/combinatorics.hpp"

#include <stdexcept>

namespace mdsrel {

namespace {

// Rows of Pascal's triangle grown on demand. Thread-local, so no locking.
constexpr long kTableRows = 1024;

struct PascalTable {
  std::vector<std::vector<ExactInt>> rows;

  const ExactInt& at(long a, long r) {
    while (static_cast<long>(rows.size()) <= a) {
      const long m = static_cast<long>(rows.size());
      std::vector<ExactInt> row(m + 1);
      row[0] = 1;
      row[m] = 1;
      for (long x = 1; x < m; ++x) row[x] = rows[m - 1][x - 1] + rows[m - 1][x];
      rows.push_back(std::move(row));
    }
    return rows[a][r];
  }
};

const ExactInt kZero{0};

}  // namespace

const ExactInt& binom(long a, long r) {
  if (a < 0 || r < 0 || r > a) return kZero;
  if (a >= kTableRows) throw std::out_of_range("binom: upper index too large for the table");
  thread_local PascalTable table;
  return table.at(a, r);
}

ExactInt int_pow(long base, unsigned long exp) {
  ExactInt out;
  ExactInt b{base};
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);  // GMP defines 0^0 = 1
  return out;
}

namespace {

void add(std::vector<IdentityViolation>& out, const char* name, std::initializer_list<long> args) {
  std::string s;
  for (long a : args) {
    if (!s.empty()) s += ',';
    s += std::to_string(a);
  }
  out.push_back({name, s});
}

ExactInt sign(long e) { return (e % 2 == 0) ? ExactInt{1} : ExactInt{-1}; }

}  // namespace

std::vector<IdentityViolation> identity_suite(int bound) {
  if (bound < 1 || bound > 40) throw std::invalid_argument("identity_suite: bound must be in [1, 40]");
  const long B = bound;
  std::vector<IdentityViolation> bad;

  for (long a = -B; a <= B; ++a)
    for (long r = -B; r <= B; ++r)
      if ((a < 0 || r < 0 || r > a) && binom(a, r) != 0) add(bad, "zero-outside", {a, r});

  for (long a = 0; a <= B; ++a)
    for (long b = 0; b <= B; ++b)
      for (long r = 0; r <= B; ++r) {
        ExactInt s = 0;
        for (long k = 0; k <= r; ++k) s += binom(a, k) * binom(b, r - k);
        if (s != binom(a + b, r)) add(bad, "vandermonde", {a, b, r});
      }

  for (long a = 0; a <= B; ++a)
    for (long g = 0; g <= B; ++g)
      for (long k = 0; k <= B; ++k)
        if (binom(a, g) * binom(a - g, k) != binom(a, k) * binom(a - k, g)) add(bad, "product-1", {a, g, k});

  for (long a = 0; a <= B; ++a)
    for (long k = 1; k <= B; ++k)
      if (a * binom(a - 1, k - 1) != k * binom(a, k)) add(bad, "product-2", {a, k});

  for (long a = 0; a <= B; ++a)
    for (long b = 0; b <= B; ++b)
      for (long g = 0; g <= B; ++g)
        if (binom(a, b) * binom(b, g) != binom(a, g) * binom(a - g, b - g)) add(bad, "product-3", {a, b, g});

  for (long a = 1; a <= B; ++a)
    for (long k = 0; k <= B; ++k) {
      ExactInt s = 0;
      for (long g = 0; g <= k; ++g) s += sign(g) * binom(a, g);
      if (s != sign(k) * binom(a - 1, k)) add(bad, "alternating", {a, k});
    }

  for (long b = 0; b <= B; ++b)
    for (long d = 1; d <= b; ++d)
      for (long a = 0; a <= b - d; ++a) {
        ExactInt s = 0;
        for (long k = 0; k <= a; ++k) s += binom(b - d - k, a - k) * binom(d + k - 1, k);
        if (s != binom(b, a)) add(bad, "sum-product", {b, a, d});
      }

  for (long a = 1; a <= B; ++a)
    for (long m = 0; m < a; ++m) {
      ExactInt s = 0;
      for (long x = 0; x <= a; ++x) s += sign(a - x) * binom(a, x) * int_pow(x, static_cast<unsigned long>(m));
      if (s != 0) add(bad, "finite-diff", {a, m});
    }

  return bad;
}

}  // namespace mdsrel
