#include "mdsrel/enumerator.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace mdsrel {

namespace {

ExactInt sign(long e) { return (e % 2 == 0) ? ExactInt{1} : ExactInt{-1}; }

ExactInt upow(long base, long exp) { return exp < 0 ? ExactInt{0} : int_pow(base, static_cast<unsigned long>(exp)); }

}  // namespace

CodeParams CodeParams::make(int n, int k, int q, std::optional<int> bits) {
  if (!(0 < k && k < n)) throw std::invalid_argument("code parameters need 0 < k < n");
  if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
  if (n > 255) throw std::invalid_argument("code length above 255 is not supported");
  if (bits) {
    if (*bits < 1 || *bits > 16 || (1 << *bits) != q)
      throw std::invalid_argument("bits per symbol must satisfy q = 2^b");
  }
  return CodeParams{n, k, q, bits};
}

CodeParams CodeParams::binary_extension(int n, int k, int b) {
  if (b < 1 || b > 16) throw std::invalid_argument("bits per symbol out of range");
  return make(n, k, 1 << b, b);
}

IrweTable::IrweTable(CodeParams params)
    : params_(params), counts_(static_cast<std::size_t>(params.k + 1) * (params.n - params.k + 1)) {}

std::size_t IrweTable::index(int i, int j) const {
  const int r = params_.redundancy();
  if (i < 0 || i > params_.k || j < 0 || j > r) throw std::out_of_range("IRWE index out of range");
  return static_cast<std::size_t>(i) * (r + 1) + j;
}

ExactInt IrweTable::total() const {
  ExactInt s = 0;
  for (const auto& c : counts_) s += c;
  return s;
}

ExactInt f_recurrence(int q, int vars, int eqs) {
  if (q < 2 || vars < 0 || eqs < 0) throw std::invalid_argument("f_recurrence: bad arguments");
  if (eqs == 0) return vars == 0 ? ExactInt{0} : upow(q - 1, vars);
  if (vars <= eqs) return 0;

  thread_local std::map<std::tuple<int, int, int>, ExactInt> memo;
  const auto key = std::make_tuple(q, vars, eqs);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  ExactInt v = upow(q - 1, vars - eqs);
  for (int h = 1; h <= eqs; ++h) v -= binom(eqs, h) * f_recurrence(q, vars - h, eqs);
  memo.emplace(key, v);
  return v;
}

ExactInt f_closed(int q, int vars, int eqs) {
  if (q < 2 || vars < 1 || eqs < 1) throw std::invalid_argument("f_closed: needs vars, eqs >= 1");
  ExactInt s = 0;
  for (long l = 0; l <= vars - eqs - 1; ++l) s += sign(l) * binom(eqs + l - 1, l) * upow(q - 1, vars - eqs - l);
  return s;
}

ExactInt irwe_inclusion_exclusion(const CodeParams& p, int i, int j) {
  const int r = p.redundancy();
  if (i < 0 || i > p.k || j < 0 || j > r) throw std::out_of_range("IRWE index out of range");
  if (i == 0) return j == 0 ? 1 : 0;
  ExactInt s = 0;
  for (int l = 0; l <= j; ++l) s += sign(l) * binom(j, l) * f_recurrence(p.q, i, r - j + l);
  return binom(p.k, i) * binom(r, j) * s;
}

ExactInt irwe_closed(const CodeParams& p, int i, int j) {
  const int r = p.redundancy();
  if (i < 0 || i > p.k || j < 0 || j > r) throw std::out_of_range("IRWE index out of range");
  if (i == 0) return j == 0 ? 1 : 0;
  const long top = static_cast<long>(i) - r + j;  // exponent of (q-1) at H = 0
  ExactInt s = 0;
  for (long h = 0; h <= top - 1; ++h) s += sign(h) * binom(r + h - 1, h) * upow(p.q - 1, top - h);
  return binom(p.k, i) * binom(r, j) * s;
}

ExactInt pwe_partition(const CodeParams& p, int i, int j) {
  const int r = p.redundancy();
  if (i < 0 || i > p.k || j < 0 || j > r) throw std::out_of_range("IRWE index out of range");
  if (i == 0 && j == 0) return 1;
  const long d = p.min_distance();
  ExactInt outer = 0;
  for (long j1 = 0; j1 <= i; ++j1) {
    ExactInt inner = 0;
    for (long j2 = std::max(0L, d - j1); j2 <= j; ++j2) {
      // q^{k-n+j1+j2} with k-n+j1+j2 >= 1 on this range
      inner += binom(j, j2) * sign(j - j2) * (upow(p.q, p.k - p.n + j1 + j2) - 1);
    }
    outer += binom(i, j1) * sign(i - j1) * inner;
  }
  return binom(p.k, i) * binom(r, j) * outer;
}

IrweTable irwe_table(const CodeParams& p, IrweMethod method) {
  IrweTable t(p);
  for (int i = 0; i <= p.k; ++i)
    for (int j = 0; j <= p.redundancy(); ++j) {
      switch (method) {
        case IrweMethod::closed: t(i, j) = irwe_closed(p, i, j); break;
        case IrweMethod::inclusion_exclusion: t(i, j) = irwe_inclusion_exclusion(p, i, j); break;
        case IrweMethod::partition: t(i, j) = pwe_partition(p, i, j); break;
      }
    }
  return t;
}

std::vector<ExactInt> weight_distribution(const IrweTable& table) {
  const auto& p = table.params();
  std::vector<ExactInt> a(p.n + 1);
  for (int i = 0; i <= p.k; ++i)
    for (int j = 0; j <= p.redundancy(); ++j) a[i + j] += table(i, j);
  return a;
}

std::vector<ExactInt> weight_distribution(const CodeParams& p, WeightMethod method) {
  if (method == WeightMethod::marginal) return weight_distribution(irwe_table(p));

  const long n = p.n, d = p.min_distance(), red = p.redundancy();
  std::vector<ExactInt> a(p.n + 1);
  a[0] = 1;
  for (long r = d; r <= n; ++r) {
    ExactInt s = 0;
    if (method == WeightMethod::mds_formula) {
      for (long j = 0; j <= r - d; ++j) s += sign(j) * binom(r, j) * upow(p.q, r - j + 1 - d);
      for (long j = r - d + 1; j <= r; ++j) s += sign(j) * binom(r, j);
    } else {
      for (long h = 0; h <= r - red - 1; ++h) s += sign(h) * binom(red + h - 1, h) * upow(p.q - 1, r - red - h);
    }
    a[r] = binom(n, r) * s;
  }
  return a;
}

}  // namespace mdsrel
