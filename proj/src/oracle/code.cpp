#include "mdsrel/oracle/code.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mdsrel::oracle {

SystematicCode::SystematicCode(FiniteField field, CodeParams params, std::vector<Symbol> generator)
    : field_(std::move(field)), params_(params), g_(std::move(generator)) {
  if (g_.size() != static_cast<std::size_t>(params_.k) * params_.n)
    throw std::invalid_argument("generator size does not match code parameters");
  for (int r = 0; r < params_.k; ++r)
    for (int c = 0; c < params_.k; ++c)
      if (this->generator(r, c) != (r == c ? 1 : 0)) throw std::invalid_argument("generator is not systematic");

  double size = 1;
  for (int i = 0; i < params_.k; ++i) size *= params_.q;
  if (size > double(1 << 20)) return;
  const auto total = static_cast<std::size_t>(size);
  codewords_.reserve(total);
  Word msg(params_.k, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t v = idx;
    for (int i = 0; i < params_.k; ++i) {
      msg[i] = static_cast<Symbol>(v % params_.q);
      v /= params_.q;
    }
    codewords_.push_back(encode(msg));
  }
}

Word SystematicCode::encode(std::span<const Symbol> message) const {
  Word out(params_.n, 0);
  for (int r = 0; r < params_.k; ++r) {
    if (message[r] == 0) continue;
    for (int c = 0; c < params_.n; ++c) out[c] = field_.add(out[c], field_.mul(message[r], generator(r, c)));
  }
  return out;
}

const std::vector<Word>& SystematicCode::codewords() const {
  if (codewords_.empty()) throw std::length_error("codeword enumeration limited to q^k <= 2^20");
  return codewords_;
}

bool is_nonsingular(const FiniteField& f, std::vector<Symbol> m, int size) {
  for (int col = 0; col < size; ++col) {
    int piv = -1;
    for (int r = col; r < size; ++r)
      if (m[r * size + col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    if (piv != col)
      for (int c = 0; c < size; ++c) std::swap(m[piv * size + c], m[col * size + c]);
    const Symbol iv = f.inv(m[col * size + col]);
    for (int r = col + 1; r < size; ++r) {
      const Symbol factor = f.mul(m[r * size + col], iv);
      if (factor == 0) continue;
      for (int c = col; c < size; ++c) m[r * size + c] = f.sub(m[r * size + c], f.mul(factor, m[col * size + c]));
    }
  }
  return true;
}

namespace {

// visits every subset of {0..n-1} of size m
template <class Fn>
void for_each_subset(int n, int m, Fn&& fn) {
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool SystematicCode::redundancy_totally_full_rank() const {
  const int k = params_.k, red = params_.redundancy();
  bool ok = true;
  for (int size = 1; size <= std::min(k, red) && ok; ++size)
    for_each_subset(k, size, [&](const std::vector<int>& rows) {
      if (!ok) return;
      for_each_subset(red, size, [&](const std::vector<int>& cols) {
        if (!ok) return;
        std::vector<Symbol> m(size * size);
        for (int a = 0; a < size; ++a)
          for (int b = 0; b < size; ++b) m[a * size + b] = redundancy(rows[a], cols[b]);
        if (!is_nonsingular(field_, std::move(m), size)) ok = false;
      });
    });
  return ok;
}

int SystematicCode::minimum_distance() const {
  int best = params_.n + 1;
  for (const auto& c : codewords()) {
    const int w = hamming_weight(c);
    if (w > 0) best = std::min(best, w);
  }
  return best;
}

SystematicCode rs_systematic(const FiniteField& field, int n, int k) {
  const int q = field.order();
  if (n > q + 1) throw std::invalid_argument("evaluation construction needs n <= q + 1");
  const CodeParams params = CodeParams::make(n, k, q, field.bits() > 0 ? std::optional<int>(field.bits()) : std::nullopt);

  // Vandermonde rows x^m, m = 0..k-1, evaluated at elements 0..n-1; with
  // n = q + 1 the last column is the point at infinity (leading coefficient).
  std::vector<Symbol> g(static_cast<std::size_t>(k) * n);
  for (int m = 0; m < k; ++m)
    for (int c = 0; c < n; ++c)
      g[m * n + c] = c == q ? Symbol(m == k - 1 ? 1 : 0) : field.pow(static_cast<Symbol>(c), static_cast<unsigned>(m));

  // Gauss-Jordan on the first k columns
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (g[r * n + col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("information set is singular");
    if (piv != col)
      for (int c = 0; c < n; ++c) std::swap(g[piv * n + c], g[col * n + c]);
    const Symbol iv = field.inv(g[col * n + col]);
    for (int c = 0; c < n; ++c) g[col * n + c] = field.mul(iv, g[col * n + c]);
    for (int r = 0; r < k; ++r) {
      if (r == col || g[r * n + col] == 0) continue;
      const Symbol factor = g[r * n + col];
      for (int c = 0; c < n; ++c) g[r * n + c] = field.sub(g[r * n + c], field.mul(factor, g[col * n + c]));
    }
  }

  SystematicCode code(field, params, std::move(g));
  double size = 1;
  for (int i = 0; i < k; ++i) size *= q;
  const bool mds = size <= double(1 << 20) ? code.minimum_distance() == params.min_distance()
                                           : code.redundancy_totally_full_rank();
  if (!mds) throw std::logic_error("constructed code is not MDS");
  return code;
}

int hamming_weight(std::span<const Symbol> w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](Symbol s) { return s != 0; }));
}

int hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

SplitWeight split_weight(std::span<const Symbol> w, int k) {
  return {hamming_weight(w.first(k)), hamming_weight(w.subspan(k))};
}

DecodeOutcome bdd_decode(const SystematicCode& code, std::span<const Symbol> word) {
  const int t = code.params().radius();
  const auto& cws = code.codewords();
  for (std::size_t idx = 0; idx < cws.size(); ++idx) {
    const Word& c = cws[idx];
    int d = 0;
    for (std::size_t i = 0; i < c.size() && d <= t; ++i) d += c[i] != word[i];
    if (d <= t) return {true, idx, d};
  }
  return {};
}

const char* event_name(Event e) {
  switch (e) {
    case Event::ct: return "CT";
    case Event::rc: return "RC";
    case Event::fn: return "FN";
    case Event::wc: return "WC";
    case Event::fp: return "FP";
    case Event::ped: return "PED";
  }
  return "?";
}

Event classify_event(const SystematicCode& code, std::span<const Symbol> received, std::size_t* decoded) {
  const int w = hamming_weight(received);
  const int t = code.params().radius();
  if (w == 0) return Event::ct;
  if (w <= t) return Event::rc;
  const DecodeOutcome out = bdd_decode(code, received);
  if (out.corrected) {
    if (decoded) *decoded = out.codeword;
    return out.distance == 0 ? Event::fn : Event::wc;
  }
  const bool info_clean = hamming_weight(received.first(code.params().k)) == 0;
  return info_clean ? Event::fp : Event::ped;
}

}  // namespace mdsrel::oracle
