#include "mdsrel/sphere.hpp"

#include <vector>

namespace mdsrel {

namespace {

// floor division for possibly negative numerators
int floor_half(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

struct Geometry {
  int n, k, q, t;
  int c1, c2, r1, r2;
  int alpha, beta;
};

Geometry geometry(const CodeParams& p, SplitWeight c, SplitWeight r) {
  Geometry g{p.n, p.k, p.q, p.radius(), c.info, c.red, r.info, r.red, 0, 0};
  g.alpha = g.t - std::abs(g.c1 - g.r1) - std::abs(g.c2 - g.r2);
  g.beta = g.t - g.c1 + g.r1 - g.c2 + g.r2;
  return g;
}

ExactInt pw(long base, long e) { return int_pow(base, static_cast<unsigned long>(e)); }

// Summand shared by the four per-case expansions before the Vandermonde
// collapse of the j-sum.
ExactInt case_term(const Geometry& g, int J, int j, int I, int i) {
  return binom(g.c1, j) * binom(g.c2, J - j) * binom(g.c1 - j, g.c1 - g.r1 + i) *
         binom(g.c2 - J + j, g.c2 - g.r2 + I - i) * binom(g.k - g.c1, i) * binom(g.n - g.k - g.c2, I - i);
}

// r1 <= c1, r2 <= c2
ExactInt case_shrink_shrink(const Geometry& g) {
  ExactInt total = 0;
  for (int J = 0; J <= g.alpha; ++J)
    for (int I = 0; I <= floor_half(g.alpha - J); ++I) {
      ExactInt inner = 0;
      for (int j = 0; j <= J; ++j)
        for (int i = 0; i <= I; ++i) inner += case_term(g, J, j, I, i);
      total += pw(g.q - 2, J) * pw(g.q - 1, I) * inner;
    }
  return total;
}

// r1 <= c1, r2 > c2; I' = I + r2 - c2
ExactInt case_shrink_grow(const Geometry& g) {
  ExactInt total = 0;
  for (int J = 0; J <= g.alpha; ++J)
    for (int Ip = 0; Ip <= floor_half(g.alpha - J) + g.r2 - g.c2; ++Ip) {
      ExactInt inner = 0;
      for (int j = 0; j <= J; ++j)
        for (int i = 0; i <= Ip; ++i) inner += case_term(g, J, j, Ip, i);
      total += pw(g.q - 2, J) * pw(g.q - 1, Ip) * inner;
    }
  return total;
}

// r1 > c1, r2 <= c2; I' = I + r1 - c1, i'' = I' - i'
ExactInt case_grow_shrink(const Geometry& g) {
  ExactInt total = 0;
  for (int J = 0; J <= g.alpha; ++J)
    for (int Ip = 0; Ip <= floor_half(g.alpha - J) + g.r1 - g.c1; ++Ip) {
      ExactInt inner = 0;
      for (int j = 0; j <= J; ++j)
        for (int i2 = 0; i2 <= Ip; ++i2)
          inner += binom(g.k - g.c1, i2) * binom(g.n - g.k - g.c2, Ip - i2) * binom(g.c1, j) *
                   binom(g.c2, J - j) * binom(g.c1 - j, g.c1 - g.r1 + i2) *
                   binom(g.c2 - J + j, g.c2 - g.r2 + Ip - i2);
      total += pw(g.q - 2, J) * pw(g.q - 1, Ip) * inner;
    }
  return total;
}

// r1 > c1, r2 > c2; I'' = I + (r1 - c1) + (r2 - c2)
ExactInt case_grow_grow(const Geometry& g) {
  ExactInt total = 0;
  for (int J = 0; J <= g.alpha; ++J)
    for (int Ipp = 0; Ipp <= floor_half(g.alpha - J) + g.r1 - g.c1 + g.r2 - g.c2; ++Ipp) {
      ExactInt inner = 0;
      for (int j = 0; j <= J; ++j)
        for (int i2 = 0; i2 <= Ipp; ++i2)
          inner += binom(g.k - g.c1, i2) * binom(g.n - g.k - g.c2, Ipp - i2) * binom(g.c1, j) *
                   binom(g.c2, J - j) * binom(g.c1 - j, g.c1 - g.r1 + i2) *
                   binom(g.c2 - J + j, g.c2 - g.r2 + Ipp - i2);
      total += pw(g.q - 2, J) * pw(g.q - 1, Ipp) * inner;
    }
  return total;
}

}  // namespace

Rational SphereStats::average_change() const {
  if (count == 0) return Rational{0};
  Rational d(change_total, count);
  d.canonicalize();
  return d;
}

SphereStats decoder_change_stats(const CodeParams& p, SplitWeight c, SplitWeight r, ChangeKernel kernel) {
  const Geometry g = geometry(p, c, r);
  SphereStats out;
  out.count = 0;
  out.change_total = 0;
  out.alpha = g.alpha;
  out.beta = g.beta;
  if (g.alpha < 0) return out;

  const int w = g.r1 + g.r2;
  const bool printed_grow = kernel == ChangeKernel::printed && g.r1 > g.c1;
  const int top_i = floor_half(g.beta);

  for (int I = 0; I <= top_i; ++I) {
    // The i-sum does not depend on J; collect it with the two change weights.
    ExactInt s = 0, s_kept = 0, s_moved = 0;
    for (int i = 0; i <= I; ++i) {
      ExactInt term = binom(g.c1, g.r1 - i) * binom(g.c2, g.r2 - I + i) * binom(g.k - g.c1, i) *
                      binom(g.n - g.k - g.c2, I - i);
      if (term == 0) continue;
      const long kept = printed_grow ? i : g.c1 - g.r1 + i;
      s_kept += term * kept;
      s_moved += term * (g.r1 - i);
      s += term;
    }
    if (s == 0) continue;

    ExactInt n_acc = 0, d_acc = 0;
    for (int J = 0; J <= g.alpha && 2 * I + J <= g.beta; ++J) {
      const ExactInt qj = pw(g.q - 2, J);
      n_acc += qj * binom(w - I, J) * s;
      d_acc += qj * (binom(w - I, J) * s_kept + binom(w - I - 1, J - 1) * s_moved);
    }
    const ExactInt qi = pw(g.q - 1, I);
    out.count += qi * n_acc;
    out.change_total += qi * d_acc;
  }
  return out;
}

ExactInt sphere_count(const CodeParams& p, SplitWeight c, SplitWeight r) {
  const Geometry g = geometry(p, c, r);
  if (g.alpha < 0) return 0;
  const int w = g.r1 + g.r2;
  ExactInt total = 0;
  for (int J = 0; J <= g.alpha; ++J)
    for (int I = 0; I <= floor_half(g.beta - J); ++I) {
      ExactInt inner = 0;
      for (int i = 0; i <= I; ++i)
        inner += binom(g.c1, g.r1 - i) * binom(g.c2, g.r2 - I + i) * binom(g.k - g.c1, i) *
                 binom(g.n - g.k - g.c2, I - i);
      total += pw(g.q - 2, J) * pw(g.q - 1, I) * binom(w - I, J) * inner;
    }
  return total;
}

ExactInt sphere_count_cases(const CodeParams& p, SplitWeight c, SplitWeight r) {
  const Geometry g = geometry(p, c, r);
  if (g.alpha < 0) return 0;
  if (g.r1 <= g.c1 && g.r2 <= g.c2) return case_shrink_shrink(g);
  if (g.r1 <= g.c1) return case_shrink_grow(g);
  if (g.r2 <= g.c2) return case_grow_shrink(g);
  return case_grow_grow(g);
}

ExactInt ball_volume(const CodeParams& p) {
  ExactInt v = 0;
  for (int s = 0; s <= p.radius(); ++s) v += binom(p.n, s) * pw(p.q - 1, s);
  return v;
}

}  // namespace mdsrel
