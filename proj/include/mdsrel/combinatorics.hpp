#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mdsrel {

/// Arbitrary-precision signed integer used for every count.
using ExactInt = mpz_class;
/// Exact rational used for probabilities in rational mode.
using Rational = mpq_class;

/// Binomial coefficient C(a, r).
///
/// Out-of-range arguments (r < 0, r > a, or a < 0) give 0, never the
/// analytic continuation. Sums over formula indices rely on that: any
/// index that goes negative kills its term.
///
/// Served from a per-thread Pascal table (a < 1024), so the returned
/// reference stays valid for the lifetime of the calling thread.
const ExactInt& binom(long a, long r);

/// base^exp with 0^0 = 1.
ExactInt int_pow(long base, unsigned long exp);

struct IdentityViolation {
  std::string identity;
  std::string args;
};

/// Exhaustively checks the combinatorial identities that the enumerator and
/// sphere formulas are derived from, for every admissible tuple with
/// parameters in [0, bound]. Returns the violations (empty on success).
///
/// Checked identities:
///   zero-outside    C(a,r) = 0 for a < 0, r < 0 or r > a         (|a|, |r| <= bound)
///   vandermonde     sum_k C(a,k) C(b,r-k) = C(a+b,r)
///   product-1       C(a,g) C(a-g,k) = C(a,k) C(a-k,g)
///   product-2       a C(a-1,k-1) = k C(a,k)                      (k >= 1)
///   product-3       C(a,b) C(b,g) = C(a,g) C(a-g,b-g)
///   alternating     sum_{g<=k} (-1)^g C(a,g) = (-1)^k C(a-1,k)   (a >= 1)
///   sum-product     C(b,a) = sum_k C(b-d-k,a-k) C(d+k-1,k)       (d >= 1, a <= b-d)
///   finite-diff     sum_x (-1)^(a-x) C(a,x) x^m = 0              (m < a)
std::vector<IdentityViolation> identity_suite(int bound);

}  // namespace mdsrel
