#pragma once

#include "phik/multiplicative.hpp"

namespace phik {

/// Dimension, modulus and sum-coprimality modulus of phi_k(n, m).
struct PhiKParams {
    unsigned k;
    u64 n;
    u64 m;

    PhiKParams(unsigned k, u64 n) : PhiKParams(k, n, n) {}
    PhiKParams(unsigned k, u64 n, u64 m);
};

/// phi_k(p^e) = p^((e-1)k) (p-1) ((p-1)^k - (-1)^k) / p, an exact integer.
BigInt phi_k_prime_power(unsigned k, u64 p, unsigned e);

/// Number of k-tuples 1 <= a_i <= n with both the product and the sum prime to n,
/// evaluated prime-power-wise. Zero exactly when k and n are both even.
BigInt phi_k(unsigned k, const Factorization& f);
BigInt phi_k(unsigned k, u64 n);

/// phi_k as a registered multiplicative function.
MultiplicativeFunction phi_k_function(unsigned k);

/// Literal enumeration of all n^k tuples; throws BudgetExceeded above `budget`.
BigInt phi_k_oracle(unsigned k, u64 n, u64 budget = kDefaultOracleBudget);

/// Two-parameter count with the sum tested against m instead of n.
///
/// Closed form phi(n)^k prod_{p | m} sum_{j<k} (-1)^j / (p-1)^j, cleared exactly.
/// Requires m | n; throws DomainError otherwise.
BigInt phi_k_nm(const PhiKParams& q);

/// Same value by the divisor recursion over d | m, bottoming out at phi_1(n, d) = phi(n).
BigInt phi_k_nm_recursion(const PhiKParams& q);

/// Literal enumeration. Accepts m not dividing n (experimental: outside the
/// hypotheses of the closed form and the recursion).
BigInt phi_k_nm_oracle(const PhiKParams& q, u64 budget = kDefaultOracleBudget);

/// sum_{j=0..length} (-1)^j / (p-1)^j. A negative length gives the empty sum 0.
Rational alternating_sum(u64 p, int length);

/// g_k with phi_k = id_k * g_k: g_k(p) = phi_k(p) - p^k and g_k(p^e) = 0 for e >= 2.
struct GkValue {
    u64 n;
    BigInt value;
};

BigInt g_k_prime(unsigned k, u64 p);
GkValue g_k(unsigned k, const Factorization& f);
GkValue g_k(unsigned k, u64 n);
MultiplicativeFunction g_k_function(unsigned k);

/// Carlitz's product n^2 prod_{p | n} (1 - 1/p)(1 - 2/p).
BigInt carlitz_x(u64 n);
/// phi(n)^2 sum_{d | n} mu(d) / phi(d).
BigInt carlitz_x_mobius_form(u64 n);

}  // namespace phik
