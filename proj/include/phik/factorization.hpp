#pragma once

#include <span>
#include <vector>

#include "phik/types.hpp"

namespace phik {

struct PrimePower {
    u64 prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime-power decomposition of a positive integer.
///
/// Primes are strictly increasing and every exponent is at least one; the
/// factorization of 1 is empty. Instances are immutable once built.
class Factorization {
public:
    /// Validates the factor list against n; throws DomainError on mismatch.
    Factorization(u64 n, std::vector<PrimePower> factors);

    u64 n() const noexcept { return n_; }
    std::span<const PrimePower> factors() const noexcept { return factors_; }

    /// Number of distinct prime divisors.
    unsigned omega() const noexcept { return static_cast<unsigned>(factors_.size()); }
    bool squarefree() const noexcept;
    bool divides(u64 m) const noexcept { return m % n_ == 0; }

private:
    struct Trusted {};
    Factorization(Trusted, u64 n, std::vector<PrimePower> factors)
        : n_(n), factors_(std::move(factors)) {}

    friend Factorization factorize(u64 n);
    friend class SpfSieve;

    u64 n_;
    std::vector<PrimePower> factors_;
};

/// Trial division by 2, 3 and then 6j +- 1 up to sqrt(n). Throws DomainError for n = 0.
Factorization factorize(u64 n);

/// All divisors of f.n() in increasing order.
std::vector<u64> divisors(const Factorization& f);
std::vector<u64> divisors(u64 n);

/// Smallest-prime-factor table for bulk factorization of 1..limit.
class SpfSieve {
public:
    explicit SpfSieve(u64 limit);

    u64 limit() const noexcept { return limit_; }
    std::uint32_t smallest_factor(u64 n) const;
    bool is_prime(u64 n) const { return n >= 2 && smallest_factor(n) == n; }

    /// Factorization through the table; n must lie in [1, limit].
    Factorization factorize(u64 n) const;
    std::vector<u64> primes() const;

    /// Bytes a sieve for this limit would allocate.
    static u64 bytes_for(u64 limit) noexcept { return (limit + 1) * sizeof(std::uint32_t); }

private:
    u64 limit_;
    std::vector<std::uint32_t> spf_;
};

/// Plain sieve of Eratosthenes; primes p <= limit in increasing order.
std::vector<u64> primes_up_to(u64 limit);

bool is_prime(u64 n);

}  // namespace phik
