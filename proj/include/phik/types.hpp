#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace phik {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Arbitrary-precision signed integer used for every exact value.
using BigInt = mpz_class;
/// Exact rational, used only where intermediate values are not integral.
using Rational = mpq_class;

/// Argument outside the mathematical domain of an operation (n = 0, m not dividing n, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exhaustive or memory-bounded computation would exceed its configured cap.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default cap on the number of tuples an exhaustive oracle may enumerate.
inline constexpr u64 kDefaultOracleBudget = 100'000'000;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v);

/// num / den in canonical form (mpq_class does not canonicalize on construction).
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

BigInt pow(u64 base, unsigned long exponent);

}  // namespace phik
