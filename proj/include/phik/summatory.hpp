#pragma once

#include <string>
#include <vector>

#include "phik/types.hpp"

namespace phik {

enum class SumMethod { direct_sieve, convolution };

std::string to_string(SumMethod m);

/// Exact value of sum_{n <= x} phi_k(n) together with how it was obtained.
struct PartialSum {
    unsigned k;
    u64 x;
    BigInt value;
    SumMethod method;
};

struct SumOptions {
    unsigned threads = 1;
    /// Upper bound on sieve memory; larger x is refused with BudgetExceeded.
    u64 memory_budget_bytes = u64{2} << 30;
};

/// Streams phi_k(n) for n <= x through a smallest-prime-factor sieve.
PartialSum sum_phi_k_direct(unsigned k, u64 x, const SumOptions& options = {});

/// sum_{d <= x} g_k(d) S_k(x / d), grouped over runs of equal x / d.
PartialSum sum_phi_k_convolution(unsigned k, u64 x, const SumOptions& options = {});

/// Exact power sum S_k(m) = sum_{j <= m} j^k as a polynomial in m.
class FaulhaberPolynomial {
public:
    explicit FaulhaberPolynomial(unsigned k);

    unsigned degree() const noexcept { return k_ + 1; }
    BigInt operator()(u64 m) const;

private:
    unsigned k_;
    std::vector<BigInt> numerators_;  // coefficient of m^i is numerators_[i] / denominator_
    BigInt denominator_;
};

BigInt faulhaber_power_sum(unsigned k, u64 m);

/// Real interval [lo, hi] with exact dyadic endpoints.
struct Enclosure {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains(const Enclosure& inner) const { return lo <= inner.lo && inner.hi <= hi; }
    bool overlaps(const Enclosure& other) const { return lo <= other.hi && other.lo <= hi; }
};

struct ConstantOptions {
    long precision_bits = 128;
    unsigned threads = 1;
};

/// Rigorous enclosure of C_k = prod_p (1 + g_k(p) / p^(k+1)) for k >= 2.
///
/// Factors up to prime_bound are multiplied with downward and upward rounding.
/// Every omitted factor lies in (1 - (k+1)/p^2, 1), so the truncated product is an
/// upper bound and 1 - (k+1)/(prime_bound - 1) lower-bounds the tail.
Enclosure euler_constant(unsigned k, u64 prime_bound, const ConstantOptions& options = {});

/// Local factor 1 + g_k(p) / p^(k+1) as an exact rational.
Rational euler_factor(unsigned k, u64 p);

struct ErrorRow {
    u64 x;
    BigInt sum;
    Rational main_term_lo;  // C_k lo x^(k+1) / (k+1)
    Rational main_term_hi;
    double delta;             // sum - midpoint of the main term
    double normalized_ratio;  // |delta| / (x^k (log x)^(k+1)); NaN for x = 1
};

/// Exact partial sums against the enclosed main term for each x in the grid.
std::vector<ErrorRow> error_term_monitor(unsigned k, const std::vector<u64>& grid,
                                         const Enclosure& constant,
                                         const SumOptions& options = {});

/// Interval for |(k+1) sum / x^(k+1) - C_k| given C_k inside `constant`.
Enclosure normalized_deviation(unsigned k, u64 x, const BigInt& sum, const Enclosure& constant);

/// Fixed-point decimal rounded toward -inf (round_up = false) or +inf.
std::string to_decimal(const Rational& v, unsigned digits, bool round_up);

double to_double(const Rational& v);

}  // namespace phik
