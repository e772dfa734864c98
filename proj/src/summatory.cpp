#include "phik/summatory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include <mpfr.h>

#include "phik/factorization.hpp"
#include "phik/totient.hpp"

namespace phik {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

BigInt from_u128(u128 v) {
    const u64 limbs[2] = {static_cast<u64>(v), static_cast<u64>(v >> 64)};
    BigInt out;
    mpz_import(out.get_mpz_t(), 2, -1, sizeof(u64), 0, 0, limbs);
    return out;
}

BigInt from_i128(i128 v) {
    if (v >= 0) return from_u128(static_cast<u128>(v));
    return -from_u128(static_cast<u128>(-(v + 1)) + 1);
}

// phi_k(p^e) in 128 bits; false when an intermediate overflows.
bool phi_k_prime_power_u128(unsigned k, u64 p, unsigned e, u128& out) {
    u128 a = 1;
    for (unsigned i = 0; i < k; ++i)
        if (__builtin_mul_overflow(a, static_cast<u128>(p - 1), &a)) return false;
    if (k % 2 == 0) a -= 1;
    else if (__builtin_add_overflow(a, u128{1}, &a)) return false;
    a /= p;
    if (__builtin_mul_overflow(a, static_cast<u128>(p - 1), &a)) return false;
    for (unsigned long i = 0; i < static_cast<unsigned long>(k) * (e - 1); ++i)
        if (__builtin_mul_overflow(a, static_cast<u128>(p), &a)) return false;
    out = a;
    return true;
}

// g_k(p) = phi_k(p) - p^k in signed 128 bits.
bool g_k_prime_i128(unsigned k, u64 p, i128& out) {
    u128 phi;
    if (!phi_k_prime_power_u128(k, p, 1, phi)) return false;
    u128 pk = 1;
    for (unsigned i = 0; i < k; ++i)
        if (__builtin_mul_overflow(pk, static_cast<u128>(p), &pk)) return false;
    constexpr u128 limit = static_cast<u128>(std::numeric_limits<i128>::max());
    if (phi > limit || pk > limit) return false;
    out = static_cast<i128>(phi) - static_cast<i128>(pk);
    return true;
}

// Exact accumulator that batches machine-word additions.
class Accumulator {
public:
    void add(u128 v) {
        // On overflow small_ keeps the sum mod 2^128; carry the 2^128 into big_.
        if (__builtin_add_overflow(small_, v, &small_)) big_ += from_u128(~u128{0}) + 1;
    }
    void add(const BigInt& v) { big_ += v; }
    BigInt total() const { return big_ + from_u128(small_); }

private:
    u128 small_ = 0;
    BigInt big_ = 0;
};

void check_sum_args(unsigned k, u64 x, const SumOptions& options) {
    if (k == 0) throw DomainError("dimension k must be at least 1");
    if (x == 0) throw DomainError("cutoff x must be at least 1");
    if (SpfSieve::bytes_for(x) > options.memory_budget_bytes) {
        std::ostringstream msg;
        msg << "sieve up to x = " << x << " needs " << SpfSieve::bytes_for(x)
            << " bytes, over the budget of " << options.memory_budget_bytes;
        throw BudgetExceeded(msg.str());
    }
}

// sum of phi_k(n) for first <= n <= last.
BigInt direct_range(unsigned k, const SpfSieve& sieve, u64 first, u64 last) {
    Accumulator acc;
    for (u64 n = first; n <= last; ++n) {
        u128 value = 1;
        bool fits = true;
        u64 rest = n;
        while (rest > 1) {
            const u64 p = sieve.smallest_factor(rest);
            unsigned e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            u128 local;
            if (!phi_k_prime_power_u128(k, p, e, local) || __builtin_mul_overflow(value, local, &value)) {
                fits = false;
                break;
            }
            if (value == 0) break;
        }
        if (fits) acc.add(value);
        else acc.add(phi_k(k, sieve.factorize(n)));
    }
    return acc.total();
}

// sum_{first <= d <= last} g_k(d) S_k(x / d).
BigInt convolution_range(unsigned k, u64 x, const SpfSieve& sieve, const FaulhaberPolynomial& s,
                         u64 first, u64 last) {
    BigInt total = 0;
    u64 d = first;
    while (d <= last) {
        const u64 q = x / d;
        const u64 block_end = std::min(last, x / q);
        BigInt block = 0;
        i128 small = 0;
        for (; d <= block_end; ++d) {
            i128 value = 1;
            bool fits = true;
            bool zero = false;
            u64 rest = d;
            while (rest > 1) {
                const u64 p = sieve.smallest_factor(rest);
                rest /= p;
                if (rest % p == 0) {
                    zero = true;
                    break;
                }
                i128 gp;
                if (!g_k_prime_i128(k, p, gp) || __builtin_mul_overflow(value, gp, &value)) {
                    fits = false;
                    break;
                }
            }
            if (zero) continue;
            if (!fits) {
                block += g_k(k, sieve.factorize(d)).value;
                continue;
            }
            i128 next;
            if (__builtin_add_overflow(small, value, &next)) {
                block += from_i128(small);
                small = value;
            } else {
                small = next;
            }
        }
        block += from_i128(small);
        if (block != 0) total += block * s(q);
    }
    return total;
}

template <typename Work>
BigInt partitioned(u64 x, unsigned threads, Work work) {
    const u64 workers = std::clamp<u64>(threads, 1, std::max<u64>(1, x / 1024));
    if (workers == 1) return work(1, x);
    std::vector<BigInt> partial(workers);
    std::vector<std::thread> pool;
    for (u64 w = 0; w < workers; ++w) {
        const u64 first = 1 + x * w / workers;
        const u64 last = x * (w + 1) / workers;
        pool.emplace_back([&, w, first, last] { partial[w] = work(first, last); });
    }
    for (auto& t : pool) t.join();
    BigInt total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

struct Mpfr {
    mpfr_t v;
    explicit Mpfr(long precision) { mpfr_init2(v, precision); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
};

Rational to_rational(const mpfr_t v) {
    Rational out;
    mpfr_get_q(out.get_mpq_t(), v);
    return out;
}

}  // namespace

std::string to_string(SumMethod m) {
    return m == SumMethod::direct_sieve ? "direct_sieve" : "convolution";
}

PartialSum sum_phi_k_direct(unsigned k, u64 x, const SumOptions& options) {
    check_sum_args(k, x, options);
    const SpfSieve sieve(x);
    BigInt value = partitioned(x, options.threads, [&](u64 first, u64 last) {
        return direct_range(k, sieve, first, last);
    });
    return {k, x, std::move(value), SumMethod::direct_sieve};
}

PartialSum sum_phi_k_convolution(unsigned k, u64 x, const SumOptions& options) {
    check_sum_args(k, x, options);
    const SpfSieve sieve(x);
    const FaulhaberPolynomial s(k);
    BigInt value = partitioned(x, options.threads, [&](u64 first, u64 last) {
        return convolution_range(k, x, sieve, s, first, last);
    });
    return {k, x, std::move(value), SumMethod::convolution};
}

FaulhaberPolynomial::FaulhaberPolynomial(unsigned k) : k_(k) {
    // Bernoulli numbers with B_1 = +1/2, from sum_{j<=m} C(m+1, j) B_j = 0 (B_1 = -1/2).
    std::vector<Rational> bernoulli(k + 1);
    bernoulli[0] = 1;
    for (unsigned m = 1; m <= k; ++m) {
        Rational sum = 0;
        BigInt c = 1;  // C(m+1, j)
        for (unsigned j = 0; j < m; ++j) {
            sum += Rational(c) * bernoulli[j];
            c = c * (m + 1 - j) / (j + 1);
        }
        bernoulli[m] = -sum / Rational(BigInt(m + 1));
    }
    if (k >= 1) bernoulli[1] = Rational(1, 2);

    // S_k(m) = 1/(k+1) sum_{j=0..k} C(k+1, j) B_j m^(k+1-j)
    std::vector<Rational> coefficient(k + 2, Rational(0));
    BigInt c = 1;
    for (unsigned j = 0; j <= k; ++j) {
        coefficient[k + 1 - j] = Rational(c) * bernoulli[j] / Rational(BigInt(k + 1));
        c = c * (k + 1 - j) / (j + 1);
    }
    denominator_ = 1;
    for (auto& q : coefficient) {
        q.canonicalize();
        mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), q.get_den_mpz_t());
    }
    numerators_.reserve(coefficient.size());
    for (const auto& q : coefficient) numerators_.push_back(q.get_num() * (denominator_ / q.get_den()));
}

BigInt FaulhaberPolynomial::operator()(u64 m) const {
    BigInt acc = 0;
    const BigInt mm(m);
    for (std::size_t i = numerators_.size(); i-- > 0;) acc = acc * mm + numerators_[i];
    BigInt out;
    mpz_divexact(out.get_mpz_t(), acc.get_mpz_t(), denominator_.get_mpz_t());
    return out;
}

BigInt faulhaber_power_sum(unsigned k, u64 m) { return FaulhaberPolynomial(k)(m); }

Rational euler_factor(unsigned k, u64 p) {
    const BigInt den = pow(p, k + 1);
    return make_rational(den + g_k_prime(k, p), den);
}

Enclosure euler_constant(unsigned k, u64 prime_bound, const ConstantOptions& options) {
    if (k < 2) throw DomainError("C_k is defined for k >= 2");
    if (prime_bound < 1000) throw DomainError("prime bound must be at least 1000");
    if (prime_bound - 1 <= k + 1) throw DomainError("prime bound too small for the tail bound");
    const long prec = options.precision_bits;
    const auto primes = primes_up_to(prime_bound);

    // Fixed block split keeps the rounding sequence independent of the thread count.
    constexpr std::size_t kBlocks = 64;
    struct Block {
        Rational lo, hi;
    };
    std::vector<Block> blocks(kBlocks);
    auto run_block = [&](std::size_t b) {
        const std::size_t first = primes.size() * b / kBlocks;
        const std::size_t last = primes.size() * (b + 1) / kBlocks;
        Mpfr lo(prec), hi(prec), num(prec), den(prec), factor(prec);
        mpfr_set_ui(lo.v, 1, MPFR_RNDN);
        mpfr_set_ui(hi.v, 1, MPFR_RNDN);
        for (std::size_t i = first; i < last; ++i) {
            const u64 p = primes[i];
            const BigInt d = pow(p, k + 1);
            const BigInt n = d + g_k_prime(k, p);
            mpfr_set_z(num.v, n.get_mpz_t(), MPFR_RNDD);
            mpfr_set_z(den.v, d.get_mpz_t(), MPFR_RNDU);
            mpfr_div(factor.v, num.v, den.v, MPFR_RNDD);
            mpfr_mul(lo.v, lo.v, factor.v, MPFR_RNDD);
            mpfr_set_z(num.v, n.get_mpz_t(), MPFR_RNDU);
            mpfr_set_z(den.v, d.get_mpz_t(), MPFR_RNDD);
            mpfr_div(factor.v, num.v, den.v, MPFR_RNDU);
            mpfr_mul(hi.v, hi.v, factor.v, MPFR_RNDU);
        }
        blocks[b] = {to_rational(lo.v), to_rational(hi.v)};
    };
    const unsigned workers = std::clamp<unsigned>(options.threads, 1, kBlocks);
    if (workers == 1) {
        for (std::size_t b = 0; b < kBlocks; ++b) run_block(b);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t b = w; b < kBlocks; b += workers) run_block(b);
            });
        for (auto& t : pool) t.join();
    }

    Mpfr lo(prec), hi(prec), factor(prec), tail(prec);
    mpfr_set_ui(lo.v, 1, MPFR_RNDN);
    mpfr_set_ui(hi.v, 1, MPFR_RNDN);
    for (const auto& block : blocks) {
        // Block products are dyadic with at most `prec` bits, so these conversions are exact.
        mpfr_set_q(factor.v, block.lo.get_mpq_t(), MPFR_RNDD);
        mpfr_mul(lo.v, lo.v, factor.v, MPFR_RNDD);
        mpfr_set_q(factor.v, block.hi.get_mpq_t(), MPFR_RNDU);
        mpfr_mul(hi.v, hi.v, factor.v, MPFR_RNDU);
    }
    // Tail: prod_{p > P} (1 - a_p) >= 1 - sum a_p with a_p < (k+1)/p^2 and sum_{n > P} 1/n^2 < 1/(P-1).
    mpfr_set_ui(tail.v, k + 1, MPFR_RNDN);
    mpfr_div_ui(tail.v, tail.v, prime_bound - 1, MPFR_RNDU);
    mpfr_ui_sub(tail.v, 1, tail.v, MPFR_RNDD);
    mpfr_mul(lo.v, lo.v, tail.v, MPFR_RNDD);
    return {to_rational(lo.v), to_rational(hi.v)};
}

std::vector<ErrorRow> error_term_monitor(unsigned k, const std::vector<u64>& grid,
                                         const Enclosure& constant, const SumOptions& options) {
    if (k < 2) throw DomainError("error-term monitoring needs k >= 2");
    if (grid.empty()) throw DomainError("x grid must be non-empty");
    std::vector<u64> xs = grid;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    check_sum_args(k, xs.back(), options);
    const SpfSieve sieve(xs.back());

    std::vector<ErrorRow> rows;
    BigInt running = 0;
    u64 done = 0;
    for (u64 x : xs) {
        running += partitioned(x - done, options.threads, [&](u64 first, u64 last) {
            return direct_range(k, sieve, done + first, done + last);
        });
        done = x;
        const Rational scale = Rational(pow(x, k + 1)) / Rational(BigInt(k + 1));
        ErrorRow row{x, running, constant.lo * scale, constant.hi * scale, 0.0, 0.0};
        const Rational mid = (row.main_term_lo + row.main_term_hi) / 2;
        row.delta = to_double(Rational(running) - mid);
        if (x == 1) {
            row.normalized_ratio = std::numeric_limits<double>::quiet_NaN();
        } else {
            const double lx = std::log(static_cast<double>(x));
            row.normalized_ratio = std::fabs(row.delta) /
                                   (std::pow(static_cast<double>(x), k) * std::pow(lx, k + 1));
        }
        rows.push_back(std::move(row));
    }
    // Preserve the caller's order.
    std::vector<ErrorRow> ordered;
    for (u64 x : grid)
        ordered.push_back(*std::find_if(rows.begin(), rows.end(), [x](const ErrorRow& r) { return r.x == x; }));
    return ordered;
}

Enclosure normalized_deviation(unsigned k, u64 x, const BigInt& sum, const Enclosure& constant) {
    const Rational r = Rational(sum * (k + 1)) / Rational(pow(x, k + 1));
    const Rational a = r - constant.hi;
    const Rational b = r - constant.lo;
    if (a >= 0) return {a, b};
    if (b <= 0) return {-b, -a};
    return {Rational(0), -a > b ? Rational(-a) : b};
}

std::string to_decimal(const Rational& v, unsigned digits, bool round_up) {
    const BigInt scale = pow(10, digits);
    BigInt scaled;
    const BigInt num = v.get_num() * scale;
    if (round_up) mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), v.get_den_mpz_t());
    else mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), v.get_den_mpz_t());
    const bool negative = scaled < 0;
    std::string s = BigInt(abs(scaled)).get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return negative ? "-" + s : s;
}

double to_double(const Rational& v) { return v.get_d(); }

}  // namespace phik
