#include "phik/factorization.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace phik {

std::string to_string(const Rational& v) { return v.get_str(); }

BigInt pow(u64 base, unsigned long exponent) {
    static_assert(sizeof(unsigned long) == sizeof(u64), "LP64 target expected");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
    return r;
}

Factorization::Factorization(u64 n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
    if (n_ == 0) throw DomainError("factorization of 0 is undefined");
    unsigned __int128 product = 1;
    u64 previous = 1;
    for (const auto& [p, e] : factors_) {
        if (p <= previous || e == 0 || !is_prime(p)) {
            std::ostringstream msg;
            msg << "invalid factor list for " << n_;
            throw DomainError(msg.str());
        }
        for (unsigned i = 0; i < e; ++i) {
            product *= p;
            if (product > n_) break;
        }
        previous = p;
    }
    if (product != n_) {
        std::ostringstream msg;
        msg << "factor list does not multiply to " << n_;
        throw DomainError(msg.str());
    }
}

bool Factorization::squarefree() const noexcept {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

namespace {

std::vector<PrimePower> trial_divide(u64 n) {
    std::vector<PrimePower> out;
    auto strip = [&](u64 p) {
        if (n % p != 0) return;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (u64 p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (u64 p = 5; p <= n / p; p += 6)
        if (n % p == 0 || n % (p + 2) == 0) return false;
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0) throw DomainError("cannot factorize 0");
    return Factorization(Factorization::Trusted{}, n, trial_divide(n));
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> out{1};
    for (const auto& [p, e] : f.factors()) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

SpfSieve::SpfSieve(u64 limit) : limit_(limit) {
    if (limit > std::numeric_limits<std::uint32_t>::max())
        throw BudgetExceeded("smallest-prime-factor sieve limited to 2^32 - 1");
    spf_.assign(limit + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        spf_[i] = static_cast<std::uint32_t>(i);
        if (i > limit / i) continue;
        for (u64 j = i * i; j <= limit; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
}

std::uint32_t SpfSieve::smallest_factor(u64 n) const {
    if (n < 2 || n > limit_) throw DomainError("argument outside sieve range");
    return spf_[n];
}

Factorization SpfSieve::factorize(u64 n) const {
    if (n == 0 || n > limit_) throw DomainError("argument outside sieve range");
    const u64 n0 = n;
    std::vector<PrimePower> out;
    while (n > 1) {
        const u64 p = spf_[n];
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    return Factorization(Factorization::Trusted{}, n0, std::move(out));
}

std::vector<u64> SpfSieve::primes() const {
    std::vector<u64> out;
    for (u64 i = 2; i <= limit_; ++i)
        if (spf_[i] == i) out.push_back(i);
    return out;
}

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        if (i > limit / i) continue;
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace phik
