#include "phik/totient.hpp"

#include <numeric>
#include <sstream>

#include "detail/enumerate.hpp"

namespace phik {

PhiKParams::PhiKParams(unsigned k_, u64 n_, u64 m_) : k(k_), n(n_), m(m_) {
    if (k == 0) throw DomainError("dimension k must be at least 1");
    if (n == 0 || m == 0) throw DomainError("moduli n and m must be positive");
}

namespace {

void require_k(unsigned k) {
    if (k == 0) throw DomainError("dimension k must be at least 1");
}

void require_divides(u64 m, u64 n) {
    if (n % m != 0) {
        std::ostringstream msg;
        msg << "m = " << m << " does not divide n = " << n;
        throw DomainError(msg.str());
    }
}

// (p - 1)^k - (-1)^k
BigInt shifted_power_difference(unsigned k, u64 p) {
    BigInt v = pow(p - 1, k);
    if (k % 2 == 0) v -= 1;
    else v += 1;
    return v;
}

BigInt require_integral(const Rational& r, const char* what) {
    if (r.get_den() != 1) throw std::logic_error(std::string("non-integral value in ") + what);
    return r.get_num();
}

}  // namespace

BigInt phi_k_prime_power(unsigned k, u64 p, unsigned e) {
    require_k(k);
    BigInt v = shifted_power_difference(k, p) * (p - 1);
    // (p - 1)^k == (-1)^k (mod p), so the division is exact.
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    return v * pow(p, static_cast<unsigned long>(k) * (e - 1));
}

BigInt phi_k(unsigned k, const Factorization& f) {
    require_k(k);
    BigInt value = 1;
    for (const auto& [p, e] : f.factors()) {
        value *= phi_k_prime_power(k, p, e);
        if (value == 0) break;
    }
    return value;
}

BigInt phi_k(unsigned k, u64 n) { return phi_k(k, factorize(n)); }

MultiplicativeFunction phi_k_function(unsigned k) {
    require_k(k);
    return MultiplicativeFunction("phi_" + std::to_string(k),
                                  [k](u64 p, unsigned e) { return phi_k_prime_power(k, p, e); });
}

BigInt phi_k_oracle(unsigned k, u64 n, u64 budget) {
    return phi_k_nm_oracle(PhiKParams(k, n, n), budget);
}

BigInt phi_k_nm_oracle(const PhiKParams& q, u64 budget) {
    u64 count = 0;
    detail::for_each_tuple(q.k, q.n, budget, [&](const detail::TupleState& t) {
        if (std::gcd(t.product_mod_n, q.n) == 1 && std::gcd(t.sum % q.m, q.m) == 1) ++count;
    });
    return BigInt(count);
}

Rational alternating_sum(u64 p, int length) {
    if (p < 2) throw DomainError("alternating sum needs a prime p >= 2");
    Rational sum = 0;
    Rational term = 1;
    const Rational step = make_rational(-1, BigInt(p - 1));
    for (int j = 0; j <= length; ++j) {
        sum += term;
        term *= step;
    }
    return sum;
}

BigInt phi_k_nm(const PhiKParams& q) {
    require_divides(q.m, q.n);
    const auto fn = factorize(q.n);
    BigInt value = 1;
    for (const auto& [p, e] : fn.factors()) {
        const BigInt local = pow(p, static_cast<unsigned long>(q.k) * (e - 1)) * pow(p - 1, q.k);
        if (q.m % p == 0) {
            const Rational cleared = Rational(local) * alternating_sum(p, static_cast<int>(q.k) - 1);
            value *= require_integral(cleared, "phi_k(n, m)");
        } else {
            value *= local;
        }
    }
    return value;
}

BigInt phi_k_nm_recursion(const PhiKParams& q) {
    require_divides(q.m, q.n);
    const u64 phi_n = euler_phi_value(q.n);
    if (q.k == 1) return BigInt(phi_n);
    Rational sum = 0;
    for (u64 d : divisors(q.m)) {
        const auto fd = factorize(d);
        const int mu = mobius_value(fd);
        if (mu == 0) continue;
        const BigInt inner = phi_k_nm_recursion(PhiKParams(q.k - 1, q.n, d));
        sum += make_rational(inner * mu, BigInt(euler_phi_value(fd)));
    }
    return require_integral(sum * phi_n, "phi_k(n, m) recursion");
}

BigInt g_k_prime(unsigned k, u64 p) {
    return phi_k_prime_power(k, p, 1) - pow(p, k);
}

GkValue g_k(unsigned k, const Factorization& f) {
    require_k(k);
    BigInt value = 1;
    for (const auto& [p, e] : f.factors()) {
        if (e >= 2) return {f.n(), BigInt(0)};
        value *= g_k_prime(k, p);
    }
    return {f.n(), value};
}

GkValue g_k(unsigned k, u64 n) { return g_k(k, factorize(n)); }

MultiplicativeFunction g_k_function(unsigned k) {
    require_k(k);
    return MultiplicativeFunction("g_" + std::to_string(k), [k](u64 p, unsigned e) {
        return e >= 2 ? BigInt(0) : g_k_prime(k, p);
    });
}

BigInt carlitz_x(u64 n) {
    const auto f = factorize(n);
    BigInt value = 1;
    for (const auto& [p, e] : f.factors())
        value *= pow(p, 2UL * (e - 1)) * (p - 1) * (BigInt(p) - 2);
    return value;
}

BigInt carlitz_x_mobius_form(u64 n) {
    Rational sum = 0;
    for (u64 d : divisors(n)) {
        const auto fd = factorize(d);
        const int mu = mobius_value(fd);
        if (mu != 0) sum += make_rational(mu, BigInt(euler_phi_value(fd)));
    }
    const BigInt phi_n(euler_phi_value(n));
    return require_integral(sum * phi_n * phi_n, "Moebius form of X(n)");
}

}  // namespace phik
