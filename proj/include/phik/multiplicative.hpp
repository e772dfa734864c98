#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "phik/factorization.hpp"

namespace phik {

/// Arithmetic function fixed by its values on prime powers p^e, e >= 1.
///
/// The value at 1 is 1 and the value at n is the product of the rule over the
/// factorization of n. Copies share the underlying rule, which must be pure.
class MultiplicativeFunction {
public:
    using Rule = std::function<BigInt(u64 prime, unsigned exponent)>;

    MultiplicativeFunction(std::string name, Rule rule);

    const std::string& name() const noexcept { return name_; }
    BigInt at_prime_power(u64 prime, unsigned exponent) const;

    BigInt operator()(const Factorization& f) const;
    BigInt operator()(u64 n) const { return (*this)(factorize(n)); }

private:
    std::string name_;
    std::shared_ptr<const Rule> rule_;
};

/// (f * g)(p^e) = sum_{j=0..e} f(p^j) g(p^(e-j)).
MultiplicativeFunction dirichlet_convolve(const MultiplicativeFunction& f,
                                          const MultiplicativeFunction& g);

/// Pointwise product (f g)(n) = f(n) g(n); multiplicative when both factors are.
MultiplicativeFunction pointwise_product(const MultiplicativeFunction& f,
                                         const MultiplicativeFunction& g);

// Registry of classical functions.
MultiplicativeFunction epsilon();          // [n = 1]
MultiplicativeFunction one();              // 1
MultiplicativeFunction identity_power(unsigned k);  // id_k(n) = n^k
MultiplicativeFunction identity();         // id_1
MultiplicativeFunction mobius();
MultiplicativeFunction euler_phi();
MultiplicativeFunction jordan(unsigned k);
MultiplicativeFunction divisor_count();    // tau
MultiplicativeFunction piltz(unsigned k);  // tau_k: ordered factorizations into k factors

/// Looks up `id`, `one`, `eps`, `mu`, `phi`, `tau`, `pow:j`, `jordan:k`, `piltz:k`.
std::optional<MultiplicativeFunction> registered(const std::string& name);

/// Arithmetic function that need not be multiplicative: either a registered
/// multiplicative function or an explicit table n -> value.
class ArithmeticFunction {
public:
    using Table = std::map<u64, BigInt>;

    ArithmeticFunction(MultiplicativeFunction f) : impl_(std::move(f)) {}  // NOLINT
    ArithmeticFunction(std::string name, Table table);

    const std::string& name() const noexcept;
    bool is_table() const noexcept { return std::holds_alternative<TableFn>(impl_); }

    /// Value at n; DomainError for n = 0 or a missing table entry.
    BigInt operator()(u64 n) const;

    /// (mu * f)(d) = sum_{j | d} mu(d / j) f(j), by explicit divisor sum.
    BigInt mobius_transform(u64 d) const;

private:
    struct TableFn {
        std::string name;
        std::shared_ptr<const Table> values;
    };
    std::variant<MultiplicativeFunction, TableFn> impl_;
};

/// Moebius value straight from a factorization.
int mobius_value(const Factorization& f) noexcept;
u64 euler_phi_value(const Factorization& f) noexcept;
u64 euler_phi_value(u64 n);
u64 divisor_count_value(const Factorization& f) noexcept;

}  // namespace phik
