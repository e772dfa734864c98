#include "phik/multiplicative.hpp"

#include <charconv>

namespace phik {

MultiplicativeFunction::MultiplicativeFunction(std::string name, Rule rule)
    : name_(std::move(name)), rule_(std::make_shared<const Rule>(std::move(rule))) {}

BigInt MultiplicativeFunction::at_prime_power(u64 prime, unsigned exponent) const {
    if (exponent == 0) return 1;
    return (*rule_)(prime, exponent);
}

BigInt MultiplicativeFunction::operator()(const Factorization& f) const {
    BigInt value = 1;
    for (const auto& [p, e] : f.factors()) {
        value *= (*rule_)(p, e);
        if (value == 0) break;
    }
    return value;
}

MultiplicativeFunction dirichlet_convolve(const MultiplicativeFunction& f,
                                          const MultiplicativeFunction& g) {
    return MultiplicativeFunction("(" + f.name() + "*" + g.name() + ")",
                                  [f, g](u64 p, unsigned e) {
                                      BigInt sum = 0;
                                      for (unsigned j = 0; j <= e; ++j)
                                          sum += f.at_prime_power(p, j) * g.at_prime_power(p, e - j);
                                      return sum;
                                  });
}

MultiplicativeFunction pointwise_product(const MultiplicativeFunction& f,
                                         const MultiplicativeFunction& g) {
    return MultiplicativeFunction(f.name() + "." + g.name(), [f, g](u64 p, unsigned e) {
        return BigInt(f.at_prime_power(p, e) * g.at_prime_power(p, e));
    });
}

MultiplicativeFunction epsilon() {
    return MultiplicativeFunction("eps", [](u64, unsigned) { return BigInt(0); });
}

MultiplicativeFunction one() {
    return MultiplicativeFunction("one", [](u64, unsigned) { return BigInt(1); });
}

MultiplicativeFunction identity_power(unsigned k) {
    return MultiplicativeFunction("id_" + std::to_string(k),
                                  [k](u64 p, unsigned e) { return pow(p, static_cast<unsigned long>(k) * e); });
}

MultiplicativeFunction identity() {
    return MultiplicativeFunction("id", [](u64 p, unsigned e) { return pow(p, e); });
}

MultiplicativeFunction mobius() {
    return MultiplicativeFunction("mu", [](u64, unsigned e) { return BigInt(e == 1 ? -1 : 0); });
}

MultiplicativeFunction euler_phi() {
    return MultiplicativeFunction("phi", [](u64 p, unsigned e) {
        return BigInt(pow(p, e - 1) * (p - 1));
    });
}

MultiplicativeFunction jordan(unsigned k) {
    // J_k(p^e) = p^(ke) - p^(k(e-1))
    return MultiplicativeFunction("J_" + std::to_string(k), [k](u64 p, unsigned e) {
        return BigInt(pow(p, static_cast<unsigned long>(k) * e) -
                      pow(p, static_cast<unsigned long>(k) * (e - 1)));
    });
}

MultiplicativeFunction divisor_count() {
    return MultiplicativeFunction("tau", [](u64, unsigned e) { return BigInt(e + 1); });
}

MultiplicativeFunction piltz(unsigned k) {
    if (k == 0) throw DomainError("Piltz function needs k >= 1");
    return MultiplicativeFunction("tau_" + std::to_string(k), [k](u64, unsigned e) {
        BigInt c;
        mpz_bin_uiui(c.get_mpz_t(), e + k - 1, k - 1);
        return c;
    });
}

namespace {

std::optional<unsigned> parse_index(const std::string& s) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace

std::optional<MultiplicativeFunction> registered(const std::string& name) {
    if (name == "id") return identity();
    if (name == "one" || name == "1") return one();
    if (name == "eps") return epsilon();
    if (name == "mu") return mobius();
    if (name == "phi") return euler_phi();
    if (name == "tau") return divisor_count();
    const auto colon = name.find(':');
    if (colon == std::string::npos) return std::nullopt;
    const auto head = name.substr(0, colon);
    const auto index = parse_index(name.substr(colon + 1));
    if (!index) return std::nullopt;
    if (head == "pow") return identity_power(*index);
    if (head == "jordan") return jordan(*index);
    if (head == "piltz" && *index >= 1) return piltz(*index);
    return std::nullopt;
}

ArithmeticFunction::ArithmeticFunction(std::string name, Table table)
    : impl_(TableFn{std::move(name), std::make_shared<const Table>(std::move(table))}) {}

const std::string& ArithmeticFunction::name() const noexcept {
    if (const auto* m = std::get_if<MultiplicativeFunction>(&impl_)) return m->name();
    return std::get<TableFn>(impl_).name;
}

BigInt ArithmeticFunction::operator()(u64 n) const {
    if (n == 0) throw DomainError("arithmetic functions are defined for n >= 1");
    if (const auto* m = std::get_if<MultiplicativeFunction>(&impl_)) return (*m)(n);
    const auto& table = *std::get<TableFn>(impl_).values;
    const auto it = table.find(n);
    if (it == table.end())
        throw DomainError("table function '" + name() + "' has no value at " + std::to_string(n));
    return it->second;
}

BigInt ArithmeticFunction::mobius_transform(u64 d) const {
    BigInt sum = 0;
    for (u64 j : divisors(d)) {
        const int mu = mobius_value(factorize(d / j));
        if (mu != 0) sum += mu * (*this)(j);
    }
    return sum;
}

int mobius_value(const Factorization& f) noexcept {
    if (!f.squarefree()) return 0;
    return f.omega() % 2 == 0 ? 1 : -1;
}

u64 euler_phi_value(const Factorization& f) noexcept {
    u64 value = 1;
    for (const auto& [p, e] : f.factors()) {
        value *= p - 1;
        for (unsigned i = 1; i < e; ++i) value *= p;
    }
    return value;
}

u64 euler_phi_value(u64 n) { return euler_phi_value(factorize(n)); }

u64 divisor_count_value(const Factorization& f) noexcept {
    u64 value = 1;
    for (const auto& pp : f.factors()) value *= pp.exponent + 1;
    return value;
}

}  // namespace phik
