#include "phik/menon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "detail/enumerate.hpp"

namespace phik {

namespace {

void require_divisor(u64 d, u64 n, const char* what) {
    if (d == 0 || n % d != 0) {
        std::ostringstream msg;
        msg << what << " = " << d << " does not divide n = " << n;
        throw DomainError(msg.str());
    }
}

u64 reduce(i64 x, u64 m) noexcept {
    const i64 mod = static_cast<i64>(m);
    i64 r = x % mod;
    if (r < 0) r += mod;
    return static_cast<u64>(r);
}

BigInt integral(const Rational& r, const char* what) {
    if (r.get_den() != 1) throw std::logic_error(std::string("non-integral value in ") + what);
    return r.get_num();
}

Rational ratio(u64 num, u64 den) {
    return make_rational(BigInt(num), BigInt(den));
}

void require_nk(const NkQuery& q) {
    if (q.k == 0) throw DomainError("dimension k must be at least 1");
    if (q.n == 0) throw DomainError("modulus must be positive");
    require_divisor(q.d, q.n, "d");
    require_divisor(q.delta, q.n, "delta");
}

}  // namespace

u64 gcd_mod(i64 x, u64 n) noexcept { return std::gcd(reduce(x, n), n); }

CountCheck count_units_one_congruence(const CongruenceCountQuery& q) {
    require_divisor(q.d, q.n, "d");
    u64 counted = 0;
    const u64 r = reduce(q.r, q.d);
    for (u64 a = 1; a <= q.n; ++a)
        if (std::gcd(a, q.n) == 1 && a % q.d == r) ++counted;
    u64 predicted = 0;
    if (std::gcd(r, q.d) == 1) predicted = euler_phi_value(q.n) / euler_phi_value(q.d);
    return {counted, predicted};
}

CountCheck count_units_two_congruences(const CongruenceCountQuery& q) {
    require_divisor(q.d, q.n, "d");
    require_divisor(q.e, q.n, "e");
    const u64 r = reduce(q.r, q.d);
    const u64 s = reduce(q.s, q.e);
    u64 counted = 0;
    for (u64 a = 1; a <= q.n; ++a)
        if (std::gcd(a, q.n) == 1 && a % q.d == r && a % q.e == s) ++counted;
    u64 predicted = 0;
    const u64 g = std::gcd(q.d, q.e);
    const bool compatible = reduce(q.r - q.s, g) == 0;
    if (std::gcd(r, q.d) == 1 && std::gcd(s, q.e) == 1 && compatible) {
        const Rational value = ratio(euler_phi_value(q.n) * g, euler_phi_value(q.d * q.e));
        predicted = integral(value, "two-congruence count").get_ui();
    }
    return {counted, predicted};
}

BigInt n_k_oracle(const NkQuery& q, u64 budget) {
    require_nk(q);
    u64 count = 0;
    detail::for_each_tuple(q.k, q.n, budget, [&](const detail::TupleState& t) {
        if (std::gcd(t.product_mod_n, q.n) != 1) return;
        if (t.sum % q.d == 1 % q.d && t.sum % q.delta == 0) ++count;
    });
    return BigInt(count);
}

BigInt n_k_closed(const NkQuery& q) {
    require_nk(q);
    if (std::gcd(q.d, q.delta) > 1) return 0;
    const u64 phi_n = euler_phi_value(q.n);
    if (q.k == 1) return q.delta == 1 ? BigInt(phi_n / euler_phi_value(q.d)) : BigInt(0);
    Rational value = Rational(pow(phi_n, q.k)) /
                     Rational(BigInt(euler_phi_value(q.d) * euler_phi_value(q.delta)));
    const int k = static_cast<int>(q.k);
    const auto fd = factorize(q.d);
    const auto fdelta = factorize(q.delta);
    for (const auto& pp : fd.factors()) value *= alternating_sum(pp.prime, k - 1);
    for (const auto& pp : fdelta.factors()) value *= alternating_sum(pp.prime, k - 2);
    return integral(value, "N_k closed form");
}

BigInt n_k_recursion(const NkQuery& q) {
    require_nk(q);
    if (q.k < 2) throw DomainError("N_k recursion needs k >= 2");
    if (std::gcd(q.d, q.delta) != 1) throw DomainError("N_k recursion needs (d, delta) = 1");
    const u64 phi_n = euler_phi_value(q.n);
    BigInt inner = 0;
    for (u64 j : divisors(q.d)) {
        const int mu_j = mobius_value(factorize(j));
        if (mu_j == 0) continue;
        for (u64 t : divisors(q.delta)) {
            const int mu_t = mobius_value(factorize(t));
            if (mu_t == 0) continue;
            BigInt previous;
            if (q.k == 2) {
                previous = t == 1 ? BigInt(phi_n / euler_phi_value(j)) : BigInt(0);
            } else {
                previous = n_k_recursion({q.k - 1, q.n, j, t});
            }
            inner += mu_j * mu_t * previous;
        }
    }
    const Rational value = Rational(inner * phi_n) /
                           Rational(BigInt(euler_phi_value(q.d) * euler_phi_value(q.delta)));
    return integral(value, "N_k recursion");
}

BigInt menon_lhs_oracle(unsigned k, u64 n, const ArithmeticFunction& f, u64 budget) {
    if (k == 0 || n == 0) throw DomainError("k and n must be positive");
    // Only divisors of n can occur as (s - 1, n).
    std::map<u64, BigInt> f_at;
    for (u64 g : divisors(n)) f_at.emplace(g, f(g));
    std::map<u64, u64> multiplicity;
    detail::for_each_tuple(k, n, budget, [&](const detail::TupleState& t) {
        if (std::gcd(t.product_mod_n, n) != 1 || std::gcd(t.sum % n, n) != 1) return;
        ++multiplicity[std::gcd((t.sum - 1) % n, n)];
    });
    BigInt sum = 0;
    for (const auto& [g, count] : multiplicity) sum += f_at.at(g) * count;
    return sum;
}

Rational menon_rhs_closed(unsigned k, u64 n, const ArithmeticFunction& f) {
    Rational sum = 0;
    for (u64 d : divisors(n)) sum += Rational(f.mobius_transform(d)) / Rational(BigInt(euler_phi_value(d)));
    return Rational(phi_k(k, n)) * sum;
}

BigInt menon_gcd_rhs(unsigned k, u64 n) {
    return phi_k(k, n) * divisor_count_value(factorize(n));
}

BigInt menon_expansion(unsigned k, u64 n, const ArithmeticFunction& f) {
    const auto divs = divisors(n);
    BigInt total = 0;
    for (u64 d : divs) {
        const BigInt weight = f.mobius_transform(d);
        if (weight == 0) continue;
        BigInt inner = 0;
        for (u64 delta : divs) {
            const int mu = mobius_value(factorize(delta));
            if (mu != 0) inner += mu * n_k_closed({k, n, d, delta});
        }
        total += weight * inner;
    }
    return total;
}

NageswaraRao nageswara_rao_check(unsigned k, u64 n, u64 budget) {
    if (k == 0 || n == 0) throw DomainError("k and n must be positive");
    std::map<u64, u64> multiplicity;
    detail::for_each_tuple(k, n, budget, [&](const detail::TupleState& t) {
        u64 g = n;
        for (u64 a : t.values) g = std::gcd(g, a);
        if (g != 1) return;
        u64 h = n;
        for (u64 a : t.values) h = std::gcd(h, a - 1);
        ++multiplicity[h];
    });
    NageswaraRao out;
    out.lhs = 0;
    for (const auto& [h, count] : multiplicity) out.lhs += pow(h, k) * count;
    const auto f = factorize(n);
    out.rhs = jordan(k)(f) * divisor_count_value(f);
    return out;
}

std::string to_string(Identity id) {
    switch (id) {
        case Identity::menon_general: return "menon_general";
        case Identity::menon_gcd: return "menon_gcd";
        case Identity::sita_ramaiah: return "sita_ramaiah";
        case Identity::nageswara_rao: return "nageswara_rao";
        case Identity::lemmas: return "lemmas";
    }
    return "unknown";
}

std::optional<Identity> parse_identity(const std::string& name) {
    for (auto id : {Identity::menon_general, Identity::menon_gcd, Identity::sita_ramaiah,
                    Identity::nageswara_rao, Identity::lemmas}) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

namespace {

struct CellResult {
    std::vector<IdentityInstance> instances;
    std::optional<std::string> skipped;
};

// One sub-check of the lemma sweep: number of agreeing cases against total.
struct Tally {
    explicit Tally(std::string name) : label(std::move(name)) {}

    std::string label;
    u64 agreeing = 0;
    u64 total = 0;
    std::string first_failure;

    void record(bool ok, const std::string& witness) {
        ++total;
        if (ok) ++agreeing;
        else if (first_failure.empty()) first_failure = witness;
    }

    IdentityInstance instance(unsigned k, u64 n) const {
        return {k, n, label, Rational(BigInt(agreeing)), Rational(BigInt(total)), first_failure};
    }
};

std::vector<IdentityInstance> lemma_cell(unsigned k, u64 n, u64 budget, bool congruences) {
    const auto divs = divisors(n);
    std::vector<IdentityInstance> out;
    auto describe = [](auto&&... parts) {
        std::ostringstream s;
        ((s << parts), ...);
        return s.str();
    };
    if (congruences) {
        // The congruence lemmas do not depend on k; they run once per n.
        Tally one{"one_congruence"}, two{"two_congruences"}, collapse{"two_congruences_e1"};
        for (u64 d : divs) {
            for (u64 r = 0; r < d; ++r) {
                const auto c1 = count_units_one_congruence({n, d, 1, static_cast<i64>(r), 0});
                one.record(c1.agrees(), describe("d=", d, " r=", r, " count=", c1.counted,
                                                 " predicted=", c1.predicted));
                const auto c2 = count_units_two_congruences({n, d, 1, static_cast<i64>(r), 0});
                collapse.record(c2.counted == c1.counted && c2.predicted == c1.predicted,
                                describe("d=", d, " r=", r));
                for (u64 e : divs) {
                    for (u64 s = 0; s < e; ++s) {
                        const auto c = count_units_two_congruences(
                            {n, d, e, static_cast<i64>(r), static_cast<i64>(s)});
                        two.record(c.agrees(), describe("d=", d, " e=", e, " r=", r, " s=", s,
                                                        " count=", c.counted,
                                                        " predicted=", c.predicted));
                    }
                }
            }
        }
        out.push_back(one.instance(k, n));
        out.push_back(two.instance(k, n));
        out.push_back(collapse.instance(k, n));
    }
    Tally oracle{"n_k_oracle_vs_closed"}, recursion{"n_k_recursion_vs_closed"},
        zero{"n_k_zero_when_not_coprime"};
    for (u64 d : divs) {
        for (u64 delta : divs) {
            const NkQuery q{k, n, d, delta};
            const BigInt closed = n_k_closed(q);
            const BigInt counted = n_k_oracle(q, budget);
            const auto witness = describe("d=", d, " delta=", delta, " closed=", closed.get_str(),
                                          " oracle=", counted.get_str());
            if (std::gcd(d, delta) > 1) {
                zero.record(closed == 0 && counted == 0, witness);
                continue;
            }
            oracle.record(closed == counted, witness);
            if (k >= 2) {
                const BigInt rec = n_k_recursion(q);
                recursion.record(rec == closed,
                                 describe("d=", d, " delta=", delta, " recursion=", rec.get_str(),
                                          " closed=", closed.get_str()));
            }
        }
    }
    out.push_back(oracle.instance(k, n));
    if (k >= 2) out.push_back(recursion.instance(k, n));
    out.push_back(zero.instance(k, n));
    return out;
}

CellResult run_cell(const SweepConfig& config, unsigned k, u64 n) {
    CellResult cell;
    try {
        detail::check_budget(k, n, config.budget);
        const ArithmeticFunction f = config.f.value_or(ArithmeticFunction(identity()));
        const BigInt count = phi_k(k, n);
        const std::string note = count == 0 ? "phi_k(n) = 0: both sides are empty sums" : "";
        auto rhs_for = [&](Rational closed) {
            for (const auto& [key, value] : config.rhs_override)
                if (key.first == k && key.second == n) return value;
            return closed;
        };
        switch (config.identity) {
            case Identity::menon_general: {
                const Rational lhs(menon_lhs_oracle(k, n, f, config.budget));
                cell.instances.push_back({k, n, f.name(), lhs, rhs_for(menon_rhs_closed(k, n, f)), note});
                break;
            }
            case Identity::menon_gcd: {
                const Rational lhs(menon_lhs_oracle(k, n, identity(), config.budget));
                cell.instances.push_back({k, n, "id", lhs, rhs_for(Rational(menon_gcd_rhs(k, n))), note});
                break;
            }
            case Identity::sita_ramaiah: {
                const Rational lhs(menon_lhs_oracle(2, n, identity(), config.budget));
                const BigInt rhs = carlitz_x(n) * divisor_count_value(factorize(n));
                cell.instances.push_back({2, n, "X(n)tau(n)", lhs, rhs_for(Rational(rhs)), note});
                break;
            }
            case Identity::nageswara_rao: {
                const auto check = nageswara_rao_check(k, n, config.budget);
                cell.instances.push_back({k, n, "J_k(n)tau(n)", Rational(check.lhs),
                                          rhs_for(Rational(check.rhs)), ""});
                break;
            }
            case Identity::lemmas:
                cell.instances = lemma_cell(k, n, config.budget, k == config.k_min);
                break;
        }
    } catch (const BudgetExceeded& e) {
        cell.instances.clear();
        cell.skipped = e.what();
    }
    return cell;
}

}  // namespace

IdentityReport verify_identity_sweep(const SweepConfig& config) {
    if (config.k_min == 0 || config.k_min > config.k_max)
        throw DomainError("k range must be non-empty with k >= 1");
    if (config.n_min == 0 || config.n_min > config.n_max)
        throw DomainError("n range must be non-empty with n >= 1");
    if (config.f && config.identity != Identity::menon_general)
        throw DomainError("a custom f applies only to the general Menon identity");

    unsigned k_min = config.k_min, k_max = config.k_max;
    if (config.identity == Identity::sita_ramaiah) k_min = k_max = 2;

    std::vector<std::pair<unsigned, u64>> cells;
    for (unsigned k = k_min; k <= k_max; ++k)
        for (u64 n = config.n_min; n <= config.n_max; ++n) cells.emplace_back(k, n);

    std::vector<CellResult> results(cells.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, cells.size()));
    if (workers == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            results[i] = run_cell(config, cells[i].first, cells[i].second);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < cells.size(); i += workers)
                    results[i] = run_cell(config, cells[i].first, cells[i].second);
            });
        }
        for (auto& t : pool) t.join();
    }

    IdentityReport report;
    report.identity = to_string(config.identity);
    report.f_name = config.identity == Identity::menon_general
                        ? config.f.value_or(ArithmeticFunction(identity())).name()
                        : "";
    report.k_min = k_min;
    report.k_max = k_max;
    report.n_min = config.n_min;
    report.n_max = config.n_max;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (results[i].skipped) {
            report.skipped.push_back({cells[i].first, cells[i].second, *results[i].skipped});
            continue;
        }
        for (auto& inst : results[i].instances) {
            if (!inst.holds()) report.failures.push_back(report.instances.size());
            report.instances.push_back(std::move(inst));
        }
    }
    return report;
}

}  // namespace phik
