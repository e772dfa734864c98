#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phik/totient.hpp"

namespace phik {

/// Units a <= n with a == r (mod d) and a == s (mod e); d and e must divide n.
struct CongruenceCountQuery {
    u64 n;
    u64 d;
    u64 e = 1;
    i64 r = 0;
    i64 s = 0;
};

/// An exhaustive count side by side with its closed-form prediction.
struct CountCheck {
    u64 counted;
    u64 predicted;
    bool agrees() const noexcept { return counted == predicted; }
};

/// Single congruence: phi(n)/phi(d) when (r, d) = 1, else 0. Ignores q.e and q.s.
CountCheck count_units_one_congruence(const CongruenceCountQuery& q);

/// Two congruences: phi(n) (d, e) / phi(de) when (r, d) = (s, e) = 1 and (d, e) | r - s, else 0.
CountCheck count_units_two_congruences(const CongruenceCountQuery& q);

/// N_k(n, d, delta): k-tuples of units mod n whose sum is 1 mod d and 0 mod delta.
struct NkQuery {
    unsigned k;
    u64 n;
    u64 d;
    u64 delta;
};

BigInt n_k_oracle(const NkQuery& q, u64 budget = kDefaultOracleBudget);
/// Zero when (d, delta) > 1; the k = 1 case is evaluated directly.
BigInt n_k_closed(const NkQuery& q);
/// Literal recursion over j | d, t | delta; requires k >= 2 and (d, delta) = 1.
BigInt n_k_recursion(const NkQuery& q);

/// gcd(x mod n, n), so gcd(0, n) = n.
u64 gcd_mod(i64 x, u64 n) noexcept;

/// Sum of f((a_1 + ... + a_k - 1, n)) over the phi_k(n) admissible tuples.
BigInt menon_lhs_oracle(unsigned k, u64 n, const ArithmeticFunction& f,
                        u64 budget = kDefaultOracleBudget);

/// phi_k(n) sum_{d | n} (mu * f)(d) / phi(d).
Rational menon_rhs_closed(unsigned k, u64 n, const ArithmeticFunction& f);

/// phi_k(n) tau(n), the right side for f = id.
BigInt menon_gcd_rhs(unsigned k, u64 n);

/// sum_{d | n} (mu * f)(d) sum_{delta | n} mu(delta) N_k(n, d, delta), with closed N_k.
BigInt menon_expansion(unsigned k, u64 n, const ArithmeticFunction& f);

struct NageswaraRao {
    BigInt lhs;
    BigInt rhs;
    bool holds() const { return lhs == rhs; }
};

/// Sum over tuples with (a_1, ..., a_k, n) = 1 of (a_1 - 1, ..., a_k - 1, n)^k against J_k(n) tau(n).
NageswaraRao nageswara_rao_check(unsigned k, u64 n, u64 budget = kDefaultOracleBudget);

enum class Identity { menon_general, menon_gcd, sita_ramaiah, nageswara_rao, lemmas };

std::string to_string(Identity id);
std::optional<Identity> parse_identity(const std::string& name);

struct IdentityInstance {
    unsigned k;
    u64 n;
    std::string label;  // sub-check name for multi-part sweeps
    Rational lhs;
    Rational rhs;
    std::string note;  // e.g. "empty sum" when phi_k(n) = 0
    bool holds() const { return lhs == rhs; }
};

struct SkippedCell {
    unsigned k;
    u64 n;
    std::string reason;
};

/// Outcome of a verification sweep. `failures` indexes into `instances`.
struct IdentityReport {
    std::string identity;
    std::string f_name;
    unsigned k_min = 0, k_max = 0;
    u64 n_min = 0, n_max = 0;
    std::vector<IdentityInstance> instances;
    std::vector<std::size_t> failures;
    std::vector<SkippedCell> skipped;

    bool ok() const noexcept { return failures.empty(); }
    bool complete() const noexcept { return skipped.empty(); }
};

struct SweepConfig {
    Identity identity = Identity::menon_gcd;
    unsigned k_min = 1, k_max = 1;
    u64 n_min = 1, n_max = 1;
    std::optional<ArithmeticFunction> f;  // menon_general only; defaults to id
    u64 budget = kDefaultOracleBudget;
    unsigned threads = 1;
    /// Pinned right-hand sides keyed by (k, n) that replace the closed form.
    std::vector<std::pair<std::pair<unsigned, u64>, Rational>> rhs_override;
};

/// Runs every (k, n) cell of the sweep; cells over budget are listed in `skipped`.
/// Instances are ordered by (k, n) regardless of thread count.
IdentityReport verify_identity_sweep(const SweepConfig& config);

}  // namespace phik
