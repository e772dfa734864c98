#include <doctest.h>

#include "oracle.hpp"
#include "phik/totient.hpp"

using namespace phik;
namespace t = phik::testing;

TEST_CASE("phi_k closed form: examples") {
    CHECK(phi_k(1, 12) == 4);
    CHECK(phi_k(2, 15) == 24);  // brute force over 225 pairs
    CHECK(phi_k(2, 4) == 0);
    CHECK(phi_k(3, 2) == 1);
    CHECK(phi_k(2, 1) == 1);
    CHECK(t::brute_phi_k(2, 15, 15) == 24);
    CHECK(t::brute_phi_k(3, 2, 2) == 1);
    CHECK_THROWS_AS(phi_k(0, 5), DomainError);
    CHECK_THROWS_AS(phi_k(2, 0), DomainError);
}

TEST_CASE("phi_k oracle: examples and budget") {
    CHECK(phi_k_oracle(2, 3) == 2);
    CHECK(phi_k_oracle(1, 5) == 4);
    CHECK(phi_k_oracle(2, 15) == 24);
    CHECK_THROWS_AS(phi_k_oracle(3, 100, 999'999), BudgetExceeded);
    CHECK(phi_k_oracle(3, 100, 1'000'000) == phi_k(3, 100));
    CHECK_THROWS_AS(phi_k_oracle(40, 60), BudgetExceeded);
}

TEST_CASE("phi_k closed form equals the definitional count") {
    for (unsigned k = 1; k <= 3; ++k)
        for (u64 n = 1; n <= (k == 3 ? 30u : 60u); ++n) CHECK(phi_k(k, n) == t::brute_phi_k(k, n, n));
    for (u64 n = 1; n <= 12; ++n) CHECK(phi_k(4, n) == t::brute_phi_k(4, n, n));
}

TEST_CASE("phi_k(n, m): examples") {
    CHECK(phi_k_nm({3, 12, 1}) == 64);
    CHECK(phi_k_nm({1, 12, 6}) == 4);
    CHECK(phi_k_nm({2, 15, 3}) == 32);
    CHECK(t::brute_phi_k(2, 15, 3) == 32);
    CHECK(phi_k_nm_recursion({2, 15, 3}) == 32);
    CHECK(phi_k_nm_recursion({2, 5, 1}) == 16);
    CHECK(phi_k_nm_recursion({2, 9, 1}) == 36);
    CHECK(phi_k_nm_recursion({3, 2, 2}) == 1);
    CHECK_THROWS_AS(phi_k_nm({2, 12, 5}), DomainError);
    CHECK_THROWS_AS(phi_k_nm_recursion({2, 12, 5}), DomainError);
    CHECK_THROWS_AS(PhiKParams(0, 3, 3), DomainError);
}

TEST_CASE("phi_k(n, m): oracle accepts m not dividing n") {
    CHECK(phi_k_nm_oracle({2, 12, 5}) == t::brute_phi_k(2, 12, 5));
    CHECK(phi_k_nm_oracle({2, 7, 4}) == t::brute_phi_k(2, 7, 4));
}

TEST_CASE("phi_k(n, m): closed form, recursion and oracle agree") {
    for (unsigned k = 1; k <= 4; ++k) {
        for (u64 n = 1; n <= (k == 4 ? 20u : 60u); ++n) {
            for (u64 m : divisors(n)) {
                const BigInt closed = phi_k_nm({k, n, m});
                CHECK(phi_k_nm_recursion({k, n, m}) == closed);
                if (k <= 2 || n <= 15) CHECK(phi_k_nm_oracle({k, n, m}) == closed);
            }
        }
    }
    for (unsigned k = 1; k <= 4; ++k)
        for (u64 n = 1; n <= 200; ++n) CHECK(phi_k_nm({k, n, n}) == phi_k(k, n));
}

TEST_CASE("alternating sums") {
    CHECK(alternating_sum(5, 0) == 1);
    CHECK(alternating_sum(5, 1) == Rational(3, 4));
    CHECK(alternating_sum(5, 2) == Rational(13, 16));
    CHECK(alternating_sum(2, 3) == 0);
    CHECK(alternating_sum(7, -1) == 0);
}

TEST_CASE("vanishing characterization") {
    for (unsigned k = 1; k <= 6; ++k)
        for (u64 n = 1; n <= 500; ++n) CHECK((phi_k(k, n) == 0) == (k % 2 == 0 && n % 2 == 0));
}

TEST_CASE("phi_k is multiplicative") {
    for (unsigned k = 1; k <= 4; ++k)
        for (u64 m = 2; m <= 100; ++m)
            for (u64 n = m + 1; m * n <= 10000; ++n)
                if (std::gcd(m, n) == 1) CHECK(phi_k(k, m * n) == phi_k(k, m) * phi_k(k, n));
}

TEST_CASE("phi_2 matches both Carlitz forms") {
    for (u64 n = 1; n <= 500; ++n) {
        const BigInt x = phi_k(2, n);
        CHECK(carlitz_x(n) == x);
        CHECK(carlitz_x_mobius_form(n) == x);
    }
}

TEST_CASE("g_k: values") {
    CHECK(g_k(2, 2).value == -4);
    CHECK(g_k(2, 3).value == -7);
    CHECK(g_k(2, 4).value == 0);
    CHECK(g_k(2, 6).value == 28);
    CHECK(g_k(2, 1).value == 1);
    CHECK(g_k(1, 7).value == -1);  // g_1 = mu

    // g_k = phi_k * (mu id_k), evaluated independently.
    for (unsigned k = 1; k <= 4; ++k) {
        const auto g = dirichlet_convolve(phi_k_function(k), pointwise_product(mobius(), identity_power(k)));
        for (u64 n = 1; n <= 300; ++n) CHECK(g(n) == g_k(k, n).value);
    }
}

TEST_CASE("g_k vanishes on non-squarefree arguments") {
    for (unsigned k = 1; k <= 6; ++k)
        for (u64 n = 1; n <= 2000; ++n)
            if (!factorize(n).squarefree()) CHECK(g_k(k, n).value == 0);
}

TEST_CASE("g_k(p) lies strictly between -(k+1) p^(k-1) and 0") {
    const auto primes = primes_up_to(10000);
    for (unsigned k = 2; k <= 10; ++k) {
        for (u64 p : primes) {
            const BigInt g = g_k_prime(k, p);
            CHECK(g < 0);
            CHECK(g > -BigInt(k + 1) * pow(p, k - 1));
        }
    }
}

TEST_CASE("|g_k(n)| <= (k+1)^omega(n) n^(k-1)") {
    for (unsigned k = 1; k <= 6; ++k) {
        for (u64 n = 1; n <= 10000; ++n) {
            const auto f = factorize(n);
            CHECK(abs(g_k(k, f).value) <= pow(k + 1, f.omega()) * pow(n, k - 1));
        }
    }
}

TEST_CASE("id_k * g_k = phi_k") {
    for (unsigned k = 1; k <= 4; ++k) {
        for (u64 n = 1; n <= 1000; ++n) {
            BigInt sum = 0;
            for (u64 d : divisors(n)) sum += g_k(k, d).value * pow(n / d, k);
            CHECK(sum == phi_k(k, n));
        }
    }
}
