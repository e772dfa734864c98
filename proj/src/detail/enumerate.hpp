#pragma once

#include <sstream>
#include <vector>

#include "phik/types.hpp"

namespace phik::detail {

/// Current tuple of the exhaustive enumeration, with running aggregates.
struct TupleState {
    const std::vector<u64>& values;  // a_1..a_k, each in [1, n]
    u64 sum;                         // a_1 + ... + a_k (exact)
    u64 product_mod_n;               // a_1 ... a_k mod n
};

/// Throws BudgetExceeded when n^k exceeds budget.
inline void check_budget(unsigned k, u64 n, u64 budget) {
    unsigned __int128 total = 1;
    for (unsigned i = 0; i < k; ++i) {
        total *= n;
        if (total > budget) {
            std::ostringstream msg;
            msg << "exhaustive enumeration of " << n << "^" << k << " tuples exceeds budget "
                << budget;
            throw BudgetExceeded(msg.str());
        }
    }
}

/// Visits every k-tuple in [1, n]^k in lexicographic order.
template <typename Visit>
void for_each_tuple(unsigned k, u64 n, u64 budget, Visit&& visit) {
    check_budget(k, n, budget);
    std::vector<u64> a(k, 1);
    // prefix[i] = a_1 ... a_i mod n
    std::vector<u64> prefix(k + 1, 1 % n);
    for (unsigned i = 0; i < k; ++i)
        prefix[i + 1] = static_cast<u64>(static_cast<unsigned __int128>(prefix[i]) * a[i] % n);
    u64 sum = k;
    while (true) {
        visit(TupleState{a, sum, prefix[k]});
        unsigned i = k;
        while (i > 0 && a[i - 1] == n) {
            sum -= n - 1;
            a[i - 1] = 1;
            --i;
        }
        if (i == 0) return;
        ++a[i - 1];
        ++sum;
        for (unsigned j = i - 1; j < k; ++j)
            prefix[j + 1] = static_cast<u64>(static_cast<unsigned __int128>(prefix[j]) * a[j] % n);
    }
}

}  // namespace phik::detail
