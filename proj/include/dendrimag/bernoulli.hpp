#pragma once

#include <mutex>
#include <vector>

#include "dendrimag/rational.hpp"

namespace dendrimag {

/// Bernoulli number B_m with the z/(e^z - 1) convention, so B_1 = -1/2.
///
/// The sign of B_1 matters: the Magnus recursion in its L_rhd form uses
/// B_m / m! directly, and the +1/2 convention gives a different (wrong)
/// series. Computed from sum_{j=0}^{m} C(m+1, j) B_j = 0 and memoized;
/// the memo table is guarded so concurrent callers may extend it.
inline Rational bernoulli(unsigned m)
{
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mu);
    while (table.size() <= m) {
        const unsigned n = static_cast<unsigned>(table.size());
        Rational acc(0);
        for (unsigned j = 0; j < n; ++j) acc += binomial(n + 1, j) * table[j];
        table.push_back(-acc / Rational(static_cast<long>(n) + 1));
    }
    return table[m];
}

/// B_m / m!, the coefficient of z^m in z/(e^z - 1).
inline Rational bernoulli_coefficient(unsigned m) { return bernoulli(m) / factorial(m); }

} // namespace dendrimag
