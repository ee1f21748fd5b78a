#pragma once

// Magnus and Fer components for the free generator, as raw pre-Lie monomials
// and expanded in the rooted-tree and planar-tree bases.

#include <cstddef>
#include <vector>

#include "dendrimag/magnus.hpp"
#include "dendrimag/planar_tree.hpp"
#include "dendrimag/prelie_expr.hpp"
#include "dendrimag/rooted_tree.hpp"

namespace dendrimag {

struct FreeComponent {
    PreLieComb raw;      ///< monomials exactly as the recursion produces them
    RootedComb rooted;   ///< expansion in the free pre-Lie algebra
};

/// Omega'(lambda a) for the free generator through degree `order`, raw form.
inline TruncatedSeries<PreLieComb> magnus_free_raw(std::size_t order)
{
    FormalPreLie f;
    return magnus(f, f.generator(), order);
}

/// The lambda^n coefficient of Omega' for the free generator.
inline FreeComponent magnus_free_component(std::size_t n)
{
    if (n < 1 || n > 8) throw Error("free Magnus components are available for degrees 1..8");
    FreeComponent c;
    c.raw = magnus_free_raw(n)[n];
    c.rooted = eval_rooted(c.raw);
    return c;
}

/// U'_0, U'_1, ... for the free generator through degree `order`, raw form.
inline std::vector<TruncatedSeries<PreLieComb>> fer_free_raw(std::size_t order)
{
    FormalPreLie f;
    return fer(f, f.generator(), order);
}

} // namespace dendrimag
