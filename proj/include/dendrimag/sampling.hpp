#pragma once

// Seeded generators for random test data. Every suite takes a 64-bit seed so
// runs are reproducible.

#include <cstddef>
#include <cstdint>
#include <random>

#include "dendrimag/matrix.hpp"
#include "dendrimag/rational.hpp"

namespace dendrimag {

inline constexpr std::uint64_t default_seed = 20240611;

class Sampler {
public:
    explicit Sampler(std::uint64_t seed = default_seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    /// p/q with |p| <= range and 1 <= q <= range; zero with probability ~1/(2 range + 1).
    Rational rational(long range = 4) { return Rational(integer(-range, range), integer(1, range)); }

    Rational nonzero_rational(long range = 4)
    {
        Rational r;
        do r = rational(range);
        while (r.is_zero());
        return r;
    }

    MatrixRat matrix(std::size_t n, long range = 3)
    {
        MatrixRat m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rational(range);
        return m;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace dendrimag
