#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "pinnacle/count.hpp"

namespace pinnacle {

// Binary exponentiation; 0^0 == 1.
Count fast_pow(Count base, std::uint64_t exp);

// Factorials, binomials and Stirling numbers shared by one counting run.
// A table is built once for a fixed mode and bound K, then read only.
// In modular mode the prime must exceed K so every factorial is invertible.
class KernelTables {
public:
    KernelTables(const ArithMode& mode, int bound);

    const ArithMode& mode() const noexcept { return mode_; }
    int bound() const noexcept { return bound_; }

    Count factorial(int a) const;                       // 0 <= a <= K
    Count binomial(std::int64_t a, std::int64_t b) const;  // 0 <= a <= K; out-of-range b gives 0
    Count factorial_ratio(int a, int b) const;          // a! / b!, needs b <= a <= K

    // Stirling numbers of the second kind, S(x, c) for c <= K.  x may be
    // huge; uncached queries pay c fast exponentiations on the spot.
    Count stirling2(std::uint64_t x, int c) const;

    // Precomputes S(x, c) for every requested pair, sharing the d^x power
    // table across all pairs with equal x.  Also caches 2^x per distinct x.
    void build_cache(std::span<const std::pair<std::uint64_t, int>> keys);

    // 2^(x + shift) with |shift| <= K + 2.  O(1) once x is cached.
    Count pow2_shifted(std::uint64_t x, int shift) const;

    Count zero() const { return Count::of(mode_, 0); }
    Count one() const { return Count::of(mode_, 1); }
    Count lift(std::uint64_t v) const { return Count::of(mode_, v); }

private:
    Count stirling2_from_powers(const std::vector<Count>& pow_x, int c) const;

    ArithMode mode_;
    int bound_;
    std::vector<Count> fact_;       // 0..K
    std::vector<Count> inv_fact_;   // modular mode only
    std::vector<std::vector<Count>> binom_;  // row a: C(a, 0..a)
    std::vector<Count> pow2_small_;          // 2^0 .. 2^(K+2)
    std::vector<Count> inv_pow2_small_;      // modular mode only
    std::map<std::pair<std::uint64_t, int>, Count> stirling_cache_;
    std::map<std::uint64_t, Count> pow2_cache_;
};

}  // namespace pinnacle
