#include "pinnacle/kernel.hpp"

#include <algorithm>
#include <string>

namespace pinnacle {

Count fast_pow(Count base, std::uint64_t exp) {
    Count acc = Count::of(base.mode(), 1);
    while (exp) {
        if (exp & 1) acc *= base;
        base *= base;
        exp >>= 1;
    }
    return acc;
}

KernelTables::KernelTables(const ArithMode& mode, int bound) : mode_(mode), bound_(bound) {
    if (bound < 0) throw Error("kernel table bound must be non-negative");
    if (mode.is_modular() && mode.prime() <= static_cast<std::uint64_t>(bound))
        throw Error("modulus " + std::to_string(mode.prime()) +
                    " does not exceed the table bound " + std::to_string(bound));

    fact_.reserve(bound + 1);
    fact_.push_back(one());
    for (int a = 1; a <= bound; ++a) fact_.push_back(fact_.back() * lift(a));

    if (mode.is_modular()) {
        inv_fact_.assign(bound + 1, zero());
        inv_fact_[bound] = one().div_exact(fact_[bound]);
        for (int a = bound; a > 0; --a) inv_fact_[a - 1] = inv_fact_[a] * lift(a);
    }

    binom_.resize(bound + 1);
    for (int a = 0; a <= bound; ++a) {
        binom_[a].assign(a + 1, one());
        for (int b = 1; b < a; ++b) binom_[a][b] = binom_[a - 1][b - 1] + binom_[a - 1][b];
    }

    pow2_small_.reserve(bound + 3);
    pow2_small_.push_back(one());
    for (int t = 1; t <= bound + 2; ++t) pow2_small_.push_back(pow2_small_.back() * lift(2));

    if (mode.is_modular()) {
        const Count inv2 = Count::of(mode, (mode.prime() + 1) / 2);
        inv_pow2_small_.reserve(bound + 3);
        inv_pow2_small_.push_back(one());
        for (int t = 1; t <= bound + 2; ++t)
            inv_pow2_small_.push_back(inv_pow2_small_.back() * inv2);
    }
}

Count KernelTables::factorial(int a) const {
    if (a < 0 || a > bound_)
        throw Error("factorial(" + std::to_string(a) + ") exceeds the kernel table bound " +
                    std::to_string(bound_));
    return fact_[a];
}

Count KernelTables::binomial(std::int64_t a, std::int64_t b) const {
    if (a < 0 || a > bound_)
        throw Error("binomial(" + std::to_string(a) + ", ...) exceeds the kernel table bound " +
                    std::to_string(bound_));
    if (b < 0 || b > a) return zero();
    return binom_[a][b];
}

Count KernelTables::factorial_ratio(int a, int b) const {
    if (b > a) throw Error("factorial_ratio needs b <= a");
    if (a < 0 || a > bound_)
        throw Error("factorial_ratio(" + std::to_string(a) + ", ...) exceeds the kernel table bound");
    if (mode_.is_modular()) return fact_[a] * inv_fact_[b];
    return fact_[a].div_exact(fact_[b]);
}

Count KernelTables::stirling2_from_powers(const std::vector<Count>& pow_x, int c) const {
    // Alternating sum split into its positive and negative halves so the
    // exact mode never holds a negative intermediate.
    Count plus = zero(), minus = zero();
    for (int d = 0; d <= c; ++d) {
        Count term = binom_[c][d] * pow_x[d];
        if ((c - d) % 2 == 0)
            plus += term;
        else
            minus += term;
    }
    return (plus - minus).div_exact(fact_[c]);
}

Count KernelTables::stirling2(std::uint64_t x, int c) const {
    if (c < 0) return zero();
    if (c > bound_)
        throw Error("stirling2(..., " + std::to_string(c) + ") exceeds the kernel table bound " +
                    std::to_string(bound_));
    if (static_cast<std::uint64_t>(c) > x) return zero();
    if (x == 0) return one();  // c == 0 here
    if (auto it = stirling_cache_.find({x, c}); it != stirling_cache_.end()) return it->second;
    std::vector<Count> pow_x;
    pow_x.reserve(c + 1);
    for (int d = 0; d <= c; ++d) pow_x.push_back(fast_pow(lift(d), x));
    return stirling2_from_powers(pow_x, c);
}

void KernelTables::build_cache(std::span<const std::pair<std::uint64_t, int>> keys) {
    std::map<std::uint64_t, std::vector<int>> by_x;
    for (const auto& [x, c] : keys) {
        if (c < 0 || c > bound_)
            throw Error("stirling cache key c=" + std::to_string(c) + " out of range");
        by_x[x].push_back(c);
    }
    for (auto& [x, cs] : by_x) {
        if (!pow2_cache_.count(x)) pow2_cache_.emplace(x, fast_pow(lift(2), x));
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        const int max_c = cs.back();
        // One shared power table d^x per x; each S(x, c) is then O(c).
        std::vector<Count> pow_x;
        pow_x.reserve(max_c + 1);
        for (int d = 0; d <= max_c; ++d) pow_x.push_back(fast_pow(lift(d), x));
        for (int c : cs) {
            Count value = zero();
            if (static_cast<std::uint64_t>(c) <= x)
                value = (x == 0) ? one() : stirling2_from_powers(pow_x, c);
            stirling_cache_.emplace(std::make_pair(x, c), value);
        }
    }
}

Count KernelTables::pow2_shifted(std::uint64_t x, int shift) const {
    if (shift < -(bound_ + 2) || shift > bound_ + 2)
        throw Error("pow2 shift out of range");
    Count base = zero();
    if (auto it = pow2_cache_.find(x); it != pow2_cache_.end())
        base = it->second;
    else
        base = fast_pow(lift(2), x);
    if (shift >= 0) return base * pow2_small_[shift];
    if (mode_.is_modular()) return base * inv_pow2_small_[-shift];
    return base.div_exact(pow2_small_[-shift]);
}

}  // namespace pinnacle
