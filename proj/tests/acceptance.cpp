// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit on
// any failure.  Each criterion couples a library-level consistency sweep
// with the frozen regression values that motivated it.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "pinnacle/blocks.hpp"
#include "pinnacle/count.hpp"
#include "pinnacle/forest.hpp"
#include "pinnacle/kernel.hpp"
#include "pinnacle/oracle.hpp"
#include "pinnacle/orderings.hpp"
#include "pinnacle/text.hpp"
#include "pinnacle/verify.hpp"
#include "pinnacle/walks.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int number, const std::string& name, bool passed, double secs,
            const std::string& detail) {
    std::cout << (passed ? "PASS" : "FAIL") << " " << number << ". " << name << " ("
              << secs << " s)";
    if (!passed && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!passed) ++failures;
}

void run(int number, const std::string& name, bool (*body)(std::string&)) {
    const auto start = Clock::now();
    bool passed = false;
    std::string detail;
    try {
        passed = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    report(number, name, passed, seconds_since(start), detail);
}

bool expect(bool ok, const std::string& message, std::string& detail) {
    if (!ok && detail.empty()) detail = message;
    return ok;
}

bool from_check(const pinnacle::verify::CheckResult& result, std::string& detail) {
    return expect(result.passed, result.detail, detail);
}

bool within(double secs, double budget, std::string& detail) {
    return expect(secs <= budget,
                  "took " + std::to_string(secs) + " s, budget " + std::to_string(budget),
                  detail);
}

bool counts_vs_enumeration(std::string& detail) {
    const auto start = Clock::now();
    if (!from_check(pinnacle::verify::check_counts_match_enumeration(7), detail)) return false;
    return within(seconds_since(start), 120.0, detail);
}

bool weighted_identity(std::string& detail) {
    const auto start = Clock::now();
    if (!from_check(pinnacle::verify::check_weighted_identity(7), detail)) return false;
    return within(seconds_since(start), 120.0, detail);
}

bool walk_cycle_bijection(std::string& detail) {
    return from_check(pinnacle::verify::check_walk_cycle_bijection(6), detail);
}

bool ordering_recursion(std::string& detail) {
    using namespace pinnacle;
    if (!from_check(verify::check_ordering_recursion(3), detail)) return false;
    if (!expect(count_orderings(OrderingState(PinnacleCandidate({3, 5}, 5), 0)) ==
                    Count::exact(2),
                "ordering count of {3,5} is not 2", detail))
        return false;
    if (!expect(count_orderings(OrderingState(PinnacleCandidate({3, 5}, 5), 1)) ==
                    Count::exact(4),
                "one-tracked ordering count of {3,5} is not 4", detail))
        return false;
    for (int k = 1; k <= 30; ++k) {
        std::vector<std::int64_t> odd;
        for (int i = 0; i < k; ++i) odd.push_back(2 * i + 3);
        const auto stats =
            count_orderings_stats(OrderingState(PinnacleCandidate(odd, 2 * k + 1), 0));
        const std::size_t h = static_cast<std::size_t>(k / 2);
        const std::size_t bound = (h + 2) * (h + 1) + h + 1;
        if (!expect(stats.memo_entries <= bound,
                    "memo entries " + std::to_string(stats.memo_entries) + " exceed bound " +
                        std::to_string(bound) + " at k=" + std::to_string(k),
                    detail))
            return false;
    }
    return true;
}

bool segregated_formula(std::string& detail) {
    using namespace pinnacle;
    if (!from_check(verify::check_segregated_formula(), detail)) return false;
    const KernelTables tables(ArithMode::exact(), 12);
    return expect(segregated_count(2, 1, 0, 0, tables) == Count::exact(2),
                  "segregated count of 001 is not 2", detail) &&
           expect(segregated_count(1, 2, 0, 2, tables) == Count::exact(6),
                  "segregated count of 011 with two pads is not 6", detail) &&
           expect(segregated_count(1, 2, 0, 4, tables) == Count::exact(0),
                  "overloaded pads should count zero", detail);
}

bool block_concatenation(std::string& detail) {
    using namespace pinnacle;
    if (!from_check(verify::check_block_concatenation(), detail)) return false;
    const Count brute = oracle::brute_block_count(text::parse_block("001000"), 2, 0);
    if (!expect(brute == Count::exact(144), "brute count of 001000 with two tops is not 144",
                detail))
        return false;
    const KernelTables tables(ArithMode::exact(), 12);
    const auto lookup = [&tables](const Block& piece, int top, int pads) {
        const std::int64_t ones = piece.ones_count();
        return segregated_count(piece.length() - ones, ones, top, pads, tables);
    };
    const Count seam =
        concat_count(text::parse_block("001"), text::parse_block("000"), 2, 0, lookup);
    return expect(seam == brute, "seam convolution disagrees with the scan on 001000", detail);
}

bool forest_roundtrip(std::string& detail) {
    using namespace pinnacle;
    if (!from_check(verify::check_forest_roundtrip(10), detail)) return false;
    return expect(text::format_forest(forest_encode(PinnacleCandidate({4, 6}, 7))) ==
                      "1 ((2,3)4,5)6 7",
                  "forest of {4,6} in [7] lost its pinned shape", detail);
}

bool half_product(std::string& detail) {
    using namespace pinnacle;
    if (!from_check(verify::check_half_product(8), detail)) return false;
    const auto result = half_product_check(forest_encode(PinnacleCandidate({4}, 4)));
    return expect(result.whole == Count::exact(12) && result.split == Count::exact(12),
                  "half product of {4} in [4] is not 12", detail) &&
           expect(result.split + result.split == Count::exact(24),
                  "unhalved product of {4} in [4] is not 24", detail) &&
           expect(result.whole != result.split + result.split,
                  "unhalved product should overcount", detail);
}

bool modular_scaling(std::string& detail) {
    using namespace pinnacle;
    const ArithMode mode = ArithMode::modular(2305843009213693951ull);

    std::vector<std::int64_t> big_set;
    for (int i = 1; i <= 50; ++i) big_set.push_back(20000000ll * i);
    const auto start = Clock::now();
    const Count big = fast_count(PinnacleCandidate(big_set, 1000000000), mode);
    const double secs = seconds_since(start);
    if (!expect(!big.is_zero(), "astronomical count collapsed to zero", detail)) return false;
    if (!within(secs, 1.0, detail)) return false;

    double min_ratio = 0.0, max_ratio = 0.0;
    bool first = true;
    for (const int k : {5, 10, 20, 40}) {
        for (const std::int64_t n : {1000ll, 1000000ll, 1000000000ll}) {
            std::vector<std::int64_t> values;
            const std::int64_t gap = n / k;
            for (int i = 1; i <= k; ++i) values.push_back(gap * i);
            const PinnacleCandidate cand(values, n);
            op_counter::reset();
            fast_count(cand, mode);
            const double ops = static_cast<double>(op_counter::total());
            const double model = 1.0 * k * k * std::log2(static_cast<double>(n)) +
                                 1.0 * k * k * k * k;
            const double ratio = ops / model;
            min_ratio = first ? ratio : std::min(min_ratio, ratio);
            max_ratio = first ? ratio : std::max(max_ratio, ratio);
            first = false;
        }
    }
    return expect(max_ratio <= 4.0 * min_ratio,
                  "operation counts drift from the k^2 log n + k^4 model: spread " +
                      std::to_string(max_ratio / min_ratio),
                  detail);
}

bool admissible_census(std::string& detail) {
    return from_check(pinnacle::verify::check_admissible_census(12), detail);
}

}  // namespace

int main() {
    run(1, "exact counts match full enumeration through n = 7", counts_vs_enumeration);
    run(2, "subset-weighted sums match walk sums through n = 7", weighted_identity);
    run(3, "walk/cycle maps are mutually inverse bijections", walk_cycle_bijection);
    run(4, "ordering recursion matches scans and stays compact", ordering_recursion);
    run(5, "segregated closed form matches scans", segregated_formula);
    run(6, "seam convolution matches scans on concatenations", block_concatenation);
    run(7, "forest codec round-trips exactly on ballot words", forest_roundtrip);
    run(8, "half-product identity holds and the halving matters", half_product);
    run(9, "modular counting meets the cost model at n = 10^9", modular_scaling);
    run(10, "admissible census equals the middle binomial through n = 12", admissible_census);

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 10 criteria passed\n";
    return 0;
}
