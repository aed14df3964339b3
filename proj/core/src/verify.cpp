#include "pinnacle/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pinnacle/blocks.hpp"
#include "pinnacle/forest.hpp"
#include "pinnacle/kernel.hpp"
#include "pinnacle/oracle.hpp"
#include "pinnacle/orderings.hpp"
#include "pinnacle/text.hpp"
#include "pinnacle/walks.hpp"

namespace pinnacle::verify {

namespace {

std::vector<std::int64_t> mask_values(std::int64_t n, std::uint64_t mask) {
    std::vector<std::int64_t> values;
    for (std::int64_t v = 1; v <= n; ++v)
        if (mask >> (v - 1) & 1) values.push_back(v);
    return values;
}

std::string set_tag(std::int64_t n, const PinnacleCandidate& cand) {
    return "n=" + std::to_string(n) + " set=" +
           text::format_set(cand.values());
}

}  // namespace

CheckResult check_counts_match_enumeration(std::int64_t max_n) {
    CheckResult out{"counts-match-enumeration", true, 0, ""};
    max_n = std::min(max_n, oracle::kMaxScanN);
    for (std::int64_t n = 1; n <= max_n && out.passed; ++n) {
        const auto census = oracle::pinnacle_census(n);
        Count total = Count::exact(0);
        for (const auto& [key, value] : census) total += value;
        Count factorial = Count::exact(1);
        for (std::int64_t v = 2; v <= n; ++v) factorial *= Count::exact(v);
        if (total != factorial) {
            out.passed = false;
            out.detail = "n=" + std::to_string(n) + ": census does not cover S_n";
            break;
        }
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            const PinnacleCandidate cand(mask_values(n, mask), n);
            const auto it = census.find(
                std::vector<std::int64_t>(cand.values().begin(), cand.values().end()));
            const Count expected = it == census.end() ? Count::exact(0) : it->second;
            const Count got = fast_count(cand);
            ++out.instances;
            if (got != expected) {
                out.passed = false;
                out.detail = set_tag(n, cand) + ": fast=" + got.str() +
                             " enumeration=" + expected.str();
                break;
            }
        }
    }
    return out;
}

CheckResult check_weighted_identity(std::int64_t max_n) {
    CheckResult out{"weighted-identity", true, 0, ""};
    max_n = std::min(max_n, oracle::kMaxScanN);
    for (std::int64_t n = 1; n <= max_n && out.passed; ++n) {
        const auto census = oracle::pinnacle_census(n);
        const auto counter = [&](const PinnacleCandidate& q) {
            const auto it = census.find(
                std::vector<std::int64_t>(q.values().begin(), q.values().end()));
            return it == census.end() ? Count::exact(0) : it->second;
        };
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            const PinnacleCandidate cand(mask_values(n, mask), n);
            const Count lhs = weighted_sum_lhs(cand, counter);
            const Count rhs = weighted_walk_sum(cand);
            ++out.instances;
            if (lhs != rhs) {
                out.passed = false;
                out.detail = set_tag(n, cand) + ": lhs=" + lhs.str() + " rhs=" + rhs.str();
                break;
            }
        }
    }
    return out;
}

CheckResult check_walk_cycle_bijection(std::int64_t max_n) {
    CheckResult out{"walk-cycle-bijection", true, 0, ""};
    max_n = std::min(max_n, oracle::kMaxWalkN);

    // Pinned example: a nine-step walk and its exact image.
    {
        const auto walk = text::parse_walk("U1R F1L D2L F1R U1R F2L D2L F1L F1R");
        const auto marked = f_map(walk);
        const std::string cycle_text = text::format_marked_cycle(marked);
        if (cycle_text != "[10r,6r,1r,2l,5r,3l,4l,8l,9r,7l]") {
            return {out.name, false, 1, "pinned walk mapped to " + cycle_text};
        }
        if (!(g_map(marked) == walk)) {
            return {out.name, false, 1, "pinned walk did not round-trip"};
        }
        ++out.instances;
    }

    for (std::int64_t n = 1; n <= max_n && out.passed; ++n) {
        for (std::uint64_t mask = 0; mask < (1ull << n) && out.passed; ++mask) {
            const PinnacleCandidate cand(mask_values(n, mask), n);
            const auto walks = oracle::enumerate_decorated_walks(cand);
            const auto cycles = oracle::enumerate_marked_cycles(cand);
            const Count expected = weighted_walk_sum(cand);
            if (Count::exact(walks.size()) != expected ||
                Count::exact(cycles.size()) != expected) {
                out.passed = false;
                out.detail = set_tag(n, cand) + ": walks=" + std::to_string(walks.size()) +
                             " cycles=" + std::to_string(cycles.size()) +
                             " weighted sum=" + expected.str();
                break;
            }
            std::set<std::string> cycle_texts;
            for (const auto& cycle : cycles) cycle_texts.insert(text::format_marked_cycle(cycle));
            std::set<std::string> image;
            for (const auto& walk : walks) {
                const auto marked = f_map(walk);
                image.insert(text::format_marked_cycle(marked));
                if (!(g_map(marked) == walk)) {
                    out.passed = false;
                    out.detail = set_tag(n, cand) + ": walk " + text::format_walk(walk) +
                                 " did not round-trip";
                    break;
                }
                ++out.instances;
            }
            if (!out.passed) break;
            if (image != cycle_texts) {
                out.passed = false;
                out.detail = set_tag(n, cand) + ": image of the walk map is not the cycle family";
                break;
            }
            for (const auto& cycle : cycles) {
                if (!(f_map(g_map(cycle)) == cycle)) {
                    out.passed = false;
                    out.detail = set_tag(n, cand) + ": cycle " + text::format_marked_cycle(cycle) +
                                 " did not round-trip";
                    break;
                }
                ++out.instances;
            }
        }
    }
    return out;
}

CheckResult check_ordering_recursion(int max_k) {
    CheckResult out{"ordering-recursion", true, 0, ""};
    max_k = std::min(max_k, oracle::kMaxOrderingsK);
    for (int k = 0; k <= max_k && out.passed; ++k) {
        const std::int64_t n = 2 * static_cast<std::int64_t>(k) + 1;
        for (std::uint64_t mask = 0; mask < (1ull << n) && out.passed; ++mask) {
            const auto values = mask_values(n, mask);
            if (static_cast<int>(values.size()) != k) continue;
            const PinnacleCandidate cand(values, n);
            const int tracked_cap =
                k == 0 ? k + 1
                       : std::min<std::int64_t>(k + 1, cand.values()[0] - 1);
            for (int tracked = 0; tracked <= tracked_cap; ++tracked) {
                const auto scanned = oracle::brute_orderings(cand, tracked);
                const Count got = count_orderings(OrderingState(cand, tracked));
                ++out.instances;
                if (got != Count::exact(scanned.size())) {
                    out.passed = false;
                    out.detail = set_tag(n, cand) + " tracked=" + std::to_string(tracked) +
                                 ": recursion=" + got.str() +
                                 " scan=" + std::to_string(scanned.size());
                    break;
                }
                // Scanned sets are closed under permuting the tracked
                // low non-members among their positions.
                auto low = cand.first_nonmembers(tracked);
                std::sort(low.begin(), low.end());
                for (const Ordering& ordering : scanned) {
                    std::vector<std::size_t> slots;
                    for (std::size_t i = 0; i < ordering.size(); ++i)
                        if (std::binary_search(low.begin(), low.end(), ordering[i]))
                            slots.push_back(i);
                    auto shuffled = low;
                    do {
                        Ordering candidate = ordering;
                        for (std::size_t i = 0; i < slots.size(); ++i)
                            candidate[slots[i]] = shuffled[i];
                        ++out.instances;
                        if (!scanned.count(candidate)) {
                            out.passed = false;
                            out.detail = set_tag(n, cand) + ": ordering family not closed "
                                         "under relabeling the tracked non-members";
                            break;
                        }
                    } while (out.passed &&
                             std::next_permutation(shuffled.begin(), shuffled.end()));
                    if (!out.passed) break;
                }
                if (!out.passed) break;
            }
        }
    }
    return out;
}

CheckResult check_segregated_formula() {
    CheckResult out{"segregated-closed-form", true, 0, ""};
    const KernelTables tables(ArithMode::exact(), 12);
    for (std::int64_t zeros = 0; zeros <= 4 && out.passed; ++zeros) {
        for (std::int64_t ones = zeros == 0 ? 1 : 0; ones <= 2 && out.passed; ++ones) {
            std::vector<std::int64_t> positions;
            for (std::int64_t t = 1; t <= ones; ++t) positions.push_back(zeros + t);
            const Block block(zeros + ones, positions);
            for (int top = 0; top <= 2 && out.passed; ++top) {
                for (int pads = 0; pads <= 2; ++pads) {
                    if (zeros + ones + top + pads > oracle::kMaxBlockWeight) continue;
                    const Count got = segregated_count(zeros, ones, top, pads, tables);
                    const Count expected = oracle::brute_block_count(block, top, pads);
                    ++out.instances;
                    if (got != expected) {
                        out.passed = false;
                        out.detail = "zeros=" + std::to_string(zeros) +
                                     " ones=" + std::to_string(ones) +
                                     " top=" + std::to_string(top) +
                                     " pads=" + std::to_string(pads) + ": closed form " +
                                     got.str() + " scan " + expected.str();
                        break;
                    }
                }
            }
        }
    }
    return out;
}

namespace {

// Splits off the leading maximal zeros-then-ones piece.
std::pair<Block, Block> leading_piece(const Block& block) {
    const auto bits = block.bits();
    std::int64_t cut = 0;
    while (cut < block.length() && bits[cut] == 0) ++cut;
    while (cut < block.length() && bits[cut] == 1) ++cut;
    return {Block::from_bits({bits.begin(), bits.begin() + cut}),
            Block::from_bits({bits.begin() + cut, bits.end()})};
}

// Closed-form block count by always splitting at the first piece boundary.
class PieceEvaluator {
public:
    explicit PieceEvaluator(const KernelTables& tables) : tables_(tables) {
        lookup_ = [this](const Block& b, int top, int pads) { return eval(b, top, pads); };
    }

    Count eval(const Block& block, int top, int pads) {
        const std::string key = text::format_block(block) + "/" + std::to_string(top) + "/" +
                                std::to_string(pads);
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
        Count value = Count::exact(0);
        if (block.is_segregated()) {
            value = segregated_count(block.length() - block.ones_count(), block.ones_count(),
                                     top, pads, tables_);
        } else {
            const auto [left, right] = leading_piece(block);
            value = concat_count(left, right, top, pads, lookup_);
        }
        return memo_.emplace(key, value).first->second;
    }

    const std::function<Count(const Block&, int, int)>& lookup() const { return lookup_; }

private:
    const KernelTables& tables_;
    std::map<std::string, Count> memo_;
    std::function<Count(const Block&, int, int)> lookup_;
};

}  // namespace

CheckResult check_block_concatenation() {
    CheckResult out{"block-concatenation", true, 0, ""};

    // Every split point of every short word gives the same count, whatever
    // the seam, when the factors come from the closed forms.
    const KernelTables tables(ArithMode::exact(), 24);
    PieceEvaluator pieces(tables);
    for (std::int64_t len = 2; len <= 6 && out.passed; ++len) {
        for (std::uint64_t mask = 0; mask < (1ull << len) && out.passed; ++mask) {
            std::vector<int> bits(len);
            for (std::int64_t i = 0; i < len; ++i) bits[i] = mask >> i & 1;
            const Block whole = Block::from_bits(bits);
            for (int top = 0; top <= 2 && out.passed; ++top) {
                for (int pads = 0; pads <= 2 && out.passed; ++pads) {
                    const Count base = pieces.eval(whole, top, pads);
                    for (std::int64_t cut = 1; cut < len; ++cut) {
                        const Block left = Block::from_bits(
                            std::vector<int>(bits.begin(), bits.begin() + cut));
                        const Block right = Block::from_bits(
                            std::vector<int>(bits.begin() + cut, bits.end()));
                        const Count got =
                            concat_count(left, right, top, pads, pieces.lookup());
                        ++out.instances;
                        if (got != base) {
                            out.passed = false;
                            out.detail = "block " + text::format_block(whole) + " cut at " +
                                         std::to_string(cut) + " top=" + std::to_string(top) +
                                         " pads=" + std::to_string(pads) +
                                         ": seam value depends on the split point";
                            break;
                        }
                    }
                }
            }
        }
    }
    if (!out.passed) return out;

    // The same seam convolution grounded against direct scans.
    std::map<std::string, Count> memo;
    const std::function<Count(const Block&, int, int)> lookup =
        [&memo](const Block& b, int top, int pads) {
            const std::string key = text::format_block(b) + "/" + std::to_string(top) + "/" +
                                    std::to_string(pads);
            const auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            return memo.emplace(key, oracle::brute_block_count(b, top, pads)).first->second;
        };
    for (std::int64_t len = 2; len <= 5 && out.passed; ++len) {
        for (std::uint64_t mask = 0; mask < (1ull << len) && out.passed; ++mask) {
            std::vector<int> bits(len);
            for (std::int64_t i = 0; i < len; ++i) bits[i] = mask >> i & 1;
            const Block whole = Block::from_bits(bits);
            for (int top = 0; top <= 1 && out.passed; ++top) {
                for (int pads = 0; pads <= 1 && out.passed; ++pads) {
                    const Count expected = oracle::brute_block_count(whole, top, pads);
                    for (std::int64_t cut = 1; cut < len; ++cut) {
                        const Block left = Block::from_bits(
                            std::vector<int>(bits.begin(), bits.begin() + cut));
                        const Block right = Block::from_bits(
                            std::vector<int>(bits.begin() + cut, bits.end()));
                        const Count got = concat_count(left, right, top, pads, lookup);
                        ++out.instances;
                        if (got != expected) {
                            out.passed = false;
                            out.detail = "block " + text::format_block(whole) + " cut at " +
                                         std::to_string(cut) + " top=" + std::to_string(top) +
                                         " pads=" + std::to_string(pads) + ": seam " +
                                         got.str() + " scan " + expected.str();
                            break;
                        }
                    }
                }
            }
        }
    }
    return out;
}

CheckResult check_forest_roundtrip(std::int64_t max_n) {
    CheckResult out{"forest-roundtrip", true, 0, ""};

    // Pinned example.
    {
        const Forest forest = forest_encode(PinnacleCandidate({4, 6}, 7));
        const std::string body = text::format_forest(forest);
        if (body != "1 ((2,3)4,5)6 7")
            return {out.name, false, 1, "pinned encode produced " + body};
        ++out.instances;
    }

    for (std::int64_t n = 0; n <= max_n && out.passed; ++n) {
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            const PinnacleCandidate cand(mask_values(n, mask), n);
            const bool realizable = is_admissible(cand);
            const bool ballot = n == 0 || is_ballot(block_of(cand));
            if (realizable != ballot) {
                out.passed = false;
                out.detail = set_tag(n, cand) + ": ballot test disagrees with admissibility";
                break;
            }
            ++out.instances;
            if (!realizable) {
                try {
                    forest_encode(cand);
                    out.passed = false;
                    out.detail = set_tag(n, cand) + ": encode accepted an unrealizable set";
                    break;
                } catch (const Error&) {
                }
                continue;
            }
            const Forest forest = forest_encode(cand);
            if (!(forest_decode(forest) == cand)) {
                out.passed = false;
                out.detail = set_tag(n, cand) + ": decode returned a different set";
                break;
            }
            if (!(text::parse_forest(text::format_forest(forest)) == forest)) {
                out.passed = false;
                out.detail = set_tag(n, cand) + ": forest text did not round-trip";
                break;
            }
        }
    }
    return out;
}

CheckResult check_half_product(std::int64_t max_n) {
    CheckResult out{"half-product", true, 0, ""};

    // Pinned counterexample: without the halving the split over-counts.
    {
        const HalfProduct probe = half_product_check(forest_encode(PinnacleCandidate({4}, 4)));
        if (!probe.equal || !(probe.whole == Count::exact(12)) ||
            probe.whole == probe.split + probe.split)
            return {out.name, false, 1, "pinned split at n=4 behaved unexpectedly"};
        ++out.instances;
    }

    for (std::int64_t n = 1; n <= max_n && out.passed; ++n) {
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            const PinnacleCandidate cand(mask_values(n, mask), n);
            if (!is_admissible(cand)) continue;
            const Forest forest = forest_encode(cand);
            if (forest.tree_count() < 2 || !forest.tree_is_singleton(0)) continue;
            const HalfProduct result = half_product_check(forest);
            ++out.instances;
            if (!result.equal) {
                out.passed = false;
                out.detail = set_tag(n, cand) + ": whole=" + result.whole.str() +
                             " split=" + result.split.str();
                break;
            }
        }
    }
    return out;
}

CheckResult check_admissible_census(std::int64_t max_n) {
    CheckResult out{"admissible-census", true, 0, ""};
    for (std::int64_t n = 1; n <= max_n && out.passed; ++n) {
        BigInt admissible = 0;
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask)
            if (is_admissible(PinnacleCandidate(mask_values(n, mask), n))) ++admissible;
        // Middle binomial coefficient, computed in place.
        const std::int64_t a = n - 1, b = (n - 1) / 2;
        BigInt expected = 1;
        for (std::int64_t i = 1; i <= b; ++i) {
            expected *= a - b + i;
            expected /= i;
        }
        ++out.instances;
        if (admissible != expected) {
            out.passed = false;
            out.detail = "n=" + std::to_string(n) + ": " + admissible.str() +
                         " realizable sets, middle binomial " + expected.str();
        }
    }
    return out;
}

std::vector<CheckResult> run_all(std::int64_t max_n) {
    return {
        check_counts_match_enumeration(max_n),
        check_weighted_identity(max_n),
        check_walk_cycle_bijection(std::min<std::int64_t>(max_n, 6)),
        check_ordering_recursion(3),
        check_segregated_formula(),
        check_block_concatenation(),
        check_forest_roundtrip(10),
        check_half_product(8),
        check_admissible_census(12),
    };
}

}  // namespace pinnacle::verify
