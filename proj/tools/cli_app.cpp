#include "cli_app.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pinnacle/blocks.hpp"
#include "pinnacle/forest.hpp"
#include "pinnacle/oracle.hpp"
#include "pinnacle/orderings.hpp"
#include "pinnacle/text.hpp"
#include "pinnacle/verify.hpp"
#include "pinnacle/walks.hpp"

namespace pinnacle::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultBenchPrime = 2305843009213693951ull;  // 2^61 - 1

ArithMode mode_of(std::uint64_t mod) {
    return mod == 0 ? ArithMode::exact() : ArithMode::modular(mod);
}

// Key/value lines for humans, one JSON object per line for scripts.
void emit(std::ostream& out, const std::string& format, const Json& payload) {
    if (format == "json") {
        out << payload.dump() << '\n';
        return;
    }
    for (const auto& [key, value] : payload.items()) {
        if (value.is_string())
            out << key << ": " << value.get<std::string>() << '\n';
        else
            out << key << ": " << value.dump() << '\n';
    }
}

// The numbers in a marked-cycle body such as "[10r,6r,1r,...]".
std::vector<std::int64_t> marked_cycle_values(const std::string& body) {
    std::vector<std::int64_t> values;
    std::int64_t current = 0;
    bool in_number = false;
    for (const char c : body) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            current = current * 10 + (c - '0');
            in_number = true;
        } else if (in_number) {
            values.push_back(current);
            current = 0;
            in_number = false;
        }
    }
    if (in_number) values.push_back(current);
    return values;
}

double cost_model(int k, std::int64_t n) {
    const double kd = k;
    return kd * kd * std::log2(static_cast<double>(n)) + kd * kd * kd * kd;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact pinnacle-set statistics of permutations"};
    app.name("pinnacle");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "plain"}))
        ->capture_default_str();

    int exit_code = 0;

    // count
    std::int64_t count_n = 0;
    std::string count_set;
    std::string count_method = "fast";
    std::uint64_t count_mod = 0;
    auto* count_cmd =
        app.add_subcommand("count", "Arrangements of [n] whose pinnacle set is --set");
    count_cmd->fallthrough();
    count_cmd->add_option("--n", count_n, "Ambient size n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count_cmd->add_option("--set", count_set, "Pinnacle values, e.g. 3,6,7; \"\" is empty")
        ->required();
    count_cmd->add_option("--method", count_method, "fast closed form or oracle scan")
        ->check(CLI::IsMember({"fast", "oracle"}))
        ->capture_default_str();
    count_cmd->add_option("--mod", count_mod, "Odd prime modulus; omit for exact arithmetic");
    count_cmd->callback([&] {
        const PinnacleCandidate cand(text::parse_int_list(count_set), count_n);
        const ArithMode mode = mode_of(count_mod);
        const Count value = count_method == "oracle"
                                ? reduced(oracle::brute_pinnacle_count(cand), mode)
                                : fast_count(cand, mode);
        emit(out, format, Json{{"count", value.str()}});
    });

    // wsum
    std::int64_t wsum_n = 0;
    std::string wsum_set;
    std::uint64_t wsum_mod = 0;
    auto* wsum_cmd = app.add_subcommand(
        "wsum", "Subset-weighted count sum against the lattice-walk sum");
    wsum_cmd->fallthrough();
    wsum_cmd->add_option("--n", wsum_n, "Ambient size n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    wsum_cmd->add_option("--set", wsum_set, "Pinnacle values; \"\" is empty")->required();
    wsum_cmd->add_option("--mod", wsum_mod, "Odd prime modulus; omit for exact arithmetic");
    wsum_cmd->callback([&] {
        const PinnacleCandidate cand(text::parse_int_list(wsum_set), wsum_n);
        const ArithMode mode = mode_of(wsum_mod);
        const Count rhs = weighted_walk_sum(cand, mode);
        const Count lhs = weighted_sum_lhs(
            cand, [&mode](const PinnacleCandidate& q) { return fast_count(q, mode); });
        emit(out, format,
             Json{{"lhs", lhs.str()}, {"rhs", rhs.str()}, {"equal", lhs == rhs}});
    });

    // orderings
    std::int64_t ord_n = 0;
    std::string ord_set;
    int ord_i = 0;
    bool ord_list = false;
    std::uint64_t ord_mod = 0;
    auto* ord_cmd = app.add_subcommand(
        "orderings", "Orderings of the set realized with exactly these pinnacles");
    ord_cmd->fallthrough();
    ord_cmd->add_option("--n", ord_n, "Ambient size n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    ord_cmd->add_option("--set", ord_set, "Pinnacle values; \"\" is empty")->required();
    ord_cmd->add_option("--i", ord_i, "Track the i smallest non-members as well")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    ord_cmd->add_flag("--list", ord_list, "Also list the orderings (scan scale only)");
    ord_cmd->add_option("--mod", ord_mod, "Odd prime modulus; omit for exact arithmetic");
    ord_cmd->callback([&] {
        const PinnacleCandidate cand(text::parse_int_list(ord_set), ord_n);
        const PinnacleCandidate compact = compactify(cand);
        const Count value = count_orderings(OrderingState(compact, ord_i), mode_of(ord_mod));
        Json payload{{"count", value.str()}};
        if (ord_list) {
            // Name the orderings with the caller's values, not the compact ones.
            auto merged = cand.first_nonmembers(cand.k() + 1);
            const auto members = cand.values();
            merged.insert(merged.end(), members.begin(), members.end());
            std::sort(merged.begin(), merged.end());
            Json items = Json::array();
            for (const Ordering& ordering : oracle::brute_orderings(compact, ord_i)) {
                std::vector<std::int64_t> named;
                named.reserve(ordering.size());
                for (const std::int64_t v : ordering) named.push_back(merged[v - 1]);
                items.push_back(text::format_int_list(named));
            }
            payload["orderings"] = std::move(items);
        }
        if (format == "json") {
            emit(out, format, payload);
        } else {
            out << "count: " << value.str() << '\n';
            if (ord_list)
                for (const auto& item : payload["orderings"])
                    out << item.get<std::string>() << '\n';
        }
    });

    // admissible
    std::int64_t adm_n = 0;
    std::string adm_set;
    auto* adm_cmd =
        app.add_subcommand("admissible", "Is the set realizable as a pinnacle set?");
    adm_cmd->fallthrough();
    adm_cmd->add_option("--n", adm_n, "Ambient size n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    adm_cmd->add_option("--set", adm_set, "Pinnacle values; \"\" is empty")->required();
    adm_cmd->callback([&] {
        const PinnacleCandidate cand(text::parse_int_list(adm_set), adm_n);
        const Admissibility result = check_admissible(cand);
        const std::string ballot =
            adm_n == 0 ? std::string() : text::format_block(block_of(cand));
        emit(out, format,
             Json{{"admissible", result.admissible},
                  {"ballot", ballot},
                  {"reason", result.reason}});
    });

    // forest encode | decode
    auto* forest_cmd =
        app.add_subcommand("forest", "Binary-forest encoding of realizable sets");
    forest_cmd->require_subcommand(1);
    forest_cmd->fallthrough();
    std::int64_t fe_n = 0;
    std::string fe_set;
    auto* fe_cmd = forest_cmd->add_subcommand("encode", "Set to forest");
    fe_cmd->fallthrough();
    fe_cmd->add_option("--n", fe_n, "Ambient size n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    fe_cmd->add_option("--set", fe_set, "Pinnacle values; \"\" is empty")->required();
    fe_cmd->callback([&] {
        const Forest forest = forest_encode(PinnacleCandidate(text::parse_int_list(fe_set), fe_n));
        emit(out, format, Json{{"forest", text::format_forest(forest)}});
    });
    std::string fd_body;
    auto* fd_cmd = forest_cmd->add_subcommand("decode", "Forest to set");
    fd_cmd->fallthrough();
    fd_cmd->add_option("--forest", fd_body, "Forest text, e.g. \"1 ((2,3)4,5)6 7\"")
        ->required();
    fd_cmd->callback([&] {
        const PinnacleCandidate cand = forest_decode(text::parse_forest(fd_body));
        emit(out, format,
             Json{{"n", cand.n()}, {"set", text::format_int_list(cand.values())}});
    });

    // bijection f | g
    auto* bij_cmd =
        app.add_subcommand("bijection", "Walk/cycle maps on a single instance");
    bij_cmd->require_subcommand(1);
    bij_cmd->fallthrough();
    std::string bf_walk;
    auto* bf_cmd = bij_cmd->add_subcommand("f", "Decorated walk to marked cycle");
    bf_cmd->fallthrough();
    bf_cmd->add_option("--walk", bf_walk, "Steps, e.g. \"U1R F1L D2L\"")->required();
    bf_cmd->callback([&] {
        const MarkedCyclicPermutation marked = f_map(text::parse_walk(bf_walk));
        emit(out, format, Json{{"cycle", text::format_marked_cycle(marked)}});
    });
    std::string bg_cycle;
    std::string bg_set;
    auto* bg_cmd = bij_cmd->add_subcommand("g", "Marked cycle to decorated walk");
    bg_cmd->fallthrough();
    bg_cmd->add_option("--cycle", bg_cycle, "Marked cycle, e.g. \"[3r,1r,2l]\"")->required();
    auto* bg_set_opt = bg_cmd->add_option(
        "--set", bg_set, "Member set; defaults to the cycle's pinnacles below the sentinel");
    bg_cmd->callback([&] {
        const auto values = marked_cycle_values(bg_cycle);
        if (values.empty()) throw Error("marked cycle holds no values");
        const std::int64_t n = static_cast<std::int64_t>(values.size()) - 1;
        std::vector<std::int64_t> members;
        if (bg_set_opt->count() > 0) {
            members = text::parse_int_list(bg_set);
        } else {
            for (const std::int64_t v :
                 cyclic_pinnacles_and_vales(CyclicPermutation::with_sentinel(values)).pinnacles)
                if (v <= n) members.push_back(v);
        }
        const auto marked =
            text::parse_marked_cycle(bg_cycle, PinnacleCandidate(std::move(members), n));
        emit(out, format, Json{{"walk", text::format_walk(g_map(marked))}});
    });

    // verify
    std::int64_t verify_max_n = 7;
    auto* verify_cmd =
        app.add_subcommand("verify", "Cross-check every formula against direct scans");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--max-n", verify_max_n, "Largest n for the full-scan checks")
        ->check(CLI::Range(std::int64_t{1}, oracle::kMaxScanN))
        ->capture_default_str();
    verify_cmd->callback([&] {
        const auto results = verify::run_all(verify_max_n);
        bool ok = true;
        Json checks = Json::array();
        for (const auto& r : results) {
            ok = ok && r.passed;
            checks.push_back(Json{{"check", r.name},
                                  {"passed", r.passed},
                                  {"instances", r.instances},
                                  {"detail", r.detail}});
        }
        if (format == "json") {
            emit(out, format, Json{{"ok", ok}, {"checks", std::move(checks)}});
        } else {
            for (const auto& r : results) {
                if (r.passed)
                    out << "PASS " << r.name << " (" << r.instances << " instances)\n";
                else
                    out << "FAIL " << r.name << ": " << r.detail << '\n';
            }
        }
        if (!ok) exit_code = 1;
    });

    // bench
    std::vector<int> bench_ks{5, 10, 20, 40};
    std::vector<std::int64_t> bench_ns{1000, 1000000, 1000000000};
    std::uint64_t bench_mod = kDefaultBenchPrime;
    auto* bench_cmd =
        app.add_subcommand("bench", "Operation counts and wall time for the fast count");
    bench_cmd->fallthrough();
    bench_cmd->add_option("--k", bench_ks, "Set sizes")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--n", bench_ns, "Ambient sizes")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--mod", bench_mod, "Odd prime modulus")->capture_default_str();
    bench_cmd->callback([&] {
        const ArithMode mode = ArithMode::modular(bench_mod);
        Json cells = Json::array();
        double min_ratio = 0.0, max_ratio = 0.0;
        bool first = true;
        for (const int k : bench_ks) {
            for (const std::int64_t n : bench_ns) {
                if (k < 1 || n < 3 * static_cast<std::int64_t>(k))
                    throw Error("bench needs 1 <= k and n >= 3k, got k=" + std::to_string(k) +
                                " n=" + std::to_string(n));
                const std::int64_t gap = n / k;
                std::vector<std::int64_t> members(k);
                for (int t = 0; t < k; ++t) members[t] = gap * (t + 1);
                const PinnacleCandidate cand(std::move(members), n);
                op_counter::reset();
                const auto start = std::chrono::steady_clock::now();
                const Count value = fast_count(cand, mode);
                const auto stop = std::chrono::steady_clock::now();
                const std::uint64_t ops = op_counter::total();
                const double millis =
                    std::chrono::duration<double, std::milli>(stop - start).count();
                const double ratio = static_cast<double>(ops) / cost_model(k, n);
                min_ratio = first ? ratio : std::min(min_ratio, ratio);
                max_ratio = first ? ratio : std::max(max_ratio, ratio);
                first = false;
                cells.push_back(Json{{"k", k},
                                     {"n", n},
                                     {"ops", ops},
                                     {"millis", millis},
                                     {"ratio", ratio},
                                     {"count", value.str()}});
            }
        }
        const Json payload{{"mode", mode.str()},
                           {"cells", std::move(cells)},
                           {"ratio_spread", first ? 0.0 : max_ratio / min_ratio}};
        if (format == "json") {
            emit(out, format, payload);
        } else {
            for (const auto& cell : payload["cells"])
                out << "k=" << cell["k"] << " n=" << cell["n"] << " ops=" << cell["ops"]
                    << " millis=" << cell["millis"] << " ratio=" << cell["ratio"] << '\n';
            out << "ratio spread: " << payload["ratio_spread"] << '\n';
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}

}  // namespace pinnacle::cli
