#include "pinnacle/text.hpp"

#include <algorithm>
#include <charconv>

namespace pinnacle::text {

namespace {

std::int64_t parse_int(std::string_view token) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw Error("bad integer '" + std::string(token) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view body, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= body.size()) {
        const std::size_t end = body.find(sep, start);
        if (end == std::string_view::npos) {
            out.push_back(body.substr(start));
            break;
        }
        out.push_back(body.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::string_view strip_brackets(std::string_view body) {
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw Error("cycles are written as [v1,v2,...]");
    return body.substr(1, body.size() - 2);
}

Side parse_side(char c) {
    if (c == 'l' || c == 'L') return Side::left;
    if (c == 'r' || c == 'R') return Side::right;
    throw Error(std::string("bad side mark '") + c + "'");
}

}  // namespace

std::vector<std::int64_t> parse_int_list(std::string_view csv) {
    std::vector<std::int64_t> out;
    if (csv.empty()) return out;
    for (std::string_view token : split(csv, ',')) out.push_back(parse_int(token));
    return out;
}

std::string format_int_list(std::span<const std::int64_t> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string format_set(std::span<const std::int64_t> values) {
    return "{" + format_int_list(values) + "}";
}

Permutation parse_permutation(std::string_view csv) {
    return Permutation(parse_int_list(csv));
}

std::string format_permutation(const Permutation& perm) {
    return format_int_list(perm.values());
}

CyclicPermutation parse_cycle(std::string_view body) {
    return CyclicPermutation::with_sentinel(parse_int_list(strip_brackets(body)));
}

std::string format_cycle(const CyclicPermutation& cyc) {
    return "[" + format_int_list(cyc.rotation()) + "]";
}

MarkedCyclicPermutation parse_marked_cycle(std::string_view body, const PinnacleCandidate& cand) {
    std::vector<std::int64_t> values;
    std::vector<Side> marks;
    for (std::string_view token : split(strip_brackets(body), ',')) {
        if (token.size() < 2) throw Error("marked cycle entries look like '10r'");
        values.push_back(parse_int(token.substr(0, token.size() - 1)));
        marks.push_back(parse_side(token.back()));
    }
    // Marks align with the canonical rotation: rotate them to the sentinel.
    std::size_t top = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[top]) top = i;
    std::rotate(values.begin(), values.begin() + top, values.end());
    std::rotate(marks.begin(), marks.begin() + top, marks.end());
    return MarkedCyclicPermutation(CyclicPermutation::with_sentinel(values), std::move(marks),
                                   cand);
}

std::string format_marked_cycle(const MarkedCyclicPermutation& marked) {
    const auto& rotation = marked.cycle().rotation();
    std::string out = "[";
    for (std::size_t i = 0; i < rotation.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rotation[i]);
        out += marked.marks()[i] == Side::left ? 'l' : 'r';
    }
    return out + "]";
}

DecoratedMotzkinWalk parse_walk(std::string_view body) {
    std::vector<WalkStep> steps;
    if (!body.empty()) {
        for (std::string_view token : split(body, ' ')) {
            if (token.size() < 3) throw Error("walk tokens look like 'U2R'");
            StepKind kind;
            switch (token.front()) {
                case 'U': kind = StepKind::up; break;
                case 'D': kind = StepKind::down; break;
                case 'F': kind = StepKind::flat; break;
                default: throw Error("walk steps start with U, D or F");
            }
            const std::int64_t label = parse_int(token.substr(1, token.size() - 2));
            if (label < 1 || label > 1'000'000) throw Error("walk label out of range");
            steps.push_back({kind, static_cast<int>(label), parse_side(token.back())});
        }
    }
    return DecoratedMotzkinWalk::infer(std::move(steps));
}

std::string format_walk(const DecoratedMotzkinWalk& walk) {
    std::string out;
    for (const WalkStep& s : walk.steps()) {
        if (!out.empty()) out += ' ';
        out += s.kind == StepKind::up ? 'U' : s.kind == StepKind::down ? 'D' : 'F';
        out += std::to_string(s.label);
        out += s.side == Side::left ? 'L' : 'R';
    }
    return out;
}

Block parse_block(std::string_view bits) {
    if (bits.empty()) throw Error("blocks are nonempty");
    std::vector<int> out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw Error("block strings hold only 0 and 1");
        out.push_back(c - '0');
    }
    return Block::from_bits(out);
}

std::string format_block(const Block& block) {
    std::string out;
    for (int b : block.bits()) out += static_cast<char>('0' + b);
    return out;
}

namespace {

// tree := "(" tree "," tree ")" label | label
int parse_tree(std::string_view body, std::size_t& pos, std::vector<Forest::Node>& nodes) {
    if (pos >= body.size()) throw Error("forest text ended early");
    int left = -1, right = -1;
    if (body[pos] == '(') {
        ++pos;
        left = parse_tree(body, pos, nodes);
        if (pos >= body.size() || body[pos] != ',') throw Error("expected ',' in forest text");
        ++pos;
        right = parse_tree(body, pos, nodes);
        if (pos >= body.size() || body[pos] != ')') throw Error("expected ')' in forest text");
        ++pos;
    }
    const std::size_t start = pos;
    while (pos < body.size() && body[pos] >= '0' && body[pos] <= '9') ++pos;
    if (pos == start) throw Error("expected a label in forest text");
    nodes.push_back({parse_int(body.substr(start, pos - start)), left, right});
    return static_cast<int>(nodes.size()) - 1;
}

void format_tree(const Forest& forest, int root, std::string& out) {
    const Forest::Node& node = forest.nodes()[root];
    if (node.left != -1) {
        out += '(';
        format_tree(forest, node.left, out);
        out += ',';
        format_tree(forest, node.right, out);
        out += ')';
    }
    out += std::to_string(node.label);
}

}  // namespace

Forest parse_forest(std::string_view body) {
    std::vector<Forest::Node> nodes;
    std::vector<int> roots;
    std::size_t pos = 0;
    while (pos < body.size()) {
        if (body[pos] == ' ') {
            ++pos;
            continue;
        }
        roots.push_back(parse_tree(body, pos, nodes));
    }
    return Forest(std::move(nodes), std::move(roots));
}

std::string format_forest(const Forest& forest) {
    std::string out;
    for (std::size_t t = 0; t < forest.tree_count(); ++t) {
        if (t) out += ' ';
        format_tree(forest, forest.roots()[t], out);
    }
    return out;
}

}  // namespace pinnacle::text
