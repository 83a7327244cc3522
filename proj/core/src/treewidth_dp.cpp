#include "happy/treewidth_dp.hpp"

#include <algorithm>
#include <limits>

namespace happy {

namespace {

constexpr Weight kNeg = std::numeric_limits<Weight>::min() / 4;

std::size_t idx(std::int64_t v) { return static_cast<std::size_t>(v); }

bool dead(Weight x) { return x <= kNeg / 2; }

class TableDP {
public:
    TableDP(const Instance& inst, const NiceDecomposition& nd)
        : inst_(inst), nd_(nd), mhv_(inst.problem == Problem::vertices), radix_(mhv_ ? 2 * inst.k : inst.k) {}

    std::uint64_t table_size(std::size_t bag) const {
        std::uint64_t size = 1;
        for (std::size_t i = 0; i < bag; ++i) {
            if (size > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(radix_)) {
                return std::numeric_limits<std::uint64_t>::max();
            }
            size *= static_cast<std::uint64_t>(radix_);
        }
        return size;
    }

    Solution run(TwdpStats& stats) {
        const auto count = nd_.nodes.size();
        tables_.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            build(i, stats);
        }
        Solution s;
        s.algorithm = "twdp";
        const auto root = idx(nd_.root);
        const auto& bag = nd_.nodes[root].bag;
        Weight best = kNeg;
        std::uint64_t best_index = 0;
        for (std::uint64_t f = 0; f < tables_[root].size(); ++f) {
            Weight v = tables_[root][f];
            if (dead(v)) {
                continue;
            }
            v += root_bonus(bag, f);
            if (v > best) {
                best = v;
                best_index = f;
            }
        }
        s.coloring.assign(idx(inst_.n()), kUncolored);
        recover(best_index, s.coloring);
        s.happy_weight = best;
        return s;
    }

private:
    Color color(int digit) const { return mhv_ ? digit / 2 + 1 : digit + 1; }
    bool bit(int digit) const { return mhv_ && digit % 2 == 1; }
    bool allowed(Vertex v, int digit) const { return !inst_.is_precolored(v) || inst_.color_of(v) == color(digit); }

    std::vector<int> digits(std::uint64_t index, std::size_t size) const {
        std::vector<int> out(size);
        for (auto& d : out) {
            d = static_cast<int>(index % static_cast<std::uint64_t>(radix_));
            index /= static_cast<std::uint64_t>(radix_);
        }
        return out;
    }

    std::uint64_t power(std::size_t p) const { return table_size(p); }

    std::size_t position(const std::vector<Vertex>& bag, Vertex v) const {
        return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
    }

    // Bag positions adjacent to v, with the weight of the connecting edge.
    std::vector<std::pair<std::size_t, Weight>> bag_neighbors(const std::vector<Vertex>& bag, Vertex v) const {
        std::vector<std::pair<std::size_t, Weight>> out;
        for (std::size_t q = 0; q < bag.size(); ++q) {
            int e = inst_.graph.edge_index(v, bag[q]);
            if (e >= 0) {
                out.push_back({q, inst_.edge_weight[idx(e)]});
            }
        }
        return out;
    }

    Weight root_bonus(const std::vector<Vertex>& bag, std::uint64_t f) const {
        if (!mhv_) {
            return 0;
        }
        Weight out = 0;
        auto d = digits(f, bag.size());
        for (std::size_t q = 0; q < bag.size(); ++q) {
            if (bit(d[q])) {
                out += inst_.vertex_weight[idx(bag[q])];
            }
        }
        return out;
    }

    void build(std::size_t i, TwdpStats& stats) {
        const auto& node = nd_.nodes[i];
        const auto& bag = node.bag;
        auto& table = tables_[i];
        table.assign(idx(static_cast<std::int64_t>(table_size(bag.size()))), kNeg);
        stats.max_table = std::max<std::uint64_t>(stats.max_table, table.size());
        switch (node.kind) {
        case NiceKind::leaf:
            for (std::uint64_t f = 0; f < table.size(); ++f) {
                table[f] = bag.empty() || allowed(bag[0], static_cast<int>(f)) ? 0 : kNeg;
            }
            break;
        case NiceKind::introduce: {
            const auto& child = tables_[idx(node.children[0])];
            const auto p = position(bag, node.vertex);
            const auto low_mod = power(p);
            const auto nbs = bag_neighbors(bag, node.vertex);
            for (std::uint64_t f = 0; f < table.size(); ++f) {
                auto d = digits(f, bag.size());
                if (!allowed(node.vertex, d[p])) {
                    continue;
                }
                Weight base = child[f % low_mod + (f / (low_mod * static_cast<std::uint64_t>(radix_))) * low_mod];
                if (dead(base)) {
                    continue;
                }
                bool ok = true;
                for (auto [q, w] : nbs) {
                    if (color(d[q]) == color(d[p])) {
                        base += mhv_ ? 0 : w;
                    } else if (bit(d[q]) || bit(d[p])) {
                        ok = false;
                    }
                }
                table[f] = ok ? base : kNeg;
            }
            break;
        }
        case NiceKind::forget: {
            const auto& child = tables_[idx(node.children[0])];
            const auto& child_bag = nd_.nodes[idx(node.children[0])].bag;
            const auto p = position(child_bag, node.vertex);
            const auto low_mod = power(p);
            const Weight w = inst_.vertex_weight[idx(node.vertex)];
            for (std::uint64_t f = 0; f < table.size(); ++f) {
                const auto low = f % low_mod;
                const auto high = f / low_mod;
                Weight best = kNeg;
                for (int d = 0; d < radix_; ++d) {
                    Weight v = child[low + static_cast<std::uint64_t>(d) * low_mod +
                                     high * low_mod * static_cast<std::uint64_t>(radix_)];
                    if (!dead(v)) {
                        best = std::max(best, v + (bit(d) ? w : 0));
                    }
                }
                table[f] = best;
            }
            break;
        }
        case NiceKind::join: {
            const auto& left = tables_[idx(node.children[0])];
            const auto& right = tables_[idx(node.children[1])];
            std::vector<std::pair<std::size_t, std::pair<std::size_t, Weight>>> inner;
            if (!mhv_) {
                for (std::size_t a = 0; a < bag.size(); ++a) {
                    for (auto nb : bag_neighbors(bag, bag[a])) {
                        if (nb.first > a) {
                            inner.push_back({a, nb});
                        }
                    }
                }
            }
            for (std::uint64_t f = 0; f < table.size(); ++f) {
                if (dead(left[f]) || dead(right[f])) {
                    continue;
                }
                Weight overlap = 0;
                if (!inner.empty()) {
                    auto d = digits(f, bag.size());
                    for (const auto& [a, nb] : inner) {
                        overlap += color(d[a]) == color(d[nb.first]) ? nb.second : 0;
                    }
                }
                table[f] = left[f] + right[f] - overlap;
            }
            break;
        }
        }
    }

    void recover(std::uint64_t root_choice, std::vector<Color>& coloring) const {
        std::vector<std::uint64_t> choice(nd_.nodes.size(), 0);
        choice[idx(nd_.root)] = root_choice;
        for (std::size_t i = nd_.nodes.size(); i-- > 0;) {
            const auto& node = nd_.nodes[i];
            const auto f = choice[i];
            auto d = digits(f, node.bag.size());
            for (std::size_t q = 0; q < node.bag.size(); ++q) {
                coloring[idx(node.bag[q])] = color(d[q]);
            }
            switch (node.kind) {
            case NiceKind::leaf:
                break;
            case NiceKind::introduce: {
                const auto low_mod = power(position(node.bag, node.vertex));
                choice[idx(node.children[0])] = f % low_mod + (f / (low_mod * static_cast<std::uint64_t>(radix_))) * low_mod;
                break;
            }
            case NiceKind::forget: {
                const auto& child = tables_[idx(node.children[0])];
                const auto p = position(nd_.nodes[idx(node.children[0])].bag, node.vertex);
                const auto low_mod = power(p);
                const Weight w = inst_.vertex_weight[idx(node.vertex)];
                const Weight want = tables_[i][f];
                for (int dv = 0; dv < radix_; ++dv) {
                    auto c = f % low_mod + static_cast<std::uint64_t>(dv) * low_mod +
                             (f / low_mod) * low_mod * static_cast<std::uint64_t>(radix_);
                    if (!dead(child[c]) && child[c] + (bit(dv) ? w : 0) == want) {
                        choice[idx(node.children[0])] = c;
                        break;
                    }
                }
                break;
            }
            case NiceKind::join:
                choice[idx(node.children[0])] = f;
                choice[idx(node.children[1])] = f;
                break;
            }
        }
    }

    const Instance& inst_;
    const NiceDecomposition& nd_;
    bool mhv_;
    int radix_;
    std::vector<std::vector<Weight>> tables_;
};

}  // namespace

Solution solve_twdp(const Instance& inst, const NiceDecomposition& nd, TwdpStats* stats, const Limits& limits) {
    require_valid(inst);
    auto problems = verify_nice(inst.graph, nd);
    if (!problems.empty()) {
        throw ValidationError("decomposition does not fit the graph: " + problems.front());
    }
    TableDP dp(inst, nd);
    std::uint64_t total = 0;
    for (const auto& node : nd.nodes) {
        auto size = dp.table_size(node.bag.size());
        total = size > limits.max_colorings ? size : total + size;
        if (total > limits.max_colorings) {
            throw CapExceeded("tree decomposition tables need more than " + std::to_string(limits.max_colorings) +
                              " entries (width " + std::to_string(nd.width()) + ")");
        }
    }
    TwdpStats local;
    TwdpStats& out = stats != nullptr ? *stats : local;
    out = TwdpStats{};
    out.nodes = static_cast<int>(nd.nodes.size());
    out.width = nd.width();
    auto s = dp.run(out);
    if (s.happy_weight != happy_weight_unchecked(inst, s.coloring)) {
        throw std::logic_error("tree decomposition backtracking lost the optimum");
    }
    return s;
}

Solution solve_twdp(const Instance& inst, TwdpStats* stats, const Limits& limits) {
    require_valid(inst);
    return solve_twdp(inst, make_nice(decompose(inst.graph)), stats, limits);
}

}  // namespace happy
