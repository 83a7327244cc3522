#include "happy/oracle.hpp"

#include <string>

namespace happy {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Maintains the objective under single-vertex recolorings.
class IncrementalObjective {
public:
    IncrementalObjective(const Instance& inst, std::vector<Color> coloring)
        : inst_(inst), coloring_(std::move(coloring)) {
        if (inst_.problem == Problem::vertices) {
            bichromatic_.assign(idx(inst_.n()), 0);
            for (const auto& e : inst_.graph.edges()) {
                if (coloring_[idx(e.u)] != coloring_[idx(e.v)]) {
                    ++bichromatic_[idx(e.u)];
                    ++bichromatic_[idx(e.v)];
                }
            }
        }
        value_ = happy_weight_unchecked(inst_, coloring_);
    }

    Weight value() const { return value_; }
    const std::vector<Color>& coloring() const { return coloring_; }

    void recolor(Vertex v, Color to) {
        const Color from = coloring_[idx(v)];
        if (from == to) {
            return;
        }
        if (inst_.problem == Problem::edges) {
            for (const auto& inc : inst_.graph.incident(v)) {
                Color other = coloring_[idx(inc.to)];
                if (other == from) {
                    value_ -= inst_.edge_weight[idx(inc.edge)];
                } else if (other == to) {
                    value_ += inst_.edge_weight[idx(inc.edge)];
                }
            }
        } else {
            for (const auto& inc : inst_.graph.incident(v)) {
                Color other = coloring_[idx(inc.to)];
                bool was = other != from;
                bool now = other != to;
                if (was != now) {
                    int delta = now ? 1 : -1;
                    bump(v, delta);
                    bump(inc.to, delta);
                }
            }
        }
        coloring_[idx(v)] = to;
    }

private:
    void bump(Vertex v, int delta) {
        int& count = bichromatic_[idx(v)];
        if (count == 0 && delta > 0) {
            value_ -= inst_.vertex_weight[idx(v)];
        }
        count += delta;
        if (count == 0) {
            value_ += inst_.vertex_weight[idx(v)];
        }
    }

    const Instance& inst_;
    std::vector<Color> coloring_;
    std::vector<int> bichromatic_;
    Weight value_ = 0;
};

}  // namespace

std::optional<std::uint64_t> extension_count(const Instance& inst) {
    std::uint64_t count = 1;
    const auto k = static_cast<std::uint64_t>(inst.k);
    for (int i = 0; i < inst.uncolored_count(); ++i) {
        if (count > UINT64_MAX / k) {
            return std::nullopt;
        }
        count *= k;
    }
    return count;
}

Solution solve_brute(const Instance& inst, const Limits& limits) {
    require_valid(inst);
    const auto free = inst.uncolored_vertices();
    auto count = extension_count(inst);
    if (!count || *count > limits.max_colorings) {
        throw CapExceeded("brute force needs " + std::to_string(inst.k) + "^" + std::to_string(free.size()) +
                          " colorings, cap is " + std::to_string(limits.max_colorings));
    }

    IncrementalObjective state(inst, complete_with(inst, 1));
    Solution best{state.coloring(), state.value(), "brute"};

    // Odometer: the last free vertex is the least significant digit.
    while (true) {
        int pos = static_cast<int>(free.size()) - 1;
        while (pos >= 0) {
            Vertex v = free[idx(pos)];
            Color c = state.coloring()[idx(v)];
            if (c < inst.k) {
                state.recolor(v, c + 1);
                break;
            }
            state.recolor(v, 1);
            --pos;
        }
        if (pos < 0) {
            break;
        }
        if (state.value() > best.happy_weight) {
            best.happy_weight = state.value();
            best.coloring = state.coloring();
        }
    }
    return best;
}

}  // namespace happy
