#include "happy/partition.hpp"

#include "two_color_internal.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace happy {

namespace {

constexpr Weight kNeg = std::numeric_limits<Weight>::min() / 4;

std::size_t idx(std::int64_t v) { return static_cast<std::size_t>(v); }

void require_ground(const PartitionProblem& p, const Limits& limits) {
    if (p.ground_size > limits.max_ground_set || p.ground_size > 30) {
        throw CapExceeded("partition ground set of size " + std::to_string(p.ground_size) + " exceeds the cap of " +
                          std::to_string(std::min(limits.max_ground_set, 30)));
    }
    if (p.parts < 1 || static_cast<int>(p.values.size()) != p.parts) {
        throw ValidationError("partition problem needs d >= 1 value tables");
    }
    const auto size = std::size_t{1} << p.ground_size;
    for (const auto& table : p.values) {
        if (table.size() != size) {
            throw ValidationError("value table size does not match 2^|N|");
        }
    }
}

// Recovers parts from layered tables where layer j holds the best value of
// S using f_1..f_{j+1}. Later parts prefer small subsets.
PartitionSolution backtrack(const PartitionProblem& p, const std::vector<std::vector<Weight>>& layers) {
    PartitionSolution out;
    out.parts.assign(idx(p.parts), 0);
    SubsetMask s = p.full();
    out.value = layers[idx(p.parts - 1)][s];
    for (int j = p.parts - 1; j >= 1; --j) {
        const Weight want = layers[idx(j)][s];
        const auto& prev = layers[idx(j - 1)];
        const auto& f = p.values[idx(j)];
        SubsetMask t = 0;
        while (true) {
            if (prev[s ^ t] > kNeg && prev[s ^ t] + f[t] == want) {
                break;
            }
            if (t == s) {
                throw std::logic_error("partition backtracking found no consistent split");
            }
            t = (t - s) & s;
        }
        out.parts[idx(j)] = t;
        s ^= t;
    }
    out.parts[0] = s;
    return out;
}

// h(S) = max over T subset of S of f(T) + g(S \ T), for integer-valued f in
// [0, rf] and g in [0, rg]. Values become monomials x^v; products of ranked
// zeta transforms followed by Moebius inversion count, per S and value, the
// splits achieving it. Unsigned wraparound keeps the counts exact because
// the true results are bounded by 2^n.
std::vector<Weight> max_plus_convolve(int n, const std::vector<Weight>& f, Weight rf, const std::vector<Weight>& g,
                                      Weight rg) {
    const std::size_t size = std::size_t{1} << n;
    const std::size_t ranks = idx(n) + 1;
    const std::size_t vf = idx(rf) + 1;
    const std::size_t vg = idx(rg) + 1;
    const std::size_t vh = vf + vg - 1;

    auto ranked_zeta = [&](const std::vector<Weight>& values, std::size_t width) {
        std::vector<std::uint64_t> table(ranks * size * width, 0);
        for (std::size_t s = 0; s < size; ++s) {
            auto r = static_cast<std::size_t>(std::popcount(s));
            table[(r * size + s) * width + idx(values[s])] = 1;
        }
        for (std::size_t r = 0; r < ranks; ++r) {
            for (int b = 0; b < n; ++b) {
                const std::size_t bit = std::size_t{1} << b;
                for (std::size_t s = 0; s < size; ++s) {
                    if (!(s & bit) || static_cast<std::size_t>(std::popcount(s)) < r) {
                        continue;
                    }
                    auto* dst = &table[(r * size + s) * width];
                    const auto* src = &table[(r * size + (s ^ bit)) * width];
                    for (std::size_t v = 0; v < width; ++v) {
                        dst[v] += src[v];
                    }
                }
            }
        }
        return table;
    };

    const auto fz = ranked_zeta(f, vf);
    const auto gz = ranked_zeta(g, vg);

    std::vector<std::uint64_t> h(ranks * size * vh, 0);
    for (std::size_t s = 0; s < size; ++s) {
        const auto pc = static_cast<std::size_t>(std::popcount(s));
        for (std::size_t a = 0; a <= pc; ++a) {
            const auto* fa = &fz[(a * size + s) * vf];
            for (std::size_t b = 0; b <= pc && a + b < ranks; ++b) {
                const auto* gb = &gz[(b * size + s) * vg];
                auto* out = &h[((a + b) * size + s) * vh];
                for (std::size_t x = 0; x < vf; ++x) {
                    if (fa[x] == 0) {
                        continue;
                    }
                    for (std::size_t y = 0; y < vg; ++y) {
                        out[x + y] += fa[x] * gb[y];
                    }
                }
            }
        }
    }
    for (std::size_t r = 0; r < ranks; ++r) {
        for (int b = 0; b < n; ++b) {
            const std::size_t bit = std::size_t{1} << b;
            for (std::size_t s = 0; s < size; ++s) {
                if (!(s & bit)) {
                    continue;
                }
                auto* dst = &h[(r * size + s) * vh];
                const auto* src = &h[(r * size + (s ^ bit)) * vh];
                for (std::size_t v = 0; v < vh; ++v) {
                    dst[v] -= src[v];
                }
            }
        }
    }

    std::vector<Weight> out(size, kNeg);
    for (std::size_t s = 0; s < size; ++s) {
        const auto r = static_cast<std::size_t>(std::popcount(s));
        const auto* row = &h[(r * size + s) * vh];
        for (std::size_t v = vh; v-- > 0;) {
            if (row[v] != 0) {
                out[s] = static_cast<Weight>(v);
                break;
            }
        }
        if (out[s] == kNeg) {
            throw std::logic_error("subset convolution lost every split of a set");
        }
    }
    return out;
}

}  // namespace

PartitionProblem reduce_to_mwp(const Instance& inst) {
    require_valid(inst);
    const auto free = inst.uncolored_vertices();
    const int n = static_cast<int>(free.size());
    if (n > 30) {
        throw CapExceeded("cannot tabulate partition values over " + std::to_string(n) + " free vertices");
    }
    const std::size_t size = std::size_t{1} << n;
    std::vector<int> bit(idx(inst.n()), -1);
    for (int b = 0; b < n; ++b) {
        bit[idx(free[idx(b)])] = b;
    }

    PartitionProblem p;
    p.ground_size = n;
    p.parts = inst.k;
    p.ground = free;
    p.values.assign(idx(inst.k), std::vector<Weight>(size, 0));
    p.bound = inst.total_weight();
    const Graph& g = inst.graph;

    if (inst.problem == Problem::edges) {
        std::vector<Weight> base(idx(inst.k) + 1, 0);
        std::vector<std::vector<Weight>> to_color(idx(n), std::vector<Weight>(idx(inst.k) + 1, 0));
        std::vector<std::vector<std::pair<int, Weight>>> inner(idx(n));
        const auto& edges = g.edges();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            int bu = bit[idx(edges[e].u)];
            int bv = bit[idx(edges[e].v)];
            Weight w = inst.edge_weight[e];
            if (bu < 0 && bv < 0) {
                if (inst.color_of(edges[e].u) == inst.color_of(edges[e].v)) {
                    base[idx(inst.color_of(edges[e].u))] += w;
                }
            } else if (bu < 0) {
                to_color[idx(bv)][idx(inst.color_of(edges[e].u))] += w;
            } else if (bv < 0) {
                to_color[idx(bu)][idx(inst.color_of(edges[e].v))] += w;
            } else {
                inner[idx(bu)].push_back({bv, w});
                inner[idx(bv)].push_back({bu, w});
            }
        }
        std::vector<Weight> internal(size, 0);
        for (std::size_t s = 1; s < size; ++s) {
            int b = std::countr_zero(s);
            std::size_t rest = s & (s - 1);
            Weight add = 0;
            for (auto [other, w] : inner[idx(b)]) {
                if (rest & (std::size_t{1} << other)) {
                    add += w;
                }
            }
            internal[s] = internal[rest] + add;
        }
        for (Color c = 1; c <= inst.k; ++c) {
            auto& f = p.values[idx(c - 1)];
            std::vector<Weight> linear(size, 0);
            for (std::size_t s = 1; s < size; ++s) {
                int b = std::countr_zero(s);
                linear[s] = linear[s & (s - 1)] + to_color[idx(b)][idx(c)];
            }
            for (std::size_t s = 0; s < size; ++s) {
                f[s] = base[idx(c)] + internal[s] + linear[s];
            }
        }
        return p;
    }

    // MHV: v counts toward f_c(T) when v is free or precolored c, every precolored
    // neighbor has color c, and T holds v (if free) and all its free neighbors.
    for (Color c = 1; c <= inst.k; ++c) {
        auto& f = p.values[idx(c - 1)];
        for (Vertex v = 0; v < inst.n(); ++v) {
            if (inst.is_precolored(v) && inst.color_of(v) != c) {
                continue;
            }
            bool eligible = true;
            std::size_t need = bit[idx(v)] >= 0 ? std::size_t{1} << bit[idx(v)] : 0;
            for (const auto& inc : g.incident(v)) {
                if (inst.is_precolored(inc.to)) {
                    eligible &= inst.color_of(inc.to) == c;
                } else {
                    need |= std::size_t{1} << bit[idx(inc.to)];
                }
            }
            if (eligible) {
                f[need] += inst.vertex_weight[idx(v)];
            }
        }
        for (int b = 0; b < n; ++b) {
            const std::size_t mask = std::size_t{1} << b;
            for (std::size_t s = 0; s < size; ++s) {
                if (s & mask) {
                    f[s] += f[s ^ mask];
                }
            }
        }
    }
    return p;
}

PartitionSolution solve_mwp_3n(const PartitionProblem& p, const Limits& limits) {
    require_ground(p, limits);
    const std::size_t size = std::size_t{1} << p.ground_size;
    const SubsetMask full = p.full();
    std::vector<std::vector<Weight>> layers(idx(p.parts));
    layers[0] = p.values[0];
    for (int j = 1; j < p.parts; ++j) {
        const auto& prev = layers[idx(j - 1)];
        const auto& f = p.values[idx(j)];
        auto& cur = layers[idx(j)];
        cur.assign(size, kNeg);
        const bool last = j == p.parts - 1;
        for (std::size_t si = last ? full : 0; si < size; ++si) {
            const auto s = static_cast<SubsetMask>(si);
            Weight best = kNeg;
            for (SubsetMask t = s;; t = (t - 1) & s) {
                best = std::max(best, prev[s ^ t] + f[t]);
                if (t == 0) {
                    break;
                }
            }
            cur[s] = best;
        }
    }
    return backtrack(p, layers);
}

PartitionSolution solve_mwp_2n(const PartitionProblem& p, const Limits& limits) {
    require_ground(p, limits);
    const int n = p.ground_size;
    const std::size_t size = std::size_t{1} << n;

    std::vector<Weight> mins(idx(p.parts));
    std::vector<Weight> ranges(idx(p.parts));
    for (int j = 0; j < p.parts; ++j) {
        auto [lo, hi] = std::minmax_element(p.values[idx(j)].begin(), p.values[idx(j)].end());
        mins[idx(j)] = *lo;
        ranges[idx(j)] = *hi - *lo;
    }

    // Estimate before allocating anything.
    {
        const double ranks = n + 1;
        double acc = static_cast<double>(ranges[0]);
        double work = 0;
        double bytes = 0;
        for (int j = 1; j < p.parts; ++j) {
            double rj = static_cast<double>(ranges[idx(j)]);
            double vh = acc + rj + 1;
            work += static_cast<double>(size) * ranks * (ranks + 1) / 2 * (acc + 1) * (rj + 1);
            work += 2 * ranks * n * static_cast<double>(size) * (vh);
            bytes = std::max(bytes, ranks * static_cast<double>(size) * (2 * vh + 1) * 8);
            acc += rj;
        }
        if (bytes > static_cast<double>(limits.fast_partition_bytes) ||
            work > static_cast<double>(limits.fast_partition_work)) {
            throw BudgetExceeded("value-indexed subset convolution over budget");
        }
    }

    std::vector<std::vector<Weight>> layers(idx(p.parts));
    layers[0] = p.values[0];
    std::vector<Weight> acc(size);
    for (std::size_t s = 0; s < size; ++s) {
        acc[s] = p.values[0][s] - mins[0];
    }
    Weight acc_range = ranges[0];
    Weight offset = mins[0];
    for (int j = 1; j < p.parts; ++j) {
        std::vector<Weight> shifted(size);
        for (std::size_t s = 0; s < size; ++s) {
            shifted[s] = p.values[idx(j)][s] - mins[idx(j)];
        }
        acc = max_plus_convolve(n, acc, acc_range, shifted, ranges[idx(j)]);
        acc_range += ranges[idx(j)];
        offset += mins[idx(j)];
        auto& layer = layers[idx(j)];
        layer.resize(size);
        for (std::size_t s = 0; s < size; ++s) {
            layer[s] = acc[s] + offset;
        }
    }
    return backtrack(p, layers);
}

PartitionSolution solve_mwp_exhaustive(const PartitionProblem& p) {
    const int n = p.ground_size;
    std::vector<int> assign(idx(n), 0);
    PartitionSolution best;
    best.value = kNeg;
    while (true) {
        std::vector<SubsetMask> parts(idx(p.parts), 0);
        for (int b = 0; b < n; ++b) {
            parts[idx(assign[idx(b)])] |= SubsetMask{1} << b;
        }
        Weight total = 0;
        for (int j = 0; j < p.parts; ++j) {
            total += p.value(j, parts[idx(j)]);
        }
        if (total > best.value) {
            best.value = total;
            best.parts = parts;
        }
        int pos = 0;
        while (pos < n && ++assign[idx(pos)] == p.parts) {
            assign[idx(pos)] = 0;
            ++pos;
        }
        if (pos == n) {
            break;
        }
    }
    return best;
}

Solution solve_exact(const Instance& inst, const Limits& limits) {
    require_valid(inst);
    const int free = inst.uncolored_count();
    if (free > limits.max_ground_set) {
        throw CapExceeded("exact solver needs 2^" + std::to_string(free) + " subsets, cap is 2^" +
                          std::to_string(limits.max_ground_set));
    }
    const auto p = reduce_to_mwp(inst);
    PartitionSolution ps;
    Solution s;
    try {
        ps = solve_mwp_2n(p, limits);
        s.algorithm = "exact-2n";
    } catch (const BudgetExceeded&) {
        ps = solve_mwp_3n(p, limits);
        s.algorithm = "exact-3n";
    }
    s.coloring = inst.precolor;
    for (int j = 0; j < p.parts; ++j) {
        for (int b = 0; b < p.ground_size; ++b) {
            if (ps.parts[idx(j)] & (SubsetMask{1} << b)) {
                s.coloring[idx(p.ground[idx(b)])] = j + 1;
            }
        }
    }
    s.happy_weight = happy_weight_unchecked(inst, s.coloring);
    if (s.happy_weight != ps.value) {
        throw std::logic_error("partition value disagrees with the objective of its coloring");
    }
    return s;
}

std::uint64_t k3_guess_bound(int free_count) {
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(free_count, j)
    for (int j = 0; j <= free_count / 3; ++j) {
        total += binom;
        binom = binom * static_cast<std::uint64_t>(free_count - j) / static_cast<std::uint64_t>(j + 1);
    }
    return 3 * total;
}

namespace {

// Everything outside `fixed` with colors {a, b} renamed to {1, 2}. For MHV, vertices
// adjacent to `fixed` keep their place but weigh nothing: they cannot be happy.
Instance residual_two_color(const Instance& inst, const std::vector<bool>& fixed, Color a, Color b,
                            std::vector<Vertex>& kept) {
    const int n = inst.n();
    std::vector<int> renum(idx(n), -1);
    kept.clear();
    for (Vertex v = 0; v < n; ++v) {
        if (!fixed[idx(v)]) {
            renum[idx(v)] = static_cast<int>(kept.size());
            kept.push_back(v);
        }
    }
    std::vector<Edge> edges;
    Instance sub;
    const auto& all = inst.graph.edges();
    for (std::size_t e = 0; e < all.size(); ++e) {
        int u = renum[idx(all[e].u)];
        int v = renum[idx(all[e].v)];
        if (u >= 0 && v >= 0) {
            edges.push_back({u, v});
            sub.edge_weight.push_back(inst.edge_weight[e]);
        }
    }
    sub.graph = Graph(static_cast<int>(kept.size()), std::move(edges));
    sub.problem = inst.problem;
    sub.weighted = true;
    sub.k = 2;
    sub.precolor.assign(kept.size(), kUncolored);
    sub.vertex_weight.assign(kept.size(), 1);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        Vertex v = kept[i];
        Color c = inst.color_of(v);
        sub.precolor[i] = c == a ? 1 : c == b ? 2 : kUncolored;
        Weight w = inst.vertex_weight[idx(v)];
        if (inst.problem == Problem::vertices) {
            for (const auto& inc : inst.graph.incident(v)) {
                if (fixed[idx(inc.to)]) {
                    w = 0;
                    break;
                }
            }
        }
        sub.vertex_weight[i] = w;
    }
    return sub;
}

}  // namespace

Solution solve_k3_split(const Instance& inst, SplitStats* stats, const Limits& limits) {
    require_valid(inst);
    if (inst.k != 3) {
        throw ContractError("the splitting solver needs k = 3, got k = " + std::to_string(inst.k));
    }
    const auto free = inst.uncolored_vertices();
    const int nf = static_cast<int>(free.size());
    SplitStats local;
    SplitStats& counter = stats != nullptr ? *stats : local;
    counter.guesses = 0;

    Solution best;
    best.algorithm = "k3-split";
    if (nf == 0) {
        best.coloring = inst.precolor;
        best.happy_weight = happy_weight_unchecked(inst, best.coloring);
        return best;
    }
    const auto bound = k3_guess_bound(nf);
    if (bound > limits.max_subsets) {
        throw CapExceeded("splitting solver needs " + std::to_string(bound) + " guesses, cap is " +
                          std::to_string(limits.max_subsets));
    }

    best.happy_weight = -1;
    std::vector<bool> fixed(idx(inst.n()));
    std::vector<Vertex> kept;
    std::vector<Color> coloring(idx(inst.n()));
    for (Color c = 1; c <= 3; ++c) {
        const Color a = c == 1 ? 2 : 1;
        const Color b = c == 3 ? 2 : 3;
        for (int size = 0; size <= nf / 3; ++size) {
            std::vector<int> pick(idx(size));
            for (int i = 0; i < size; ++i) {
                pick[idx(i)] = i;
            }
            while (true) {
                ++counter.guesses;
                for (Vertex v = 0; v < inst.n(); ++v) {
                    fixed[idx(v)] = inst.color_of(v) == c;
                }
                for (int i : pick) {
                    fixed[idx(free[idx(i)])] = true;
                }
                auto sub = residual_two_color(inst, fixed, a, b, kept);
                auto part = inst.problem == Problem::edges ? detail::two_color_mhe(sub) : detail::two_color_mhv(sub);
                for (Vertex v = 0; v < inst.n(); ++v) {
                    coloring[idx(v)] = c;
                }
                for (std::size_t i = 0; i < kept.size(); ++i) {
                    coloring[idx(kept[i])] = part.coloring[i] == 1 ? a : b;
                }
                Weight value = happy_weight_unchecked(inst, coloring);
                if (value > best.happy_weight) {
                    best.happy_weight = value;
                    best.coloring = coloring;
                }

                // Next combination in lexicographic order.
                int i = size - 1;
                while (i >= 0 && pick[idx(i)] == nf - size + i) {
                    --i;
                }
                if (i < 0) {
                    break;
                }
                ++pick[idx(i)];
                for (int j = i + 1; j < size; ++j) {
                    pick[idx(j)] = pick[idx(j - 1)] + 1;
                }
            }
        }
    }
    return best;
}

}  // namespace happy
