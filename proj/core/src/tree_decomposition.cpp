#include "happy/tree_decomposition.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

namespace happy {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

std::string id(Vertex v) { return std::to_string(v + 1); }

int max_bag(const std::vector<std::vector<Vertex>>& bags) {
    std::size_t out = 0;
    for (const auto& b : bags) {
        out = std::max(out, b.size());
    }
    return static_cast<int>(out);
}

std::size_t fill_in(const std::vector<std::set<Vertex>>& adj, Vertex v) {
    std::size_t missing = 0;
    for (auto a = adj[idx(v)].begin(); a != adj[idx(v)].end(); ++a) {
        for (auto b = std::next(a); b != adj[idx(v)].end(); ++b) {
            missing += adj[idx(*a)].count(*b) ? 0 : 1;
        }
    }
    return missing;
}

// Adjacency lists of the decomposition tree. False when the edges do not form a tree.
bool tree_adjacency(const TreeDecomposition& td, std::vector<std::vector<int>>& adj) {
    const int nodes = static_cast<int>(td.bags.size());
    adj.assign(idx(nodes), {});
    if (nodes == 0 || static_cast<int>(td.edges.size()) != nodes - 1) {
        return nodes == 0 && td.edges.empty();
    }
    for (auto [a, b] : td.edges) {
        if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) {
            return false;
        }
        adj[idx(a)].push_back(b);
        adj[idx(b)].push_back(a);
    }
    std::vector<bool> seen(idx(nodes), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[idx(x)]) {
            if (!seen[idx(y)]) {
                seen[idx(y)] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == nodes;
}

}  // namespace

int TreeDecomposition::width() const { return max_bag(bags) - 1; }

int NiceDecomposition::width() const {
    std::size_t out = 0;
    for (const auto& node : nodes) {
        out = std::max(out, node.bag.size());
    }
    return static_cast<int>(out) - 1;
}

TreeDecomposition decompose(const Graph& g) {
    const int n = g.order();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<std::set<Vertex>> adj(idx(n));
    for (const auto& e : g.edges()) {
        if (e.u != e.v) {
            adj[idx(e.u)].insert(e.v);
            adj[idx(e.v)].insert(e.u);
        }
    }
    std::vector<int> position(idx(n), -1);
    std::vector<Vertex> order;
    td.bags.resize(idx(n));
    const bool min_fill = n <= 400;

    using Entry = std::pair<std::size_t, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    if (!min_fill) {
        for (Vertex v = 0; v < n; ++v) {
            heap.push({adj[idx(v)].size(), v});
        }
    }
    auto pick = [&]() -> Vertex {
        if (min_fill) {
            Vertex best = -1;
            std::pair<std::size_t, std::size_t> best_key{};
            for (Vertex v = 0; v < n; ++v) {
                if (position[idx(v)] >= 0) {
                    continue;
                }
                std::pair<std::size_t, std::size_t> key{fill_in(adj, v), adj[idx(v)].size()};
                if (best < 0 || key < best_key) {
                    best = v;
                    best_key = key;
                }
            }
            return best;
        }
        while (true) {
            auto [deg, v] = heap.top();
            heap.pop();
            if (position[idx(v)] < 0 && deg == adj[idx(v)].size()) {
                return v;
            }
        }
    };

    for (int step = 0; step < n; ++step) {
        Vertex v = pick();
        position[idx(v)] = step;
        order.push_back(v);
        std::vector<Vertex> nb(adj[idx(v)].begin(), adj[idx(v)].end());
        auto& bag = td.bags[idx(v)];
        bag = nb;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        for (Vertex u : nb) {
            adj[idx(u)].erase(v);
        }
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                adj[idx(nb[i])].insert(nb[j]);
                adj[idx(nb[j])].insert(nb[i]);
            }
        }
        adj[idx(v)].clear();
        if (!min_fill) {
            for (Vertex u : nb) {
                heap.push({adj[idx(u)].size(), u});
            }
        }
    }

    // Bag of v hangs below the bag of its earliest-eliminated later neighbor.
    td.root = order.back();
    for (Vertex v = 0; v < n; ++v) {
        Vertex parent = -1;
        for (Vertex u : td.bags[idx(v)]) {
            if (u != v && (parent < 0 || position[idx(u)] < position[idx(parent)])) {
                parent = u;
            }
        }
        if (parent < 0 && v != td.root) {
            parent = td.root;
        }
        if (parent >= 0) {
            td.edges.push_back({parent, v});
        }
    }
    return td;
}

std::vector<std::string> verify_decomposition(const Graph& g, const TreeDecomposition& td) {
    std::vector<std::string> out;
    std::vector<std::vector<int>> tree;
    if (!tree_adjacency(td, tree)) {
        out.push_back("decomposition edges do not form a tree");
        return out;
    }
    if (td.root < 0 || td.root >= static_cast<int>(td.bags.size())) {
        out.push_back("root is not a decomposition node");
    }
    const int n = g.order();
    std::vector<std::vector<int>> holders(idx(n));
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        for (Vertex v : td.bags[i]) {
            if (v < 0 || v >= n) {
                out.push_back("bag " + std::to_string(i + 1) + " holds unknown vertex " + id(v));
                return out;
            }
            holders[idx(v)].push_back(static_cast<int>(i));
        }
        if (!std::is_sorted(td.bags[i].begin(), td.bags[i].end()) ||
            std::adjacent_find(td.bags[i].begin(), td.bags[i].end()) != td.bags[i].end()) {
            out.push_back("bag " + std::to_string(i + 1) + " is not a sorted set");
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (holders[idx(v)].empty()) {
            out.push_back("vertex " + id(v) + " is in no bag");
            continue;
        }
        std::set<int> mine(holders[idx(v)].begin(), holders[idx(v)].end());
        std::set<int> seen{holders[idx(v)][0]};
        std::vector<int> stack{holders[idx(v)][0]};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tree[idx(x)]) {
                if (mine.count(y) && seen.insert(y).second) {
                    stack.push_back(y);
                }
            }
        }
        if (seen.size() != mine.size()) {
            out.push_back("bags holding vertex " + id(v) + " are not connected");
        }
    }
    for (const auto& e : g.edges()) {
        if (e.u < 0 || e.v >= n) {
            continue;
        }
        const auto& hu = holders[idx(e.u)];
        const auto& hv = holders[idx(e.v)];
        bool covered = false;
        for (int b : hu) {
            covered |= std::find(hv.begin(), hv.end(), b) != hv.end();
        }
        if (!covered) {
            out.push_back("edge " + id(e.u) + "-" + id(e.v) + " is in no bag");
        }
    }
    return out;
}

NiceDecomposition make_nice(const TreeDecomposition& td) {
    std::vector<std::vector<int>> tree;
    if (!tree_adjacency(td, tree) || td.root < 0 || td.root >= static_cast<int>(td.bags.size())) {
        throw ValidationError("tree decomposition is not a rooted tree");
    }
    for (const auto& bag : td.bags) {
        if (!std::is_sorted(bag.begin(), bag.end())) {
            throw ValidationError("tree decomposition bags must be sorted");
        }
    }
    NiceDecomposition nd;
    auto add = [&](NiceKind kind, Vertex v, std::vector<Vertex> bag, std::vector<int> children) {
        nd.nodes.push_back({kind, v, std::move(bag), std::move(children)});
        return static_cast<int>(nd.nodes.size()) - 1;
    };
    // Forget then introduce until the bag of `node` becomes `to`.
    auto morph = [&](int node, const std::vector<Vertex>& to) {
        std::vector<Vertex> bag = nd.nodes[idx(node)].bag;
        for (Vertex v : std::vector<Vertex>(bag)) {
            if (!std::binary_search(to.begin(), to.end(), v)) {
                bag.erase(std::find(bag.begin(), bag.end(), v));
                node = add(NiceKind::forget, v, bag, {node});
            }
        }
        for (Vertex v : to) {
            if (!std::binary_search(bag.begin(), bag.end(), v)) {
                bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
                node = add(NiceKind::introduce, v, bag, {node});
            }
        }
        return node;
    };

    // Iterative post-order over the rooted decomposition tree.
    const int count = static_cast<int>(td.bags.size());
    std::vector<int> parent(idx(count), -1);
    std::vector<int> order;
    std::vector<int> stack{td.root};
    std::vector<bool> seen(idx(count), false);
    seen[idx(td.root)] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int y : tree[idx(x)]) {
            if (!seen[idx(y)]) {
                seen[idx(y)] = true;
                parent[idx(y)] = x;
                stack.push_back(y);
            }
        }
    }
    std::vector<std::vector<int>> tops(idx(count));
    std::vector<int> built(idx(count), -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        const auto& bag = td.bags[idx(x)];
        auto& kids = tops[idx(x)];
        std::sort(kids.begin(), kids.end());
        int node;
        if (kids.empty()) {
            std::vector<Vertex> first;
            if (!bag.empty()) {
                first.push_back(bag.front());
            }
            node = add(NiceKind::leaf, -1, first, {});
            node = morph(node, bag);
        } else {
            node = morph(built[idx(kids[0])], bag);
            for (std::size_t i = 1; i < kids.size(); ++i) {
                int other = morph(built[idx(kids[i])], bag);
                node = add(NiceKind::join, -1, bag, {node, other});
            }
        }
        built[idx(x)] = node;
        if (parent[idx(x)] >= 0) {
            tops[idx(parent[idx(x)])].push_back(x);
        }
    }
    nd.root = built[idx(td.root)];
    return nd;
}

std::vector<std::string> verify_nice(const Graph& g, const NiceDecomposition& nd) {
    std::vector<std::string> out;
    const int count = static_cast<int>(nd.nodes.size());
    if (nd.root != count - 1 || count == 0) {
        out.push_back("root must be the last node");
        return out;
    }
    TreeDecomposition td;
    td.root = nd.root;
    std::vector<int> parents(idx(count), 0);
    for (int i = 0; i < count; ++i) {
        const auto& node = nd.nodes[idx(i)];
        td.bags.push_back(node.bag);
        std::string where = "nice node " + std::to_string(i + 1);
        for (int c : node.children) {
            if (c < 0 || c >= i) {
                out.push_back(where + " has a child that does not precede it");
                return out;
            }
            ++parents[idx(c)];
            td.edges.push_back({i, c});
        }
        auto child_bag = [&]() -> const std::vector<Vertex>& { return nd.nodes[idx(node.children[0])].bag; };
        auto differs_by = [&](const std::vector<Vertex>& big, const std::vector<Vertex>& small) {
            if (big.size() != small.size() + 1 || !std::includes(big.begin(), big.end(), small.begin(), small.end())) {
                return false;
            }
            return std::binary_search(big.begin(), big.end(), node.vertex) &&
                   !std::binary_search(small.begin(), small.end(), node.vertex);
        };
        switch (node.kind) {
        case NiceKind::leaf:
            if (!node.children.empty() || node.bag.size() > 1) {
                out.push_back(where + " is a leaf with children or more than one vertex");
            }
            break;
        case NiceKind::introduce:
            if (node.children.size() != 1 || !differs_by(node.bag, child_bag())) {
                out.push_back(where + " is not a valid introduce node");
            }
            break;
        case NiceKind::forget:
            if (node.children.size() != 1 || !differs_by(child_bag(), node.bag)) {
                out.push_back(where + " is not a valid forget node");
            }
            break;
        case NiceKind::join:
            if (node.children.size() != 2 || nd.nodes[idx(node.children[0])].bag != node.bag ||
                nd.nodes[idx(node.children[1])].bag != node.bag) {
                out.push_back(where + " is not a valid join node");
            }
            break;
        }
    }
    for (int i = 0; i + 1 < count; ++i) {
        if (parents[idx(i)] != 1) {
            out.push_back("nice node " + std::to_string(i + 1) + " does not have exactly one parent");
        }
    }
    if (!out.empty()) {
        return out;
    }
    auto rest = verify_decomposition(g, td);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

TreeDecomposition read_td(std::istream& in) {
    TreeDecomposition td;
    std::string line;
    int line_no = 0;
    bool header = false;
    int bag_count = 0;
    int n = 0;
    auto fail = [&](const std::string& what) {
        throw ValidationError("line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head) || head == "c") {
            continue;
        }
        if (head == "s") {
            std::string td_tag;
            int width_plus_one = 0;
            if (header || !(ss >> td_tag >> bag_count >> width_plus_one >> n) || td_tag != "td" || bag_count < 0) {
                fail("malformed solution line");
            }
            header = true;
            td.bags.assign(idx(bag_count), {});
            continue;
        }
        if (!header) {
            fail("expected the 's td' line first");
        }
        if (head == "b") {
            int b = 0;
            if (!(ss >> b) || b < 1 || b > bag_count) {
                fail("bag id out of range");
            }
            Vertex v = 0;
            auto& bag = td.bags[idx(b - 1)];
            while (ss >> v) {
                if (v < 1 || v > n) {
                    fail("vertex out of range");
                }
                bag.push_back(v - 1);
            }
            std::sort(bag.begin(), bag.end());
            continue;
        }
        int a = 0;
        int b = 0;
        try {
            a = std::stoi(head);
        } catch (const std::exception&) {
            fail("unexpected token '" + head + "'");
        }
        if (!(ss >> b) || a < 1 || b < 1 || a > bag_count || b > bag_count) {
            fail("tree edge out of range");
        }
        td.edges.push_back({a - 1, b - 1});
    }
    if (!header) {
        throw ValidationError("missing 's td' line");
    }
    return td;
}

void write_td(std::ostream& out, const TreeDecomposition& td, int n) {
    out << "s td " << td.bags.size() << ' ' << max_bag(td.bags) << ' ' << n << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : td.bags[i]) {
            out << ' ' << v + 1;
        }
        out << '\n';
    }
    for (auto [a, b] : td.edges) {
        out << a + 1 << ' ' << b + 1 << '\n';
    }
}

}  // namespace happy
