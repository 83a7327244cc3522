#include "happy/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace happy {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

struct LineReader {
    int line = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ValidationError("line " + std::to_string(line) + ": " + what);
    }
};

template <typename T>
T read_number(std::istringstream& ss, const LineReader& at, const char* what) {
    T value{};
    if (!(ss >> value)) {
        at.fail(std::string("expected ") + what);
    }
    return value;
}

}  // namespace

std::string variant_name(const Instance& inst) {
    std::string base = inst.problem == Problem::edges ? "mhe" : "mhv";
    return inst.weighted ? "w" + base : base;
}

Instance parse_instance(std::istream& in) {
    LineReader at;
    std::string raw;
    bool have_header = false;
    Problem problem = Problem::edges;
    bool weighted = false;
    int n = 0;
    int m = 0;
    int k = 0;
    Weight ell = 0;
    std::vector<Color> precolor;
    std::vector<Weight> vertex_weight;
    std::vector<int> color_line;
    std::vector<int> weight_line;
    std::map<std::pair<Vertex, Vertex>, int> edge_line;
    std::vector<std::tuple<Vertex, Vertex, Weight>> edges;

    auto vertex = [&](std::istringstream& ss) {
        auto v = read_number<long long>(ss, at, "a vertex id");
        if (v < 1 || v > n) {
            at.fail("vertex id " + std::to_string(v) + " outside 1.." + std::to_string(n));
        }
        return static_cast<Vertex>(v - 1);
    };
    auto no_trailing = [&](std::istringstream& ss) {
        std::string extra;
        if (ss >> extra) {
            at.fail("unexpected trailing token '" + extra + "'");
        }
    };

    while (std::getline(in, raw)) {
        ++at.line;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ss(raw);
        std::string head;
        if (!(ss >> head)) {
            continue;
        }
        if (!have_header) {
            if (head != "happy") {
                at.fail("expected header 'happy <variant> <n> <m> <k> <ell>'");
            }
            std::string variant;
            if (!(ss >> variant)) {
                at.fail("missing variant");
            }
            if (variant == "mhe" || variant == "wmhe") {
                problem = Problem::edges;
            } else if (variant == "mhv" || variant == "wmhv") {
                problem = Problem::vertices;
            } else {
                at.fail("unknown variant '" + variant + "'");
            }
            weighted = variant[0] == 'w';
            n = read_number<int>(ss, at, "vertex count n");
            m = read_number<int>(ss, at, "edge count m");
            k = read_number<int>(ss, at, "color count k");
            ell = read_number<Weight>(ss, at, "target ell");
            no_trailing(ss);
            if (n < 0 || m < 0) {
                at.fail("negative vertex or edge count");
            }
            if (k < 1) {
                at.fail("color count k must be at least 1");
            }
            if (ell < 0) {
                at.fail("negative target");
            }
            precolor.assign(idx(n), kUncolored);
            vertex_weight.assign(idx(n), 1);
            color_line.assign(idx(n), 0);
            weight_line.assign(idx(n), 0);
            have_header = true;
            continue;
        }
        if (head == "v") {
            Vertex v = vertex(ss);
            std::string kind;
            if (!(ss >> kind) || (kind != "c" && kind != "w")) {
                at.fail("vertex line needs 'c <color>' or 'w <weight>'");
            }
            auto value = read_number<Weight>(ss, at, kind == "c" ? "a color" : "a weight");
            no_trailing(ss);
            if (kind == "c") {
                if (color_line[idx(v)] != 0) {
                    at.fail("vertex " + std::to_string(v + 1) + " already colored on line " +
                            std::to_string(color_line[idx(v)]));
                }
                if (value < 1 || value > k) {
                    at.fail("color out of range at vertex " + std::to_string(v + 1) + ": " + std::to_string(value));
                }
                precolor[idx(v)] = static_cast<Color>(value);
                color_line[idx(v)] = at.line;
            } else {
                if (!(weighted && problem == Problem::vertices)) {
                    at.fail("vertex weights are only allowed in wmhv files");
                }
                if (weight_line[idx(v)] != 0) {
                    at.fail("vertex " + std::to_string(v + 1) + " already weighted on line " +
                            std::to_string(weight_line[idx(v)]));
                }
                if (value < 1) {
                    at.fail("nonpositive weight on vertex " + std::to_string(v + 1));
                }
                vertex_weight[idx(v)] = value;
                weight_line[idx(v)] = at.line;
            }
            continue;
        }
        if (head == "e") {
            Vertex u = vertex(ss);
            Vertex v = vertex(ss);
            Weight w = 1;
            std::string token;
            if (ss >> token) {
                if (!(weighted && problem == Problem::edges)) {
                    at.fail("edge weights are only allowed in wmhe files");
                }
                std::istringstream ws(token);
                if (!(ws >> w) || !ws.eof()) {
                    at.fail("expected an edge weight, got '" + token + "'");
                }
                no_trailing(ss);
            }
            if (u == v) {
                at.fail("self-loop at " + std::to_string(u + 1));
            }
            if (w < 1) {
                at.fail("nonpositive weight on edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
            }
            auto key = std::minmax(u, v);
            if (auto [it, fresh] = edge_line.try_emplace(key, at.line); !fresh) {
                at.fail("duplicate edge " + std::to_string(key.first + 1) + "-" + std::to_string(key.second + 1) +
                        " (first on line " + std::to_string(it->second) + ")");
            }
            if (static_cast<int>(edges.size()) == m) {
                at.fail("more edge lines than the m = " + std::to_string(m) + " in the header");
            }
            edges.emplace_back(u, v, w);
            continue;
        }
        at.fail("unknown line type '" + head + "'");
    }
    if (!have_header) {
        throw ValidationError("empty input: missing 'happy' header");
    }
    if (static_cast<int>(edges.size()) != m) {
        throw ValidationError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    InstanceBuilder b(problem, n, k);
    b.weighted(weighted);
    for (auto [u, v, w] : edges) {
        b.edge(u, v, w);
    }
    for (Vertex v = 0; v < n; ++v) {
        if (precolor[idx(v)] != kUncolored) {
            b.color(v, precolor[idx(v)]);
        }
        b.vertex_weight(v, vertex_weight[idx(v)]);
    }
    if (ell > 0) {
        b.target(ell);
    }
    auto inst = b.build();
    require_valid(inst);
    return inst;
}

Instance parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open " + path);
    }
    try {
        return parse_instance(in);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_instance(std::ostream& out, const Instance& inst) {
    out << "happy " << variant_name(inst) << ' ' << inst.n() << ' ' << inst.m() << ' ' << inst.k << ' '
        << inst.target.value_or(0) << '\n';
    const bool vertex_weights = inst.weighted && inst.problem == Problem::vertices;
    const bool edge_weights = inst.weighted && inst.problem == Problem::edges;
    for (Vertex v = 0; v < inst.n(); ++v) {
        if (inst.is_precolored(v)) {
            out << "v " << v + 1 << " c " << inst.color_of(v) << '\n';
        }
        if (vertex_weights && inst.vertex_weight[idx(v)] != 1) {
            out << "v " << v + 1 << " w " << inst.vertex_weight[idx(v)] << '\n';
        }
    }
    const auto& edges = inst.graph.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        out << "e " << edges[e].u + 1 << ' ' << edges[e].v + 1;
        if (edge_weights) {
            out << ' ' << inst.edge_weight[e];
        }
        out << '\n';
    }
}

std::string instance_text(const Instance& inst) {
    std::ostringstream out;
    write_instance(out, inst);
    return out.str();
}

void write_instance_file(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot write " + path);
    }
    write_instance(out, inst);
}

std::string digest(const Instance& inst) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : instance_text(inst)) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<Color> parse_coloring(const std::string& text) {
    std::string spaced = text;
    for (auto& ch : spaced) {
        if (ch == ',') {
            ch = ' ';
        }
    }
    std::istringstream ss(spaced);
    std::vector<Color> out;
    std::string token;
    while (ss >> token) {
        try {
            std::size_t used = 0;
            int c = std::stoi(token, &used);
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
            out.push_back(c);
        } catch (const std::exception&) {
            throw ValidationError("not a color: '" + token + "'");
        }
    }
    return out;
}

ResultRecord make_record(const Instance& inst, const Solution& solution, double elapsed_ms) {
    if (evaluate_objective(inst, solution.coloring) != solution.happy_weight) {
        throw std::logic_error(solution.algorithm + " reported a value its coloring does not reach");
    }
    ResultRecord r;
    r.variant = variant_name(inst);
    r.algorithm = solution.algorithm;
    r.optimum = solution.happy_weight;
    r.happy_weight = solution.happy_weight;
    r.coloring = solution.coloring;
    r.elapsed_ms = elapsed_ms;
    r.digest = digest(inst);
    r.target = inst.target;
    return r;
}

std::string to_json(const ResultRecord& record, bool with_elapsed) {
    nlohmann::ordered_json j;
    j["variant"] = record.variant;
    j["algorithm"] = record.algorithm;
    j["optimum"] = record.optimum;
    j["happyWeight"] = record.happy_weight;
    j["coloring"] = record.coloring;
    if (with_elapsed) {
        j["elapsedMs"] = record.elapsed_ms;
    }
    j["digest"] = record.digest;
    if (record.target) {
        j["target"] = *record.target;
        j["answer"] = record.optimum >= *record.target ? "yes" : "no";
    }
    return j.dump();
}

}  // namespace happy
