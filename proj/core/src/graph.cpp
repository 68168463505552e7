#include "hwy1/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "hwy1/errors.hpp"

namespace hwy1 {

Rat parse_rat(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rat(Int(std::string(text)));
        }
        Int num(std::string(text.substr(0, slash)));
        Int den(std::string(text.substr(slash + 1)));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

long ceil_log2(const Rat& v) {
    if (v <= 0) throw std::invalid_argument("ceil_log2 of non-positive value");
    long k = 0;
    if (v <= 1) return 0;
    Rat p(1);
    while (p < v) {
        p *= 2;
        ++k;
        if (k > 4'000'000) throw std::invalid_argument("ceil_log2 argument out of range");
    }
    return k;
}

Rat pow2(long k) {
    Int one(1);
    if (k >= 0) return Rat(one << static_cast<unsigned long>(k));
    return make_rat(one, one << static_cast<unsigned long>(-k));
}

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<int> terminals, Int unit_den)
    : n_(n), edges_(std::move(edges)), terminals_(std::move(terminals)),
      unit_den_(std::move(unit_den)) {
    require(n_ >= 0, ErrorKind::input, "negative vertex count");
    require(unit_den_ > 0, ErrorKind::input, "unit denominator must be positive");
    std::set<std::pair<int, int>> seen;
    for (auto& e : edges_) {
        require(e.u >= 0 && e.u < n_ && e.v >= 0 && e.v < n_, ErrorKind::input,
                "edge endpoint out of range");
        require(e.u != e.v, ErrorKind::input, "self-loop");
        require(e.w > 0, ErrorKind::input, "non-positive edge weight");
        if (e.u > e.v) std::swap(e.u, e.v);
        require(seen.emplace(e.u, e.v).second, ErrorKind::input, "parallel edge");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    std::sort(terminals_.begin(), terminals_.end());
    terminals_.erase(std::unique(terminals_.begin(), terminals_.end()), terminals_.end());
    for (int t : terminals_)
        require(t >= 0 && t < n_, ErrorKind::input, "terminal out of range");
    adj_.assign(n_, {});
    for (const auto& e : edges_) {
        adj_[e.u].emplace_back(e.v, e.w);
        adj_[e.v].emplace_back(e.u, e.w);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::is_terminal(int v) const {
    return std::binary_search(terminals_.begin(), terminals_.end(), v);
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v),
                               [](const Edge& e, const std::pair<int, int>& p) {
                                   return std::pair(e.u, e.v) < p;
                               });
    return it != edges_.end() && it->u == u && it->v == v;
}

Int Graph::min_edge_weight() const {
    require(!edges_.empty(), ErrorKind::input, "graph has no edges");
    Int best = edges_[0].w;
    for (const auto& e : edges_)
        if (e.w < best) best = e.w;
    return best;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [v, w] : adj_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n_;
}

Rat Graph::to_input_units(const Int& scaled) const { return make_rat(scaled, unit_den_); }

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int n = -1;
    long declared_m = -1;
    struct RawEdge {
        int u, v;
        Rat w;
    };
    std::vector<RawEdge> raw;
    std::vector<int> terminals;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (toks[0] == "p") {
            require(n < 0, ErrorKind::input, "duplicate problem line" + where);
            require(toks.size() == 4 && toks[1] == "graph", ErrorKind::input,
                    "expected 'p graph <n> <m>'" + where);
            try {
                n = std::stoi(toks[2]);
                declared_m = std::stol(toks[3]);
            } catch (...) {
                fail_input("malformed problem line" + where);
            }
        } else if (toks[0] == "e") {
            require(n >= 0, ErrorKind::input, "edge before problem line" + where);
            require(toks.size() == 4, ErrorKind::input, "expected 'e <u> <v> <w>'" + where);
            try {
                RawEdge e{std::stoi(toks[1]), std::stoi(toks[2]), parse_rat(toks[3])};
                require(e.w > 0, ErrorKind::input, "non-positive weight" + where);
                raw.push_back(std::move(e));
            } catch (const Error&) {
                throw;
            } catch (...) {
                fail_input("malformed edge line" + where);
            }
        } else if (toks[0] == "t") {
            require(n >= 0, ErrorKind::input, "terminal before problem line" + where);
            require(toks.size() == 2, ErrorKind::input, "expected 't <v>'" + where);
            try {
                terminals.push_back(std::stoi(toks[1]));
            } catch (...) {
                fail_input("malformed terminal line" + where);
            }
        } else {
            fail_input("unknown record '" + toks[0] + "'" + where);
        }
    }
    require(n >= 0, ErrorKind::input, "missing 'p graph' line");
    require(declared_m == static_cast<long>(raw.size()), ErrorKind::input,
            "edge count does not match problem line");

    // Scale rational weights to integers over the lcm of denominators.
    Int lcm_den = 1;
    for (const auto& e : raw) {
        Int den = e.w.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        lcm_den = lcm_den / g * den;
    }
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw) {
        Int w = e.w.get_num() * (lcm_den / e.w.get_den());
        edges.push_back({e.u, e.v, std::move(w)});
    }
    return Graph(n, std::move(edges), std::move(terminals), lcm_den);
}

Graph parse_graph_string(const std::string& text) {
    std::istringstream iss(text);
    return parse_graph(iss);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorKind::input, "cannot open '" + path + "'");
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p graph " << g.n() << " " << g.m() << "\n";
    for (const auto& e : g.edges()) {
        out << "e " << e.u << " " << e.v << " " << to_string(g.to_input_units(e.w)) << "\n";
    }
    for (int t : g.terminals()) out << "t " << t << "\n";
    return out.str();
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), ErrorKind::input, "cannot write '" + path + "'");
    out << serialize_graph(g);
}

}  // namespace hwy1
