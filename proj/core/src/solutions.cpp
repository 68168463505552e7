#include "hwy1/solutions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hwy1/errors.hpp"

namespace hwy1 {

Int walk_cost(const DistMatrix& d, const std::vector<int>& walk) {
    if (walk.size() <= 1) return Int(0);
    Int total(0);
    for (std::size_t i = 0; i < walk.size(); ++i) {
        int a = walk[i];
        int b = walk[(i + 1) % walk.size()];
        if (a != b) total += d.dist(a, b);
    }
    return total;
}

bool walk_visits_all(int n, const std::vector<int>& walk) {
    std::vector<char> seen(n, 0);
    for (int v : walk) {
        if (v < 0 || v >= n) return false;
        seen[v] = 1;
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Int edges_cost(const Graph& g, const std::vector<std::pair<int, int>>& edges) {
    Int total(0);
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        bool found = false;
        for (const auto& [x, w] : g.adj(u))
            if (x == v) {
                total += w;
                found = true;
                break;
            }
        require(found, ErrorKind::input, "solution edge not in graph");
    }
    return total;
}

bool is_steiner_tree(const Graph& g, const std::vector<int>& terminals,
                     const std::vector<std::pair<int, int>>& edges) {
    if (terminals.empty()) return edges.empty();
    std::set<int> vertices(terminals.begin(), terminals.end());
    std::set<std::pair<int, int>> edge_set;
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (!g.has_edge(u, v)) return false;
        if (!edge_set.emplace(u, v).second) return false;  // duplicate
        vertices.insert(u);
        vertices.insert(v);
    }
    // connected and acyclic over its own vertex set
    if (edges.size() + 1 != vertices.size()) return false;
    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : edge_set) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::set<int> seen{*vertices.begin()};
    std::vector<int> stack{*vertices.begin()};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (seen.insert(v).second) stack.push_back(v);
    }
    return seen.size() == vertices.size();
}

}  // namespace hwy1
