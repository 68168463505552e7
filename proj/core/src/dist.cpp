#include "hwy1/dist.hpp"

#include <algorithm>
#include <queue>

#include "hwy1/errors.hpp"

namespace hwy1 {

DistMatrix::DistMatrix(int n, std::vector<Int> dist, std::vector<Int> sigma)
    : n_(n), dist_(std::move(dist)), sigma_(std::move(sigma)) {}

bool DistMatrix::all_connected() const {
    for (const auto& s : sigma_)
        if (s == 0) {
            // diagonal entries carry sigma 1, so any zero means a
            // disconnected pair
            return false;
        }
    return true;
}

const Int& DistMatrix::dist(int u, int v) const {
    const Int& d = dist_[idx(u, v)];
    require(d >= 0, ErrorKind::infeasible, "distance of a disconnected pair");
    return d;
}

Int DistMatrix::max_dist() const {
    require(n_ >= 2, ErrorKind::input, "max_dist needs n >= 2");
    Int best(-1);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (connected(u, v) && dist(u, v) > best) best = dist(u, v);
    require(best >= 0, ErrorKind::infeasible, "no connected pair");
    return best;
}

Int DistMatrix::min_dist() const {
    require(n_ >= 2, ErrorKind::input, "min_dist needs n >= 2");
    Int best(-1);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (connected(u, v) && (best < 0 || dist(u, v) < best)) best = dist(u, v);
    require(best >= 0, ErrorKind::infeasible, "no connected pair");
    return best;
}

DistMatrix all_pairs(const Graph& g, bool allow_partial) {
    const int n = g.n();
    std::vector<Int> dist(static_cast<std::size_t>(n) * n, Int(-1));
    std::vector<Int> sigma(static_cast<std::size_t>(n) * n, Int(0));

    // Dijkstra from every source; the priority queue orders by (dist, id)
    // so the traversal is deterministic.
    struct QItem {
        Int d;
        int v;
        bool operator>(const QItem& o) const {
            int c = cmp(d, o.d);
            if (c != 0) return c > 0;
            return v > o.v;
        }
    };
    for (int s = 0; s < n; ++s) {
        std::vector<char> done(n, 0);
        auto D = [&](int v) -> Int& { return dist[static_cast<std::size_t>(s) * n + v]; };
        auto S = [&](int v) -> Int& { return sigma[static_cast<std::size_t>(s) * n + v]; };
        std::priority_queue<QItem, std::vector<QItem>, std::greater<>> pq;
        D(s) = 0;
        S(s) = 1;
        pq.push({Int(0), s});
        while (!pq.empty()) {
            auto [d, u] = pq.top();
            pq.pop();
            if (done[u]) continue;
            done[u] = 1;
            for (const auto& [v, w] : g.adj(u)) {
                if (done[v]) continue;
                Int nd = d + w;
                if (D(v) < 0 || nd < D(v)) {
                    D(v) = nd;
                    S(v) = S(u);
                    pq.push({std::move(nd), v});
                } else if (nd == D(v)) {
                    S(v) += S(u);
                }
            }
        }
        if (!allow_partial) {
            for (int v = 0; v < n; ++v)
                require(D(v) >= 0, ErrorKind::infeasible, "graph is disconnected");
        }
    }
    return DistMatrix(n, std::move(dist), std::move(sigma));
}

Graph metric_preprocess(const Graph& g) {
    for (const auto& e : g.edges())
        require(e.w > 0, ErrorKind::input, "non-positive edge weight");
    DistMatrix d = all_pairs(g, /*allow_partial=*/true);
    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        // dist <= w always holds; keep exactly the edges that are
        // themselves shortest paths. One pass suffices: a dropped edge is
        // never the unique shortest route between its endpoints.
        if (d.dist(e.u, e.v) == e.w) kept.push_back(e);
    }
    return Graph(g.n(), std::move(kept), g.terminals(), g.unit_den());
}

bool is_metric_preprocessed(const Graph& g, const DistMatrix& d) {
    for (const auto& e : g.edges())
        if (d.dist(e.u, e.v) != e.w) return false;
    return true;
}

std::vector<int> mandatory_vertices(const DistMatrix& d, int u, int w) {
    require(u != w, ErrorKind::input, "mandatory_vertices needs distinct endpoints");
    require(d.connected(u, w), ErrorKind::infeasible, "disconnected pair");
    std::vector<int> out;
    const Int& duw = d.dist(u, w);
    const Int& suw = d.sigma(u, w);
    for (int v = 0; v < d.n(); ++v) {
        if (!d.connected(u, v) || !d.connected(v, w)) continue;
        if (d.dist(u, v) + d.dist(v, w) != duw) continue;
        if (d.sigma(u, v) * d.sigma(v, w) == suw) out.push_back(v);
    }
    return out;
}

std::vector<std::uint64_t> mandatory_mask(const DistMatrix& d, int u, int w) {
    std::vector<std::uint64_t> mask((d.n() + 63) / 64, 0);
    for (int v : mandatory_vertices(d, u, w)) mask[v / 64] |= 1ull << (v % 64);
    return mask;
}

Rat aspect_ratio(const DistMatrix& d) {
    require(d.n() >= 2, ErrorKind::input, "aspect ratio needs n >= 2");
    require(d.all_connected(), ErrorKind::input, "aspect ratio needs a connected graph");
    return make_rat(d.max_dist(), d.min_dist());
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // keep the smallest id as the representative
        if (a < b) parent[b] = a;
        else parent[a] = b;
    }
};

}  // namespace

std::vector<int> threshold_components(const Graph& g, const Rat& t) {
    UnionFind uf(g.n());
    for (const auto& e : g.edges())
        if (e.w <= t) uf.unite(e.u, e.v);
    std::vector<int> comp(g.n());
    for (int v = 0; v < g.n(); ++v) comp[v] = uf.find(v);
    return comp;
}

int shortest_path_step(const Graph& g, const DistMatrix& d, int u, int w) {
    require(u != w, ErrorKind::input, "no step needed");
    const Int& duw = d.dist(u, w);
    for (const auto& [x, wt] : g.adj(u)) {
        if (x == w && wt == duw) return x;
        if (d.connected(x, w) && wt + d.dist(x, w) == duw) return x;
    }
    fail_internal("no shortest-path step found");
}

std::vector<int> shortest_path(const Graph& g, const DistMatrix& d, int u, int w) {
    std::vector<int> path{u};
    int cur = u;
    while (cur != w) {
        cur = shortest_path_step(g, d, cur, w);
        path.push_back(cur);
    }
    return path;
}

}  // namespace hwy1
