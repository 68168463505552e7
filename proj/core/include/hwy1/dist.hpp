#pragma once

#include <utility>
#include <vector>

#include "hwy1/graph.hpp"
#include "hwy1/numeric.hpp"

namespace hwy1 {

// Pairwise shortest-path distances together with exact shortest-path
// counts. Distances are symmetric with zero diagonal; sigma(u,w) >= 1
// exactly for connected pairs, 0 for disconnected ones.
class DistMatrix {
  public:
    DistMatrix() = default;
    DistMatrix(int n, std::vector<Int> dist, std::vector<Int> sigma);

    int n() const { return n_; }
    bool connected(int u, int v) const { return u == v || sigma_[idx(u, v)] > 0; }
    bool all_connected() const;

    // Requires the pair to be connected.
    const Int& dist(int u, int v) const;
    const Int& sigma(int u, int v) const { return sigma_[idx(u, v)]; }

    Int max_dist() const;  // over connected pairs, n >= 2
    Int min_dist() const;

  private:
    std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }
    int n_ = 0;
    std::vector<Int> dist_;   // -1 encodes "disconnected"; never exposed raw
    std::vector<Int> sigma_;
};

// Exact APSP with shortest-path counting (Dijkstra from every vertex,
// smallest-id tie-breaks). Throws infeasible on disconnected input unless
// allow_partial.
DistMatrix all_pairs(const Graph& g, bool allow_partial = false);

// Drops every edge strictly longer than the shortest path between its
// endpoints. Output has identical vertex set and distances, and every
// surviving edge satisfies w(u,v) = dist(u,v). Idempotent.
Graph metric_preprocess(const Graph& g);

bool is_metric_preprocessed(const Graph& g, const DistMatrix& d);

// Vertices lying on EVERY shortest u-w path: v qualifies iff
// dist(u,v)+dist(v,w) = dist(u,w) and sigma(u,v)*sigma(v,w) = sigma(u,w).
// Always contains u and w. Requires u != w, connected.
std::vector<int> mandatory_vertices(const DistMatrix& d, int u, int w);

// Same set as a bitmask (word i, bit j <-> vertex 64*i+j), for cheap
// intersection across many pairs.
std::vector<std::uint64_t> mandatory_mask(const DistMatrix& d, int u, int w);

// max pairwise distance / min pairwise distance, exact. Requires n >= 2,
// connected.
Rat aspect_ratio(const DistMatrix& d);

// Connected components of the subgraph keeping edges with w(e) <= t.
// comp[v] = smallest vertex id in v's component.
std::vector<int> threshold_components(const Graph& g, const Rat& t);

// Deterministic next hop on a shortest u->w path (smallest-id neighbour x
// of u with w(u,x) + dist(x,w) = dist(u,w)).
int shortest_path_step(const Graph& g, const DistMatrix& d, int u, int w);

// Full vertex sequence u..w along that deterministic shortest path.
std::vector<int> shortest_path(const Graph& g, const DistMatrix& d, int u, int w);

}  // namespace hwy1
