#pragma once

#include <utility>
#include <vector>

#include "hwy1/dist.hpp"
#include "hwy1/graph.hpp"
#include "hwy1/numeric.hpp"

namespace hwy1 {

// Tree (in the subgraph sense) spanning all terminals; cost is the sum of
// its edge weights.
struct SteinerSolution {
    std::vector<std::pair<int, int>> edges;
    Int cost;
};

// Closed walk given as a vertex sequence (the closing step back to
// walk.front() is implicit). Visits every vertex at least once; cost is
// the sum of shortest-path distances between consecutive stops.
struct TourSolution {
    std::vector<int> walk;
    Int cost;
};

// Recomputation helpers, used to enforce the solution invariants.
Int walk_cost(const DistMatrix& d, const std::vector<int>& walk);
bool walk_visits_all(int n, const std::vector<int>& walk);

Int edges_cost(const Graph& g, const std::vector<std::pair<int, int>>& edges);
// connected + acyclic + covers all terminals
bool is_steiner_tree(const Graph& g, const std::vector<int>& terminals,
                     const std::vector<std::pair<int, int>>& edges);

}  // namespace hwy1
