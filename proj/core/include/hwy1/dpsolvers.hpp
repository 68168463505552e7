#pragma once

#include <vector>

#include "hwy1/solutions.hpp"
#include "hwy1/treedecomp.hpp"

namespace hwy1 {

struct DpStats {
    long states = 0;       // peak table size over all decomposition nodes
    long transitions = 0;  // state expansions performed
};

// Exact Steiner tree by dynamic programming over a nice tree
// decomposition: states are (selected bag subset, partition into connected
// blocks). Edges are paid at dedicated points of the decomposition, so
// each graph edge is considered exactly once. Throws infeasible when a
// terminal cannot be connected.
SteinerSolution steiner_exact_td(const Graph& g, const std::vector<int>& terminals,
                                 const NiceTreeDecomposition& ntd, DpStats* stats = nullptr);

// Exact closed-walk TSP: minimum connected spanning multigraph with all
// degrees even, taken over the metric closure restricted to pairs
// co-resident in some bag (which subsumes every graph edge). States track
// per-vertex degree parity and a connectivity partition. Requires g
// metric-preprocessed and connected; n <= 2 degenerates to a direct
// answer.
TourSolution tsp_exact_td(const Graph& g, const NiceTreeDecomposition& ntd,
                          DpStats* stats = nullptr);

// Terminal-metric-closure MST expanded to shortest paths: feasible tree of
// cost at most twice the optimum.
SteinerSolution steiner_2approx(const Graph& g, const std::vector<int>& terminals);

// Doubled-MST walk: feasible tour of cost at most twice the optimum.
TourSolution tsp_2approx(const Graph& g);

}  // namespace hwy1
