#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hwy1/reductions.hpp"
#include "hwy1/solutions.hpp"

namespace hwy1 {

// Brute-force ground truth, implemented independently of the
// decomposition-based solvers. Size caps can be raised through the
// HWY1_MAX_ORACLE_N environment variable.

// Optimal closed walk: Hamiltonian-cycle DP over the metric closure,
// expanded back into shortest paths of g. Cap n <= 18.
TourSolution held_karp_tsp(const Graph& g);

// Same recurrence, cost only, layered by subset size to fit in memory.
// Cap n <= 24.
Int held_karp_cost(const Graph& g);

// Optimal Steiner tree by terminal-subset DP. Cap |R| <= 12. Uses
// g.terminals() when terminals is empty.
SteinerSolution dreyfus_wagner_steiner(const Graph& g, std::vector<int> terminals = {});

// Smallest h such that every critical scale admits a locally h-sparse
// shortest-path cover, by branch and bound over hub sets (branching on the
// lexicographically least uncovered path). nullopt when the answer
// exceeds h_max. Cap n <= 12.
std::optional<int> exact_highway_dimension(const Graph& g, int h_max);

// Recursive hub-and-spoke generator: spoke weights shrink geometrically
// with depth so that child clusters stay well inside parent scales. The
// output is regenerated until verify_hd1 certifies it; certification, not
// construction, is the contract.
struct GeneratorParams {
    std::uint64_t seed = 1;
    int depth = 2;
    int max_branching = 3;  // children per internal node drawn from [2, max_branching]
    int base_weight = 3;    // deepest spokes drawn from [base_weight, 2*base_weight - 1]
    int growth = 8;
    int max_attempts = 64;
};

Graph gen_hd1_instance(const GeneratorParams& p);

struct SatResult {
    bool sat = false;
    std::vector<bool> model;
};

// Exhaustive SAT over all assignments, k <= 20.
SatResult sat_bruteforce(const CnfFormula& phi);

int oracle_cap(int default_cap);  // default or HWY1_MAX_ORACLE_N override

}  // namespace hwy1
