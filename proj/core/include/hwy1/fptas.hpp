#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hwy1/dpsolvers.hpp"
#include "hwy1/spcover.hpp"

namespace hwy1 {

// Trace of one approximation-pipeline run, all values exact.
struct FptasReport {
    Rat eps_requested;
    Rat eps_internal;
    Int bootstrap_cost;     // c
    Rat net_radius;         // eps_internal * c / (3n)
    int trimmed_n = 0;      // vertices surviving the trim (Steiner only)
    int quotient_size = 0;  // |N|
    int quotient_edges = 0;
    int projected_width = -1;
    Int quotient_opt;       // exact optimum on the quotient graph
    Int final_cost;
    // step counters, the polynomiality proxy
    long scales_checked = 0;
    int levels = 0;
    int decomposition_nodes = 0;
    int nice_nodes = 0;
    long dp_states = 0;
    long dp_transitions = 0;
    bool net_was_identity = false;

    std::string to_json() const;
};

struct FptasOptions {
    // Aborts with a diagnostic instead of running an oversized DP; guards
    // against inputs mislabelled as highway dimension 1.
    int max_projected_width = 24;
};

// Keeps exactly the vertices within distance c of some terminal. The
// optimum is unaffected whenever c is the cost of a feasible solution.
struct TrimResult {
    Graph graph;
    std::vector<int> originals;  // trimmed id -> original id
    std::vector<int> new_ids;    // original id -> trimmed id or -1
};
TrimResult trim_steiner(const Graph& g, const DistMatrix& d, const Int& c);

// (1+eps)-approximation pipelines: bootstrap 2-approximation, trim
// (Steiner only), net at radius eps'*c/(3n), quotient, decompose, exact
// solve on the quotient, lift back. Inputs must certify as highway
// dimension 1; eps must be positive.
std::pair<SteinerSolution, FptasReport> fptas_steiner(const Graph& g, const Rat& eps,
                                                      const FptasOptions& opt = {});
std::pair<TourSolution, FptasReport> fptas_tsp(const Graph& g, const Rat& eps,
                                               const FptasOptions& opt = {});

}  // namespace hwy1
