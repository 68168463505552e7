#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hwy1/dist.hpp"
#include "hwy1/graph.hpp"
#include "hwy1/numeric.hpp"

namespace hwy1 {

// Hitting set for all shortest paths of length in (scale, 2*scale].
struct PathCover {
    Rat scale;
    std::vector<int> hubs;
};

// Hub assignment for one scale: at most one hub per component of
// G_{<=2r}, keyed by the component's smallest vertex id. Components
// without a covered pair carry no entry.
struct ScaleCover {
    Rat r;
    std::map<int, int> hubs;
};

// A component of G_{<=2r} whose covered pairs admit no common vertex.
// Re-checked independently, this certifies that the graph's highway
// dimension is at least 2: under highway dimension 1 each component holds
// at most one hub, and that hub would have to lie on every listed path.
struct Hd1Witness {
    Rat scale;
    std::vector<int> component;
    std::vector<std::pair<int, int>> pairs;
};

// Per-scale hub assignments witnessing locally 1-sparse shortest-path
// covers at every critical scale (and by interval constancy, at every
// positive scale).
struct Hd1Certificate {
    std::vector<ScaleCover> scales;  // ascending by r
    Int min_weight;

    // Hub map valid for an arbitrary scale r > 0: the entry of the
    // enclosing critical interval, or an empty map below the first one.
    const std::map<int, int>& hubs_at(const Rat& r) const;
};

using Hd1Result = std::variant<Hd1Certificate, Hd1Witness>;

// For each distinct positive shortest-path length L emits L/2 and L,
// deduplicated, ascending. The covered-pair set is constant on the
// half-open intervals between consecutive values, so these representatives
// cover all positive scales.
std::vector<Rat> critical_scales(const DistMatrix& d);

// Unordered pairs (u < w) with dist in (r, 2r].
std::vector<std::pair<int, int>> covered_pairs(const DistMatrix& d, const Rat& r);

// Locally 1-sparse cover attempt for one scale. For each component C of
// G_{<=2r} with covered pairs, H_C = vertices lying on every shortest
// u-w path of every covered pair in C; the smallest-id member of H_C
// becomes the hub. An empty H_C is a structured negative result, not an
// error. Requires g metric-preprocessed.
std::variant<ScaleCover, Hd1Witness> spc1_for_scale(const Graph& g, const DistMatrix& d,
                                                    const Rat& r);

// Runs spc1_for_scale over all critical scales. Requires g
// metric-preprocessed and connected.
Hd1Result verify_hd1(const Graph& g);
Hd1Result verify_hd1(const Graph& g, const DistMatrix& d);

// Definition check: hubs hit every shortest path of length in (r, 2r]
// (no hub-free shortest path survives, counted over the shortest-path
// DAG), and every ball B_v(2r) holds at most h hubs.
bool verify_spc(const Graph& g, const DistMatrix& d, const Rat& r,
                const std::vector<int>& hubs, int h);

std::string certificate_to_json(const Hd1Certificate& cert);
std::string witness_to_json(const Hd1Witness& w);

}  // namespace hwy1
