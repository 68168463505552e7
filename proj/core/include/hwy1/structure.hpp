#pragma once

#include <map>
#include <string>
#include <vector>

#include "hwy1/dist.hpp"
#include "hwy1/graph.hpp"
#include "hwy1/spcover.hpp"

namespace hwy1 {

// Laminar family of level components: level i partitions the vertices
// into connected components of G_{<=2*r_i} with r_i = (w_min/3) * 2^i.
// Level 0 components are singletons, the top level is a single component.
// Per level the certificate's hubs are re-keyed by component.
class LevelHierarchy {
  public:
    Rat base_unit;                        // w_min / 3
    int num_levels = 0;                   // levels 0 .. num_levels-1
    std::vector<std::vector<int>> comp;   // comp[i][v] = smallest id in v's level-i component
    std::vector<std::map<int, int>> hubs; // per level: component rep -> hub vertex

    int top_level() const { return num_levels - 1; }
    Rat radius(int level) const { return base_unit * pow2(level); }
    std::vector<int> members(int level, int rep) const;
    // level-(i+1) component rep containing the given level-i component
    int parent_rep(int level, int rep) const;
};

struct InterfacePoint {
    int level;  // hub's level j >= component level
    int hub;
    Int dist;   // dist_C(hub), minimum distance from the hub to the component
};

// Interface points of one component: the only gateways through which
// edges longer than the component's scale can leave it. At most one point
// per level on certified inputs (asserted).
struct InterfaceSet {
    int comp_level;
    int comp_rep;
    std::vector<InterfacePoint> points;  // ascending by level
};

// Requires g connected, metric-preprocessed and certified. Levels capped
// at 10^6 (aspect ratio would have to be astronomically large).
LevelHierarchy build_hierarchy(const Graph& g, const DistMatrix& d, const Hd1Certificate& cert);

InterfaceSet interface_points(const Graph& g, const DistMatrix& d, const LevelHierarchy& h,
                              int level, int comp_rep);

// (r, 3r)-net: one representative (smallest id) per component of G_{<=r}.
// Pairwise separation > r holds unconditionally; the 3r coverage radius is
// only guaranteed on certified hd-1 inputs and is reported, not enforced.
struct Net {
    Rat r;
    std::vector<int> points;  // ascending original vertex ids
    std::vector<int> eta;     // vertex -> its component's net point
    bool coverage_ok = true;  // dist(v, eta(v)) <= 3r for all v
};

Net compute_net(const Graph& g, const DistMatrix& d, const Rat& r);

// Graph on the net points: one edge {eta(u), eta(v)} per crossing edge of
// g, weighted by the g-distance between the two representatives.
// Terminals map through eta.
struct Quotient {
    Graph graph;                 // vertices 0..|N|-1
    std::vector<int> to_index;   // original vertex -> quotient index of its net point
    std::vector<int> originals;  // quotient index -> original vertex id
};

Quotient quotient_graph(const Graph& g, const DistMatrix& d, const Net& net);

std::string hierarchy_to_json(const Graph& g, const DistMatrix& d, const LevelHierarchy& h);
std::string net_to_json(const Net& net);

}  // namespace hwy1
