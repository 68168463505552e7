#pragma once

#include <string>
#include <vector>

#include "hwy1/structure.hpp"

namespace hwy1 {

// Rooted tree of bags. Instances produced by build_decomposition carry
// per-node metadata (component level, per-entry hub level) used by the
// projection step; hand-built instances may leave it empty.
struct TreeDecomposition {
    struct Node {
        int parent = -1;
        std::vector<int> children;
        std::vector<int> bag;           // sorted vertex ids
        int level = -1;                 // component level, -1 when unknown
        std::vector<int> entry_levels;  // parallel to bag: hub level, -1 for the
                                        // level-0 component's own vertex
    };
    std::vector<Node> nodes;
    int root = -1;
    Rat base_unit;  // level radii of the building hierarchy, 0 when unknown
    bool has_levels = false;

    int width() const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks the three tree-decomposition properties (bags cover V, every
// edge inside some bag, per-vertex bag nodes induce a connected subtree)
// plus tree well-formedness.
ValidationReport validate_decomposition(const Graph& g, const TreeDecomposition& td);

// One node per level component, child linked to the enclosing component
// one level up. Bags are the interface points; level-0 bags additionally
// hold their own vertex. Nodes whose bag is contained in the parent's are
// contracted away. Width is at most 1 + ceil(log2(aspect ratio)) on
// certified inputs.
TreeDecomposition build_decomposition(const Graph& g, const DistMatrix& d,
                                      const LevelHierarchy& h);

// Replaces every bag X by {eta(v) : v in X}, expressed in quotient vertex
// indices; the result is a valid decomposition of q.graph. When the input
// carries level metadata, asserts that all hubs below the net radius
// collapse to a single net point per bag.
TreeDecomposition project_decomposition(const TreeDecomposition& td, const Net& net,
                                        const Quotient& q);

// Nice form: every node is a leaf, introduce(v), forget(v) or join; root
// and leaves have empty bags; joins have two children with identical bags.
// Width is preserved.
struct NiceTreeDecomposition {
    enum class Kind { leaf, introduce, forget, join };
    struct Node {
        Kind kind = Kind::leaf;
        int vertex = -1;  // introduced / forgotten vertex
        std::vector<int> bag;
        int parent = -1;
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    int root = -1;

    int width() const;
};

NiceTreeDecomposition make_nice(const TreeDecomposition& td);

// Structural check of the nice form (bag deltas match node kinds) plus
// the underlying decomposition properties.
ValidationReport validate_nice(const Graph& g, const NiceTreeDecomposition& ntd);

std::string decomposition_to_json(const TreeDecomposition& td);

}  // namespace hwy1
