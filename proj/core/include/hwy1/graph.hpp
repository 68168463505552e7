#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hwy1/numeric.hpp"

namespace hwy1 {

struct Edge {
    int u;
    int v;
    Int w;  // strictly positive, already scaled to an integer
};

// Simple undirected graph with exact positive integer weights and an
// optional terminal set. Vertex ids are 0..n-1. Immutable after
// construction; all operations on it are pure.
//
// Rational weights in the text format are scaled to a common denominator
// at parse time; `unit_den` remembers that denominator so costs can be
// reported in the original units.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges, std::vector<int> terminals = {},
          Int unit_den = 1);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& terminals() const { return terminals_; }
    bool is_terminal(int v) const;
    const Int& unit_den() const { return unit_den_; }

    // Neighbours of u as (vertex, weight), sorted by vertex id.
    const std::vector<std::pair<int, Int>>& adj(int u) const { return adj_[u]; }

    bool has_edge(int u, int v) const;
    Int min_edge_weight() const;  // input error on edgeless graphs
    bool connected() const;

    // Cost in original input units (integer weight / unit_den).
    Rat to_input_units(const Int& scaled) const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, Int>>> adj_;
    std::vector<int> terminals_;
    Int unit_den_ = 1;
};

// Text format, one record per line:
//   p graph <n> <m>
//   e <u> <v> <w>     weight is a decimal integer or fraction p/q
//   t <v>             marks a terminal
//   # comment
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph load_graph(const std::string& path);

std::string serialize_graph(const Graph& g);
void save_graph(const Graph& g, const std::string& path);

}  // namespace hwy1
