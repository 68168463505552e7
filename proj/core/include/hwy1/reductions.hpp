#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "hwy1/graph.hpp"
#include "hwy1/solutions.hpp"

namespace hwy1 {

// CNF with DIMACS-style literals: +v / -v, variables 1..num_vars.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    bool eval(const std::vector<bool>& assignment) const;
};

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_string(const std::string& text);
CnfFormula load_dimacs(const std::string& path);

// SAT -> Steiner Tree instance. Per variable a unit-weight path
// t_x - u_x - f_x with terminal u_x; a root terminal joined to every t_x
// and f_x by edges of length 11; per clause i a terminal joined to the
// gadget vertex of each literal by edges of length 11^(i+1). The formula
// is satisfiable iff the optimal Steiner tree costs at most the threshold
// 12k + sum_i 11^(i+1), with equality in the satisfiable case.
struct StpReduction {
    Graph graph;
    CnfFormula formula;
    Int threshold;
    int root = 0;
    std::vector<int> clause_vertex;            // clause i (0-based) -> v_{i+1}
    std::vector<int> t_vertex, u_vertex, f_vertex;  // per variable, 0-based
};

StpReduction gen_stp(const CnfFormula& phi);

struct StpDecision {
    bool sat = false;
    std::vector<bool> assignment;  // meaningful when sat
};

// exact must be an optimal Steiner tree of red.graph. Extracts and
// verifies the encoded assignment in the satisfiable case.
StpDecision decide_stp(const StpReduction& red, const SteinerSolution& exact);

// Each literal appears at most twice and each variable at most three
// times.
bool validate_33sat(const CnfFormula& phi);

// (<=3,3)-SAT -> TSP instance with the safe-cost ladder
// a < b < c_1 < ... < c_{n-1} < d < e < f_1 < ... < f_m, every cost being
// exactly twice the total cost of all edges added before it. The formula
// is satisfiable iff the optimal tour costs at most W.
struct TspReduction {
    Graph graph;
    CnfFormula formula;
    Int W;
    Int cost_a, cost_b, cost_d, cost_e;
    std::vector<Int> cost_c;  // c_1..c_{n-1}
    std::vector<Int> cost_f;  // f_1..f_m
    std::vector<std::array<int, 4>> var_vertex;           // v_{i1..i4}, 0-based variable
    std::vector<std::array<int, 3>> w_vertex, wp_vertex;  // w_{jk}, w'_{jk}
    struct Attach {
        int var = -1;       // 0-based variable of the literal
        int delta = 0;      // 0 first occurrence of the literal, 2 second
        int w_to = -1;      // variable-gadget endpoint of the w_{jk} edge
        int wp_to = -1;     // endpoint of the w'_{jk} edge
    };
    std::vector<std::vector<Attach>> attach;  // [clause][literal position]
    int hd_bound = 0;  // from the safe-cost edge-addition bound
};

TspReduction gen_tsp(const CnfFormula& phi);

// The explicit Eulerian tour built from a satisfying assignment: clause
// cycles, doubled chain edges, oriented variable cycles, and per clause a
// reconnection through the satisfying literal. Its cost is exactly W.
TourSolution constructive_tour(const TspReduction& red, const std::vector<bool>& assignment);

struct TspDecision {
    bool sat = false;
    std::vector<bool> assignment;
    std::vector<int> undetermined;  // 1-based variables whose orientation was ambiguous
};

// exact must be an optimal tour of red.graph. Decodes variable values from
// the orientation of the in-gadget traversals, completing ambiguous
// variables by search, and verifies against the formula.
TspDecision decide_tsp(const TspReduction& red, const TourSolution& exact);

// Safe-cost edge addition: every new cost must be at least twice the sum
// of all existing edge costs; then the highway dimension of the grown
// graph is bounded by max(known_hd, number of new edges).
struct SafetyCheck {
    int bound = 0;
    Int min_new_cost;
    Int double_existing_sum;
};
SafetyCheck edge_addition_hd_bound(const Graph& g, int known_hd,
                                   const std::vector<Edge>& new_edges);

std::string stp_sidecar_json(const StpReduction& red);
std::string tsp_sidecar_json(const TspReduction& red);

}  // namespace hwy1
