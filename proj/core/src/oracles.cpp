#include "hwy1/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "hwy1/errors.hpp"
#include "hwy1/spcover.hpp"

namespace hwy1 {

int oracle_cap(int default_cap) {
    if (const char* env = std::getenv("HWY1_MAX_ORACLE_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return default_cap;
}

namespace {

// Costs fit native integers on every instance the oracles are rated for;
// fall back to exact big integers otherwise.
bool fits_u64(const DistMatrix& d) {
    if (d.n() < 2) return true;
    Int bound = d.max_dist() * (d.n() + 2);
    return bound < Int("4611686018427387904");  // 2^62
}

std::vector<int> expand_walk(const Graph& g, const DistMatrix& d,
                             const std::vector<int>& stops) {
    std::vector<int> walk;
    for (std::size_t i = 0; i < stops.size(); ++i) {
        int a = stops[i];
        int b = stops[(i + 1) % stops.size()];
        auto seg = shortest_path(g, d, a, b);
        walk.insert(walk.end(), seg.begin(), seg.end() - 1);
    }
    return walk;
}

TourSolution degenerate_tour(const Graph& g, const DistMatrix& d) {
    if (g.n() == 1) return {{0}, Int(0)};
    return {{0, 1}, d.dist(0, 1) * 2};
}

// Flat bitmask Held-Karp over the metric closure. Vertex 0 is the fixed
// start; bit i stands for vertex i+1.
template <typename C>
TourSolution held_karp_impl(const Graph& g, const DistMatrix& d,
                            C (*to_cost)(const Int&)) {
    const int n = g.n();
    const int k = n - 1;
    const C inf = std::numeric_limits<C>::max();
    auto dist = [&](int a, int b) { return to_cost(d.dist(a, b)); };

    const std::size_t full = std::size_t(1) << k;
    std::vector<C> dp(full * k, inf);
    std::vector<std::int8_t> par(full * k, -1);
    for (int j = 0; j < k; ++j) dp[(std::size_t(1) << j) * k + j] = dist(0, j + 1);
    for (std::size_t mask = 1; mask < full; ++mask) {
        for (int j = 0; j < k; ++j) {
            if (!(mask >> j & 1)) continue;
            const C cur = dp[mask * k + j];
            if (cur == inf) continue;
            for (int t = 0; t < k; ++t) {
                if (mask >> t & 1) continue;
                const std::size_t nm = mask | (std::size_t(1) << t);
                C cand = cur + dist(j + 1, t + 1);
                if (cand < dp[nm * k + t]) {
                    dp[nm * k + t] = cand;
                    par[nm * k + t] = static_cast<std::int8_t>(j);
                }
            }
        }
    }
    C best = inf;
    int best_j = -1;
    for (int j = 0; j < k; ++j) {
        if (dp[(full - 1) * k + j] == inf) continue;
        C cand = dp[(full - 1) * k + j] + dist(j + 1, 0);
        if (cand < best || (cand == best && j + 1 < best_j + 1)) {
            best = cand;
            best_j = j;
        }
    }
    require(best_j >= 0, ErrorKind::infeasible, "no tour found");
    std::vector<int> stops;
    std::size_t mask = full - 1;
    int j = best_j;
    while (j >= 0) {
        stops.push_back(j + 1);
        int pj = par[mask * k + j];
        mask ^= std::size_t(1) << j;
        j = pj;
    }
    stops.push_back(0);
    std::reverse(stops.begin(), stops.end());
    TourSolution sol;
    sol.walk = expand_walk(g, d, stops);
    sol.cost = walk_cost(d, sol.walk);
    return sol;
}

std::uint64_t cost_u64(const Int& v) { return v.get_ui(); }
Int cost_int(const Int& v) { return v; }

}  // namespace

TourSolution held_karp_tsp(const Graph& g) {
    const int cap = oracle_cap(18);
    require(g.n() <= cap, ErrorKind::cap,
            "held_karp_tsp capped at n <= " + std::to_string(cap));
    DistMatrix d = all_pairs(g);
    if (g.n() <= 2) return degenerate_tour(g, d);
    if (fits_u64(d)) return held_karp_impl<std::uint64_t>(g, d, cost_u64);
    return held_karp_impl<Int>(g, d, cost_int);
}

namespace {

// Binomial ranking for the layered Held-Karp variant.
struct Binom {
    std::vector<std::vector<std::uint64_t>> c;
    explicit Binom(int n) : c(n + 1, std::vector<std::uint64_t>(n + 1, 0)) {
        for (int i = 0; i <= n; ++i) {
            c[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
        }
    }
    // colex rank of a k-bit subset
    std::uint64_t rank(std::uint32_t mask) const {
        std::uint64_t r = 0;
        int t = 1;
        while (mask) {
            int i = __builtin_ctz(mask);
            mask &= mask - 1;
            if (i >= t) r += c[i][t];
            ++t;
        }
        return r;
    }
};

}  // namespace

Int held_karp_cost(const Graph& g) {
    const int n = g.n();
    if (n <= oracle_cap(18)) return held_karp_tsp(g).cost;
    require(n <= 24, ErrorKind::cap, "held_karp_cost capped at n <= 24");
    DistMatrix dm = all_pairs(g);
    require(dm.max_dist() * (n + 2) < Int("4294967295"), ErrorKind::cap,
            "costs too large for the layered Held-Karp variant");
    const int k = n - 1;
    Binom binom(k + 1);
    const std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) dist[static_cast<std::size_t>(a) * n + b] =
                static_cast<std::uint32_t>(dm.dist(a, b).get_ui());

    // dp over subsets of {1..n-1} layered by size; layer s is indexed by
    // colex rank * k + last
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(k), inf);
    for (int j = 0; j < k; ++j) cur[binom.rank(1u << j) * k + j] = dist[j + 1];
    std::uint32_t best = inf;
    for (int s = 1; s <= k; ++s) {
        if (s == k) {
            std::uint32_t mask = (k == 32) ? 0xffffffffu : ((1u << k) - 1);
            std::uint64_t r = binom.rank(mask);
            for (int j = 0; j < k; ++j) {
                std::uint32_t v = cur[r * k + j];
                if (v == inf) continue;
                std::uint32_t cand = v + dist[static_cast<std::size_t>(j + 1) * n];
                best = std::min(best, cand);
            }
            break;
        }
        std::vector<std::uint32_t> nxt(binom.c[k][s + 1] * k, inf);
        // enumerate size-s subsets in colex (= numeric) order
        std::uint32_t mask = (1u << s) - 1;
        std::uint64_t r = 0;
        const std::uint32_t limit = 1u << k;
        while (mask < limit) {
            const std::size_t base = r * k;
            for (int j = 0; j < k; ++j) {
                if (!(mask >> j & 1)) continue;
                std::uint32_t v = cur[base + j];
                if (v == inf) continue;
                for (int t = 0; t < k; ++t) {
                    if (mask >> t & 1) continue;
                    std::uint64_t nr = binom.rank(mask | (1u << t));
                    std::uint32_t cand = v + dist[static_cast<std::size_t>(j + 1) * n + t + 1];
                    std::uint32_t& slot = nxt[nr * k + t];
                    if (cand < slot) slot = cand;
                }
            }
            // Gosper's hack
            std::uint32_t c = mask & -mask, rr = mask + c;
            mask = (((rr ^ mask) >> 2) / c) | rr;
            ++r;
        }
        cur = std::move(nxt);
    }
    require(best != inf, ErrorKind::infeasible, "no tour found");
    return Int(static_cast<unsigned long>(best));
}

namespace {

// Exact branch-and-bound over the metric closure, with a one-tree-free
// MST lower bound. Used where the bitmask table no longer fits in memory;
// cross-checked against Held-Karp on every overlapping size in the tests.
template <typename C>
TourSolution tsp_bnb_impl(const Graph& g, const DistMatrix& d, C (*to_cost)(const Int&)) {
    const int n = g.n();
    std::vector<C> dist(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) dist[static_cast<std::size_t>(a) * n + b] = to_cost(d.dist(a, b));
    auto D = [&](int a, int b) { return dist[static_cast<std::size_t>(a) * n + b]; };

    // greedy tour as the initial upper bound
    std::vector<int> greedy{0};
    {
        std::vector<char> used(n, 0);
        used[0] = 1;
        for (int step = 1; step < n; ++step) {
            int cur = greedy.back(), pick = -1;
            for (int v = 0; v < n; ++v)
                if (!used[v] && (pick < 0 || D(cur, v) < D(cur, pick))) pick = v;
            used[pick] = 1;
            greedy.push_back(pick);
        }
    }
    C best = 0;
    for (int i = 0; i < n; ++i) best += D(greedy[i], greedy[(i + 1) % n]);
    std::vector<int> best_stops = greedy;

    // MST over {0, current} union unvisited, Prim
    auto lower_bound = [&](std::uint32_t unvisited, int cur) {
        C total = 0;
        std::vector<int> nodes{0, cur};
        for (int v = 1; v < n; ++v)
            if (unvisited >> v & 1) nodes.push_back(v);
        const int m = static_cast<int>(nodes.size());
        std::vector<C> key(m, std::numeric_limits<C>::max());
        std::vector<char> in(m, 0);
        key[0] = 0;
        for (int it = 0; it < m; ++it) {
            int u = -1;
            for (int i = 0; i < m; ++i)
                if (!in[i] && (u < 0 || key[i] < key[u])) u = i;
            in[u] = 1;
            total += key[u];
            for (int i = 0; i < m; ++i)
                if (!in[i] && D(nodes[u], nodes[i]) < key[i]) key[i] = D(nodes[u], nodes[i]);
        }
        return total;
    };

    std::vector<int> stack_path{0};
    std::function<void(std::uint32_t, C)> dfs = [&](std::uint32_t unvisited, C cost) {
        const int cur = stack_path.back();
        if (!unvisited) {
            C total = cost + D(cur, 0);
            if (total < best) {
                best = total;
                best_stops = stack_path;
            }
            return;
        }
        if (cost + lower_bound(unvisited, cur) >= best) return;
        std::vector<int> cands;
        for (int v = 1; v < n; ++v)
            if (unvisited >> v & 1) cands.push_back(v);
        std::sort(cands.begin(), cands.end(), [&](int a, int b) {
            if (D(cur, a) != D(cur, b)) return D(cur, a) < D(cur, b);
            return a < b;
        });
        for (int v : cands) {
            stack_path.push_back(v);
            dfs(unvisited & ~(1u << v), cost + D(cur, v));
            stack_path.pop_back();
        }
    };
    std::uint32_t all = 0;
    for (int v = 1; v < n; ++v) all |= 1u << v;
    dfs(all, 0);

    TourSolution sol;
    sol.walk = expand_walk(g, d, best_stops);
    sol.cost = walk_cost(d, sol.walk);
    return sol;
}

}  // namespace

SteinerSolution dreyfus_wagner_steiner(const Graph& g, std::vector<int> terminals) {
    if (terminals.empty()) terminals = g.terminals();
    require(!terminals.empty(), ErrorKind::input, "no terminals");
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    const int cap = oracle_cap(12);
    require(static_cast<int>(terminals.size()) <= cap, ErrorKind::cap,
            "dreyfus_wagner capped at |R| <= " + std::to_string(cap));
    DistMatrix d = all_pairs(g, /*allow_partial=*/true);
    const int n = g.n();
    const int k = static_cast<int>(terminals.size());
    for (int i = 1; i < k; ++i)
        require(d.connected(terminals[0], terminals[i]), ErrorKind::infeasible,
                "unreachable terminal");
    if (k == 1) return {{}, Int(0)};

    const std::size_t full = std::size_t(1) << k;
    const Int inf(-1);
    // dp[S][v]: cheapest tree connecting terminal subset S and vertex v
    std::vector<std::vector<Int>> dp(full, std::vector<Int>(n, inf));
    struct Back {
        enum class Kind { leaf, grow, merge } kind = Kind::leaf;
        int grow_from = -1;
        std::size_t sub = 0;
    };
    std::vector<std::vector<Back>> bp(full, std::vector<Back>(n));
    auto better = [](const Int& cand, const Int& cur) { return cur < 0 || cand < cur; };

    for (int i = 0; i < k; ++i) {
        for (int v = 0; v < n; ++v)
            if (d.connected(terminals[i], v))
                dp[std::size_t(1) << i][v] = d.dist(terminals[i], v);
    }
    for (std::size_t S = 1; S < full; ++S) {
        if (!(S & (S - 1))) continue;  // singletons done
        auto& row = dp[S];
        // merge two complementary subtrees at v
        for (std::size_t T = (S - 1) & S; T; T = (T - 1) & S) {
            if (T > (S ^ T)) continue;
            const auto& a = dp[T];
            const auto& b = dp[S ^ T];
            for (int v = 0; v < n; ++v) {
                if (a[v] < 0 || b[v] < 0) continue;
                Int cand = a[v] + b[v];
                if (better(cand, row[v])) {
                    row[v] = cand;
                    bp[S][v] = {Back::Kind::merge, -1, T};
                }
            }
        }
        // one metric relaxation closes the recurrence on a full matrix
        for (int v = 0; v < n; ++v) {
            for (int u = 0; u < n; ++u) {
                if (u == v || row[u] < 0 || !d.connected(u, v)) continue;
                Int cand = row[u] + d.dist(u, v);
                if (better(cand, row[v])) {
                    row[v] = cand;
                    bp[S][v] = {Back::Kind::grow, u, 0};
                }
            }
        }
    }

    const int t0 = terminals[0];
    require(dp[full - 1][t0] >= 0, ErrorKind::infeasible, "terminals not connectable");

    // collect edges; overlaps are harmless because a spanning tree of the
    // union can only be cheaper, and the optimum is a lower bound
    std::set<std::pair<int, int>> collected;
    auto add_path = [&](int a, int b) {
        auto seq = shortest_path(g, d, a, b);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            int u = seq[i], v = seq[i + 1];
            if (u > v) std::swap(u, v);
            collected.emplace(u, v);
        }
    };
    std::function<void(std::size_t, int)> rec = [&](std::size_t S, int v) {
        if (!(S & (S - 1))) {
            int t = terminals[__builtin_ctzll(S)];
            if (t != v) add_path(t, v);
            return;
        }
        const Back& b = bp[S][v];
        if (b.kind == Back::Kind::grow) {
            add_path(b.grow_from, v);
            rec(S, b.grow_from);
        } else {
            rec(b.sub, v);
            rec(S ^ b.sub, v);
        }
    };
    rec(full - 1, t0);

    // spanning tree of the collected subgraph, then prune non-terminal leaves
    std::vector<std::pair<int, int>> edges(collected.begin(), collected.end());
    std::sort(edges.begin(), edges.end());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::pair<int, int>> tree;
    for (auto [u, v] : edges) {
        if (find(u) != find(v)) {
            parent[find(u)] = find(v);
            tree.emplace_back(u, v);
        }
    }
    std::set<int> term_set(terminals.begin(), terminals.end());
    bool pruned = true;
    while (pruned) {
        pruned = false;
        std::map<int, int> degree;
        for (auto [u, v] : tree) {
            ++degree[u];
            ++degree[v];
        }
        std::vector<std::pair<int, int>> kept;
        for (auto [u, v] : tree) {
            bool leaf_u = degree[u] == 1 && !term_set.count(u);
            bool leaf_v = degree[v] == 1 && !term_set.count(v);
            if (leaf_u || leaf_v) pruned = true;
            else kept.emplace_back(u, v);
        }
        tree = std::move(kept);
    }

    SteinerSolution sol;
    sol.edges = tree;
    sol.cost = edges_cost(g, tree);
    require(sol.cost == dp[full - 1][t0], ErrorKind::internal,
            "reconstructed tree cost mismatch");
    require(is_steiner_tree(g, terminals, sol.edges), ErrorKind::internal,
            "reconstruction is not a Steiner tree");
    return sol;
}

namespace {

struct PathUniverse {
    // all shortest paths of all covered pairs, lexicographically sorted
    std::vector<std::vector<int>> seqs;
    std::vector<std::uint32_t> masks;
};

PathUniverse enumerate_paths(const Graph& g, const DistMatrix& d, const Rat& r) {
    PathUniverse uni;
    for (const auto& [u, w] : covered_pairs(d, r)) {
        std::vector<int> seq{u};
        std::function<void(int)> dfs = [&](int cur) {
            if (cur == w) {
                uni.seqs.push_back(seq);
                return;
            }
            for (const auto& [x, wt] : g.adj(cur)) {
                if (!d.connected(x, w)) continue;
                if (d.dist(u, cur) + wt + d.dist(x, w) == d.dist(u, w) &&
                    d.dist(u, cur) + wt == d.dist(u, x)) {
                    seq.push_back(x);
                    dfs(x);
                    seq.pop_back();
                }
            }
        };
        dfs(u);
        require(uni.seqs.size() <= 200000, ErrorKind::cap, "too many shortest paths");
    }
    std::sort(uni.seqs.begin(), uni.seqs.end());
    uni.masks.reserve(uni.seqs.size());
    for (const auto& s : uni.seqs) {
        std::uint32_t m = 0;
        for (int v : s) m |= 1u << v;
        uni.masks.push_back(m);
    }
    return uni;
}

bool sparse_cover_exists(const PathUniverse& uni, const std::vector<std::uint32_t>& balls,
                         int h) {
    std::set<std::uint32_t> visited;
    std::function<bool(std::uint32_t)> search = [&](std::uint32_t hubs) {
        if (!visited.insert(hubs).second) return false;
        int open = -1;
        for (std::size_t i = 0; i < uni.masks.size(); ++i)
            if (!(uni.masks[i] & hubs)) {
                open = static_cast<int>(i);
                break;
            }
        if (open < 0) return true;
        for (int v : uni.seqs[open]) {
            std::uint32_t with = hubs | (1u << v);
            bool ok = true;
            for (std::uint32_t ball : balls)
                if ((ball >> v & 1) && __builtin_popcount(ball & with) > h) {
                    ok = false;
                    break;
                }
            if (ok && search(with)) return true;
        }
        return false;
    };
    return search(0);
}

}  // namespace

std::optional<int> exact_highway_dimension(const Graph& g, int h_max) {
    const int cap = oracle_cap(12);
    require(g.n() <= cap, ErrorKind::cap,
            "exact_highway_dimension capped at n <= " + std::to_string(cap));
    require(g.n() <= 31, ErrorKind::cap, "bitmask search limited to n <= 31");
    DistMatrix d = all_pairs(g, /*allow_partial=*/true);
    int hd = 0;
    for (const Rat& r : critical_scales(d)) {
        auto uni = enumerate_paths(g, d, r);
        if (uni.seqs.empty()) continue;
        std::vector<std::uint32_t> balls(g.n(), 0);
        const Rat reach = r * 2;
        for (int v = 0; v < g.n(); ++v)
            for (int x = 0; x < g.n(); ++x)
                if (v == x || (d.connected(v, x) && Rat(d.dist(v, x)) <= reach))
                    balls[v] |= 1u << x;
        int h = hd > 0 ? hd : 1;  // the answer is monotone across scales
        // check whether the current bound already suffices at this scale
        while (h <= h_max && !sparse_cover_exists(uni, balls, h)) ++h;
        if (h > h_max) return std::nullopt;
        hd = std::max(hd, h);
    }
    return hd;
}

Graph gen_hd1_instance(const GeneratorParams& p) {
    require(p.depth >= 1 && p.max_branching >= 2 && p.growth >= 2 && p.base_weight >= 1,
            ErrorKind::input, "bad generator parameters");
    for (int attempt = 0; attempt < p.max_attempts; ++attempt) {
        SplitMix64 rng(p.seed + 1000003ull * static_cast<std::uint64_t>(attempt));
        std::vector<Edge> edges;
        struct Item {
            int id;
            int depth;
        };
        std::vector<Item> queue{{0, 0}};
        int next_id = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const Item it = queue[qi];
            if (it.depth == p.depth) continue;
            const int kids = static_cast<int>(rng.range(2, p.max_branching));
            Int scale(p.base_weight);
            for (int t = 0; t < p.depth - it.depth - 1; ++t) scale *= p.growth;
            for (int c = 0; c < kids; ++c) {
                const int id = next_id++;
                Int w = scale * static_cast<long>(rng.range(p.base_weight,
                                                            2 * p.base_weight - 1));
                edges.push_back({it.id, id, std::move(w)});
                queue.push_back({id, it.depth + 1});
            }
        }
        Graph g(next_id, std::move(edges));
        Graph gm = metric_preprocess(g);
        if (std::holds_alternative<Hd1Certificate>(verify_hd1(gm))) return g;
    }
    fail_cap("gen_hd1_instance: retries exhausted, parameters too aggressive");
}

SatResult sat_bruteforce(const CnfFormula& phi) {
    require(phi.num_vars <= 20, ErrorKind::cap, "sat_bruteforce capped at 20 variables");
    const std::size_t full = std::size_t(1) << phi.num_vars;
    for (std::size_t mask = 0; mask < full; ++mask) {
        std::vector<bool> assignment(phi.num_vars);
        for (int i = 0; i < phi.num_vars; ++i) assignment[i] = (mask >> i) & 1;
        if (phi.eval(assignment)) return {true, assignment};
    }
    return {false, {}};
}

// exposed for the acceptance suite through a plain declaration
TourSolution exact_tsp_branch_bound(const Graph& g);

TourSolution exact_tsp_branch_bound(const Graph& g) {
    require(g.n() <= 30, ErrorKind::cap, "branch and bound capped at n <= 30");
    DistMatrix d = all_pairs(g);
    if (g.n() <= 2) return degenerate_tour(g, d);
    if (fits_u64(d)) return tsp_bnb_impl<std::uint64_t>(g, d, cost_u64);
    return tsp_bnb_impl<Int>(g, d, cost_int);
}

}  // namespace hwy1
