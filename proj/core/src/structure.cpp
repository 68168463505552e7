#include "hwy1/structure.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "hwy1/errors.hpp"

namespace hwy1 {

std::vector<int> LevelHierarchy::members(int level, int rep) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(comp[level].size()); ++v)
        if (comp[level][v] == rep) out.push_back(v);
    return out;
}

int LevelHierarchy::parent_rep(int level, int rep) const {
    require(level + 1 < num_levels, ErrorKind::input, "top level has no parent");
    return comp[level + 1][rep];
}

LevelHierarchy build_hierarchy(const Graph& g, const DistMatrix& d,
                               const Hd1Certificate& cert) {
    require(g.n() >= 1, ErrorKind::input, "empty graph");
    require(d.all_connected(), ErrorKind::input, "hierarchy needs a connected graph");
    require(is_metric_preprocessed(g, d), ErrorKind::input,
            "hierarchy needs a metric-preprocessed graph");

    LevelHierarchy h;
    if (g.n() == 1) {
        h.base_unit = Rat(1);
        h.num_levels = 1;
        h.comp = {{0}};
        h.hubs = {{}};
        return h;
    }
    h.base_unit = make_rat(g.min_edge_weight(), Int(3));
    const Rat alpha = aspect_ratio(d);
    const long lmax = 1 + ceil_log2(alpha);
    require(lmax + 1 <= 1'000'000, ErrorKind::cap, "level hierarchy too deep");
    h.num_levels = static_cast<int>(lmax + 1);

    for (int i = 0; i < h.num_levels; ++i) {
        h.comp.push_back(threshold_components(g, h.radius(i) * 2));
        const auto& per_scale = cert.hubs_at(h.radius(i));
        std::map<int, int> keyed;
        for (const auto& [rep, hub] : per_scale) {
            auto [it, fresh] = keyed.emplace(h.comp[i][hub], hub);
            require(fresh, ErrorKind::internal,
                    "two certificate hubs in one level component");
        }
        h.hubs.push_back(std::move(keyed));
    }

    // level-0 components are singletons since 2*r_0 < w_min
    for (int v = 0; v < g.n(); ++v)
        require(h.comp[0][v] == v, ErrorKind::internal, "level-0 component not a singleton");
    const auto& top = h.comp[h.num_levels - 1];
    for (int v = 0; v < g.n(); ++v)
        require(top[v] == top[0], ErrorKind::internal, "top level is not a single component");
    return h;
}

InterfaceSet interface_points(const Graph& g, const DistMatrix& d, const LevelHierarchy& h,
                              int level, int comp_rep) {
    require(level >= 0 && level < h.num_levels, ErrorKind::input, "level out of range");
    const auto mem = h.members(level, comp_rep);
    require(!mem.empty(), ErrorKind::input, "unknown component");
    InterfaceSet out{level, comp_rep, {}};
    for (int j = level; j < h.num_levels; ++j) {
        const Rat reach = h.radius(j) * 2;
        int found = -1;
        Int found_dist(0);
        for (const auto& [rep, hub] : h.hubs[j]) {
            Int dc(-1);
            for (int v : mem) {
                if (hub == v) {
                    dc = 0;
                    break;
                }
                const Int& dv = d.dist(hub, v);
                if (dc < 0 || dv < dc) dc = dv;
            }
            if (Rat(dc) <= reach) {
                require(found < 0, ErrorKind::internal,
                        "interface holds two hubs of one level");
                found = hub;
                found_dist = dc;
            }
        }
        if (found >= 0) out.points.push_back({j, found, found_dist});
    }
    return out;
}

Net compute_net(const Graph& g, const DistMatrix& d, const Rat& r) {
    require(is_metric_preprocessed(g, d), ErrorKind::input,
            "compute_net needs a metric-preprocessed graph");
    Net net;
    net.r = r;
    net.eta = threshold_components(g, r);
    std::set<int> reps(net.eta.begin(), net.eta.end());
    net.points.assign(reps.begin(), reps.end());
    const Rat cover_radius = r * 3;
    for (int v = 0; v < g.n(); ++v) {
        if (v == net.eta[v]) continue;
        // separation between distinct net points is automatic; only the
        // 3r coverage radius depends on the input being hd-1
        if (Rat(d.dist(v, net.eta[v])) > cover_radius) net.coverage_ok = false;
    }
    for (std::size_t i = 0; i < net.points.size(); ++i)
        for (std::size_t j = i + 1; j < net.points.size(); ++j)
            require(Rat(d.dist(net.points[i], net.points[j])) > r, ErrorKind::internal,
                    "net points too close");
    return net;
}

Quotient quotient_graph(const Graph& g, const DistMatrix& d, const Net& net) {
    Quotient q;
    q.originals = net.points;
    std::map<int, int> index;
    for (std::size_t i = 0; i < net.points.size(); ++i)
        index[net.points[i]] = static_cast<int>(i);
    q.to_index.resize(g.n());
    for (int v = 0; v < g.n(); ++v) q.to_index[v] = index.at(net.eta[v]);

    std::set<std::pair<int, int>> pairs;
    for (const auto& e : g.edges()) {
        int a = q.to_index[e.u], b = q.to_index[e.v];
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        pairs.emplace(a, b);
    }
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
        edges.push_back({a, b, d.dist(q.originals[a], q.originals[b])});

    std::vector<int> terminals;
    for (int t : g.terminals()) terminals.push_back(q.to_index[t]);
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());

    q.graph = Graph(static_cast<int>(net.points.size()), std::move(edges),
                    std::move(terminals), g.unit_den());
    return q;
}

std::string hierarchy_to_json(const Graph& g, const DistMatrix& d, const LevelHierarchy& h) {
    nlohmann::json levels = nlohmann::json::array();
    for (int i = 0; i < h.num_levels; ++i) {
        std::map<int, std::vector<int>> groups;
        for (int v = 0; v < g.n(); ++v) groups[h.comp[i][v]].push_back(v);
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& [rep, mem] : groups) {
            nlohmann::json jc{{"rep", rep}, {"members", mem}};
            auto hub = h.hubs[i].find(rep);
            if (hub != h.hubs[i].end()) jc["hub"] = hub->second;
            nlohmann::json ifc = nlohmann::json::array();
            for (const auto& p : interface_points(g, d, h, i, rep).points)
                ifc.push_back({{"level", p.level}, {"hub", p.hub}, {"dist", to_string(p.dist)}});
            jc["interface"] = ifc;
            comps.push_back(jc);
        }
        levels.push_back({{"level", i},
                          {"r", to_string(h.radius(i))},
                          {"components", comps}});
    }
    nlohmann::json j{{"base_unit", to_string(h.base_unit)},
                     {"num_levels", h.num_levels},
                     {"levels", levels}};
    return j.dump(2);
}

std::string net_to_json(const Net& net) {
    nlohmann::json j{{"r", to_string(net.r)},
                     {"points", net.points},
                     {"eta", net.eta},
                     {"coverage_ok", net.coverage_ok}};
    return j.dump(2);
}

}  // namespace hwy1
