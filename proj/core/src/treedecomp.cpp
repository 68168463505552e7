#include "hwy1/treedecomp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "hwy1/errors.hpp"

namespace hwy1 {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
    return w;
}

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
    return w;
}

ValidationReport validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    ValidationReport rep;
    auto violation = [&](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };
    if (td.nodes.empty() || td.root < 0 || td.root >= static_cast<int>(td.nodes.size())) {
        violation("no rooted tree");
        return rep;
    }
    // well-formedness: parent/child links agree and reach everything once
    std::vector<int> seen(td.nodes.size(), 0);
    std::vector<int> stack{td.root};
    seen[td.root] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int c : td.nodes[u].children) {
            if (c < 0 || c >= static_cast<int>(td.nodes.size()) || td.nodes[c].parent != u ||
                seen[c]) {
                violation("malformed tree links");
                return rep;
            }
            seen[c] = 1;
            ++reached;
            stack.push_back(c);
        }
    }
    if (reached != static_cast<int>(td.nodes.size())) violation("tree has unreachable nodes");

    // (a) bags cover every vertex
    std::vector<char> covered(g.n(), 0);
    for (const auto& nd : td.nodes)
        for (int v : nd.bag) {
            if (v < 0 || v >= g.n()) {
                violation("bag vertex out of range");
                return rep;
            }
            covered[v] = 1;
        }
    for (int v = 0; v < g.n(); ++v)
        if (!covered[v]) violation("vertex " + std::to_string(v) + " in no bag");

    // (b) every edge inside some bag
    for (const auto& e : g.edges()) {
        bool found = false;
        for (const auto& nd : td.nodes) {
            if (std::binary_search(nd.bag.begin(), nd.bag.end(), e.u) &&
                std::binary_search(nd.bag.begin(), nd.bag.end(), e.v)) {
                found = true;
                break;
            }
        }
        if (!found)
            violation("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} in no bag");
    }

    // (c) nodes holding a vertex induce a connected subtree
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> holders;
        for (int i = 0; i < static_cast<int>(td.nodes.size()); ++i)
            if (std::binary_search(td.nodes[i].bag.begin(), td.nodes[i].bag.end(), v))
                holders.push_back(i);
        if (holders.empty()) continue;  // reported under (a)
        std::set<int> member(holders.begin(), holders.end());
        std::vector<int> bfs{holders[0]};
        std::set<int> vis{holders[0]};
        while (!bfs.empty()) {
            int u = bfs.back();
            bfs.pop_back();
            std::vector<int> around = td.nodes[u].children;
            if (td.nodes[u].parent >= 0) around.push_back(td.nodes[u].parent);
            for (int x : around)
                if (member.count(x) && !vis.count(x)) {
                    vis.insert(x);
                    bfs.push_back(x);
                }
        }
        if (vis.size() != member.size())
            violation("vertex " + std::to_string(v) + " has a disconnected bag subtree");
    }
    return rep;
}

namespace {

// Contract any node whose bag is a subset of its parent's.
void compress(TreeDecomposition& td) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < static_cast<int>(td.nodes.size()); ++i) {
            int p = td.nodes[i].parent;
            if (p < 0) continue;
            if (!subset_of(td.nodes[i].bag, td.nodes[p].bag)) continue;
            auto& pc = td.nodes[p].children;
            pc.erase(std::find(pc.begin(), pc.end(), i));
            for (int c : td.nodes[i].children) {
                td.nodes[c].parent = p;
                pc.push_back(c);
            }
            td.nodes[i].children.clear();
            td.nodes[i].parent = -2;  // detached
            changed = true;
        }
    }
    // renumber live nodes
    std::vector<int> remap(td.nodes.size(), -1);
    std::vector<TreeDecomposition::Node> live;
    for (int i = 0; i < static_cast<int>(td.nodes.size()); ++i) {
        if (td.nodes[i].parent == -2) continue;
        remap[i] = static_cast<int>(live.size());
        live.push_back(std::move(td.nodes[i]));
    }
    for (auto& nd : live) {
        if (nd.parent >= 0) nd.parent = remap[nd.parent];
        for (auto& c : nd.children) c = remap[c];
        std::sort(nd.children.begin(), nd.children.end());
    }
    td.nodes = std::move(live);
    td.root = remap[td.root];
}

}  // namespace

TreeDecomposition build_decomposition(const Graph& g, const DistMatrix& d,
                                      const LevelHierarchy& h) {
    TreeDecomposition td;
    td.base_unit = h.base_unit;
    td.has_levels = true;

    std::map<std::pair<int, int>, int> node_of;  // (level, rep) -> node id
    for (int i = 0; i < h.num_levels; ++i) {
        std::set<int> reps(h.comp[i].begin(), h.comp[i].end());
        for (int rep : reps) {
            TreeDecomposition::Node nd;
            nd.level = i;
            std::vector<std::pair<int, int>> entries;  // (vertex, entry level)
            for (const auto& p : interface_points(g, d, h, i, rep).points)
                entries.emplace_back(p.hub, p.level);
            if (i == 0) {
                bool present = false;
                for (auto& [v, lev] : entries)
                    if (v == rep) present = true;
                if (!present) entries.emplace_back(rep, -1);
            }
            std::sort(entries.begin(), entries.end());
            for (const auto& [v, lev] : entries) {
                nd.bag.push_back(v);
                nd.entry_levels.push_back(lev);
            }
            node_of[{i, rep}] = static_cast<int>(td.nodes.size());
            td.nodes.push_back(std::move(nd));
        }
    }
    for (int i = 0; i + 1 < h.num_levels; ++i) {
        std::set<int> reps(h.comp[i].begin(), h.comp[i].end());
        for (int rep : reps) {
            int child = node_of.at({i, rep});
            int parent = node_of.at({i + 1, h.comp[i + 1][rep]});
            td.nodes[child].parent = parent;
            td.nodes[parent].children.push_back(child);
        }
    }
    td.root = node_of.at({h.num_levels - 1, h.comp[h.num_levels - 1][0]});
    compress(td);
    return td;
}

TreeDecomposition project_decomposition(const TreeDecomposition& td, const Net& net,
                                        const Quotient& q) {
    TreeDecomposition out;
    out.root = td.root;
    out.nodes.resize(td.nodes.size());
    for (int i = 0; i < static_cast<int>(td.nodes.size()); ++i) {
        const auto& src = td.nodes[i];
        auto& dst = out.nodes[i];
        dst.parent = src.parent;
        dst.children = src.children;
        std::set<int> bag;
        for (int v : src.bag) bag.insert(q.to_index[v]);
        dst.bag.assign(bag.begin(), bag.end());
        require(dst.bag.size() <= src.bag.size(), ErrorKind::internal,
                "projection grew a bag");

        if (td.has_levels && src.level >= 0) {
            // hubs whose level lies below the net radius live in one
            // component of G_{<=r} together with the component itself, so
            // they all collapse to a single net point
            const Rat two_r_node = td.base_unit * pow2(src.level) * 2;
            if (two_r_node <= net.r) {
                std::set<int> collapsed;
                for (std::size_t k = 0; k < src.bag.size(); ++k) {
                    int lev = src.entry_levels.empty() ? 0 : src.entry_levels[k];
                    bool low = lev < 0 || td.base_unit * pow2(lev) * 2 <= net.r;
                    if (low) collapsed.insert(q.to_index[src.bag[k]]);
                }
                require(collapsed.size() <= 1, ErrorKind::internal,
                        "low-level hubs did not collapse to one net point");
            }
        }
    }
    compress(out);
    return out;
}

namespace {

using Nice = NiceTreeDecomposition;

int add_node(Nice& ntd, Nice::Kind kind, int vertex, std::vector<int> bag,
             std::vector<int> children) {
    Nice::Node nd;
    nd.kind = kind;
    nd.vertex = vertex;
    nd.bag = std::move(bag);
    nd.children = std::move(children);
    int id = static_cast<int>(ntd.nodes.size());
    for (int c : nd.children) ntd.nodes[c].parent = id;
    ntd.nodes.push_back(std::move(nd));
    return id;
}

// Chain of forgets and introduces turning bag `from` into bag `to`.
int adapt(Nice& ntd, int below, std::vector<int> from, const std::vector<int>& to) {
    int cur = below;
    std::vector<int> drop, add;
    std::set_difference(from.begin(), from.end(), to.begin(), to.end(),
                        std::back_inserter(drop));
    std::set_difference(to.begin(), to.end(), from.begin(), from.end(),
                        std::back_inserter(add));
    std::vector<int> bag = from;
    for (int v : drop) {
        bag.erase(std::find(bag.begin(), bag.end(), v));
        cur = add_node(ntd, Nice::Kind::forget, v, bag, {cur});
    }
    for (int v : add) {
        bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
        cur = add_node(ntd, Nice::Kind::introduce, v, bag, {cur});
    }
    return cur;
}

int build_nice(Nice& ntd, const TreeDecomposition& td, int t) {
    const auto& bag = td.nodes[t].bag;
    const auto& children = td.nodes[t].children;
    if (children.empty()) {
        int cur = add_node(ntd, Nice::Kind::leaf, -1, {}, {});
        return adapt(ntd, cur, {}, bag);
    }
    std::vector<int> tops;
    for (int c : children) {
        int sub = build_nice(ntd, td, c);
        tops.push_back(adapt(ntd, sub, td.nodes[c].bag, bag));
    }
    int cur = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i)
        cur = add_node(ntd, Nice::Kind::join, -1, bag, {cur, tops[i]});
    return cur;
}

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
    require(td.root >= 0, ErrorKind::input, "make_nice needs a rooted decomposition");
    Nice ntd;
    int top = build_nice(ntd, td, td.root);
    ntd.root = adapt(ntd, top, td.nodes[td.root].bag, {});
    for (int i = 0; i < static_cast<int>(ntd.nodes.size()); ++i)
        for (int c : ntd.nodes[i].children)
            require(ntd.nodes[c].parent == i, ErrorKind::internal, "nice link mismatch");
    return ntd;
}

ValidationReport validate_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
    ValidationReport rep;
    auto violation = [&](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };
    for (int i = 0; i < static_cast<int>(ntd.nodes.size()); ++i) {
        const auto& nd = ntd.nodes[i];
        switch (nd.kind) {
            case Nice::Kind::leaf:
                if (!nd.children.empty() || !nd.bag.empty()) violation("bad leaf");
                break;
            case Nice::Kind::introduce: {
                if (nd.children.size() != 1) {
                    violation("introduce without single child");
                    break;
                }
                auto expect = ntd.nodes[nd.children[0]].bag;
                expect.insert(std::upper_bound(expect.begin(), expect.end(), nd.vertex),
                              nd.vertex);
                if (expect != nd.bag) violation("introduce delta mismatch");
                break;
            }
            case Nice::Kind::forget: {
                if (nd.children.size() != 1) {
                    violation("forget without single child");
                    break;
                }
                auto expect = ntd.nodes[nd.children[0]].bag;
                auto it = std::find(expect.begin(), expect.end(), nd.vertex);
                if (it == expect.end()) {
                    violation("forget of absent vertex");
                    break;
                }
                expect.erase(it);
                if (expect != nd.bag) violation("forget delta mismatch");
                break;
            }
            case Nice::Kind::join:
                if (nd.children.size() != 2 || ntd.nodes[nd.children[0]].bag != nd.bag ||
                    ntd.nodes[nd.children[1]].bag != nd.bag)
                    violation("join children bags differ");
                break;
        }
    }
    if (ntd.root < 0 || !ntd.nodes[ntd.root].bag.empty()) violation("root bag not empty");

    // also check the plain decomposition properties
    TreeDecomposition td;
    td.root = ntd.root;
    td.nodes.resize(ntd.nodes.size());
    for (int i = 0; i < static_cast<int>(ntd.nodes.size()); ++i) {
        td.nodes[i].parent = ntd.nodes[i].parent;
        td.nodes[i].children = ntd.nodes[i].children;
        td.nodes[i].bag = ntd.nodes[i].bag;
    }
    auto base = validate_decomposition(g, td);
    if (!base.ok) {
        rep.ok = false;
        rep.violations.insert(rep.violations.end(), base.violations.begin(),
                              base.violations.end());
    }
    return rep;
}

std::string decomposition_to_json(const TreeDecomposition& td) {
    nlohmann::json nodes = nlohmann::json::array();
    for (int i = 0; i < static_cast<int>(td.nodes.size()); ++i) {
        nodes.push_back({{"id", i},
                         {"parent", td.nodes[i].parent},
                         {"bag", td.nodes[i].bag}});
    }
    nlohmann::json j{{"root", td.root}, {"width", td.width()}, {"nodes", nodes}};
    return j.dump(2);
}

}  // namespace hwy1
