#include "hwy1/spcover.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "hwy1/errors.hpp"

namespace hwy1 {

namespace {

using Mask = std::vector<std::uint64_t>;

bool mask_empty(const Mask& m) {
    for (auto w : m)
        if (w) return false;
    return true;
}

void mask_and(Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] &= b[i];
}

int mask_first(const Mask& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) return static_cast<int>(i * 64 + __builtin_ctzll(m[i]));
    return -1;
}

}  // namespace

const std::map<int, int>& Hd1Certificate::hubs_at(const Rat& r) const {
    static const std::map<int, int> empty;
    if (scales.empty() || r < scales.front().r) return empty;
    // last critical scale <= r
    int lo = 0, hi = static_cast<int>(scales.size()) - 1, best = 0;
    while (lo <= hi) {
        int mid = (lo + hi) / 2;
        if (scales[mid].r <= r) {
            best = mid;
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return scales[best].hubs;
}

std::vector<Rat> critical_scales(const DistMatrix& d) {
    std::set<Int> lengths;
    for (int u = 0; u < d.n(); ++u)
        for (int w = u + 1; w < d.n(); ++w)
            if (d.connected(u, w)) lengths.insert(d.dist(u, w));
    std::set<Rat> out;
    for (const auto& L : lengths) {
        out.insert(make_rat(L, Int(2)));
        out.insert(Rat(L));
    }
    return {out.begin(), out.end()};
}

std::vector<std::pair<int, int>> covered_pairs(const DistMatrix& d, const Rat& r) {
    std::vector<std::pair<int, int>> out;
    const Rat two_r = r * 2;
    for (int u = 0; u < d.n(); ++u)
        for (int w = u + 1; w < d.n(); ++w) {
            if (!d.connected(u, w)) continue;
            const Int& L = d.dist(u, w);
            if (L > r && L <= two_r) out.emplace_back(u, w);
        }
    return out;
}

namespace {

// Shared core: intersect mandatory-vertex masks of all covered pairs per
// component of G_{<=2r}. mask_of may cache across scales.
template <typename MaskOf>
std::variant<ScaleCover, Hd1Witness> cover_for_scale_impl(const Graph& g, const DistMatrix& d,
                                                          const Rat& r, MaskOf&& mask_of) {
    const auto comps = threshold_components(g, r * 2);
    struct Acc {
        Mask common;
        std::vector<std::pair<int, int>> pairs;
    };
    std::map<int, Acc> by_comp;
    for (const auto& [u, w] : covered_pairs(d, r)) {
        // every shortest path of length <= 2r stays inside one component,
        // so both endpoints share a component
        require(comps[u] == comps[w], ErrorKind::internal,
                "covered pair straddles components of the thresholded graph");
        auto it = by_comp.find(comps[u]);
        if (it == by_comp.end()) {
            it = by_comp.emplace(comps[u], Acc{mask_of(u, w), {}}).first;
        } else {
            mask_and(it->second.common, mask_of(u, w));
        }
        it->second.pairs.emplace_back(u, w);
    }
    ScaleCover cover{r, {}};
    for (auto& [rep, acc] : by_comp) {
        if (mask_empty(acc.common)) {
            Hd1Witness wit;
            wit.scale = r;
            for (int v = 0; v < g.n(); ++v)
                if (comps[v] == rep) wit.component.push_back(v);
            wit.pairs = std::move(acc.pairs);
            return wit;
        }
        cover.hubs[rep] = mask_first(acc.common);
    }
    return cover;
}

}  // namespace

std::variant<ScaleCover, Hd1Witness> spc1_for_scale(const Graph& g, const DistMatrix& d,
                                                    const Rat& r) {
    require(is_metric_preprocessed(g, d), ErrorKind::input,
            "spc1_for_scale needs a metric-preprocessed graph");
    return cover_for_scale_impl(g, d, r,
                                [&](int u, int w) { return mandatory_mask(d, u, w); });
}

Hd1Result verify_hd1(const Graph& g) { return verify_hd1(g, all_pairs(g)); }

Hd1Result verify_hd1(const Graph& g, const DistMatrix& d) {
    require(d.all_connected(), ErrorKind::input, "verify_hd1 needs a connected graph");
    require(is_metric_preprocessed(g, d), ErrorKind::input,
            "verify_hd1 needs a metric-preprocessed graph");
    const int n = g.n();
    // mandatory masks are scale-independent; compute each pair once
    std::vector<Mask> cache(static_cast<std::size_t>(n) * n);
    auto mask_of = [&](int u, int w) -> const Mask& {
        Mask& m = cache[static_cast<std::size_t>(u) * n + w];
        if (m.empty()) m = mandatory_mask(d, u, w);
        return m;
    };
    Hd1Certificate cert;
    cert.min_weight = g.m() > 0 ? g.min_edge_weight() : Int(0);
    for (const Rat& r : critical_scales(d)) {
        auto res = cover_for_scale_impl(g, d, r, mask_of);
        if (auto* wit = std::get_if<Hd1Witness>(&res)) return *wit;
        cert.scales.push_back(std::move(std::get<ScaleCover>(res)));
    }
    return cert;
}

bool verify_spc(const Graph& g, const DistMatrix& d, const Rat& r,
                const std::vector<int>& hubs, int h) {
    const int n = g.n();
    std::vector<char> is_hub(n, 0);
    for (int v : hubs) {
        require(v >= 0 && v < n, ErrorKind::input, "hub out of range");
        is_hub[v] = 1;
    }
    // cover check: no covered pair may retain a hub-free shortest path
    for (const auto& [u, w] : covered_pairs(d, r)) {
        if (is_hub[u] || is_hub[w]) continue;
        // count shortest u-w paths in the hub-deleted shortest-path DAG
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const bool ca = d.connected(u, a), cb = d.connected(u, b);
            if (ca != cb) return ca > cb;
            if (!ca) return a < b;
            int c = cmp(d.dist(u, a), d.dist(u, b));
            if (c != 0) return c < 0;
            return a < b;
        });
        std::vector<Int> cnt(n, Int(0));
        cnt[u] = 1;
        const Int& duw = d.dist(u, w);
        for (int a : order) {
            if (!d.connected(u, a) || cnt[a] == 0 || d.dist(u, a) >= duw) continue;
            for (const auto& [b, wt] : g.adj(a)) {
                if (is_hub[b]) continue;
                if (!d.connected(u, b)) continue;
                if (d.dist(u, a) + wt == d.dist(u, b) && d.dist(u, b) <= duw) cnt[b] += cnt[a];
            }
        }
        if (cnt[w] > 0) return false;  // a shortest path avoids all hubs
    }
    // local sparsity: every ball of radius 2r holds at most h hubs
    const Rat two_r = r * 2;
    for (int v = 0; v < n; ++v) {
        int in_ball = 0;
        for (int x : hubs)
            if (x == v || (d.connected(v, x) && d.dist(v, x) <= two_r)) ++in_ball;
        if (in_ball > h) return false;
    }
    return true;
}

std::string certificate_to_json(const Hd1Certificate& cert) {
    nlohmann::json scales = nlohmann::json::array();
    for (const auto& sc : cert.scales) {
        nlohmann::json hubs = nlohmann::json::object();
        for (const auto& [rep, hub] : sc.hubs) hubs[std::to_string(rep)] = hub;
        scales.push_back({{"r", to_string(sc.r)}, {"hubs", hubs}});
    }
    nlohmann::json j{{"scales", scales}, {"min_weight", to_string(cert.min_weight)}};
    return j.dump(2);
}

std::string witness_to_json(const Hd1Witness& w) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [u, v] : w.pairs) pairs.push_back({u, v});
    nlohmann::json j{{"scale", to_string(w.scale)},
                     {"component", w.component},
                     {"pairs", pairs}};
    return j.dump(2);
}

}  // namespace hwy1
