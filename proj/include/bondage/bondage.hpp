#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "bondage/domination.hpp"
#include "bondage/graph.hpp"

namespace bondage {

// Hartnell-Rall: b(G) <= d(u)+d(v)-1-|N(u) cap N(v)| for every edge uv.
inline int hr_bound(const Graph& g) {
    if (g.m() == 0) throw std::invalid_argument("hr_bound of edgeless graph");
    int best = -1;
    for (auto [u, v] : g.edges()) {
        int val = g.degree(u) + g.degree(v) - 1 - common_neighbors(g, u, v);
        if (best == -1 || val < best) best = val;
    }
    return best;
}

struct BondageResult {
    int b = 0;
    EdgeList witness;
    int gamma_before = 0;
    int gamma_after = 0;
};

namespace detail {

// Lexicographic k-subsets of [0, total); first augmenting subset wins.
template <typename Fn>
bool for_each_k_subset(int total, int k, Fn&& fn) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        if (fn(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == total - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

inline std::optional<BondageResult> bondage_connected(const Graph& g, int budget) {
    int gamma0 = domination_number(g).size();
    EdgeList edges = g.edges();
    int total = static_cast<int>(edges.size());
    for (int k = 1; k <= budget && k <= total; ++k) {
        std::optional<BondageResult> found;
        for_each_k_subset(total, k, [&](const std::vector<int>& idx) {
            EdgeList s;
            s.reserve(static_cast<size_t>(k));
            for (int i : idx) s.push_back(edges[static_cast<size_t>(i)]);
            int gamma = domination_number(remove_edges(g, s)).size();
            if (gamma > gamma0) {
                found = BondageResult{k, s, gamma0, gamma};
                return true;
            }
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;  // budget exhausted: b(G) > budget
}

}  // namespace detail

// Exact bondage number by increasing-cardinality edge-subset search.
// Disconnected graphs recurse on components and take the minimum.
// nullopt means the budget was exhausted without finding an augmenting set.
inline std::optional<BondageResult> bondage_number(const Graph& g, int budget) {
    if (g.m() == 0) throw std::invalid_argument("bondage_number of edgeless graph");
    if (budget < 1) throw std::invalid_argument("bondage budget must be positive");
    auto comps = components(g);
    if (comps.size() == 1) return detail::bondage_connected(g, budget);

    std::optional<BondageResult> best;
    for (const auto& c : comps) {
        if (c.graph.m() == 0) continue;  // edgeless component has no bondage number
        int cap = best ? std::min(budget, best->b - 1) : budget;
        if (cap < 1) break;
        auto r = detail::bondage_connected(c.graph, cap);
        if (!r) continue;
        for (auto& [u, v] : r->witness) {
            u = c.original_ids[static_cast<size_t>(u)];
            v = c.original_ids[static_cast<size_t>(v)];
            if (u > v) std::swap(u, v);
        }
        std::sort(r->witness.begin(), r->witness.end());
        if (!best || r->b < best->b) best = r;
    }
    if (best) {
        // Report gammas of the whole graph, not of the winning component.
        best->gamma_before = domination_number(g).size();
        best->gamma_after = domination_number(remove_edges(g, best->witness)).size();
        return best;
    }
    return std::nullopt;
}

inline std::optional<BondageResult> bondage_number(const Graph& g) {
    return bondage_number(g, hr_bound(g));
}

}  // namespace bondage
