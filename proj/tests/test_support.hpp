#pragma once

// Shared test helpers: brute-force oracles kept independent of the library's
// search paths, catalog loading, and random instance generators.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bondage/graph.hpp"

namespace test_support {

inline std::vector<std::string> load_catalog_lines(const std::string& name) {
    std::ifstream in(std::string(BONDAGE_DATA_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing catalog: " + name);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

inline std::vector<bondage::Graph> load_catalog(const std::string& name) {
    std::vector<bondage::Graph> out;
    for (const auto& line : load_catalog_lines(name)) out.push_back(bondage::from_graph6(line));
    return out;
}

// Exhaustive domination number over all 2^n vertex subsets.
inline int brute_force_gamma(const bondage::Graph& g) {
    int n = g.n();
    if (n > 20) throw std::runtime_error("brute_force_gamma limited to small n");
    std::vector<uint32_t> closed(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        uint32_t m = uint32_t{1} << v;
        for (int w : g.neighbors(v)) m |= uint32_t{1} << w;
        closed[static_cast<size_t>(v)] = m;
    }
    uint32_t full = (n == 32) ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
    int best = n;
    for (uint32_t subset = 0; subset <= full; ++subset) {
        uint32_t covered = 0;
        for (int v = 0; v < n; ++v)
            if (subset & (uint32_t{1} << v)) covered |= closed[static_cast<size_t>(v)];
        if (covered == full) best = std::min(best, std::popcount(subset));
        if (n == 32 && subset == full) break;
    }
    return best;
}

// Naive bondage: double loop over all edge subsets by increasing size,
// domination via the 2^n oracle. nullopt if nothing up to max_k works.
inline std::optional<int> brute_force_bondage(const bondage::Graph& g, int max_k) {
    int gamma0 = brute_force_gamma(g);
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    for (int k = 1; k <= max_k && k <= m; ++k) {
        std::vector<int> idx(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            bondage::EdgeList s;
            for (int i : idx) s.push_back(edges[static_cast<size_t>(i)]);
            if (brute_force_gamma(bondage::remove_edges(g, s)) > gamma0) return k;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == m - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

// Shortest cycle by DFS enumeration of simple paths (independent of the
// BFS-based girth in the library).
inline std::optional<int> brute_force_girth(const bondage::Graph& g, int max_len = -1) {
    int best = -1;
    std::vector<char> on_path(static_cast<size_t>(g.n()), 0);
    std::vector<int> path;
    std::function<void(int)> dfs = [&](int v) {
        for (int w : g.neighbors(v)) {
            if (w == path.front() && path.size() >= 3) {
                int len = static_cast<int>(path.size());
                if (best == -1 || len < best) best = len;
                continue;
            }
            int next_len = static_cast<int>(path.size()) + 1;
            if (max_len > 0 && next_len > max_len) continue;
            if (best != -1 && next_len >= best) continue;
            if (!on_path[static_cast<size_t>(w)] && w > path.front()) {
                on_path[static_cast<size_t>(w)] = 1;
                path.push_back(w);
                dfs(w);
                path.pop_back();
                on_path[static_cast<size_t>(w)] = 0;
            }
        }
    };
    for (int s = 0; s < g.n(); ++s) {
        on_path.assign(static_cast<size_t>(g.n()), 0);
        on_path[static_cast<size_t>(s)] = 1;
        path = {s};
        dfs(s);
    }
    if (best == -1) return std::nullopt;
    return best;
}

inline bondage::Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution flip(p);
    bondage::EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (flip(rng)) e.emplace_back(i, j);
    return bondage::Graph(n, e);
}

inline bondage::Graph random_connected_graph(int n, double p, std::mt19937& rng) {
    for (int tries = 0; tries < 10000; ++tries) {
        auto g = random_graph(n, p, rng);
        if (bondage::is_connected(g)) return g;
    }
    throw std::runtime_error("could not sample a connected graph");
}

}  // namespace test_support
