#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bondage/graph.hpp"

namespace bondage {

struct DominatingSet {
    std::vector<int> members;  // sorted vertex ids
    int size() const { return static_cast<int>(members.size()); }
};

inline bool is_dominating(const Graph& g, const std::vector<int>& d) {
    std::vector<char> covered(static_cast<size_t>(g.n()), 0);
    for (int v : d) {
        if (v < 0 || v >= g.n()) throw std::out_of_range("vertex id out of range");
        covered[static_cast<size_t>(v)] = 1;
        for (int w : g.neighbors(v)) covered[static_cast<size_t>(w)] = 1;
    }
    for (char c : covered)
        if (!c) return false;
    return true;
}

namespace detail {

// Closed neighborhood bitmasks; the solver is limited to n <= 62,
// which is also the graph6 ceiling.
inline std::vector<uint64_t> closed_neighborhoods(const Graph& g) {
    if (g.n() > 62) throw std::invalid_argument("domination solver limited to n <= 62");
    std::vector<uint64_t> masks(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        uint64_t m = uint64_t{1} << v;
        for (int w : g.neighbors(v)) m |= uint64_t{1} << w;
        masks[static_cast<size_t>(v)] = m;
    }
    return masks;
}

struct DominationSearch {
    const std::vector<uint64_t>& masks;
    uint64_t full;
    int max_closed_degree;
    int incumbent;
    std::vector<int> best;
    std::vector<int> chosen;

    void run(uint64_t dominated) {
        if (dominated == full) {
            if (static_cast<int>(chosen.size()) < incumbent) {
                incumbent = static_cast<int>(chosen.size());
                best = chosen;
            }
            return;
        }
        int undominated = std::popcount(full & ~dominated);
        int lower = (undominated + max_closed_degree - 1) / max_closed_degree;
        if (static_cast<int>(chosen.size()) + lower >= incumbent) return;

        // Branch vertex: undominated, fewest covering choices, lowest id.
        int branch = -1, branch_choices = 0;
        for (int v = 0; v < static_cast<int>(masks.size()); ++v) {
            if (dominated & (uint64_t{1} << v)) continue;
            int choices = std::popcount(masks[static_cast<size_t>(v)]);
            if (branch == -1 || choices < branch_choices) {
                branch = v;
                branch_choices = choices;
            }
        }
        uint64_t options = masks[static_cast<size_t>(branch)];
        while (options) {
            int w = std::countr_zero(options);
            options &= options - 1;
            chosen.push_back(w);
            run(dominated | masks[static_cast<size_t>(w)]);
            chosen.pop_back();
        }
    }
};

}  // namespace detail

// Exact domination number with a minimum witness. Branch and bound seeded
// by a greedy max-coverage incumbent, lower bound ceil(undominated/(Delta+1)).
inline DominatingSet domination_number(const Graph& g) {
    if (g.n() == 0) return {};
    auto masks = detail::closed_neighborhoods(g);
    uint64_t full = g.n() == 62 ? ~uint64_t{0} >> 2 : (uint64_t{1} << g.n()) - 1;

    // Greedy incumbent: max newly dominated, ties by lowest id.
    std::vector<int> greedy;
    uint64_t dominated = 0;
    while (dominated != full) {
        int pick = -1, gain = -1;
        for (int v = 0; v < g.n(); ++v) {
            int add = std::popcount(masks[static_cast<size_t>(v)] & ~dominated);
            if (add > gain) {
                gain = add;
                pick = v;
            }
        }
        greedy.push_back(pick);
        dominated |= masks[static_cast<size_t>(pick)];
    }

    detail::DominationSearch search{masks, full, max_degree(g) + 1,
                                    static_cast<int>(greedy.size()), greedy, {}};
    search.run(0);
    std::sort(search.best.begin(), search.best.end());
    return DominatingSet{search.best};
}

}  // namespace bondage
