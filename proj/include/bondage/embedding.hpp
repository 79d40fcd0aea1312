#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bondage/graph.hpp"
#include "bondage/rational.hpp"

namespace bondage {

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Darts: edge e = (u,v) with u < v yields dart 2e (u->v) and 2e+1 (v->u).
// reverse(d) = d ^ 1.
struct Darts {
    std::vector<int> tail, head;  // indexed by dart id

    explicit Darts(const Graph& g) {
        auto edges = g.edges();
        tail.resize(edges.size() * 2);
        head.resize(edges.size() * 2);
        for (size_t e = 0; e < edges.size(); ++e) {
            tail[2 * e] = edges[e].first;
            head[2 * e] = edges[e].second;
            tail[2 * e + 1] = edges[e].second;
            head[2 * e + 1] = edges[e].first;
        }
    }
};

// A 2-cell embedding: per-vertex cyclic order of outgoing darts plus a
// +/-1 signature per edge (all +1 <=> orientable).
struct RotationSystem {
    std::vector<std::vector<int>> rotation;  // per vertex: outgoing dart ids in cyclic order
    std::vector<int8_t> signature;           // per edge

    static RotationSystem from_neighbor_orders(const Graph& g,
                                               const std::vector<std::vector<int>>& orders) {
        auto edges = g.edges();
        // edge id lookup
        std::vector<std::vector<std::pair<int, int>>> eid(static_cast<size_t>(g.n()));
        for (size_t e = 0; e < edges.size(); ++e) {
            eid[static_cast<size_t>(edges[e].first)].emplace_back(edges[e].second, static_cast<int>(e));
            eid[static_cast<size_t>(edges[e].second)].emplace_back(edges[e].first, static_cast<int>(e));
        }
        RotationSystem r;
        r.signature.assign(edges.size(), 1);
        r.rotation.resize(static_cast<size_t>(g.n()));
        if (static_cast<int>(orders.size()) != g.n())
            throw std::invalid_argument("rotation order count != vertex count");
        for (int v = 0; v < g.n(); ++v) {
            for (int w : orders[static_cast<size_t>(v)]) {
                int e = -1;
                for (auto [nbr, id] : eid[static_cast<size_t>(v)])
                    if (nbr == w) e = id;
                if (e < 0) throw std::invalid_argument("rotation lists a non-neighbor");
                int dart = edges[static_cast<size_t>(e)].first == v ? 2 * e : 2 * e + 1;
                r.rotation[static_cast<size_t>(v)].push_back(dart);
            }
        }
        r.validate(g);
        return r;
    }

    static RotationSystem sorted_default(const Graph& g) {
        std::vector<std::vector<int>> orders(static_cast<size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v) orders[static_cast<size_t>(v)] = g.neighbors(v);
        return from_neighbor_orders(g, orders);
    }

    bool orientable() const {
        return std::all_of(signature.begin(), signature.end(), [](int8_t s) { return s == 1; });
    }

    void validate(const Graph& g) const {
        if (static_cast<int>(rotation.size()) != g.n())
            throw std::invalid_argument("rotation vertex count mismatch");
        size_t m = signature.size();
        Darts darts(g);
        if (darts.tail.size() != 2 * m) throw std::invalid_argument("signature count mismatch");
        std::vector<char> seen(2 * m, 0);
        for (int v = 0; v < g.n(); ++v) {
            const auto& rot = rotation[static_cast<size_t>(v)];
            if (static_cast<int>(rot.size()) != g.degree(v))
                throw std::invalid_argument("rotation missing darts at a vertex");
            for (int d : rot) {
                if (d < 0 || d >= static_cast<int>(2 * m) || darts.tail[static_cast<size_t>(d)] != v)
                    throw std::invalid_argument("rotation contains a foreign dart");
                if (seen[static_cast<size_t>(d)]) throw std::invalid_argument("duplicate dart in rotation");
                seen[static_cast<size_t>(d)] = 1;
            }
        }
        for (int8_t s : signature)
            if (s != 1 && s != -1) throw std::invalid_argument("signature must be +1 or -1");
    }
};

struct FaceSet {
    std::vector<std::vector<int>> faces;      // boundary walks as dart sequences
    std::vector<int> face_degree;             // walk length in edge-steps
    std::vector<std::pair<int, int>> side_degree;  // per edge: face degrees of its two sides, min first
    int face_count() const { return static_cast<int>(faces.size()); }
};

namespace detail {

// Walk state: (dart, orientation flag). State id = 2*dart + (flag<0).
// Successor: arriving at v via dart d with flag s, step to the dart after
// reverse(d) in v's rotation when s*sig = +1, to the dart before otherwise;
// the flag becomes s*sig. The involution (d,s) -> (rev d, -s*sig) maps every
// boundary walk onto its reversal, so faces are orbit pairs.
struct FaceTracer {
    const Darts& darts;
    const RotationSystem& rot;
    std::vector<int> pos;  // dart -> index in its tail's rotation

    FaceTracer(const Darts& d, const RotationSystem& r) : darts(d), rot(r) {
        pos.resize(darts.tail.size());
        for (const auto& cycle : rot.rotation)
            for (size_t i = 0; i < cycle.size(); ++i)
                pos[static_cast<size_t>(cycle[i])] = static_cast<int>(i);
    }

    std::pair<int, int> next(int d, int s) const {
        int t = s * rot.signature[static_cast<size_t>(d >> 1)];
        int rd = d ^ 1;
        const auto& cycle = rot.rotation[static_cast<size_t>(darts.head[static_cast<size_t>(d)])];
        int k = static_cast<int>(cycle.size());
        int i = pos[static_cast<size_t>(rd)];
        int j = t > 0 ? (i + 1) % k : (i + k - 1) % k;
        return {cycle[static_cast<size_t>(j)], t};
    }
};

}  // namespace detail

inline FaceSet trace_faces(const Graph& g, const RotationSystem& r) {
    r.validate(g);
    if (!is_connected(g)) throw std::invalid_argument("trace_faces requires a connected graph");
    size_t m = static_cast<size_t>(g.m());
    if (m == 0) {
        if (g.n() != 1) throw std::invalid_argument("edgeless graph");
        FaceSet fs;
        fs.faces.push_back({});  // single vertex on the sphere: one face
        fs.face_degree.push_back(0);
        return fs;
    }
    Darts darts(g);
    detail::FaceTracer tracer(darts, r);

    size_t nstates = 4 * m;
    std::vector<int> orbit_of(nstates, -1);
    std::vector<std::vector<int>> orbit_darts;
    std::vector<size_t> orbit_start;
    auto state_id = [](int d, int s) { return 2 * d + (s < 0 ? 1 : 0); };
    for (size_t start = 0; start < nstates; ++start) {
        if (orbit_of[start] != -1) continue;
        int id = static_cast<int>(orbit_darts.size());
        orbit_darts.emplace_back();
        orbit_start.push_back(start);
        int d = static_cast<int>(start) / 2;
        int s = (start % 2 == 0) ? 1 : -1;
        while (orbit_of[static_cast<size_t>(state_id(d, s))] == -1) {
            orbit_of[static_cast<size_t>(state_id(d, s))] = id;
            orbit_darts.back().push_back(d);
            auto [nd, ns] = tracer.next(d, s);
            d = nd;
            s = ns;
        }
    }

    // Pair each orbit with its reversal.
    auto reverse_state = [&](int d, int s) {
        return state_id(d ^ 1, -s * r.signature[static_cast<size_t>(d >> 1)]);
    };
    FaceSet fs;
    fs.side_degree.assign(m, {0, 0});
    for (size_t id = 0; id < orbit_darts.size(); ++id) {
        int d0 = static_cast<int>(orbit_start[id]) / 2;
        int s0 = (orbit_start[id] % 2 == 0) ? 1 : -1;
        int partner = orbit_of[static_cast<size_t>(reverse_state(d0, s0))];
        if (partner == static_cast<int>(id))
            throw std::logic_error("self-paired boundary orbit");
        if (orbit_darts[id].size() != orbit_darts[static_cast<size_t>(partner)].size())
            throw std::logic_error("mismatched orbit pair lengths");
        if (static_cast<int>(id) < partner) {
            fs.faces.push_back(orbit_darts[id]);
            fs.face_degree.push_back(static_cast<int>(orbit_darts[id].size()));
        }
    }
    for (size_t e = 0; e < m; ++e) {
        int a = static_cast<int>(orbit_darts[static_cast<size_t>(
                    orbit_of[static_cast<size_t>(state_id(static_cast<int>(2 * e), 1))])].size());
        int b = static_cast<int>(orbit_darts[static_cast<size_t>(
                    orbit_of[static_cast<size_t>(state_id(static_cast<int>(2 * e), -1))])].size());
        fs.side_degree[e] = {std::min(a, b), std::max(a, b)};
    }

    int total = 0;
    std::vector<int> edge_uses(m, 0);
    for (const auto& walk : fs.faces) {
        total += static_cast<int>(walk.size());
        for (int d : walk) ++edge_uses[static_cast<size_t>(d >> 1)];
    }
    if (total != 2 * static_cast<int>(m)) throw std::logic_error("face degrees do not sum to 2m");
    for (int uses : edge_uses)
        if (uses != 2) throw std::logic_error("edge side consumed more than once");
    return fs;
}

inline int euler_characteristic(const Graph& g, const RotationSystem& r) {
    return g.n() - g.m() + trace_faces(g, r).face_count();
}

namespace detail {

// Face counting tuned for the enumeration loop: no allocation, stamps
// instead of clearing. Orientable fast path walks only the +1 states.
class FaceCounter {
public:
    explicit FaceCounter(const Graph& g) : darts_(g) {
        size_t m2 = darts_.tail.size();
        pos_.resize(m2);
        mark_.assign(2 * m2, 0);
    }

    int count(const RotationSystem& r) {
        for (const auto& cycle : r.rotation)
            for (size_t i = 0; i < cycle.size(); ++i)
                pos_[static_cast<size_t>(cycle[i])] = static_cast<int>(i);
        ++stamp_;
        int ndarts = static_cast<int>(darts_.tail.size());
        int orbits = 0;
        if (r.orientable()) {
            for (int start = 0; start < ndarts; ++start) {
                if (mark_[static_cast<size_t>(start)] == stamp_) continue;
                ++orbits;
                int d = start;
                while (mark_[static_cast<size_t>(d)] != stamp_) {
                    mark_[static_cast<size_t>(d)] = stamp_;
                    d = succ(r, d, 1).first;
                }
            }
            return orbits;
        }
        for (int start = 0; start < 2 * ndarts; ++start) {
            if (mark_[static_cast<size_t>(start)] == stamp_) continue;
            ++orbits;
            int d = start / 2;
            int s = (start % 2 == 0) ? 1 : -1;
            while (mark_[static_cast<size_t>(2 * d + (s < 0))] != stamp_) {
                mark_[static_cast<size_t>(2 * d + (s < 0))] = stamp_;
                auto [nd, ns] = succ(r, d, s);
                d = nd;
                s = ns;
            }
        }
        return orbits / 2;
    }

private:
    std::pair<int, int> succ(const RotationSystem& r, int d, int s) const {
        int t = s * r.signature[static_cast<size_t>(d >> 1)];
        int rd = d ^ 1;
        const auto& cycle = r.rotation[static_cast<size_t>(darts_.head[static_cast<size_t>(d)])];
        int k = static_cast<int>(cycle.size());
        int i = pos_[static_cast<size_t>(rd)];
        int j = t > 0 ? (i + 1 == k ? 0 : i + 1) : (i == 0 ? k - 1 : i - 1);
        return {cycle[static_cast<size_t>(j)], t};
    }

    Darts darts_;
    std::vector<int> pos_;
    std::vector<uint32_t> mark_;
    uint32_t stamp_ = 0;
};

}  // namespace detail

// Brute-force maximum Euler characteristic over all rotation systems (and,
// optionally, all signature assignments modulo spanning-tree normalization).
// Vertex 0's rotation is enumerated up to reversal: the global mirror of an
// embedding has the same faces, so one representative per reversal class
// suffices for maximization. Throws budget_exceeded if the enumeration is
// larger than `budget` evaluations.
inline int max_euler_characteristic(const Graph& g, unsigned long long budget,
                                    bool allow_signatures) {
    if (!is_connected(g)) throw std::invalid_argument("max_euler_characteristic requires a connected graph");
    if (g.n() <= 1) return 2;

    unsigned long long work = 1;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        for (int i = 2; i < d; ++i) {
            if (work > budget / static_cast<unsigned long long>(i))
                throw budget_exceeded("rotation enumeration exceeds budget");
            work *= static_cast<unsigned long long>(i);
        }
    }
    int cotree = g.m() - g.n() + 1;
    if (allow_signatures) {
        for (int i = 0; i < cotree; ++i) {
            if (work > budget / 2) throw budget_exceeded("rotation enumeration exceeds budget");
            work *= 2;
        }
    }

    auto edges = g.edges();
    // Spanning-tree edges can always be given +1 signatures, so only
    // co-tree edges get enumerated signs.
    std::vector<int> cotree_edges;
    if (allow_signatures) {
        std::vector<char> in_tree_vertex(static_cast<size_t>(g.n()), 0);
        std::vector<char> tree_edge(edges.size(), 0);
        std::vector<int> stack{0};
        in_tree_vertex[0] = 1;
        // BFS tree via edge scan
        std::vector<std::vector<std::pair<int, int>>> inc(static_cast<size_t>(g.n()));
        for (size_t e = 0; e < edges.size(); ++e) {
            inc[static_cast<size_t>(edges[e].first)].emplace_back(edges[e].second, static_cast<int>(e));
            inc[static_cast<size_t>(edges[e].second)].emplace_back(edges[e].first, static_cast<int>(e));
        }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : inc[static_cast<size_t>(v)])
                if (!in_tree_vertex[static_cast<size_t>(w)]) {
                    in_tree_vertex[static_cast<size_t>(w)] = 1;
                    tree_edge[static_cast<size_t>(e)] = 1;
                    stack.push_back(w);
                }
        }
        for (size_t e = 0; e < edges.size(); ++e)
            if (!tree_edge[e]) cotree_edges.push_back(static_cast<int>(e));
    }

    RotationSystem rot = RotationSystem::sorted_default(g);
    detail::FaceCounter counter(g);
    int best = g.n() - g.m();  // zero faces is an unreachable floor

    // Per-vertex permutable tails (first dart of each rotation stays fixed).
    std::vector<std::vector<int>> base(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) base[static_cast<size_t>(v)] = rot.rotation[static_cast<size_t>(v)];

    auto evaluate = [&]() {
        if (allow_signatures && !cotree_edges.empty()) {
            unsigned long long patterns = 1ull << cotree_edges.size();
            for (unsigned long long mask = 0; mask < patterns; ++mask) {
                for (size_t i = 0; i < cotree_edges.size(); ++i)
                    rot.signature[static_cast<size_t>(cotree_edges[i])] =
                        (mask >> i) & 1 ? -1 : 1;
                int chi = g.n() - g.m() + counter.count(rot);
                if (chi > best) best = chi;
                if (best == 2) return;
            }
        } else {
            int chi = g.n() - g.m() + counter.count(rot);
            if (chi > best) best = chi;
        }
    };

    // Mirror-canonical tails for vertex 0: keep tail <= reversed tail.
    auto vertex0_canonical = [&](const std::vector<int>& cycle) {
        std::vector<int> tail(cycle.begin() + 1, cycle.end());
        std::vector<int> rev(tail.rbegin(), tail.rend());
        return tail <= rev;
    };

    std::function<void(int)> recurse = [&](int v) {
        if (best == 2) return;
        if (v == g.n()) {
            evaluate();
            return;
        }
        auto& cycle = rot.rotation[static_cast<size_t>(v)];
        cycle = base[static_cast<size_t>(v)];
        if (cycle.size() <= 2) {
            recurse(v + 1);
            cycle = base[static_cast<size_t>(v)];
            return;
        }
        do {
            if (v == 0 && !vertex0_canonical(cycle)) continue;
            recurse(v + 1);
            if (best == 2) break;
        } while (std::next_permutation(cycle.begin() + 1, cycle.end()));
        cycle = base[static_cast<size_t>(v)];
    };
    recurse(0);
    return best;
}

// Curvature of edge uv: 1/d(u) + 1/d(v) - 1 + 1/m + 1/m' - chi/|E|,
// with m, m' the face degrees on the edge's two sides.
inline Rational edge_curvature(const Graph& g, const RotationSystem& r, const FaceSet& fs,
                               int edge_index) {
    auto edges = g.edges();
    if (edge_index < 0 || edge_index >= static_cast<int>(edges.size()))
        throw std::out_of_range("edge index out of range");
    auto [u, v] = edges[static_cast<size_t>(edge_index)];
    auto [mu, mv] = fs.side_degree[static_cast<size_t>(edge_index)];
    int chi = g.n() - g.m() + fs.face_count();
    return Rational(1, g.degree(u)) + Rational(1, g.degree(v)) - Rational(1) +
           Rational(1, mu) + Rational(1, mv) - Rational(chi, g.m());
}

// Sum of edge curvatures; exactly zero for every valid embedding.
inline Rational curvature_sum(const Graph& g, const RotationSystem& r) {
    if (g.m() == 0) throw std::invalid_argument("curvature_sum requires at least one edge");
    FaceSet fs = trace_faces(g, r);
    Rational total;
    for (int e = 0; e < g.m(); ++e) total += edge_curvature(g, r, fs, e);
    return total;
}

// Rotation-system text format: one line per vertex "v: n1 n2 ... nk"
// (neighbors in cyclic order), optional "sig u v -1" lines, '#' comments.
inline RotationSystem parse_rotation_system(const Graph& g, std::istream& in) {
    std::vector<std::vector<int>> orders(static_cast<size_t>(g.n()));
    std::vector<char> given(static_cast<size_t>(g.n()), 0);
    std::vector<std::pair<Edge, int>> sigs;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "sig") {
            int u, v, s;
            if (!(ls >> u >> v >> s) || (s != 1 && s != -1))
                throw std::invalid_argument("malformed sig line: " + line);
            sigs.emplace_back(make_edge(u, v), s);
            continue;
        }
        if (first.back() != ':') throw std::invalid_argument("malformed rotation line: " + line);
        int v = std::stoi(first.substr(0, first.size() - 1));
        if (v < 0 || v >= g.n()) throw std::invalid_argument("rotation line for unknown vertex");
        if (given[static_cast<size_t>(v)]) throw std::invalid_argument("duplicate rotation line");
        given[static_cast<size_t>(v)] = 1;
        int w;
        while (ls >> w) orders[static_cast<size_t>(v)].push_back(w);
    }
    for (int v = 0; v < g.n(); ++v)
        if (!given[static_cast<size_t>(v)] && g.degree(v) > 0)
            throw std::invalid_argument("missing rotation line for vertex " + std::to_string(v));
    RotationSystem r = RotationSystem::from_neighbor_orders(g, orders);
    auto edges = g.edges();
    for (auto [e, s] : sigs) {
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e) throw std::invalid_argument("sig line for missing edge");
        r.signature[static_cast<size_t>(it - edges.begin())] = static_cast<int8_t>(s);
    }
    return r;
}

}  // namespace bondage
