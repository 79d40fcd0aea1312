#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bondage {

using Edge = std::pair<int, int>;  // (u, v) with u < v
using EdgeList = std::vector<Edge>;

inline Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge");
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph on dense vertex ids 0..n-1.
// Immutable after construction; adjacency lists are kept sorted.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n, const EdgeList& edges = {}) : adj_(static_cast<size_t>(check_n(n))) {
        for (auto [u, v] : edges) add_edge_internal(u, v);
        finish();
    }

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& a = adj_[static_cast<size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    // Canonical lexicographic edge list, each edge once with u < v.
    EdgeList edges() const {
        EdgeList out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < n(); ++u)
            for (int v : adj_[static_cast<size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    static int check_n(int n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n()) throw std::out_of_range("vertex id out of range");
    }
    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge");
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    void finish() {
        m_ = 0;
        for (auto& a : adj_) {
            std::sort(a.begin(), a.end());
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                throw std::invalid_argument("duplicate edge");
            m_ += static_cast<int>(a.size());
        }
        m_ /= 2;
    }

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

inline int degree(const Graph& g, int v) { return g.degree(v); }

inline int max_degree(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("max_degree of empty graph");
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

inline int min_degree(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("min_degree of empty graph");
    int d = g.degree(0);
    for (int v = 1; v < g.n(); ++v) d = std::min(d, g.degree(v));
    return d;
}

// Girth by BFS from every vertex; nullopt for acyclic graphs. O(n*m).
inline std::optional<int> girth(const Graph& g) {
    int best = -1;
    std::vector<int> dist(static_cast<size_t>(g.n()));
    std::vector<int> parent(static_cast<size_t>(g.n()));
    for (int root = 0; root < g.n(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[static_cast<size_t>(root)] = 0;
        q.push(root);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : g.neighbors(x)) {
                if (dist[static_cast<size_t>(y)] == -1) {
                    dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                    parent[static_cast<size_t>(y)] = x;
                    q.push(y);
                } else if (y != parent[static_cast<size_t>(x)]) {
                    int len = dist[static_cast<size_t>(x)] + dist[static_cast<size_t>(y)] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

struct Component {
    Graph graph;
    std::vector<int> original_ids;  // local id -> id in the parent graph
};

inline std::vector<Component> components(const Graph& g) {
    std::vector<int> comp(static_cast<size_t>(g.n()), -1);
    int num = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        comp[static_cast<size_t>(s)] = num;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x))
                if (comp[static_cast<size_t>(y)] == -1) {
                    comp[static_cast<size_t>(y)] = num;
                    stack.push_back(y);
                }
        }
        ++num;
    }
    std::vector<Component> out(static_cast<size_t>(num));
    std::vector<int> local(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        auto& c = out[static_cast<size_t>(comp[static_cast<size_t>(v)])];
        local[static_cast<size_t>(v)] = static_cast<int>(c.original_ids.size());
        c.original_ids.push_back(v);
    }
    for (auto& c : out) {
        EdgeList edges;
        for (int v : c.original_ids)
            for (int w : g.neighbors(v))
                if (v < w) edges.emplace_back(local[static_cast<size_t>(v)], local[static_cast<size_t>(w)]);
        c.graph = Graph(static_cast<int>(c.original_ids.size()), edges);
    }
    return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

inline Graph remove_edges(const Graph& g, const EdgeList& remove) {
    for (auto [u, v] : remove)
        if (!g.has_edge(u, v)) throw std::invalid_argument("edge to remove not present");
    EdgeList keep;
    auto removed = remove;
    std::sort(removed.begin(), removed.end());
    for (auto e : g.edges())
        if (!std::binary_search(removed.begin(), removed.end(), e)) keep.push_back(e);
    return Graph(g.n(), keep);
}

inline int common_neighbors(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common_neighbors of a vertex with itself");
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::vector<int> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return static_cast<int>(both.size());
}

// ---- graph6 (nauty ASCII small-graph format, n <= 62) ----

inline std::string to_graph6(const Graph& g) {
    if (g.n() > 62) throw std::invalid_argument("graph6 writer limited to n <= 62");
    std::string out;
    out.push_back(static_cast<char>(g.n() + 63));
    int acc = 0, nbits = 0;
    for (int col = 1; col < g.n(); ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph from_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    size_t pos = 0;
    int n = s[pos] - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("graph6 reader limited to n <= 62");
    ++pos;
    EdgeList edges;
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            if (nbits == 0) {
                if (pos >= s.size()) throw std::invalid_argument("truncated graph6 string");
                int c = s[pos++] - 63;
                if (c < 0 || c > 63) throw std::invalid_argument("bad graph6 byte");
                acc = c;
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) edges.emplace_back(row, col);
            --nbits;
        }
    return Graph(n, edges);
}

inline std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

// ---- built-in families for tests and the harness ----

inline Graph path_graph(int n) {
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, e);
}

inline Graph complete_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph complete_bipartite(int a, int b) {
    EdgeList e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

inline Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

inline Graph petersen_graph() {
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.push_back(make_edge(i, (i + 1) % 5));  // outer cycle
        e.push_back(make_edge(i, i + 5));        // spokes
        e.push_back(make_edge(i + 5, (i + 2) % 5 + 5));  // inner pentagram
    }
    return Graph(10, e);
}

}  // namespace bondage
