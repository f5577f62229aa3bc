#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "medico/errors.hpp"
#include "medico/vertex_set.hpp"

namespace medico {

/// Finite simple undirected graph over vertices 0..n-1.
/// Adjacency is kept as one VertexSet per vertex; symmetry and simplicity are
/// maintained by add_edge. Treated as immutable once construction finishes.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    int order() const { return n_; }
    long long size() const { return m_; }

    bool has_edge(int u, int v) const {
        return u >= 0 && u < n_ && v >= 0 && v < n_ && u != v && adj_[u].test(v);
    }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw Error("vertex id out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw Error("self-loop rejected: " + std::to_string(u));
        if (adj_[u].test(v)) return;  // set semantics
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(std::size_t(m_));
        for (int u = 0; u < n_; ++u) {
            for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
        }
        return out;
    }

    /// Subgraph induced by `vs`, relabeled densely in ascending order of the
    /// original ids. `back_map[i]` is the original id of new vertex i.
    Graph induced(const VertexSet& vs, std::vector<int>* back_map = nullptr) const {
        std::vector<int> ids = vs.to_vector();
        std::vector<int> fwd(n_, -1);
        for (std::size_t i = 0; i < ids.size(); ++i) fwd[ids[i]] = int(i);
        Graph h(int(ids.size()));
        for (int u : ids) {
            (adj_[u] & vs).for_each([&](int v) {
                if (u < v) h.add_edge(fwd[u], fwd[v]);
            });
        }
        if (back_map) *back_map = std::move(ids);
        return h;
    }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<VertexSet> adj_;
};

/// All-pairs hop distances from one BFS per source.
/// Unreachable pairs hold the dedicated sentinel, never a large number.
class DistanceMatrix {
public:
    static constexpr std::int32_t kUnreachable = -1;

    DistanceMatrix() = default;
    explicit DistanceMatrix(const Graph& g, int jobs = 1);

    int order() const { return n_; }
    std::int32_t operator()(int u, int v) const { return d_[std::size_t(u) * n_ + v]; }
    bool reachable(int u, int v) const { return (*this)(u, v) != kUnreachable; }

private:
    void bfs_row(const Graph& g, int src);

    int n_ = 0;
    std::vector<std::int32_t> d_;
};

bool is_connected(const Graph& g);

struct BipartiteResult {
    bool bipartite = false;
    std::vector<std::int8_t> color;  // valid 2-coloring when bipartite (-1 on unreached, never happens)
    std::vector<int> odd_cycle;      // closed odd walk witness when not bipartite
};

/// BFS 2-coloring. The empty and one-vertex graphs are bipartite by convention.
BipartiteResult two_coloring(const Graph& g);

inline bool is_bipartite(const Graph& g) { return two_coloring(g).bipartite; }

}  // namespace medico
