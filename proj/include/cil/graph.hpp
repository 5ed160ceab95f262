#pragma once

#include "cil/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cil {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple graph whose vertices are a subset of {1, ..., n}.
///
/// Paths, cycles and complete graphs use every index 1..n. Induced subgraphs
/// keep their original indices, so a subgraph lives in the same ambient ring
/// as its parent and its complement is taken relative to its own vertex set.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on {1, ..., n}.
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);

    int n() const { return n_; }
    VertexSet vertices() const { return vertices_; }
    int order() const { return vertices_.size(); }

    void add_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const;
    VertexSet neighbors(Vertex v) const;

    /// Sorted by (smaller endpoint, larger endpoint).
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;

    /// Complement on this graph's own vertex set.
    Graph complement() const;
    /// Subgraph induced on keep ∩ vertices().
    Graph induced(VertexSet keep) const;
    Graph without(Vertex v) const;

    /// True when every vertex and edge of this graph belongs to `other`.
    bool is_subgraph_of(const Graph& other) const;
    /// True when keep induces a complete subgraph.
    bool is_clique(VertexSet keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    VertexSet vertices_;
    std::vector<VertexSet> adjacency_;  // adjacency_[v-1]
};

VertexSet closed_neighborhood(const Graph& g, Vertex v);
bool is_simplicial_vertex(const Graph& g, Vertex v);

/// Lowest-index simplicial vertex, if any.
std::optional<Vertex> first_simplicial_vertex(const Graph& g);

/// Repeatedly removes the lowest-index simplicial vertex. Present iff g is chordal.
std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g);
bool is_chordal(const Graph& g);

/// All t-cliques of g in colex order. t = 0 yields the single empty clique.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int t);
/// All independent t-sets of g in colex order.
std::vector<VertexSet> enumerate_independent_sets(const Graph& g, int t);

/// Seeded chordal graph on {1..n}: each new vertex is attached to a clique of
/// the graph built so far, so reversing the insertion order eliminates it.
Graph random_chordal(int n, std::uint64_t seed);

struct CoverCheck {
    bool valid = false;
    /// (t - 1) * |cover| when valid.
    int bound = 0;
};

/// Checks that every member is co-chordal and that the members' t-cliques cover
/// those of g. Throws InvalidInput when a member is not a subgraph of g.
CoverCheck verify_cochordal_cover(const Graph& g, int t, const std::vector<Graph>& cover);

/// Greedy cover of the t-cliques of g by co-chordal induced subgraphs
/// (each round takes the subgraph covering the most uncovered t-cliques).
/// Limited to order(g) <= 9.
std::vector<Graph> greedy_cochordal_cover(const Graph& g, int t);

}  // namespace cil
