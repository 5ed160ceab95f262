#include "cil/graph.hpp"

#include "cil/errors.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace cil {

Graph::Graph(int n) : n_(n), vertices_(VertexSet::first_n(n)), adjacency_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > kMaxVertices) throw InvalidInput("graph vertex count must lie in 0.." + std::to_string(kMaxVertices));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

Graph Graph::path(int n) {
    if (n < 1) throw InvalidInput("path needs at least one vertex");
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n, 1);
    return g;
}

Graph Graph::complete(int n) {
    if (n < 1) throw InvalidInput("complete graph needs at least one vertex");
    Graph g(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 1 || v > n_ || !vertices_.contains(v))
        throw InvalidInput("vertex " + std::to_string(v) + " is not a vertex of the graph");
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidInput("loops are not allowed (vertex " + std::to_string(u) + ")");
    adjacency_[static_cast<std::size_t>(u - 1)].insert(v);
    adjacency_[static_cast<std::size_t>(v - 1)].insert(u);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(u - 1)].contains(v);
}

VertexSet Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(v - 1)];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    vertices_.for_each([&](Vertex u) {
        (adjacency_[static_cast<std::size_t>(u - 1)] - VertexSet::first_n(u)).for_each([&](Vertex v) {
            out.emplace_back(u, v);
        });
    });
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adjacency_) twice += static_cast<std::size_t>(a.size());
    return twice / 2;
}

Graph Graph::complement() const {
    Graph g = *this;
    vertices_.for_each([&](Vertex v) {
        VertexSet s = vertices_ - adjacency_[static_cast<std::size_t>(v - 1)];
        s.erase(v);
        g.adjacency_[static_cast<std::size_t>(v - 1)] = s;
    });
    return g;
}

Graph Graph::induced(VertexSet keep) const {
    Graph g = *this;
    g.vertices_ = vertices_ & keep;
    for (Vertex v = 1; v <= n_; ++v) {
        auto& a = g.adjacency_[static_cast<std::size_t>(v - 1)];
        a = g.vertices_.contains(v) ? (a & g.vertices_) : VertexSet{};
    }
    return g;
}

Graph Graph::without(Vertex v) const {
    check_vertex(v);
    VertexSet keep = vertices_;
    keep.erase(v);
    return induced(keep);
}

bool Graph::is_subgraph_of(const Graph& other) const {
    if (n_ > other.n_ || !vertices_.is_subset_of(other.vertices_)) return false;
    bool ok = true;
    vertices_.for_each([&](Vertex v) {
        if (!adjacency_[static_cast<std::size_t>(v - 1)].is_subset_of(other.adjacency_[static_cast<std::size_t>(v - 1)]))
            ok = false;
    });
    return ok;
}

bool Graph::is_clique(VertexSet keep) const {
    if (!keep.is_subset_of(vertices_)) return false;
    bool ok = true;
    keep.for_each([&](Vertex v) {
        VertexSet others = keep;
        others.erase(v);
        if (!others.is_subset_of(adjacency_[static_cast<std::size_t>(v - 1)])) ok = false;
    });
    return ok;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet s = g.neighbors(v);
    s.insert(v);
    return s;
}

bool is_simplicial_vertex(const Graph& g, Vertex v) { return g.is_clique(closed_neighborhood(g, v)); }

std::optional<Vertex> first_simplicial_vertex(const Graph& g) {
    for (Vertex v : g.vertices().members())
        if (is_simplicial_vertex(g, v)) return v;
    return std::nullopt;
}

std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g) {
    std::vector<Vertex> order;
    Graph rest = g;
    while (rest.order() > 0) {
        const auto v = first_simplicial_vertex(rest);
        if (!v) return std::nullopt;
        order.push_back(*v);
        rest = rest.without(*v);
    }
    return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

namespace {

void extend_cliques(const Graph& g, VertexSet current, VertexSet candidates, int remaining, std::vector<VertexSet>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    if (candidates.size() < remaining) return;
    for (Vertex v : candidates.members()) {
        VertexSet next = current;
        next.insert(v);
        const VertexSet higher = (candidates & g.neighbors(v)) - VertexSet::first_n(v);
        extend_cliques(g, next, higher, remaining - 1, out);
    }
}

}  // namespace

std::vector<VertexSet> enumerate_cliques(const Graph& g, int t) {
    if (t < 0) throw InvalidInput("clique size must be nonnegative");
    std::vector<VertexSet> out;
    extend_cliques(g, VertexSet{}, g.vertices(), t, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> enumerate_independent_sets(const Graph& g, int t) {
    return enumerate_cliques(g.complement(), t);
}

Graph random_chordal(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidInput("random_chordal needs n >= 1");
    // Raw engine output keeps the sequence identical across standard libraries.
    std::mt19937_64 rng(seed);
    auto draw = [&](std::uint64_t bound) { return rng() % bound; };
    Graph g(n);
    for (Vertex k = 2; k <= n; ++k) {
        if (draw(5) == 0) continue;  // new component
        const Vertex anchor = static_cast<Vertex>(draw(static_cast<std::uint64_t>(k - 1))) + 1;
        VertexSet clique = VertexSet::of({anchor});
        for (Vertex w : (g.neighbors(anchor) & VertexSet::first_n(k - 1)).members()) {
            if (draw(2) == 0) continue;
            if (clique.is_subset_of(g.neighbors(w))) clique.insert(w);
        }
        clique.for_each([&](Vertex w) { g.add_edge(k, w); });
    }
    return g;
}

namespace {

bool covers_clique(const Graph& member, VertexSet clique) { return member.is_clique(clique); }

}  // namespace

CoverCheck verify_cochordal_cover(const Graph& g, int t, const std::vector<Graph>& cover) {
    for (const Graph& h : cover)
        if (!h.is_subgraph_of(g)) throw InvalidInput("cover member is not a subgraph of the graph");
    CoverCheck result;
    for (const Graph& h : cover)
        if (!is_chordal(h.complement())) return result;
    for (VertexSet clique : enumerate_cliques(g, t)) {
        const bool hit = std::any_of(cover.begin(), cover.end(), [&](const Graph& h) { return covers_clique(h, clique); });
        if (!hit) return result;
    }
    result.valid = true;
    result.bound = (t - 1) * static_cast<int>(cover.size());
    return result;
}

std::vector<Graph> greedy_cochordal_cover(const Graph& g, int t) {
    if (g.order() > 9) throw ResourceGuard("greedy co-chordal cover is limited to 9 vertices");
    std::vector<VertexSet> uncovered = enumerate_cliques(g, t);
    std::vector<VertexSet> cochordal;
    const std::uint64_t all = g.vertices().bits();
    for (std::uint64_t sub = all;; sub = (sub - 1) & all) {
        const VertexSet s = VertexSet::from_bits(sub);
        if (!s.empty() && is_chordal(g.induced(s).complement())) cochordal.push_back(s);
        if (sub == 0) break;
    }
    std::sort(cochordal.begin(), cochordal.end());

    std::vector<Graph> cover;
    while (!uncovered.empty()) {
        VertexSet best;
        long best_count = -1;
        for (VertexSet s : cochordal) {
            const long count = std::count_if(uncovered.begin(), uncovered.end(), [&](VertexSet c) { return c.is_subset_of(s); });
            if (count > best_count || (count == best_count && s.size() > best.size())) {
                best = s;
                best_count = count;
            }
        }
        cover.push_back(g.induced(best));
        std::erase_if(uncovered, [&](VertexSet c) { return c.is_subset_of(best); });
    }
    return cover;
}

}  // namespace cil
