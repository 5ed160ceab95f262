#pragma once

#include "cil/graph.hpp"
#include "cil/vertex_set.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cil {

/// Squarefree monomial ideal of k[x1, ..., xn], held as its minimal generators.
///
/// Each generator is the support of a squarefree monomial. Generators form an
/// antichain and are sorted colexicographically, so two ideals are equal iff
/// their generator lists are. The zero ideal has no generators; the unit ideal
/// has the single empty support.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Zero ideal of k[x1..xn].
    explicit MonomialIdeal(int n);
    /// Minimalizes and sorts `generators`.
    MonomialIdeal(int n, std::vector<VertexSet> generators);

    static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(int n) { return MonomialIdeal(n, {VertexSet{}}); }

    int n() const { return n_; }
    const std::vector<VertexSet>& generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }
    bool is_zero() const { return generators_.empty(); }
    bool is_unit() const { return generators_.size() == 1 && generators_.front().empty(); }
    bool is_principal() const { return generators_.size() == 1; }

    /// Whether x^s lies in the ideal.
    bool contains(VertexSet s) const;
    /// Whether other ⊆ *this.
    bool contains(const MonomialIdeal& other) const;

    /// Common generator degree, if all generators share one.
    std::optional<int> uniform_degree() const;
    /// Union of all generator supports.
    VertexSet support() const;

    /// x_v · I.
    MonomialIdeal times(Vertex v) const;
    /// The same generators in k[x1..xm], m >= n.
    MonomialIdeal embedded(int m) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> generators_;
};

/// Drops non-minimal and duplicate supports; colex order.
MonomialIdeal minimalize(int n, std::vector<VertexSet> generators);

/// K_t(G): generated by x^W over the t-cliques W of g. t = 0 gives the unit ideal.
MonomialIdeal clique_ideal(const Graph& g, int t);

/// Edge ideal generated directly from the edge list.
MonomialIdeal edge_ideal(const Graph& g);

/// J_t(G), computed as the Alexander dual of K_t(G^c).
/// The zero ideal when g has no independent t-set.
MonomialIdeal independence_ideal(const Graph& g, int t);

/// J_t(G) straight from its definition: the intersection of the primes
/// (x_i : i ∈ S) over independent t-sets S, found by scanning all 2^n supports.
/// Guarded by oracle_vertex_limit().
MonomialIdeal independence_ideal_by_intersection(const Graph& g, int t);

/// I^∨: minimal transversals of the generator supports. Throws Undefined on the zero ideal.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

/// I + J. Throws InvalidInput when the ambient rings differ.
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// "(x1*x3, x2*x4)"; "(0)" for the zero ideal and "(1)" for the unit ideal.
std::string to_string(const MonomialIdeal& ideal);

}  // namespace cil
