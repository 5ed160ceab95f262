#pragma once

#include "cil/betti_table.hpp"
#include "cil/graph.hpp"
#include "cil/ideal.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cil {

/// An order f_1 < ... < f_m on G(I) together with set_I(f_i) for every i.
///
/// Valid when each colon (f_1, ..., f_{i-1}) : f_i is generated by the
/// variables in sets[i]; sets[0] is always empty.
struct LinearQuotientOrder {
    int n = 0;
    std::vector<VertexSet> order;
    std::vector<VertexSet> sets;

    MonomialIdeal ideal() const { return MonomialIdeal(n, order); }
    friend bool operator==(const LinearQuotientOrder&, const LinearQuotientOrder&) = default;
};

/// {x_k : x_k f ∈ (earlier)}. A variable qualifies iff some earlier support minus
/// supp(f) is exactly {k}.
VertexSet linear_quotient_set(std::span<const VertexSet> earlier, VertexSet f);

/// Whether (earlier) : f is generated by variables.
bool colon_is_linear(std::span<const VertexSet> earlier, VertexSet f);

/// Builds the certificate for `order` when it is an order of linear quotients on
/// the ideal it generates; nullopt otherwise. Throws InvalidInput when `order`
/// is not an antichain without repeats.
std::optional<LinearQuotientOrder> make_linear_quotient_order(int n, const std::vector<VertexSet>& order);

/// Re-checks every colon and set of a certificate.
bool is_valid(const LinearQuotientOrder& certificate);

struct LinearQuotientSearch {
    /// Larger ideals are rejected with ResourceGuard.
    std::size_t max_generators = 20;
};

/// Greedy extension with full backtracking. Since a colon only depends on the
/// set of earlier generators, failed prefixes are memoized as sets; a nullopt
/// result is therefore a proof that no order exists.
std::optional<LinearQuotientOrder> find_linear_quotients(const MonomialIdeal& ideal, LinearQuotientSearch search = {});

/// β_{i,j}(I) = Σ_{deg f_t = j - i} C(|set_I(f_t)|, i).
BettiTable betti_from_linear_quotients(const LinearQuotientOrder& certificate);

/// Checks that I = x_v I1 + I2 is a vertex splitting: I1 and I2 avoid x_v,
/// I2 ⊆ I1, and G(I) is the disjoint union of G(x_v I1) and G(I2).
bool is_vertex_splitting(const MonomialIdeal& ideal, Vertex v, const MonomialIdeal& with_vertex,
                         const MonomialIdeal& without_vertex);

/// One node of a vertex splitting: ideal = K_t(graph^c).
struct SplitNode {
    Graph graph;
    int t = 0;
    MonomialIdeal ideal;
    /// Splitting vertex u; absent at leaves (zero, unit or principal ideals).
    std::optional<Vertex> vertex;
    /// K_{t-1}((G \ N[u])^c), the ideal multiplied by u.
    std::size_t with_vertex = 0;
    /// K_t((G \ u)^c).
    std::size_t without_vertex = 0;

    bool is_leaf() const { return !vertex.has_value(); }
};

struct VertexSplitTree {
    /// nodes[0] is the root.
    std::vector<SplitNode> nodes;

    const SplitNode& root() const { return nodes.front(); }
    std::size_t split_count() const;
};

/// Recursive splitting K_t(G^c) = K_t((G∖u)^c) + u K_{t-1}((G∖N[u])^c) with u the
/// lowest-index simplicial vertex at every level; every split is verified.
/// Throws InvalidInput when g is not chordal or K_t(g^c) is zero.
VertexSplitTree chordal_vertex_split(const Graph& g, int t);

/// Linear-quotient order read off a split tree: u·(order of I1) then (order of I2).
LinearQuotientOrder linear_quotients_from_split(const VertexSplitTree& tree);

/// β_{i,j}(I) = β_{i,j}(J) + β_{i-1,j-1}(J) + β_{i,j-1}(K) for every (i, j).
/// Throws InvalidInput when |G(I)| ≠ |G(J)| + |G(K)|.
bool verify_betti_splitting(const MonomialIdeal& ideal, const MonomialIdeal& j, const MonomialIdeal& k,
                            const BettiTable& ideal_table, const BettiTable& j_table, const BettiTable& k_table);

/// Betti table of J_t(P_n) from the recursion
/// β_{i,j}(J_t(P_n)) = β_{i,j-1}(J_t(P_{n-1})) + β_{i,j}(J_{t-1}(P_{n-2})) + β_{i-1,j-1}(J_{t-1}(P_{n-2})),
/// with J_1(P_n) = (x1⋯xn) and J_t(P_{2t-1}) = (x1, x3, ..., x_{2t-1}).
/// Throws InvalidInput when n < 2t - 1 or t < 1.
BettiTable path_betti_recursion(int n, int t);

enum class Family { path, cycle };

const char* to_string(Family family);

/// Predicted invariants of K_t(G^c) and J_t(G) for G = P_n or C_n.
struct ClosedForm {
    Family family = Family::path;
    int n = 0;
    int t = 0;
    /// n >= 2t - 1 for paths, n >= 2t for cycles.
    bool nonzero = false;
    std::optional<int> reg_quotient_clique;       // reg(R/K_t(G^c))
    std::optional<int> pd_clique_ideal;           // pd(K_t(G^c))
    std::optional<int> pd_quotient_independence;  // pd(R/J_t(G))
    std::optional<int> linear_degree;             // J_t(G) has a linear resolution in this degree
    int dim_complex = -1;                         // dim Δ_{K_t(G^c)}
};

ClosedForm closed_form_invariants(Family family, int n, int t);

/// K_t(C_n^c) = x_n K_{t-1}(L^c) + K_t(P_{n-1}^c) with L the path C_n ∖ {x1, x_{n-1}, x_n}.
struct CycleDecomposition {
    MonomialIdeal ideal;
    MonomialIdeal link_part;   // K_{t-1}(L^c)
    MonomialIdeal with_last;   // x_n K_{t-1}(L^c)
    MonomialIdeal path_part;   // K_t(P_{n-1}^c)
    bool identity_holds = false;
    /// reg(x_n K_{t-1}(L^c)) + reg(K_t(P_{n-1}^c)) - 1 = 2t - 1, an upper bound on pd(R/J_t(C_n)).
    int pd_quotient_bound = 0;
};

/// Throws InvalidInput when n < 2t or n < 3.
CycleDecomposition cycle_decomposition(int n, int t);

}  // namespace cil
