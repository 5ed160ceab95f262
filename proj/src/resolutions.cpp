#include "cil/resolutions.hpp"

#include "cil/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace cil {

VertexSet linear_quotient_set(std::span<const VertexSet> earlier, VertexSet f) {
    VertexSet set;
    for (VertexSet g : earlier) {
        const VertexSet quotient = g - f;
        if (quotient.size() == 1) set |= quotient;
    }
    return set;
}

bool colon_is_linear(std::span<const VertexSet> earlier, VertexSet f) {
    const VertexSet set = linear_quotient_set(earlier, f);
    return std::all_of(earlier.begin(), earlier.end(), [&](VertexSet g) { return (g - f).intersects(set); });
}

std::optional<LinearQuotientOrder> make_linear_quotient_order(int n, const std::vector<VertexSet>& order) {
    const MonomialIdeal ideal(n, order);
    if (ideal.size() != order.size()) throw InvalidInput("an order of linear quotients must list the minimal generators once each");
    LinearQuotientOrder out{n, order, {}};
    out.sets.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::span<const VertexSet> earlier(order.data(), i);
        if (!colon_is_linear(earlier, order[i])) return std::nullopt;
        out.sets.push_back(linear_quotient_set(earlier, order[i]));
    }
    return out;
}

bool is_valid(const LinearQuotientOrder& certificate) {
    if (certificate.sets.size() != certificate.order.size()) return false;
    try {
        const auto rebuilt = make_linear_quotient_order(certificate.n, certificate.order);
        return rebuilt && rebuilt->sets == certificate.sets;
    } catch (const InvalidInput&) {
        return false;
    }
}

namespace {

struct LinearQuotientSearcher {
    const std::vector<VertexSet>& gens;
    std::vector<VertexSet> prefix;
    std::vector<bool> chosen;
    std::unordered_set<std::vector<bool>> dead_ends;

    bool extend() {
        if (prefix.size() == gens.size()) return true;
        if (dead_ends.contains(chosen)) return false;
        for (std::size_t c = 0; c < gens.size(); ++c) {
            if (chosen[c] || !colon_is_linear(prefix, gens[c])) continue;
            chosen[c] = true;
            prefix.push_back(gens[c]);
            if (extend()) return true;
            prefix.pop_back();
            chosen[c] = false;
        }
        dead_ends.insert(chosen);
        return false;
    }
};

}  // namespace

std::optional<LinearQuotientOrder> find_linear_quotients(const MonomialIdeal& ideal, LinearQuotientSearch search) {
    if (ideal.is_zero() || ideal.is_unit()) throw InvalidInput("linear quotients need a proper nonzero ideal");
    if (ideal.size() > search.max_generators)
        throw ResourceGuard("linear-quotient search is capped at " + std::to_string(search.max_generators) + " generators (ideal has " +
                            std::to_string(ideal.size()) + ")");
    LinearQuotientSearcher searcher{ideal.generators(), {}, std::vector<bool>(ideal.size(), false), {}};
    if (!searcher.extend()) return std::nullopt;
    return make_linear_quotient_order(ideal.n(), searcher.prefix);
}

BettiTable betti_from_linear_quotients(const LinearQuotientOrder& certificate) {
    auto binomial = [](int a, int b) {
        std::uint64_t r = 1;
        for (int k = 1; k <= b; ++k) r = r * static_cast<std::uint64_t>(a - b + k) / static_cast<std::uint64_t>(k);
        return r;
    };
    BettiTable table(BettiSubject::ideal);
    for (std::size_t idx = 0; idx < certificate.order.size(); ++idx) {
        const int degree = certificate.order[idx].size();
        const int s = certificate.sets[idx].size();
        for (int i = 0; i <= s; ++i) table.add(i, degree + i, binomial(s, i));
    }
    return table;
}

bool is_vertex_splitting(const MonomialIdeal& ideal, Vertex v, const MonomialIdeal& with_vertex,
                         const MonomialIdeal& without_vertex) {
    if (with_vertex.support().contains(v) || without_vertex.support().contains(v)) return false;
    if (!with_vertex.contains(without_vertex)) return false;
    const MonomialIdeal shifted = with_vertex.times(v);
    if (ideal_sum(shifted, without_vertex) != ideal) return false;
    std::vector<VertexSet> both = shifted.generators();
    both.insert(both.end(), without_vertex.generators().begin(), without_vertex.generators().end());
    std::sort(both.begin(), both.end());
    return both == ideal.generators();
}

std::size_t VertexSplitTree::split_count() const {
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const SplitNode& s) { return !s.is_leaf(); }));
}

namespace {

std::size_t grow_split(VertexSplitTree& tree, const Graph& g, int t) {
    const std::size_t index = tree.nodes.size();
    tree.nodes.push_back(SplitNode{g, t, clique_ideal(g.complement(), t), std::nullopt, 0, 0});
    const MonomialIdeal& ideal = tree.nodes[index].ideal;
    if (ideal.is_zero() || ideal.is_unit() || ideal.is_principal()) return index;

    const auto u = first_simplicial_vertex(g);
    if (!u) throw InvalidInput("vertex splitting needs a chordal graph");
    const Graph without = g.without(*u);
    const Graph far = g.induced(g.vertices() - closed_neighborhood(g, *u));
    const std::size_t left = grow_split(tree, far, t - 1);
    const std::size_t right = grow_split(tree, without, t);

    SplitNode& node = tree.nodes[index];
    node.vertex = *u;
    node.with_vertex = left;
    node.without_vertex = right;
    if (!is_vertex_splitting(node.ideal, *u, tree.nodes[left].ideal, tree.nodes[right].ideal))
        throw std::logic_error("vertex splitting at x" + std::to_string(*u) + " failed verification");
    return index;
}

std::vector<VertexSet> split_order(const VertexSplitTree& tree, std::size_t index) {
    const SplitNode& node = tree.nodes[index];
    if (node.is_leaf()) return node.ideal.generators();
    std::vector<VertexSet> order = split_order(tree, node.with_vertex);
    for (VertexSet& g : order) g.insert(*node.vertex);
    const std::vector<VertexSet> rest = split_order(tree, node.without_vertex);
    order.insert(order.end(), rest.begin(), rest.end());
    return order;
}

}  // namespace

VertexSplitTree chordal_vertex_split(const Graph& g, int t) {
    if (t < 1) throw InvalidInput("t must be positive");
    if (!is_chordal(g)) throw InvalidInput("vertex splitting of K_t(G^c) needs a chordal graph");
    if (clique_ideal(g.complement(), t).is_zero()) throw InvalidInput("K_t(G^c) is zero");
    VertexSplitTree tree;
    grow_split(tree, g, t);
    return tree;
}

LinearQuotientOrder linear_quotients_from_split(const VertexSplitTree& tree) {
    const auto order = make_linear_quotient_order(tree.root().ideal.n(), split_order(tree, 0));
    if (!order) throw std::logic_error("split order is not an order of linear quotients");
    return *order;
}

bool verify_betti_splitting(const MonomialIdeal& ideal, const MonomialIdeal& j, const MonomialIdeal& k,
                            const BettiTable& ideal_table, const BettiTable& j_table, const BettiTable& k_table) {
    if (ideal.size() != j.size() + k.size()) throw InvalidInput("G(I) is not the disjoint union of G(J) and G(uK)");
    std::set<BettiTable::Key> keys;
    for (const auto& e : ideal_table.entries()) keys.insert(e.first);
    for (const auto& e : j_table.entries()) {
        keys.insert(e.first);
        keys.insert({e.first.first + 1, e.first.second + 1});
    }
    for (const auto& e : k_table.entries()) keys.insert({e.first.first, e.first.second + 1});
    return std::all_of(keys.begin(), keys.end(), [&](const BettiTable::Key& key) {
        const auto [i, deg] = key;
        const std::uint64_t expected =
            j_table.at(i, deg) + (i > 0 ? j_table.at(i - 1, deg - 1) : 0) + (deg > 0 ? k_table.at(i, deg - 1) : 0);
        return ideal_table.at(i, deg) == expected;
    });
}

namespace {

BettiTable path_recursion(int n, int t, std::map<std::pair<int, int>, BettiTable>& memo) {
    if (const auto it = memo.find({n, t}); it != memo.end()) return it->second;
    BettiTable table(BettiSubject::ideal);
    if (t == 1) {
        table.add(0, n, 1);
    } else if (n == 2 * t - 1) {
        // (x1, x3, ..., x_{2t-1}): a Koszul complex on t variables.
        std::uint64_t c = t;  // C(t, i + 1)
        for (int i = 0; i < t; ++i) {
            table.add(i, i + 1, c);
            c = c * static_cast<std::uint64_t>(t - i - 1) / static_cast<std::uint64_t>(i + 2);
        }
    } else {
        const BettiTable shorter = path_recursion(n - 1, t, memo);
        const BettiTable smaller = path_recursion(n - 2, t - 1, memo);
        for (const auto& [key, b] : shorter.entries()) table.add(key.first, key.second + 1, b);
        for (const auto& [key, b] : smaller.entries()) {
            table.add(key.first, key.second, b);
            table.add(key.first + 1, key.second + 1, b);
        }
    }
    memo.emplace(std::pair{n, t}, table);
    return table;
}

}  // namespace

BettiTable path_betti_recursion(int n, int t) {
    if (t < 1) throw InvalidInput("t must be positive");
    if (n < 2 * t - 1) throw InvalidInput("J_t(P_n) is zero unless n >= 2t - 1");
    std::map<std::pair<int, int>, BettiTable> memo;
    return path_recursion(n, t, memo);
}

const char* to_string(Family family) { return family == Family::path ? "path" : "cycle"; }

ClosedForm closed_form_invariants(Family family, int n, int t) {
    if (n < 1 || t < 1) throw InvalidInput("n and t must be positive");
    ClosedForm out;
    out.family = family;
    out.n = n;
    out.t = t;
    out.nonzero = family == Family::path ? n >= 2 * t - 1 : n >= 2 * t;
    if (!out.nonzero) {
        out.dim_complex = n - 1;  // the complex is a simplex
        return out;
    }
    out.dim_complex = 2 * t - 3;
    out.pd_clique_ideal = n - 2 * t + 1;
    out.linear_degree = n - 2 * t + 2;
    if (family == Family::path) {
        out.reg_quotient_clique = t - 1;
        out.pd_quotient_independence = t;
    } else {
        // pd(J_t(C_n)) = 2t - 2, and pd(J^∨) = reg(R/J^∨∨) turns it into reg(R/K_t(C_n^c)).
        out.reg_quotient_clique = 2 * t - 2;
        out.pd_quotient_independence = 2 * t - 1;
    }
    return out;
}

CycleDecomposition cycle_decomposition(int n, int t) {
    if (t < 1) throw InvalidInput("t must be positive");
    if (n < 3 || n < 2 * t) throw InvalidInput("the cycle decomposition needs n >= max(3, 2t)");
    const Graph cycle = Graph::cycle(n);
    const Graph path = cycle.without(n);
    VertexSet l_vertices = VertexSet::first_n(n);
    l_vertices.erase(1);
    l_vertices.erase(n - 1);
    l_vertices.erase(n);
    const Graph l = cycle.induced(l_vertices);

    CycleDecomposition out;
    out.ideal = clique_ideal(cycle.complement(), t);
    out.link_part = clique_ideal(l.complement(), t - 1);
    out.with_last = out.link_part.times(n);
    out.path_part = clique_ideal(path.complement(), t);
    out.identity_holds = ideal_sum(out.with_last, out.path_part) == out.ideal;
    // reg(K_{t-1}(L^c)) = t - 1 and reg(K_t(P_{n-1}^c)) = t (both graphs are chordal).
    out.pd_quotient_bound = ((t - 1) + 1) + t - 1;
    return out;
}

}  // namespace cil
