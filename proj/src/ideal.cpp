#include "cil/ideal.hpp"

#include "cil/errors.hpp"

#include <algorithm>
#include <string>

namespace cil {

namespace {

void check_ambient(int n) {
    if (n < 0 || n > kMaxVertices) throw InvalidInput("ambient variable count must lie in 0.." + std::to_string(kMaxVertices));
}

}  // namespace

MonomialIdeal minimalize(int n, std::vector<VertexSet> generators) {
    return MonomialIdeal(n, std::move(generators));
}

MonomialIdeal::MonomialIdeal(int n) : n_(n) { check_ambient(n); }

MonomialIdeal::MonomialIdeal(int n, std::vector<VertexSet> generators) : n_(n) {
    check_ambient(n);
    const VertexSet ambient = VertexSet::first_n(n);
    for (VertexSet g : generators)
        if (!g.is_subset_of(ambient)) throw InvalidInput("generator " + monomial_string(g) + " uses a variable outside x1..x" + std::to_string(n));

    std::sort(generators.begin(), generators.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (VertexSet g : generators) {
        const bool redundant =
            std::any_of(generators_.begin(), generators_.end(), [&](VertexSet kept) { return kept.is_subset_of(g); });
        if (!redundant) generators_.push_back(g);
    }
    std::sort(generators_.begin(), generators_.end());
}

bool MonomialIdeal::contains(VertexSet s) const {
    return std::any_of(generators_.begin(), generators_.end(), [&](VertexSet g) { return g.is_subset_of(s); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    return std::all_of(other.generators_.begin(), other.generators_.end(), [&](VertexSet g) { return contains(g); });
}

std::optional<int> MonomialIdeal::uniform_degree() const {
    if (generators_.empty()) return std::nullopt;
    const int d = generators_.front().size();
    for (VertexSet g : generators_)
        if (g.size() != d) return std::nullopt;
    return d;
}

VertexSet MonomialIdeal::support() const {
    VertexSet s;
    for (VertexSet g : generators_) s |= g;
    return s;
}

MonomialIdeal MonomialIdeal::times(Vertex v) const {
    if (v < 1 || v > n_) throw InvalidInput("variable x" + std::to_string(v) + " is outside the ring");
    std::vector<VertexSet> gens = generators_;
    for (VertexSet& g : gens) g.insert(v);
    return MonomialIdeal(n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::embedded(int m) const {
    if (m < n_) throw InvalidInput("cannot embed into a smaller ring");
    return MonomialIdeal(m, generators_);
}

MonomialIdeal clique_ideal(const Graph& g, int t) { return MonomialIdeal(g.n(), enumerate_cliques(g, t)); }

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<VertexSet> gens;
    for (const auto& [u, v] : g.edges()) gens.push_back(VertexSet::of({u, v}));
    return MonomialIdeal(g.n(), std::move(gens));
}

MonomialIdeal independence_ideal(const Graph& g, int t) {
    const MonomialIdeal k = clique_ideal(g.complement(), t);
    if (k.is_zero()) return MonomialIdeal::zero(g.n());
    return alexander_dual(k);
}

MonomialIdeal independence_ideal_by_intersection(const Graph& g, int t) {
    require_oracle_size(g.n(), "independence ideal by intersection");
    const std::vector<VertexSet> primes = enumerate_independent_sets(g, t);
    if (primes.empty()) return MonomialIdeal::zero(g.n());
    // x^F lies in the intersection iff F meets every prime's support.
    std::vector<VertexSet> members;
    const std::uint64_t limit = std::uint64_t{1} << g.n();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        const VertexSet f = VertexSet::from_bits(bits);
        if (std::all_of(primes.begin(), primes.end(), [&](VertexSet p) { return p.intersects(f); })) members.push_back(f);
    }
    return MonomialIdeal(g.n(), std::move(members));
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw Undefined("the Alexander dual of the zero ideal is undefined");
    // Berge's incremental transversal algorithm.
    std::vector<VertexSet> transversals{VertexSet{}};
    for (VertexSet edge : ideal.generators()) {
        std::vector<VertexSet> next;
        for (VertexSet tr : transversals) {
            if (tr.intersects(edge)) {
                next.push_back(tr);
                continue;
            }
            edge.for_each([&](Vertex v) {
                VertexSet grown = tr;
                grown.insert(v);
                next.push_back(grown);
            });
        }
        transversals = MonomialIdeal(ideal.n(), std::move(next)).generators();
    }
    return MonomialIdeal(ideal.n(), std::move(transversals));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.n() != b.n()) throw InvalidInput("ideal sum needs a common ambient ring");
    std::vector<VertexSet> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.n(), std::move(gens));
}

std::string to_string(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return "(0)";
    std::string out = "(";
    bool first = true;
    for (VertexSet g : ideal.generators()) {
        if (!first) out += ", ";
        out += monomial_string(g);
        first = false;
    }
    out += ')';
    return out;
}

}  // namespace cil
