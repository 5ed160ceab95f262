#include "cil/shellings.hpp"

#include "cil/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace cil {

namespace {

/// Whether `next` can follow `earlier` in a shelling.
bool extends_shelling(std::span<const VertexSet> earlier, VertexSet next) {
    VertexSet attachable;
    for (VertexSet f : earlier) {
        const VertexSet diff = next - f;
        if (diff.size() == 1) attachable |= diff;
    }
    return std::all_of(earlier.begin(), earlier.end(), [&](VertexSet f) { return (next - f).intersects(attachable); });
}

}  // namespace

bool verify_shelling(const SimplicialComplex& complex, const ShellingOrder& order) {
    std::vector<VertexSet> sorted = order.facets;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != complex.facets()) throw InvalidInput("shelling order is not a permutation of the facets");
    for (std::size_t j = 1; j < order.facets.size(); ++j)
        if (!extends_shelling(std::span<const VertexSet>(order.facets.data(), j), order.facets[j])) return false;
    return true;
}

namespace {

std::vector<VertexSet> shell_path_prefix(std::span<const Vertex> path, std::size_t length, int t) {
    if (t == 1) return {VertexSet{}};
    if (static_cast<int>(length) < 2 * t - 1) {
        VertexSet all;
        for (std::size_t k = 0; k < length; ++k) all.insert(path[k]);
        return {all};
    }
    std::vector<VertexSet> order = shell_path_prefix(path, length - 1, t);
    const VertexSet tail = VertexSet::of({path[length - 2], path[length - 1]});
    for (VertexSet g : shell_path_prefix(path, length - 2, t - 1)) order.push_back(g | tail);
    return order;
}

}  // namespace

ShellingOrder path_shelling(std::span<const Vertex> path, int t) {
    if (t < 1) throw InvalidInput("t must be positive");
    if (static_cast<int>(path.size()) < 2 * t - 1) throw InvalidInput("K_t(P_n^c) is zero unless n >= 2t - 1");
    return ShellingOrder{shell_path_prefix(path, path.size(), t)};
}

ShellingOrder path_shelling(int n, int t) {
    std::vector<Vertex> path(static_cast<std::size_t>(std::max(n, 0)));
    for (int k = 0; k < n; ++k) path[static_cast<std::size_t>(k)] = k + 1;
    return path_shelling(path, t);
}

ShellingOrder cycle_shelling(int n, int t) {
    if (t < 1) throw InvalidInput("t must be positive");
    if (n < 3 || n < 2 * t) throw InvalidInput("K_t(C_n^c) is zero unless n >= 2t");
    ShellingOrder out;
    std::unordered_set<std::uint64_t> seen;
    for (Vertex i = 1; i <= n; ++i) {
        std::vector<Vertex> path;
        for (Vertex v = i + 1; v <= n; ++v) path.push_back(v);
        for (Vertex v = 1; v < i; ++v) path.push_back(v);
        for (VertexSet f : path_shelling(path, t).facets)
            if (seen.insert(f.bits()).second) out.facets.push_back(f);
    }
    return out;
}

LinearQuotientOrder shelling_to_linear_quotients(const SimplicialComplex& complex, const ShellingOrder& order) {
    if (!verify_shelling(complex, order)) throw InvalidInput("the facet order is not a shelling");
    const VertexSet all = VertexSet::first_n(complex.n());
    std::vector<VertexSet> gens;
    gens.reserve(order.facets.size());
    for (VertexSet f : order.facets) {
        if (f == all) throw Undefined("the dual of a simplex on every vertex is the unit ideal");
        gens.push_back(all - f);
    }
    auto certificate = make_linear_quotient_order(complex.n(), gens);
    if (!certificate) throw std::logic_error("a shelling did not induce linear quotients");
    return *certificate;
}

namespace {

class DecomposabilitySearch {
public:
    bool decomposable(const SimplicialComplex& complex) {
        if (complex.is_void()) return false;
        if (complex.is_simplex()) return true;
        if (const auto it = memo_.find(complex.facets()); it != memo_.end()) return it->second;
        bool result = false;
        for (Vertex v : complex.vertex_support().members()) {
            const VertexSet x = VertexSet::of({v});
            const SimplicialComplex del = deletion(complex, x);
            const bool shedding = std::all_of(del.facets().begin(), del.facets().end(), [&](VertexSet f) {
                return std::binary_search(complex.facets().begin(), complex.facets().end(), f);
            });
            if (shedding && decomposable(link(complex, x)) && decomposable(del)) {
                result = true;
                break;
            }
        }
        memo_.emplace(complex.facets(), result);
        return result;
    }

private:
    std::map<std::vector<VertexSet>, bool> memo_;
};

struct ShellingSearch {
    const std::vector<VertexSet>& facets;
    std::vector<VertexSet> prefix;
    std::uint32_t chosen = 0;
    std::unordered_set<std::uint32_t> dead_ends;

    bool extend() {
        if (prefix.size() == facets.size()) return true;
        if (dead_ends.contains(chosen)) return false;
        for (std::size_t c = 0; c < facets.size(); ++c) {
            const std::uint32_t bit = std::uint32_t{1} << c;
            if ((chosen & bit) != 0 || !extends_shelling(prefix, facets[c])) continue;
            chosen |= bit;
            prefix.push_back(facets[c]);
            if (extend()) return true;
            prefix.pop_back();
            chosen &= ~bit;
        }
        dead_ends.insert(chosen);
        return false;
    }
};

}  // namespace

bool is_vertex_decomposable(const SimplicialComplex& complex) {
    require_oracle_size(complex.n(), "vertex decomposability");
    DecomposabilitySearch search;
    return search.decomposable(complex);
}

std::optional<ShellingOrder> find_shelling(const SimplicialComplex& complex) {
    if (complex.is_void()) throw InvalidInput("the void complex has no facets to shell");
    if (complex.facets().size() > 12) throw ResourceGuard("shelling search is capped at 12 facets");
    ShellingSearch search{complex.facets(), {}, 0, {}};
    if (!search.extend()) return std::nullopt;
    return ShellingOrder{search.prefix};
}

}  // namespace cil
