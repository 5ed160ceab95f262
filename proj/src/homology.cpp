#include "cil/homology.hpp"

#include "cil/errors.hpp"
#include "rank.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace cil {

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p < 2 || p >= (std::uint32_t{1} << 31)) throw InvalidInput("field characteristic must be a prime below 2^31");
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) throw InvalidInput(std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

FieldSpec FieldSpec::rationals() { return FieldSpec(0); }

std::string to_string(FieldSpec field) {
    return field.is_rational() ? "Q" : "GF(" + std::to_string(field.characteristic()) + ")";
}

std::size_t HomologyRanks::at(int dim) const {
    const int idx = dim + 1;
    if (idx < 0 || idx >= static_cast<int>(ranks_.size())) return 0;
    return ranks_[static_cast<std::size_t>(idx)];
}

bool HomologyRanks::acyclic() const {
    return std::all_of(ranks_.begin(), ranks_.end(), [](std::size_t r) { return r == 0; });
}

namespace {

using FacesBySize = std::vector<std::vector<std::uint64_t>>;

/// faces[k] lists the faces with k vertices in increasing (colex) order.
HomologyRanks homology_of_faces(const FacesBySize& faces, FieldSpec field) {
    const std::size_t top = faces.size() - 1;  // largest face size
    // boundary_rank[k]: rank of ∂ from size-k faces to size-(k-1) faces.
    std::vector<std::size_t> boundary_rank(top + 2, 0);
    for (std::size_t k = 1; k <= top; ++k) {
        const auto& lower = faces[k - 1];
        detail::SparseMatrix m;
        m.rows = lower.size();
        m.columns.reserve(faces[k].size());
        for (std::uint64_t face : faces[k]) {
            std::vector<std::pair<std::uint32_t, int>> column;
            column.reserve(k);
            int sign = 1;
            for (std::uint64_t b = face; b != 0; b &= b - 1) {
                const std::uint64_t boundary_face = face & ~(b & (~b + 1));
                const auto it = std::lower_bound(lower.begin(), lower.end(), boundary_face);
                column.emplace_back(static_cast<std::uint32_t>(it - lower.begin()), sign);
                sign = -sign;
            }
            m.columns.push_back(std::move(column));
        }
        boundary_rank[k] = detail::rank(m, field);
    }
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t k = 0; k <= top; ++k) ranks[k] = faces[k].size() - boundary_rank[k] - boundary_rank[k + 1];
    return HomologyRanks(std::move(ranks));
}

FacesBySize faces_of(const std::vector<VertexSet>& facets) {
    std::vector<std::uint64_t> all;
    for (VertexSet f : facets) {
        const std::uint64_t bits = f.bits();
        for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
            all.push_back(sub);
            if (sub == 0) break;
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    int top = 0;
    for (std::uint64_t f : all) top = std::max(top, std::popcount(f));
    FacesBySize grouped(static_cast<std::size_t>(top) + 1);
    for (std::uint64_t f : all) grouped[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    return grouped;
}

}  // namespace

HomologyRanks reduced_homology_ranks(const SimplicialComplex& complex, FieldSpec field) {
    if (complex.is_void()) throw InvalidInput("reduced homology of the void complex is not defined here");
    require_oracle_size(complex.n(), "reduced homology");
    if (complex.is_simplex() && !complex.facets().front().empty()) {
        return HomologyRanks(std::vector<std::size_t>(static_cast<std::size_t>(complex.facets().front().size()) + 1, 0));
    }
    return homology_of_faces(faces_of(complex.facets()), field);
}

BettiTable hochster_betti(const MonomialIdeal& ideal, FieldSpec field, unsigned workers) {
    if (ideal.is_zero() || ideal.is_unit()) throw InvalidInput("Hochster's formula needs a proper nonzero ideal");
    const int n = ideal.n();
    require_oracle_size(n, "Hochster's formula");

    const std::size_t masks = std::size_t{1} << n;
    // nonface[m]: some generator divides x^m. covered[m]: union of the generators dividing x^m.
    std::vector<std::uint8_t> nonface(masks, 0);
    std::vector<std::uint64_t> covered(masks, 0);
    for (VertexSet g : ideal.generators()) {
        nonface[g.bits()] = 1;
        covered[g.bits()] = g.bits();
    }
    for (std::uint64_t m = 1; m < masks; ++m)
        for (std::uint64_t b = m; b != 0; b &= b - 1) {
            const std::uint64_t sub = m & ~(b & (~b + 1));
            nonface[m] |= nonface[sub];
            covered[m] |= covered[sub];
        }

    // Δ_W is a cone (hence acyclic) unless W is a union of generators.
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t w = 1; w < masks; ++w)
        if (covered[w] == w) subsets.push_back(w);

    std::vector<HomologyRanks> memo(subsets.size());
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t idx = first; idx < subsets.size(); idx += stride) {
            const std::uint64_t w = subsets[idx];
            FacesBySize faces(static_cast<std::size_t>(std::popcount(w)) + 1);
            for (std::uint64_t sub = w;; sub = (sub - 1) & w) {
                if (!nonface[sub]) faces[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
                if (sub == 0) break;
            }
            while (faces.size() > 1 && faces.back().empty()) faces.pop_back();
            for (auto& group : faces) std::sort(group.begin(), group.end());
            memo[idx] = homology_of_faces(faces, field);
        }
    };
    unsigned threads = workers != 0 ? workers : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, subsets.size() / 64 + 1));
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work, k, threads);
        for (auto& th : pool) th.join();
    }

    BettiTable table(BettiSubject::ideal);
    for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
        const int j = std::popcount(subsets[idx]);
        const auto& ranks = memo[idx].ranks();
        for (std::size_t k = 0; k < ranks.size(); ++k) {
            const int dim = static_cast<int>(k) - 1;
            const int i = j - dim - 2;
            if (i >= 0) table.add(i, j, ranks[k]);
        }
    }
    return table;
}

BettiTable betti_oracle(const MonomialIdeal& ideal, FieldSpec field) {
    BettiTable table(BettiSubject::ideal);
    if (ideal.is_zero()) return table;
    if (ideal.is_unit()) {
        table.add(0, 0, 1);
        return table;
    }
    return hochster_betti(ideal, field);
}

bool reisner_cm_check(const SimplicialComplex& complex, FieldSpec field) {
    if (complex.is_void()) throw InvalidInput("Reisner's criterion needs a nonvoid complex");
    require_oracle_size(complex.n(), "Reisner's criterion");
    for (VertexSet face : complex.faces()) {
        const SimplicialComplex lk = link(complex, face);
        if (lk.is_simplex()) continue;  // cones are acyclic
        const int dim = dimension_and_purity(lk).dim;
        const HomologyRanks ranks = reduced_homology_ranks(lk, field);
        for (int d = -1; d < dim; ++d)
            if (ranks.at(d) != 0) return false;
    }
    return true;
}

std::map<int, std::int64_t> taylor_euler_characteristic(const MonomialIdeal& ideal) {
    std::map<int, std::int64_t> chi;
    if (ideal.is_zero()) return chi;
    const int n = ideal.n();
    require_oracle_size(n, "Taylor Euler characteristic");
    const std::size_t masks = std::size_t{1} << n;
    // g[U] starts as [some generator divides x^U] and is Möbius-inverted to
    // Σ_{S ⊆ G(I), S ≠ ∅, lcm(S) = x^U} (-1)^{|S|-1}.
    std::vector<std::int64_t> g(masks, 0);
    for (std::uint64_t u = 0; u < masks; ++u) g[u] = ideal.contains(VertexSet::from_bits(u)) ? 1 : 0;
    for (int bit = 0; bit < n; ++bit) {
        const std::uint64_t b = std::uint64_t{1} << bit;
        for (std::uint64_t u = masks; u-- > 0;)
            if (u & b) g[u] -= g[u ^ b];
    }
    for (std::uint64_t u = 0; u < masks; ++u)
        if (g[u] != 0) chi[std::popcount(u)] += g[u];
    std::erase_if(chi, [](const auto& e) { return e.second == 0; });
    return chi;
}

std::map<int, std::int64_t> euler_characteristic(const BettiTable& table) {
    const BettiTable ideal = table.as_ideal();
    std::map<int, std::int64_t> chi;
    for (const auto& [key, b] : ideal.entries()) chi[key.second] += (key.first % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(b);
    std::erase_if(chi, [](const auto& e) { return e.second == 0; });
    return chi;
}

}  // namespace cil
