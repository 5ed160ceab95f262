#include "cil/complex.hpp"

#include "cil/errors.hpp"

#include <algorithm>

namespace cil {

namespace {

std::vector<VertexSet> maximal_members(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (VertexSet s : sets)
        if (std::none_of(kept.begin(), kept.end(), [&](VertexSet k) { return s.is_subset_of(k); })) kept.push_back(s);
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<VertexSet> complements(const std::vector<VertexSet>& sets, int n) {
    std::vector<VertexSet> out;
    out.reserve(sets.size());
    for (VertexSet s : sets) out.push_back(VertexSet::first_n(n) - s);
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<VertexSet> faces) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw InvalidInput("complex vertex count out of range");
    for (VertexSet f : faces)
        if (!f.is_subset_of(VertexSet::first_n(n))) throw InvalidInput("face " + to_string(f) + " is outside the vertex set");
    facets_ = maximal_members(std::move(faces));
}

bool SimplicialComplex::contains(VertexSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return face.is_subset_of(f); });
}

VertexSet SimplicialComplex::vertex_support() const {
    VertexSet s;
    for (VertexSet f : facets_) s |= f;
    return s;
}

SimplicialComplex SimplicialComplex::restricted_to(VertexSet w) const {
    std::vector<VertexSet> faces;
    faces.reserve(facets_.size());
    for (VertexSet f : facets_) faces.push_back(f & w);
    return SimplicialComplex(n_, std::move(faces));
}

std::vector<VertexSet> SimplicialComplex::faces() const {
    require_oracle_size(n_, "face enumeration");
    std::vector<bool> seen(std::size_t{1} << n_, false);
    for (VertexSet f : facets_) {
        const std::uint64_t all = f.bits();
        for (std::uint64_t sub = all;; sub = (sub - 1) & all) {
            seen[sub] = true;
            if (sub == 0) break;
        }
    }
    std::vector<VertexSet> out;
    for (std::uint64_t bits = 0; bits < seen.size(); ++bits)
        if (seen[bits]) out.push_back(VertexSet::from_bits(bits));
    return out;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) return SimplicialComplex::void_complex(ideal.n());
    if (ideal.is_zero()) return SimplicialComplex::simplex(ideal.n());
    // F is a facet iff x^{F^c} is a minimal generator of the dual.
    return SimplicialComplex(ideal.n(), complements(alexander_dual(ideal).generators(), ideal.n()));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    if (complex.is_void()) return MonomialIdeal::unit(complex.n());
    return alexander_dual(MonomialIdeal(complex.n(), complements(complex.facets(), complex.n())));
}

SimplicialComplex link(const SimplicialComplex& complex, VertexSet face) {
    if (!complex.contains(face)) throw InvalidInput(to_string(face) + " is not a face");
    std::vector<VertexSet> faces;
    for (VertexSet f : complex.facets())
        if (face.is_subset_of(f)) faces.push_back(f - face);
    return SimplicialComplex(complex.n(), std::move(faces));
}

SimplicialComplex deletion(const SimplicialComplex& complex, VertexSet face) {
    std::vector<VertexSet> faces;
    faces.reserve(complex.facets().size());
    for (VertexSet f : complex.facets()) faces.push_back(f - face);
    return SimplicialComplex(complex.n(), std::move(faces));
}

DimensionInfo dimension_and_purity(const SimplicialComplex& complex) {
    if (complex.is_void()) throw InvalidInput("the void complex has no dimension");
    DimensionInfo info;
    int smallest = complex.facets().front().size();
    int largest = smallest;
    for (VertexSet f : complex.facets()) {
        smallest = std::min(smallest, f.size());
        largest = std::max(largest, f.size());
    }
    info.dim = largest - 1;
    info.pure = smallest == largest;
    return info;
}

SimplicialComplex dual_complex(const SimplicialComplex& complex) {
    const MonomialIdeal nonfaces = stanley_reisner_ideal(complex);
    if (nonfaces.is_zero()) throw Undefined("the Alexander dual of the full simplex is degenerate");
    return SimplicialComplex(complex.n(), complements(nonfaces.generators(), complex.n()));
}

std::string to_string(const SimplicialComplex& complex) {
    std::string out = "<";
    bool first = true;
    for (VertexSet f : complex.facets()) {
        if (!first) out += ',';
        out += to_string(f);
        first = false;
    }
    out += '>';
    return out;
}

}  // namespace cil
