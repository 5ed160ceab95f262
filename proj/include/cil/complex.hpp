#pragma once

#include "cil/ideal.hpp"
#include "cil/vertex_set.hpp"

#include <string>
#include <vector>

namespace cil {

/// Simplicial complex on the vertex set {1, ..., n}, stored by its facets.
///
/// The void complex has no facets; the empty complex {∅} has the single facet ∅.
/// Facets form an antichain in colex order.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Keeps the inclusion-maximal members of `faces` as facets.
    SimplicialComplex(int n, std::vector<VertexSet> faces);

    static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
    static SimplicialComplex empty_complex(int n) { return SimplicialComplex(n, {VertexSet{}}); }
    static SimplicialComplex simplex(int n) { return SimplicialComplex(n, {VertexSet::first_n(n)}); }

    int n() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    /// A single facet (the full simplex on that facet's vertices).
    bool is_simplex() const { return facets_.size() == 1; }

    bool contains(VertexSet face) const;
    /// Vertices appearing in some facet.
    VertexSet vertex_support() const;
    /// Faces contained in w.
    SimplicialComplex restricted_to(VertexSet w) const;

    /// Every face, in colex order. Guarded by oracle_vertex_limit().
    std::vector<VertexSet> faces() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> facets_;
};

/// Δ_I: supports containing no generator of I. The unit ideal gives the void complex.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

/// I_Δ: minimal non-faces. The void complex gives the unit ideal.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}. Throws InvalidInput when F is not a face.
SimplicialComplex link(const SimplicialComplex& complex, VertexSet face);

/// del(F) = {G ∈ Δ : G ∩ F = ∅}.
SimplicialComplex deletion(const SimplicialComplex& complex, VertexSet face);

struct DimensionInfo {
    int dim = -1;
    bool pure = true;
};

/// Throws InvalidInput on the void complex.
DimensionInfo dimension_and_purity(const SimplicialComplex& complex);

/// Δ^∨ = {X \ F : F ∉ Δ}. Throws Undefined when Δ is the full simplex on X,
/// whose Stanley–Reisner ideal is zero.
SimplicialComplex dual_complex(const SimplicialComplex& complex);

/// "<{1,2},{2,3}>"
std::string to_string(const SimplicialComplex& complex);

}  // namespace cil
