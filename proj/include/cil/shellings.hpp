#pragma once

#include "cil/complex.hpp"
#include "cil/resolutions.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cil {

/// A facet ordering F_1 < ... < F_m.
///
/// It is a shelling when for all i < j some v ∈ F_j ∖ F_i has
/// F_j ∖ F_ℓ = {v} for some ℓ < j.
struct ShellingOrder {
    std::vector<VertexSet> facets;
    friend bool operator==(const ShellingOrder&, const ShellingOrder&) = default;
};

/// Throws InvalidInput when `order` is not a permutation of the facets.
bool verify_shelling(const SimplicialComplex& complex, const ShellingOrder& order);

/// Shelling of Δ_{K_t(P^c)} for the path visiting `path` in order: the shelling for
/// the path minus its last vertex, followed by the shelling for the path minus its
/// last two vertices (with t - 1) with those two vertices added to each facet.
/// Throws InvalidInput when |path| < 2t - 1.
ShellingOrder path_shelling(std::span<const Vertex> path, int t);

/// path_shelling on x1, ..., xn.
ShellingOrder path_shelling(int n, int t);

/// Shelling of Δ_{K_t(C_n^c)}: the path shellings of the n vertex-deleted paths
/// x_{i+1}, ..., x_n, x_1, ..., x_{i-1} concatenated for i = 1..n, keeping the
/// first occurrence of a repeated facet. Throws InvalidInput when n < 2t or n < 3.
ShellingOrder cycle_shelling(int n, int t);

/// The order x^{F_1^c} < ... < x^{F_m^c} on I_{Δ^∨} with its sets.
/// Throws InvalidInput on an order that is not a shelling, and Undefined when a
/// facet is the whole vertex set (the dual ideal is the unit ideal).
LinearQuotientOrder shelling_to_linear_quotients(const SimplicialComplex& complex, const ShellingOrder& order);

/// Search over shedding vertices in ascending order, memoized on subcomplexes.
bool is_vertex_decomposable(const SimplicialComplex& complex);

/// Exhaustive search for a shelling; nullopt proves none exists.
/// Throws ResourceGuard beyond 12 facets.
std::optional<ShellingOrder> find_shelling(const SimplicialComplex& complex);

}  // namespace cil
