#pragma once

#include "cil/betti_table.hpp"
#include "cil/complex.hpp"
#include "cil/ideal.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cil {

/// Coefficient field: GF(p) for a prime p, or Q when the characteristic is 0.
class FieldSpec {
public:
    /// GF(2).
    FieldSpec() = default;
    /// Throws InvalidInput unless p is prime.
    static FieldSpec prime(std::uint32_t p);
    static FieldSpec rationals();

    std::uint32_t characteristic() const { return characteristic_; }
    bool is_rational() const { return characteristic_ == 0; }

    friend bool operator==(FieldSpec, FieldSpec) = default;

private:
    explicit FieldSpec(std::uint32_t p) : characteristic_(p) {}
    std::uint32_t characteristic_ = 2;
};

/// "GF(2)", "GF(7)", "Q"
std::string to_string(FieldSpec field);

/// Reduced homology ranks indexed by dimension -1 .. top.
class HomologyRanks {
public:
    HomologyRanks() = default;
    explicit HomologyRanks(std::vector<std::size_t> by_dimension) : ranks_(std::move(by_dimension)) {}

    /// Rank of H̃_dim; zero outside the stored range.
    std::size_t at(int dim) const;
    /// Highest stored dimension (the complex dimension).
    int top_dimension() const { return static_cast<int>(ranks_.size()) - 2; }
    bool acyclic() const;
    const std::vector<std::size_t>& ranks() const { return ranks_; }

    friend bool operator==(const HomologyRanks&, const HomologyRanks&) = default;

private:
    std::vector<std::size_t> ranks_;  // ranks_[d + 1] = rank H̃_d
};

/// Exact reduced homology over `field`. Throws InvalidInput on the void complex and
/// ResourceGuard when n exceeds oracle_vertex_limit().
HomologyRanks reduced_homology_ranks(const SimplicialComplex& complex, FieldSpec field = {});

/// Graded Betti numbers of a nonzero, non-unit squarefree ideal by Hochster's formula:
/// β_{i,j}(I) = Σ_{|W|=j} dim H̃_{j-i-2}(Δ_W).
///
/// Subsets W are split across `workers` threads (0 = hardware concurrency); each
/// induced-subcomplex result is stored once per W and summed in W order, so the
/// table does not depend on scheduling.
BettiTable hochster_betti(const MonomialIdeal& ideal, FieldSpec field = {}, unsigned workers = 0);

/// hochster_betti extended to the degenerate ideals: the zero ideal has the empty
/// table and the unit ideal has β_{0,0} = 1.
BettiTable betti_oracle(const MonomialIdeal& ideal, FieldSpec field = {});

/// Reisner's criterion: every link (including the complex itself) has vanishing
/// reduced homology below its dimension.
bool reisner_cm_check(const SimplicialComplex& complex, FieldSpec field = {});

/// Σ_i (-1)^i β_{i,j}(I) for each degree j, computed from the Taylor complex by
/// Möbius inversion over lcm supports. Independent of any homology computation.
std::map<int, std::int64_t> taylor_euler_characteristic(const MonomialIdeal& ideal);

/// The same alternating sums read off a Betti table.
std::map<int, std::int64_t> euler_characteristic(const BettiTable& table);

}  // namespace cil
