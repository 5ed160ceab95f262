#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cil {

/// 1-based vertex (or variable) index, as printed: vertex 3 is x3.
using Vertex = int;

/// Largest ambient vertex count representable by a VertexSet.
inline constexpr int kMaxVertices = 64;

/// A subset of {1, ..., 64} stored as a 64-bit word; vertex v occupies bit v-1.
///
/// The natural ordering on the underlying word is the colexicographic order on
/// subsets, which is the canonical order used for generators and facets.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }

    static VertexSet of(std::initializer_list<Vertex> vertices) {
        VertexSet s;
        for (Vertex v : vertices) s.insert(v);
        return s;
    }

    static VertexSet of(const std::vector<Vertex>& vertices) {
        VertexSet s;
        for (Vertex v : vertices) s.insert(v);
        return s;
    }

    /// {first, ..., last}; empty when last < first.
    static constexpr VertexSet interval(Vertex first, Vertex last) {
        VertexSet s;
        for (Vertex v = first; v <= last; ++v) s.insert(v);
        return s;
    }

    /// {1, ..., n}.
    static constexpr VertexSet first_n(int n) { return interval(1, n); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(Vertex v) const { return (bits_ >> (v - 1)) & 1U; }
    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << (v - 1); }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    /// Smallest member; undefined on the empty set.
    constexpr Vertex min() const { return std::countr_zero(bits_) + 1; }
    /// Largest member; undefined on the empty set.
    constexpr Vertex max() const { return 64 - std::countl_zero(bits_); }

    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    template <class F>
    constexpr void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Vertex>(std::countr_zero(b) + 1));
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return from_bits(a.bits_ ^ b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    /// Colexicographic order.
    friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// "{1,3,4}"
std::string to_string(VertexSet s);

/// "x1*x3*x4"; the empty set renders as "1".
std::string monomial_string(VertexSet s);

/// All t-subsets of `ground` in colex order.
std::vector<VertexSet> subsets_of_size(VertexSet ground, int t);

}  // namespace cil
