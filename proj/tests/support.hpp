#pragma once

#include "cil/graph.hpp"
#include "cil/ideal.hpp"
#include "oracle.hpp"

#include <vector>

namespace support {

inline std::vector<oracle::Mask> masks(const std::vector<cil::VertexSet>& sets) {
    std::vector<oracle::Mask> out;
    for (cil::VertexSet s : sets) out.push_back(s.bits());
    return out;
}

inline std::vector<oracle::Mask> masks(const cil::MonomialIdeal& ideal) { return masks(ideal.generators()); }

inline std::vector<cil::VertexSet> sets(const std::vector<oracle::Mask>& ms) {
    std::vector<cil::VertexSet> out;
    for (oracle::Mask m : ms) out.push_back(cil::VertexSet::from_bits(m));
    return out;
}

inline cil::Graph graph(int n, const oracle::Edges& edges) { return cil::Graph(n, edges); }

inline cil::VertexSet vs(std::initializer_list<cil::Vertex> members) { return cil::VertexSet::of(members); }

}  // namespace support
