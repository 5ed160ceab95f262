#pragma once

#include "cil/homology.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cil::detail {

/// Integer matrix given column by column as (row, entry) pairs.
struct SparseMatrix {
    std::size_t rows = 0;
    std::vector<std::vector<std::pair<std::uint32_t, int>>> columns;
};

/// Exact rank over the field by Gaussian elimination (no floating point).
/// Characteristic 0 uses fraction-free integer elimination with content removal.
std::size_t rank(const SparseMatrix& matrix, FieldSpec field);

}  // namespace cil::detail
