#include "rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <optional>

namespace cil::detail {

namespace {

std::size_t rank_gf2(const SparseMatrix& m) {
    const std::size_t words = (m.rows + 63) / 64;
    // pivot[r]: reduced column whose lowest set row is r.
    std::vector<std::vector<std::uint64_t>> pivot(m.rows);
    std::size_t rank = 0;
    for (const auto& column : m.columns) {
        std::vector<std::uint64_t> v(words, 0);
        for (const auto& [row, entry] : column)
            if (entry % 2 != 0) v[row / 64] ^= std::uint64_t{1} << (row % 64);
        std::size_t w = 0;
        while (true) {
            while (w < words && v[w] == 0) ++w;
            if (w == words) break;
            const std::size_t r = w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
            if (pivot[r].empty()) {
                pivot[r] = std::move(v);
                ++rank;
                break;
            }
            const auto& p = pivot[r];
            for (std::size_t k = w; k < words; ++k) v[k] ^= p[k];
        }
    }
    return rank;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp != 0) {
        if (exp & 1U) result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return result;
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> pivot(m.rows);  // normalized: entry at r is 1
    std::size_t rank = 0;
    for (const auto& column : m.columns) {
        std::vector<std::uint64_t> v(m.rows, 0);
        for (const auto& [row, entry] : column) {
            const long long reduced = entry % static_cast<long long>(p);
            v[row] = static_cast<std::uint64_t>(reduced < 0 ? reduced + static_cast<long long>(p) : reduced);
        }
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (v[r] == 0) continue;
            if (pivot[r].empty()) {
                const std::uint64_t inv = pow_mod(v[r], p - 2, p);
                for (std::size_t k = r; k < m.rows; ++k) v[k] = v[k] * inv % p;
                pivot[r] = std::move(v);
                ++rank;
                break;
            }
            const std::uint64_t factor = v[r];
            const auto& q = pivot[r];
            for (std::size_t k = r; k < m.rows; ++k)
                if (q[k] != 0) v[k] = (v[k] + (p - factor) * q[k]) % p;
        }
    }
    return rank;
}

std::size_t rank_rational(const SparseMatrix& m) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> pivot(m.rows);
    std::size_t rank = 0;
    for (const auto& column : m.columns) {
        std::vector<cpp_int> v(m.rows);
        for (const auto& [row, entry] : column) v[row] += entry;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (v[r] == 0) continue;
            if (pivot[r].empty()) {
                pivot[r] = std::move(v);
                ++rank;
                break;
            }
            // v <- p_r * v - v_r * pivot, then strip the content.
            const auto& q = pivot[r];
            const cpp_int a = q[r];
            const cpp_int b = v[r];
            cpp_int content = 0;
            for (std::size_t k = r; k < m.rows; ++k) {
                v[k] = a * v[k] - b * q[k];
                if (v[k] != 0) content = content == 0 ? cpp_int(abs(v[k])) : cpp_int(gcd(content, v[k]));
            }
            if (content > 1)
                for (std::size_t k = r; k < m.rows; ++k)
                    if (v[k] != 0) v[k] /= content;
        }
    }
    return rank;
}

}  // namespace

std::size_t rank(const SparseMatrix& matrix, FieldSpec field) {
    if (field.is_rational()) return rank_rational(matrix);
    if (field.characteristic() == 2) return rank_gf2(matrix);
    return rank_mod_p(matrix, field.characteristic());
}

}  // namespace cil::detail
