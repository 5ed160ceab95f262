#include "cil/errors.hpp"
#include "cil/vertex_set.hpp"

#include <cstdlib>
#include <string>

namespace cil {

std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Vertex v) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    });
    out += '}';
    return out;
}

std::string monomial_string(VertexSet s) {
    if (s.empty()) return "1";
    std::string out;
    s.for_each([&](Vertex v) {
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(v);
    });
    return out;
}

std::vector<VertexSet> subsets_of_size(VertexSet ground, int t) {
    std::vector<VertexSet> out;
    if (t < 0 || t > ground.size()) return out;
    const std::vector<Vertex> pool = ground.members();
    // Gosper's hack over positions in `pool`; positions order == colex order.
    const int k = static_cast<int>(pool.size());
    if (t == 0) {
        out.emplace_back();
        return out;
    }
    std::uint64_t pick = (t == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << t) - 1);
    const std::uint64_t limit = (k == 64) ? 0 : (std::uint64_t{1} << k);
    while (true) {
        VertexSet s;
        for (std::uint64_t b = pick; b != 0; b &= b - 1) s.insert(pool[static_cast<std::size_t>(std::countr_zero(b))]);
        out.push_back(s);
        const std::uint64_t low = pick & (~pick + 1);
        const std::uint64_t ripple = pick + low;
        if (ripple == 0) break;
        pick = (((ripple ^ pick) >> 2) / low) | ripple;
        if (limit != 0 && pick >= limit) break;
    }
    return out;
}

int oracle_vertex_limit() {
    if (const char* env = std::getenv("CIL_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= kMaxVertices) return static_cast<int>(v);
    }
    return 12;
}

void require_oracle_size(int n, const char* what) {
    const int limit = oracle_vertex_limit();
    if (n > limit) {
        throw ResourceGuard(std::string(what) + ": " + std::to_string(n) + " variables exceeds the limit of " +
                            std::to_string(limit) + " (set CIL_MAX_N to override)");
    }
}

}  // namespace cil
