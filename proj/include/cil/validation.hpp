#pragma once

#include "cil/graph.hpp"
#include "cil/homology.hpp"
#include "cil/ideal.hpp"
#include "cil/resolutions.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cil {

struct PropertyCount {
    int passed = 0;
    int failed = 0;
    /// Instances outside a property's hypothesis, reported but not asserted.
    int reported = 0;
};

/// Outcome of one cross-validation suite. Properties are keyed by a short
/// description, so reports print in a canonical order.
struct SuiteReport {
    std::string suite;
    int cases = 0;
    std::map<std::string, PropertyCount> properties;
    /// "case: property" for every failure, in case order.
    std::vector<std::string> failures;
    /// Every nonzero proper ideal the suite built, without repeats, in first-seen order.
    std::vector<MonomialIdeal> ideals;

    bool ok() const { return failures.empty(); }
    void record(const std::string& property, bool passed, const std::string& case_key);
    void report_only(const std::string& property);
    void collect(const MonomialIdeal& ideal);
    /// Sum of passes of `property`, zero when absent.
    int passes(const std::string& property) const;
    bool all_pass(const std::string& property) const;
};

struct CheckBounds {
    int n_max = 10;
    int t_max = 4;
    int count = 50;
    std::uint64_t seed = 1;
    FieldSpec field{};
};

/// Closed forms for K_t(P_n^c) and J_t(P_n), 2 <= t <= t_max, 2t-1 <= n <= n_max:
/// pd and reg formulas, three-way Betti agreement, shelling and CM checks.
SuiteReport check_path_suite(const CheckBounds& bounds);

/// Closed forms for K_t(C_n^c) and J_t(C_n), 2 <= t <= t_max, 2t <= n <= n_max.
SuiteReport check_cycle_suite(const CheckBounds& bounds);

/// Constructive shellings alone (no oracle), so they reach larger n.
SuiteReport check_shelling_suite(int n_max, int t_max);

/// `count` seeded random chordal graphs on 5..min(9, n_max) vertices with t in {2, 3}.
SuiteReport check_chordal_suite(const CheckBounds& bounds);

/// The graphs used by check_chordal_suite, in order.
std::vector<Graph> chordal_corpus(int count, std::uint64_t seed, int n_max = 9);

/// Alexander duality, Terai's identity, the Stanley-Reisner round trip and the
/// Taylor Euler characteristic on path, cycle and chordal ideals with n <= n_max.
SuiteReport check_duality_suite(const CheckBounds& bounds);

/// Duality checks (involution, Terai, I_{Δ^∨} = (I_Δ)^∨) on a given list of ideals.
SuiteReport check_duality_of(const std::vector<MonomialIdeal>& ideals, FieldSpec field = {});

/// One predicted-versus-observed line of the closed-form reproduction.
struct ReproductionRow {
    Family family = Family::path;
    int n = 0;
    int t = 0;
    std::string quantity;
    std::string predicted;
    std::string observed;
    /// "oracle" for homology-derived values, "computed" for combinatorial ones.
    std::string source;

    bool matches() const { return predicted == observed; }
};

/// e.g. "path n=7 t=2: pd(K)=4 predicted / 4 oracle"
std::string render_row(const ReproductionRow& row);

/// Rows for every nonzero path and cycle instance with t in 2..t_max and n <= n_max.
std::vector<ReproductionRow> reproduce_closed_forms(int n_max = 10, int t_max = 4, FieldSpec field = {});

/// First non-chordal graph (by vertex count, then edge mask) on at most n_max
/// vertices for which K_t(G^c) is nonzero and has linear quotients.
std::optional<Graph> find_converse_counterexample(int n_max = 6, int t = 3);

}  // namespace cil
