#include "cil/validation.hpp"

#include "cil/complex.hpp"
#include "cil/errors.hpp"
#include "cil/shellings.hpp"

#include <algorithm>
#include <stdexcept>

namespace cil {

void SuiteReport::record(const std::string& property, bool passed, const std::string& case_key) {
    PropertyCount& count = properties[property];
    if (passed) {
        ++count.passed;
    } else {
        ++count.failed;
        failures.push_back(case_key + ": " + property);
    }
}

void SuiteReport::report_only(const std::string& property) { ++properties[property].reported; }

void SuiteReport::collect(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit()) return;
    if (std::find(ideals.begin(), ideals.end(), ideal) == ideals.end()) ideals.push_back(ideal);
}

int SuiteReport::passes(const std::string& property) const {
    const auto it = properties.find(property);
    return it == properties.end() ? 0 : it->second.passed;
}

bool SuiteReport::all_pass(const std::string& property) const {
    const auto it = properties.find(property);
    return it != properties.end() && it->second.passed > 0 && it->second.failed == 0;
}

namespace {

std::string case_key(const char* family, int n, int t) {
    return std::string(family) + " n=" + std::to_string(n) + " t=" + std::to_string(t);
}

int pd_of(const BettiTable& table) { return reg_pd_from_table(table).pd; }
int quotient_reg(const BettiTable& ideal_table) { return reg_pd_from_table(ideal_table.as_quotient()).reg; }
int quotient_pd(const BettiTable& ideal_table) { return reg_pd_from_table(ideal_table.as_quotient()).pd; }

/// Oracle tables shared by the split nodes of a suite.
class OracleCache {
public:
    explicit OracleCache(FieldSpec field) : field_(field) {}

    const BettiTable& table(const MonomialIdeal& ideal) {
        std::vector<std::uint64_t> key;
        key.push_back(static_cast<std::uint64_t>(ideal.n()));
        for (VertexSet g : ideal.generators()) key.push_back(g.bits());
        auto it = memo_.find(key);
        if (it == memo_.end()) it = memo_.emplace(std::move(key), betti_oracle(ideal, field_)).first;
        return it->second;
    }

private:
    FieldSpec field_;
    std::map<std::vector<std::uint64_t>, BettiTable> memo_;
};

/// Shelling properties shared by the path, cycle and shelling suites.
void check_shelling(SuiteReport& report, const std::string& key, const std::string& prefix, const SimplicialComplex& complex,
                    const ShellingOrder& order, int t, const BettiTable* dual_table) {
    bool verified = false;
    try {
        verified = verify_shelling(complex, order);
    } catch (const InvalidInput&) {
        verified = false;
    }
    report.record(prefix + " shelling verifies", verified, key);
    report.record(prefix + " shelling facets have size 2t-2",
                  std::all_of(order.facets.begin(), order.facets.end(), [t](VertexSet f) { return f.size() == 2 * t - 2; }), key);
    if (!verified) return;
    const LinearQuotientOrder lq = shelling_to_linear_quotients(complex, order);
    report.record(prefix + " shelling gives linear quotients of the dual", is_valid(lq), key);
    if (dual_table != nullptr) report.record("shelling Betti = oracle (J)", betti_from_linear_quotients(lq) == *dual_table, key);
}

}  // namespace

SuiteReport check_path_suite(const CheckBounds& bounds) {
    SuiteReport report;
    report.suite = "path";
    for (int t = 2; t <= bounds.t_max; ++t) {
        if (2 * t - 2 >= 1 && 2 * t - 2 <= bounds.n_max)
            report.record("K_t(P_n^c) = 0 below n = 2t-1", clique_ideal(Graph::path(2 * t - 2).complement(), t).is_zero(),
                          case_key("path", 2 * t - 2, t));
        for (int n = 2 * t - 1; n <= bounds.n_max; ++n) {
            ++report.cases;
            const std::string key = case_key("path", n, t);
            const Graph path = Graph::path(n);
            const MonomialIdeal k = clique_ideal(path.complement(), t);
            report.record("K_t(P_n^c) nonzero from n = 2t-1", !k.is_zero(), key);
            if (k.is_zero()) continue;
            report.collect(k);
            const BettiTable k_table = hochster_betti(k, bounds.field);
            report.record("pd(K_t(P_n^c)) = n-2t+1", pd_of(k_table) == n - 2 * t + 1, key);
            report.record("reg(R/K_t(P_n^c)) = t-1", quotient_reg(k_table) == t - 1, key);
            report.record("K_t(P_n^c) t-linear", has_linear_resolution(k_table, t), key);
            if (t == 2) report.record("pd(I(P_n^c)) = n-3", pd_of(k_table) == n - 3, key);

            const VertexSplitTree tree = chordal_vertex_split(path, t);
            const LinearQuotientOrder split_order = linear_quotients_from_split(tree);
            report.record("split order is linear quotients", is_valid(split_order), key);
            report.record("linear-quotient Betti = oracle (K)", betti_from_linear_quotients(split_order) == k_table, key);

            const MonomialIdeal j = independence_ideal(path, t);
            report.collect(j);
            report.record("J_t by duality = J_t by intersection", j == independence_ideal_by_intersection(path, t), key);
            const BettiTable j_table = hochster_betti(j, bounds.field);
            report.record("path recursion = oracle (J)", path_betti_recursion(n, t) == j_table, key);
            report.record("pd(R/J_t(P_n)) = t", quotient_pd(j_table) == t, key);
            report.record("J_t(P_n) (n-2t+2)-linear", has_linear_resolution(j_table, n - 2 * t + 2), key);

            const SimplicialComplex complex = stanley_reisner_complex(k);
            const DimensionInfo info = dimension_and_purity(complex);
            report.record("dim Δ_{K_t(P_n^c)} = 2t-3 and pure", info.dim == 2 * t - 3 && info.pure, key);
            report.record("R/K_t(P_n^c) Cohen-Macaulay", reisner_cm_check(complex, bounds.field), key);
            check_shelling(report, key, "path", complex, path_shelling(n, t), t, &j_table);
        }
    }
    return report;
}

SuiteReport check_cycle_suite(const CheckBounds& bounds) {
    SuiteReport report;
    report.suite = "cycle";
    for (int t = 2; t <= bounds.t_max; ++t) {
        if (2 * t - 1 <= bounds.n_max)
            report.record("K_t(C_n^c) = 0 below n = 2t", clique_ideal(Graph::cycle(2 * t - 1).complement(), t).is_zero(),
                          case_key("cycle", 2 * t - 1, t));
        for (int n = 2 * t; n <= bounds.n_max; ++n) {
            ++report.cases;
            const std::string key = case_key("cycle", n, t);
            const Graph cycle = Graph::cycle(n);
            const MonomialIdeal k = clique_ideal(cycle.complement(), t);
            report.record("K_t(C_n^c) nonzero from n = 2t", !k.is_zero(), key);
            if (k.is_zero()) continue;
            report.collect(k);
            const BettiTable k_table = hochster_betti(k, bounds.field);
            report.record("pd(K_t(C_n^c)) = n-2t+1", pd_of(k_table) == n - 2 * t + 1, key);
            report.record("reg(R/K_t(C_n^c)) = 2t-2", quotient_reg(k_table) == 2 * t - 2, key);
            if (t == 2) report.record("pd(I(C_n^c)) = n-3", pd_of(k_table) == n - 3, key);

            const MonomialIdeal j = independence_ideal(cycle, t);
            report.collect(j);
            report.record("J_t by duality = J_t by intersection", j == independence_ideal_by_intersection(cycle, t), key);
            const BettiTable j_table = hochster_betti(j, bounds.field);
            report.record("pd(R/J_t(C_n)) = 2t-1", quotient_pd(j_table) == 2 * t - 1, key);
            report.record("J_t(C_n) (n-2t+2)-linear", has_linear_resolution(j_table, n - 2 * t + 2), key);

            const CycleDecomposition split = cycle_decomposition(n, t);
            report.record("K_t(C_n^c) = x_n K_{t-1}(L^c) + K_t(P_{n-1}^c)", split.identity_holds, key);
            report.record("pd(R/J_t(C_n)) <= decomposition bound", quotient_pd(j_table) <= split.pd_quotient_bound, key);
            report.collect(split.link_part);
            report.collect(split.path_part);

            const SimplicialComplex complex = stanley_reisner_complex(k);
            const DimensionInfo info = dimension_and_purity(complex);
            report.record("dim Δ_{K_t(C_n^c)} = 2t-3 and pure", info.dim == 2 * t - 3 && info.pure, key);
            report.record("R/K_t(C_n^c) Cohen-Macaulay", reisner_cm_check(complex, bounds.field), key);
            check_shelling(report, key, "cycle", complex, cycle_shelling(n, t), t, &j_table);
        }
    }
    return report;
}

SuiteReport check_shelling_suite(int n_max, int t_max) {
    SuiteReport report;
    report.suite = "shelling";
    for (int t = 1; t <= t_max; ++t) {
        for (int n = std::max(1, 2 * t - 1); n <= n_max; ++n) {
            ++report.cases;
            const std::string key = case_key("path", n, t);
            const MonomialIdeal k = clique_ideal(Graph::path(n).complement(), t);
            report.collect(k);
            check_shelling(report, key, "path", stanley_reisner_complex(k), path_shelling(n, t), t, nullptr);
        }
        for (int n = std::max(3, 2 * t); n <= n_max; ++n) {
            ++report.cases;
            const std::string key = case_key("cycle", n, t);
            const MonomialIdeal k = clique_ideal(Graph::cycle(n).complement(), t);
            report.collect(k);
            check_shelling(report, key, "cycle", stanley_reisner_complex(k), cycle_shelling(n, t), t, nullptr);
        }
    }
    return report;
}

std::vector<Graph> chordal_corpus(int count, std::uint64_t seed, int n_max) {
    const int top = std::min(9, n_max);
    if (top < 2) throw InvalidInput("the chordal corpus needs n_max >= 2");
    const int low = std::min(5, top);
    std::vector<Graph> corpus;
    for (std::uint64_t s = seed; static_cast<int>(corpus.size()) < count; ++s) {
        const int n = low + static_cast<int>(s % static_cast<std::uint64_t>(top - low + 1));
        Graph g = random_chordal(n, s);
        // Complete graphs have K_2(G^c) = 0 and say nothing.
        if (g.edge_count() == static_cast<std::size_t>(n * (n - 1) / 2)) continue;
        corpus.push_back(std::move(g));
    }
    return corpus;
}

SuiteReport check_chordal_suite(const CheckBounds& bounds) {
    SuiteReport report;
    report.suite = "chordal";
    OracleCache oracle(bounds.field);
    const std::vector<Graph> corpus = chordal_corpus(bounds.count, bounds.seed, bounds.n_max);
    for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
        const Graph& g = corpus[idx];
        report.record("random_chordal output is chordal", is_chordal(g), "chordal#" + std::to_string(idx));
        for (int t = 2; t <= 3; ++t) {
            const std::string key = "chordal#" + std::to_string(idx) + " n=" + std::to_string(g.n()) + " t=" + std::to_string(t);
            const MonomialIdeal k = clique_ideal(g.complement(), t);
            if (k.is_zero()) {
                report.report_only("K_t(G^c) = 0 (skipped)");
                continue;
            }
            ++report.cases;
            report.collect(k);

            std::optional<VertexSplitTree> tree;
            try {
                tree = chordal_vertex_split(g, t);
            } catch (const std::logic_error&) {
                tree.reset();
            }
            report.record("vertex split verifies at every node", tree.has_value(), key);

            std::optional<LinearQuotientOrder> found;
            try {
                found = find_linear_quotients(k, LinearQuotientSearch{128});
            } catch (const ResourceGuard&) {
                found.reset();
            }
            report.record("find_linear_quotients succeeds", found.has_value() && is_valid(*found), key);

            const BettiTable& k_table = oracle.table(k);
            if (found) report.record("linear-quotient Betti = oracle (K)", betti_from_linear_quotients(*found) == k_table, key);
            report.record("K_t(G^c) t-linear", has_linear_resolution(k_table, t), key);
            report.record("reg(R/K_t(G^c)) = t-1", quotient_reg(k_table) == t - 1, key);
            if (t == 2) report.record("I(G^c) 2-linear", has_linear_resolution(k_table, 2), key);

            if (tree) {
                const LinearQuotientOrder split_order = linear_quotients_from_split(*tree);
                report.record("split order is linear quotients", is_valid(split_order), key);
                report.record("split-order Betti = oracle (K)", betti_from_linear_quotients(split_order) == k_table, key);
                for (const SplitNode& node : tree->nodes) {
                    if (node.is_leaf()) continue;
                    report.collect(node.ideal);
                    const MonomialIdeal& j = tree->nodes[node.without_vertex].ideal;
                    const MonomialIdeal& kk = tree->nodes[node.with_vertex].ideal;
                    report.collect(j);
                    report.collect(kk);
                    const BettiTable& i_table = oracle.table(node.ideal);
                    const BettiTable& j_table = oracle.table(j);
                    const BettiTable& kk_table = oracle.table(kk);
                    report.record("Betti splitting identity", verify_betti_splitting(node.ideal, j, kk, i_table, j_table, kk_table), key);
                    if (!j.is_zero())
                        report.record("pd(I) = max{pd(J)+1, pd(K)}",
                                      pd_of(i_table) == std::max(pd_of(j_table) + 1, pd_of(kk_table)), key);
                    else
                        report.record("pd(I) = pd(K) when J = 0", pd_of(i_table) == pd_of(kk_table), key);
                }
            }

            const MonomialIdeal j = independence_ideal(g, t);
            report.collect(j);
            const BettiTable& j_table = oracle.table(j);
            report.record("pd(R/J_t(G)) = t", quotient_pd(j_table) == t, key);
            const SimplicialComplex complex = stanley_reisner_complex(j);
            report.record("Δ_{J_t(G)} pure", dimension_and_purity(complex).pure, key);
            report.record("Δ_{J_t(G)} vertex decomposable", is_vertex_decomposable(complex), key);
            report.record("R/J_t(G) Cohen-Macaulay over GF(2)", reisner_cm_check(complex, FieldSpec{}), key);
            report.record("R/J_t(G) Cohen-Macaulay over Q", reisner_cm_check(complex, FieldSpec::rationals()), key);

            // reg(R/J_t(G)) = max{reg(R/J_t(G∖u)) + 1, reg(R/J_{t-1}(G∖N[u]))}, asserted only
            // when both smaller ideals are nonzero.
            const Vertex u = *first_simplicial_vertex(g);
            const MonomialIdeal without_u = independence_ideal(g.without(u), t);
            const MonomialIdeal outside = independence_ideal(g.induced(g.vertices() - closed_neighborhood(g, u)), t - 1);
            if (without_u.is_zero() || outside.is_zero()) {
                report.report_only("reg(R/J_t(G)) splits at a simplicial vertex");
            } else {
                const int expected = std::max(quotient_reg(oracle.table(without_u)) + 1, quotient_reg(oracle.table(outside)));
                report.record("reg(R/J_t(G)) splits at a simplicial vertex", quotient_reg(j_table) == expected, key);
            }
        }
    }
    return report;
}

SuiteReport check_duality_of(const std::vector<MonomialIdeal>& ideals, FieldSpec field) {
    SuiteReport report;
    report.suite = "duality";
    for (std::size_t idx = 0; idx < ideals.size(); ++idx) {
        const MonomialIdeal& ideal = ideals[idx];
        if (ideal.is_zero() || ideal.is_unit()) continue;
        ++report.cases;
        report.collect(ideal);
        const std::string key = "ideal#" + std::to_string(idx) + " " + to_string(ideal);
        const MonomialIdeal dual = alexander_dual(ideal);
        report.record("Alexander dual is an involution", alexander_dual(dual) == ideal, key);
        const BettiTable table = hochster_betti(ideal, field);
        const BettiTable dual_table = hochster_betti(dual, field);
        report.record("pd(I^∨) = reg(R/I)", pd_of(dual_table) == quotient_reg(table), key);
        const SimplicialComplex complex = stanley_reisner_complex(ideal);
        report.record("Stanley-Reisner round trip", stanley_reisner_ideal(complex) == ideal, key);
        report.record("I_{Δ^∨} = (I_Δ)^∨", stanley_reisner_ideal(dual_complex(complex)) == dual, key);
        report.record("Taylor Euler characteristic = Betti alternating sum",
                      taylor_euler_characteristic(ideal) == euler_characteristic(table), key);
    }
    return report;
}

SuiteReport check_duality_suite(const CheckBounds& bounds) {
    std::vector<MonomialIdeal> corpus;
    for (int n = 3; n <= bounds.n_max; ++n)
        for (int t = 1; t <= bounds.t_max; ++t) {
            corpus.push_back(clique_ideal(Graph::path(n).complement(), t));
            corpus.push_back(clique_ideal(Graph::cycle(n).complement(), t));
        }
    for (const Graph& g : chordal_corpus(std::min(bounds.count, 20), bounds.seed, bounds.n_max))
        for (int t = 2; t <= 3; ++t) corpus.push_back(clique_ideal(g.complement(), t));
    std::erase_if(corpus, [](const MonomialIdeal& i) { return i.is_zero() || i.is_unit(); });
    SuiteReport report = check_duality_of(corpus, bounds.field);
    // Field independence on these shellable families.
    if (!bounds.field.is_rational())
        for (std::size_t idx = 0; idx < report.ideals.size(); ++idx) {
            const MonomialIdeal& ideal = report.ideals[idx];
            report.record("Betti numbers agree over GF(2) and Q",
                          hochster_betti(ideal, FieldSpec{}) == hochster_betti(ideal, FieldSpec::rationals()),
                          "ideal#" + std::to_string(idx) + " " + to_string(ideal));
        }
    return report;
}

std::string render_row(const ReproductionRow& row) {
    const bool spaced = row.quantity.find(' ') != std::string::npos;
    return std::string(to_string(row.family)) + " n=" + std::to_string(row.n) + " t=" + std::to_string(row.t) + ": " +
           row.quantity + (spaced ? " = " : "=") + row.predicted + " predicted / " + row.observed + " " + row.source;
}

std::vector<ReproductionRow> reproduce_closed_forms(int n_max, int t_max, FieldSpec field) {
    std::vector<ReproductionRow> rows;
    for (Family family : {Family::path, Family::cycle}) {
        for (int n = 3; n <= n_max; ++n) {
            for (int t = 2; t <= t_max; ++t) {
                const ClosedForm cf = closed_form_invariants(family, n, t);
                if (!cf.nonzero) continue;
                const Graph g = family == Family::path ? Graph::path(n) : Graph::cycle(n);
                const MonomialIdeal k = clique_ideal(g.complement(), t);
                const MonomialIdeal j = independence_ideal(g, t);
                const BettiTable k_table = hochster_betti(k, field);
                const BettiTable j_table = hochster_betti(j, field);
                const SimplicialComplex complex = stanley_reisner_complex(k);
                auto add = [&](std::string quantity, std::string predicted, std::string observed, const char* source) {
                    rows.push_back({family, n, t, std::move(quantity), std::move(predicted), std::move(observed), source});
                };
                auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };

                add("reg(R/K)", std::to_string(*cf.reg_quotient_clique), std::to_string(quotient_reg(k_table)), "oracle");
                add("pd(K)", std::to_string(*cf.pd_clique_ideal), std::to_string(pd_of(k_table)), "oracle");
                add("pd(R/J)", std::to_string(*cf.pd_quotient_independence), std::to_string(quotient_pd(j_table)), "oracle");
                const int low = j_table.entries().begin()->first.second;
                add("J linear degree", std::to_string(*cf.linear_degree),
                    has_linear_resolution(j_table, low) ? std::to_string(low) : std::string("none"), "oracle");
                if (family == Family::path) add("K t-linear", "yes", yes_no(has_linear_resolution(k_table, t)), "oracle");
                add("dim Δ", std::to_string(cf.dim_complex), std::to_string(dimension_and_purity(complex).dim), "computed");
                const ShellingOrder order = family == Family::path ? path_shelling(n, t) : cycle_shelling(n, t);
                add("Δ shellable", "yes", yes_no(verify_shelling(complex, order)), "computed");
                add("R/K Cohen-Macaulay", "yes", yes_no(reisner_cm_check(complex, field)), "oracle");
            }
        }
    }
    return rows;
}

std::optional<Graph> find_converse_counterexample(int n_max, int t) {
    if (n_max > 7) throw ResourceGuard("the converse search enumerates every graph and stops at 7 vertices");
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex v = 2; v <= n; ++v)
            for (Vertex u = 1; u < v; ++u) pairs.emplace_back(u, v);
        const std::uint64_t graphs = std::uint64_t{1} << pairs.size();
        for (std::uint64_t mask = 0; mask < graphs; ++mask) {
            Graph g(n);
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if (mask >> e & 1U) g.add_edge(pairs[e].first, pairs[e].second);
            if (is_chordal(g)) continue;
            const MonomialIdeal k = clique_ideal(g.complement(), t);
            if (k.is_zero()) continue;
            const auto order = find_linear_quotients(k);
            if (order && is_valid(*order)) return g;
        }
    }
    return std::nullopt;
}

}  // namespace cil
