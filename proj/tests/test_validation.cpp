#include "cil/validation.hpp"

#include <doctest.h>

using namespace cil;

TEST_SUITE("validation") {
    TEST_CASE("small suites pass and count their properties") {
        CheckBounds bounds;
        bounds.n_max = 7;
        bounds.t_max = 3;
        bounds.count = 6;
        const SuiteReport path = check_path_suite(bounds);
        CHECK(path.ok());
        CHECK(path.cases == 8);
        CHECK(path.passes("pd(K_t(P_n^c)) = n-2t+1") == 8);
        CHECK(path.passes("path recursion = oracle (J)") == 8);
        CHECK(check_cycle_suite(bounds).ok());
        CHECK(check_chordal_suite(bounds).ok());
        CHECK(check_duality_suite(bounds).ok());
        CHECK(check_shelling_suite(8, 3).ok());
    }

    TEST_CASE("reports are deterministic") {
        CheckBounds bounds;
        bounds.count = 4;
        const SuiteReport a = check_chordal_suite(bounds);
        const SuiteReport b = check_chordal_suite(bounds);
        CHECK(a.properties.size() == b.properties.size());
        CHECK(a.ideals == b.ideals);
        CHECK(chordal_corpus(10, 3) == chordal_corpus(10, 3));
    }

    TEST_CASE("failures are recorded with their case") {
        SuiteReport report;
        report.record("p", true, "a");
        report.record("p", false, "b");
        report.report_only("q");
        CHECK_FALSE(report.ok());
        CHECK(report.failures == std::vector<std::string>{"b: p"});
        CHECK(report.properties["p"].passed == 1);
        CHECK(report.properties["q"].reported == 1);
        CHECK_FALSE(report.all_pass("p"));
        CHECK_FALSE(report.all_pass("missing"));
    }

    TEST_CASE("reproduction rows") {
        const std::vector<ReproductionRow> rows = reproduce_closed_forms(8, 3);
        std::vector<std::string> text;
        for (const auto& row : rows) {
            CHECK(row.matches());
            text.push_back(render_row(row));
        }
        const auto has = [&](const std::string& line) { return std::find(text.begin(), text.end(), line) != text.end(); };
        CHECK(has("path n=7 t=2: pd(K)=4 predicted / 4 oracle"));
        CHECK(has("cycle n=8 t=2: pd(R/J)=3 predicted / 3 oracle"));
        CHECK(has("path n=5 t=3: dim Δ = 3 predicted / 3 computed"));
    }

    TEST_CASE("the converse search finds a non-chordal example") {
        const auto g = find_converse_counterexample(6, 3);
        REQUIRE(g.has_value());
        CHECK_FALSE(is_chordal(*g));
        const MonomialIdeal k = clique_ideal(g->complement(), 3);
        CHECK_FALSE(k.is_zero());
        CHECK(find_linear_quotients(k).has_value());
        CHECK_FALSE(find_converse_counterexample(4, 3).has_value());
    }
}
