#include "cil/complex.hpp"
#include "cil/errors.hpp"
#include "cil/homology.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace cil;
using support::vs;

namespace {

SimplicialComplex cx(int n, std::initializer_list<std::initializer_list<Vertex>> facets) {
    std::vector<VertexSet> out;
    for (auto f : facets) out.push_back(VertexSet::of(f));
    return SimplicialComplex(n, out);
}

BettiTable table(std::initializer_list<std::tuple<int, int, std::uint64_t>> entries) {
    BettiTable t(BettiSubject::ideal);
    for (auto [i, j, b] : entries) t.add(i, j, b);
    return t;
}

BettiTable koszul_table(const MonomialIdeal& ideal) {
    BettiTable t(BettiSubject::ideal);
    for (const auto& [key, b] : oracle::betti_koszul(ideal.n(), support::masks(ideal)))
        t.add(key.first, key.second, static_cast<std::uint64_t>(b));
    return t;
}

/// The six-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane() {
    return cx(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

}  // namespace

TEST_SUITE("homology-oracle") {
    TEST_CASE("fields") {
        CHECK(to_string(FieldSpec{}) == "GF(2)");
        CHECK(to_string(FieldSpec::prime(7)) == "GF(7)");
        CHECK(to_string(FieldSpec::rationals()) == "Q");
        CHECK_THROWS_AS(FieldSpec::prime(4), InvalidInput);
        CHECK_THROWS_AS(FieldSpec::prime(1), InvalidInput);
        CHECK_NOTHROW(FieldSpec::prime(2147483647U));
    }

    TEST_CASE("reduced homology") {
        const HomologyRanks circle = reduced_homology_ranks(cx(3, {{1, 2}, {2, 3}, {1, 3}}));
        CHECK(circle.at(1) == 1);
        CHECK(circle.at(0) == 0);
        CHECK(circle.at(-1) == 0);
        const HomologyRanks two_points = reduced_homology_ranks(cx(4, {{1, 2}, {3, 4}}));
        CHECK(two_points.at(0) == 1);
        CHECK(two_points.at(1) == 0);
        CHECK(reduced_homology_ranks(SimplicialComplex::simplex(4)).acyclic());
        CHECK(reduced_homology_ranks(SimplicialComplex::empty_complex(2)).at(-1) == 1);
        CHECK_THROWS_AS(reduced_homology_ranks(SimplicialComplex::void_complex(2)), InvalidInput);
        CHECK_THROWS_AS(reduced_homology_ranks(SimplicialComplex::simplex(13)), ResourceGuard);
    }

    TEST_CASE("homology depends on the field for the projective plane") {
        const SimplicialComplex rp2 = projective_plane();
        const HomologyRanks gf2 = reduced_homology_ranks(rp2, FieldSpec{});
        CHECK(gf2.at(1) == 1);
        CHECK(gf2.at(2) == 1);
        CHECK(reduced_homology_ranks(rp2, FieldSpec::rationals()).acyclic());
        CHECK(reduced_homology_ranks(rp2, FieldSpec::prime(3)).acyclic());
        CHECK_FALSE(reisner_cm_check(rp2, FieldSpec{}));
        CHECK(reisner_cm_check(rp2, FieldSpec::rationals()));
    }

    TEST_CASE("Hochster's formula on small ideals") {
        const MonomialIdeal ci(4, {vs({1, 3}), vs({2, 4})});
        CHECK(hochster_betti(ci) == table({{0, 2, 2}, {1, 4, 1}}));
        const MonomialIdeal p4 = clique_ideal(Graph::path(4).complement(), 2);
        CHECK(hochster_betti(p4) == table({{0, 2, 3}, {1, 3, 2}}));
        const MonomialIdeal j = independence_ideal(Graph::cycle(4), 2);
        CHECK(hochster_betti(j) == table({{0, 2, 4}, {1, 3, 4}, {2, 4, 1}}));
        // The same values from the independent upper-Koszul oracle.
        CHECK(koszul_table(ci) == table({{0, 2, 2}, {1, 4, 1}}));
        CHECK(koszul_table(p4) == table({{0, 2, 3}, {1, 3, 2}}));
        CHECK(koszul_table(j) == table({{0, 2, 4}, {1, 3, 4}, {2, 4, 1}}));
        CHECK_THROWS_AS(hochster_betti(MonomialIdeal::zero(3)), InvalidInput);
        CHECK_THROWS_AS(hochster_betti(MonomialIdeal::unit(3)), InvalidInput);
        CHECK_THROWS_AS(hochster_betti(MonomialIdeal(13, {vs({1, 13})})), ResourceGuard);
    }

    TEST_CASE("Hochster's formula matches the upper-Koszul oracle") {
        std::mt19937_64 rng(101);
        for (int round = 0; round < 60; ++round) {
            const int n = 2 + static_cast<int>(rng() % 6);
            const MonomialIdeal i(n, support::sets(oracle::random_ideal(n, 1 + static_cast<int>(rng() % 6), rng)));
            CHECK(hochster_betti(i) == koszul_table(i));
        }
        for (int n = 4; n <= 7; ++n)
            for (int t = 2; t <= 3; ++t) {
                const MonomialIdeal k = clique_ideal(Graph::cycle(n).complement(), t);
                if (!k.is_zero()) CHECK(hochster_betti(k) == koszul_table(k));
            }
    }

    TEST_CASE("worker count does not change the result") {
        const MonomialIdeal j = independence_ideal(Graph::cycle(10), 3);
        const BettiTable one = hochster_betti(j, FieldSpec{}, 1);
        CHECK(hochster_betti(j, FieldSpec{}, 3) == one);
        CHECK(hochster_betti(j, FieldSpec{}, 8) == one);
    }

    TEST_CASE("GF(2), GF(p) and Q agree on the constructive families") {
        for (int n = 4; n <= 9; ++n)
            for (int t = 2; t <= 3; ++t) {
                for (const Graph& g : {Graph::path(n), Graph::cycle(n)}) {
                    const MonomialIdeal j = independence_ideal(g, t);
                    if (j.is_zero()) continue;
                    const BettiTable gf2 = hochster_betti(j, FieldSpec{});
                    CHECK(hochster_betti(j, FieldSpec::rationals()) == gf2);
                    CHECK(hochster_betti(j, FieldSpec::prime(5)) == gf2);
                }
            }
    }

    TEST_CASE("Reisner's criterion") {
        CHECK(reisner_cm_check(stanley_reisner_complex(clique_ideal(Graph::cycle(4).complement(), 2))));
        CHECK_FALSE(reisner_cm_check(cx(4, {{1, 2}, {3, 4}})));
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const Graph g = random_chordal(8, seed);
            const MonomialIdeal j = independence_ideal(g, 3);
            if (!j.is_zero()) CHECK(reisner_cm_check(stanley_reisner_complex(j)));
        }
        CHECK(reisner_cm_check(SimplicialComplex::simplex(3)));
        CHECK_THROWS_AS(reisner_cm_check(SimplicialComplex::void_complex(3)), InvalidInput);
    }

    TEST_CASE("reg and pd") {
        const BettiTable ci = table({{0, 2, 2}, {1, 4, 1}});
        CHECK(reg_pd_from_table(ci) == RegPd{3, 1});
        CHECK(reg_pd_from_table(ci.as_quotient()) == RegPd{2, 2});
        CHECK(ci.as_quotient().as_ideal() == ci);
        CHECK(reg_pd_from_table(hochster_betti(clique_ideal(Graph::path(4).complement(), 2))) == RegPd{2, 1});
        CHECK(reg_pd_from_table(hochster_betti(independence_ideal(Graph::cycle(4), 2)).as_quotient()).pd == 3);
        CHECK_THROWS_AS(reg_pd_from_table(BettiTable{}), Undefined);
    }

    TEST_CASE("linear resolutions") {
        CHECK(has_linear_resolution(hochster_betti(clique_ideal(Graph::path(4).complement(), 2)), 2));
        CHECK_FALSE(has_linear_resolution(table({{0, 2, 2}, {1, 4, 1}}), 2));
        CHECK(has_linear_resolution(hochster_betti(independence_ideal(Graph::cycle(6), 2)), 4));
        CHECK_THROWS_AS(has_linear_resolution(BettiTable{}, 2), InvalidInput);
        CHECK_THROWS_AS(has_linear_resolution(table({{0, 2, 1}}).as_quotient(), 2), InvalidInput);
    }

    TEST_CASE("Taylor Euler characteristic matches the alternating Betti sums") {
        std::mt19937_64 rng(55);
        for (int round = 0; round < 60; ++round) {
            const int n = 2 + static_cast<int>(rng() % 7);
            const MonomialIdeal i(n, support::sets(oracle::random_ideal(n, 1 + static_cast<int>(rng() % 7), rng)));
            CHECK(taylor_euler_characteristic(i) == euler_characteristic(hochster_betti(i)));
        }
    }

    TEST_CASE("Betti text rendering") {
        const std::string text = render_text(table({{0, 2, 2}, {1, 4, 1}}));
        CHECK(text == "i\\j-i  2  3\n   0:  2  .\n   1:  .  1\n");
    }
}
