#include "cil/errors.hpp"
#include "cil/homology.hpp"
#include "cil/resolutions.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace cil;
using support::vs;

namespace {

BettiTable table(std::initializer_list<std::tuple<int, int, std::uint64_t>> entries) {
    BettiTable t(BettiSubject::ideal);
    for (auto [i, j, b] : entries) t.add(i, j, b);
    return t;
}

const MonomialIdeal kP4 = MonomialIdeal(4, {vs({1, 3}), vs({1, 4}), vs({2, 4})});

}  // namespace

TEST_SUITE("resolutions") {
    TEST_CASE("set_I and colons") {
        const std::vector<VertexSet> earlier{vs({1, 4})};
        CHECK(linear_quotient_set(earlier, vs({1, 3})) == vs({4}));
        const std::vector<VertexSet> two{vs({1, 4}), vs({1, 3})};
        CHECK(linear_quotient_set(two, vs({2, 4})) == vs({1}));
        CHECK(colon_is_linear(two, vs({2, 4})));
        const std::vector<VertexSet> diag{vs({1, 3})};
        CHECK_FALSE(colon_is_linear(diag, vs({2, 4})));
        CHECK(linear_quotient_set(diag, vs({2, 4})).empty());
    }

    TEST_CASE("colon computations agree with the oracle") {
        std::mt19937_64 rng(3);
        for (int round = 0; round < 200; ++round) {
            const int n = 2 + static_cast<int>(rng() % 6);
            const auto gens = oracle::random_ideal(n, 2 + static_cast<int>(rng() % 5), rng);
            if (gens.size() < 2) continue;
            const std::vector<VertexSet> earlier = support::sets({gens.begin(), gens.end() - 1});
            const VertexSet f = VertexSet::from_bits(gens.back());
            const auto colon = oracle::colon(support::masks(earlier), f.bits());
            const bool linear = std::all_of(colon.begin(), colon.end(), [](oracle::Mask g) { return std::popcount(g) == 1; });
            CHECK(colon_is_linear(earlier, f) == linear);
            oracle::Mask variables = 0;
            for (oracle::Mask g : colon)
                if (std::popcount(g) == 1) variables |= g;
            CHECK(linear_quotient_set(earlier, f).bits() == variables);
        }
    }

    TEST_CASE("linear-quotient orders") {
        const auto given = make_linear_quotient_order(4, {vs({1, 4}), vs({1, 3}), vs({2, 4})});
        REQUIRE(given.has_value());
        CHECK(given->sets == std::vector{VertexSet{}, vs({4}), vs({1})});
        CHECK(is_valid(*given));
        CHECK(given->ideal() == kP4);

        const auto found = find_linear_quotients(kP4);
        REQUIRE(found.has_value());
        CHECK(is_valid(*found));
        CHECK(found->ideal() == kP4);

        CHECK_FALSE(find_linear_quotients(MonomialIdeal(4, {vs({1, 3}), vs({2, 4})})).has_value());
        const auto principal = find_linear_quotients(MonomialIdeal(3, {vs({1, 2, 3})}));
        REQUIRE(principal.has_value());
        CHECK(principal->sets == std::vector{VertexSet{}});

        CHECK_FALSE(make_linear_quotient_order(4, {vs({1, 3}), vs({2, 4})}).has_value());
        CHECK_THROWS_AS(make_linear_quotient_order(4, {vs({1, 3}), vs({1, 3})}), InvalidInput);
        CHECK_THROWS_AS(make_linear_quotient_order(4, {vs({1}), vs({1, 3})}), InvalidInput);
        CHECK_THROWS_AS(find_linear_quotients(MonomialIdeal::zero(3)), InvalidInput);
        CHECK_THROWS_AS(find_linear_quotients(clique_ideal(Graph::complete(7), 3)), ResourceGuard);
    }

    TEST_CASE("a tampered certificate is rejected") {
        auto cert = *make_linear_quotient_order(4, {vs({1, 4}), vs({1, 3}), vs({2, 4})});
        cert.sets[1] = vs({2});
        CHECK_FALSE(is_valid(cert));
        cert = *make_linear_quotient_order(4, {vs({1, 4}), vs({1, 3}), vs({2, 4})});
        std::swap(cert.order[0], cert.order[2]);
        CHECK_FALSE(is_valid(cert));
    }

    TEST_CASE("the search is complete on small ideals") {
        std::mt19937_64 rng(17);
        int with = 0;
        for (int round = 0; round < 150; ++round) {
            const int n = 3 + static_cast<int>(rng() % 4);
            const auto gens = oracle::random_ideal(n, 2 + static_cast<int>(rng() % 5), rng);
            const MonomialIdeal i(n, support::sets(gens));
            const auto found = find_linear_quotients(i);
            const bool exists = oracle::has_linear_quotients(gens);
            CHECK(found.has_value() == exists);
            if (found) {
                CHECK(oracle::linear_quotients(support::masks(found->order)));
                CHECK(betti_from_linear_quotients(*found) == hochster_betti(i));
                ++with;
            }
        }
        CHECK(with > 10);
        CHECK(with < 150);
    }

    TEST_CASE("Betti numbers from linear quotients") {
        const auto cert = *make_linear_quotient_order(4, {vs({1, 4}), vs({1, 3}), vs({2, 4})});
        CHECK(betti_from_linear_quotients(cert) == table({{0, 2, 3}, {1, 3, 2}}));
        const auto principal = *make_linear_quotient_order(3, {vs({1, 2, 3})});
        CHECK(betti_from_linear_quotients(principal) == table({{0, 3, 1}}));
    }

    TEST_CASE("vertex splitting of K_2(P_4^c)") {
        CHECK(is_vertex_splitting(kP4, 1, MonomialIdeal(4, {vs({3}), vs({4})}), MonomialIdeal(4, {vs({2, 4})})));
        CHECK_FALSE(is_vertex_splitting(kP4, 2, MonomialIdeal(4, {vs({4})}), MonomialIdeal(4, {vs({1, 3}), vs({1, 4})})));

        const VertexSplitTree tree = chordal_vertex_split(Graph::path(4), 2);
        const SplitNode& root = tree.root();
        REQUIRE(root.vertex.has_value());
        CHECK(*root.vertex == 1);
        CHECK(root.ideal == kP4);
        CHECK(tree.nodes[root.without_vertex].ideal == MonomialIdeal(4, {vs({2, 4})}));
        CHECK(tree.nodes[root.with_vertex].ideal == MonomialIdeal(4, {vs({3}), vs({4})}));
        CHECK(is_valid(linear_quotients_from_split(tree)));
    }

    TEST_CASE("vertex splitting of K_2(P_3^c) and of random chordal graphs") {
        const VertexSplitTree p3 = chordal_vertex_split(Graph::path(3), 2);
        // (x1*x3) is principal, so the tree is a single leaf.
        CHECK(p3.root().is_leaf());
        CHECK(p3.nodes.size() == 1);
        const VertexSplitTree p6 = chordal_vertex_split(Graph::path(6), 3);
        REQUIRE(p6.root().vertex.has_value());
        CHECK(*p6.root().vertex == 1);
        CHECK(p6.nodes[p6.root().with_vertex].ideal == MonomialIdeal(6, {vs({3, 5}), vs({3, 6}), vs({4, 6})}));
        CHECK(p6.nodes[p6.root().without_vertex].ideal == MonomialIdeal(6, {vs({2, 4, 6})}));

        const Graph g = random_chordal(7, 3);
        const MonomialIdeal k = clique_ideal(g.complement(), 2);
        if (!k.is_zero()) {
            const VertexSplitTree tree = chordal_vertex_split(g, 2);
            CHECK(tree.root().ideal == k);
            CHECK(is_valid(linear_quotients_from_split(tree)));
            for (const SplitNode& node : tree.nodes)
                if (!node.is_leaf())
                    CHECK(is_vertex_splitting(node.ideal, *node.vertex, tree.nodes[node.with_vertex].ideal,
                                              tree.nodes[node.without_vertex].ideal));
        }
        CHECK_THROWS_AS(chordal_vertex_split(Graph::cycle(5), 2), InvalidInput);
        CHECK_THROWS_AS(chordal_vertex_split(Graph::complete(4), 2), InvalidInput);
    }

    TEST_CASE("Betti splittings") {
        const MonomialIdeal j(4, {vs({2, 4})});
        const MonomialIdeal k(4, {vs({3}), vs({4})});
        CHECK(verify_betti_splitting(kP4, j, k, hochster_betti(kP4), hochster_betti(j), hochster_betti(k)));
        CHECK_FALSE(verify_betti_splitting(kP4, k, j, hochster_betti(kP4), hochster_betti(k), hochster_betti(j)));
        CHECK_THROWS_AS(verify_betti_splitting(kP4, j, j, hochster_betti(kP4), hochster_betti(j), hochster_betti(j)), InvalidInput);

        const VertexSplitTree tree = chordal_vertex_split(Graph::path(7), 3);
        const SplitNode& root = tree.root();
        CHECK(*root.vertex == 1);
        const MonomialIdeal& jj = tree.nodes[root.without_vertex].ideal;
        const MonomialIdeal& kk = tree.nodes[root.with_vertex].ideal;
        CHECK(verify_betti_splitting(root.ideal, jj, kk, hochster_betti(root.ideal), hochster_betti(jj), hochster_betti(kk)));
    }

    TEST_CASE("path recursion") {
        const BettiTable p4 = path_betti_recursion(4, 2);
        CHECK(p4.at(0, 2) == 3);
        CHECK(p4.at(1, 3) == 2);
        CHECK(p4 == hochster_betti(independence_ideal(Graph::path(4), 2)));
        CHECK(path_betti_recursion(5, 2) == hochster_betti(independence_ideal(Graph::path(5), 2)));
        CHECK(path_betti_recursion(6, 1) == table({{0, 6, 1}}));
        CHECK(path_betti_recursion(5, 3) == table({{0, 1, 3}, {1, 2, 3}, {2, 3, 1}}));
        CHECK_THROWS_AS(path_betti_recursion(4, 3), InvalidInput);
        CHECK_THROWS_AS(path_betti_recursion(4, 0), InvalidInput);
        for (int t = 1; t <= 4; ++t)
            for (int n = 2 * t - 1; n <= 10; ++n)
                CHECK(path_betti_recursion(n, t) == hochster_betti(independence_ideal(Graph::path(n), t)));
    }

    TEST_CASE("closed forms") {
        const ClosedForm p = closed_form_invariants(Family::path, 6, 2);
        CHECK(p.nonzero);
        CHECK(p.reg_quotient_clique == 1);
        CHECK(p.pd_clique_ideal == 3);
        CHECK(p.pd_quotient_independence == 2);
        CHECK(p.linear_degree == 4);
        CHECK(p.dim_complex == 1);

        const ClosedForm c = closed_form_invariants(Family::cycle, 8, 3);
        CHECK(c.pd_quotient_independence == 5);
        CHECK(c.pd_clique_ideal == 3);
        CHECK(c.dim_complex == 3);
        CHECK(c.linear_degree == 4);

        const ClosedForm zero = closed_form_invariants(Family::path, 4, 3);
        CHECK_FALSE(zero.nonzero);
        CHECK_FALSE(zero.pd_clique_ideal.has_value());
        CHECK(zero.dim_complex == 3);
        CHECK_FALSE(closed_form_invariants(Family::cycle, 5, 3).nonzero);
        CHECK_THROWS_AS(closed_form_invariants(Family::path, 0, 1), InvalidInput);
    }

    TEST_CASE("cycle decomposition") {
        const CycleDecomposition c4 = cycle_decomposition(4, 2);
        CHECK(c4.ideal == MonomialIdeal(4, {vs({1, 3}), vs({2, 4})}));
        CHECK(c4.link_part == MonomialIdeal(4, {vs({2})}));
        CHECK(c4.path_part == MonomialIdeal(4, {vs({1, 3})}));
        CHECK(c4.identity_holds);
        CHECK(cycle_decomposition(6, 2).identity_holds);
        const CycleDecomposition c6 = cycle_decomposition(6, 3);
        CHECK(c6.identity_holds);
        CHECK(c6.pd_quotient_bound == 5);
        CHECK_THROWS_AS(cycle_decomposition(5, 3), InvalidInput);
    }
}
