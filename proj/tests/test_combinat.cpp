#include "doctest.h"

#include <set>

#include "klrs/combinat.hpp"

using namespace klrs;

static Multipartition mp(std::vector<std::vector<int>> c) { return Multipartition(std::move(c)); }

TEST_CASE("residues") {
    ResidueData rd3(3, {0, 0, 1});
    CHECK(residue({3, 1, 1}, rd3) == 1);
    ResidueData rd0(0, {0, 4, 0, 0, 4});
    CHECK(residue({2, 1, 1}, rd0) == 4);
    for (int l = 1; l <= 3; ++l) CHECK(residue({l, 1, 1}, rd3) == rd3.reduce(rd3.charge[l - 1]));
    CHECK_THROWS(residue({9, 1, 1}, rd3));
}

TEST_CASE("residue data validation") {
    CHECK_THROWS(ResidueData(1, {0}));
    CHECK_THROWS(ResidueData(2, {}));
    CHECK_NOTHROW(ResidueData(0, {0}));
}

TEST_CASE("cartan matrix") {
    ResidueData rd5(5, {0});
    CHECK(rd5.cartan(0, 0) == 2);
    CHECK(rd5.cartan(0, 2) == 0);
    CHECK(rd5.cartan(0, 1) == -1);
    CHECK(rd5.cartan(0, 4) == -1);
    ResidueData rd2(2, {0});
    CHECK(rd2.cartan(0, 1) == -2);
    ResidueData rd0(0, {0});
    CHECK(rd0.cartan(3, 4) == -1);
    CHECK(rd0.cartan(3, 5) == 0);
    // symmetry
    for (int e : {0, 2, 3, 4, 5, 6, 7}) {
        ResidueData rd(e, {0});
        int lim = e == 0 ? 8 : e;
        for (int i = -lim; i <= lim; ++i)
            for (int j = -lim; j <= lim; ++j) CHECK(rd.cartan(i, j) == rd.cartan(j, i));
    }
}

TEST_CASE("boundary nodes") {
    ResidueData rd(3, {0, 2, 0, 1});
    auto nu = mp({{4, 3, 1}, {2}, {4, 3}, {2, 1}});
    auto bn = boundary_nodes(nu);
    std::vector<RowIndex> rows0;
    for (auto& a : bn.removable)
        if (residue(a, rd) == 0) rows0.push_back(row_of(a));
    CHECK(rows0 == std::vector<RowIndex>{{1, 1}, {2, 1}, {3, 1}, {4, 2}});

    auto empty = mp({{}, {}, {}});
    auto bne = boundary_nodes(empty);
    CHECK(bne.removable.empty());
    CHECK(bne.addable == std::vector<Node>{{1, 1, 1}, {2, 1, 1}, {3, 1, 1}});

    auto p21 = mp({{2, 1}});
    auto bn21 = boundary_nodes(p21);
    CHECK(bn21.removable == std::vector<Node>{{1, 1, 2}, {1, 2, 1}});
    CHECK(bn21.addable == std::vector<Node>{{1, 1, 3}, {1, 2, 2}, {1, 3, 1}});
}

TEST_CASE("add/remove counts: |Add| - |Rem| = level") {
    for (int level : {1, 2, 3})
        for (int n = 0; n <= 5; ++n)
            for (auto& m : multipartitions(n, level)) {
                auto bn = boundary_nodes(m);
                CHECK((int)bn.addable.size() - (int)bn.removable.size() == level);
                for (auto& a : bn.removable)
                    CHECK(m.with_node_removed(a).with_node_added(a) == m);
            }
}

TEST_CASE("dominance") {
    CHECK(dominates(mp({{2}}), mp({{1, 1}})));
    CHECK_FALSE(dominates(mp({{1, 1}}), mp({{2}})));
    auto a = mp({{5, 3, 2, 1}, {2}, {3}});
    auto b = mp({{3, 3, 2, 1}, {2}, {3, 2}});
    CHECK(dominates(a, b));
    CHECK_FALSE(dominates(b, a));
    // partial order on small multipartitions
    for (int level : {1, 2})
        for (int n = 2; n <= 5; ++n) {
            auto all = multipartitions(n, level);
            for (auto& x : all) {
                CHECK(dominates(x, x));
                for (auto& y : all) {
                    if (dominates(x, y) && dominates(y, x)) CHECK(x == y);
                    for (auto& z : all)
                        if (dominates(x, y) && dominates(y, z)) CHECK(dominates(x, z));
                }
            }
        }
}

TEST_CASE("initial tableau") {
    auto m = mp({{3, 1}, {1, 1, 1}, {4, 2}});
    Tableau t = Tableau::initial(m);
    CHECK(t.entry(1, 1, 3) == 3);
    CHECK(t.entry(1, 2, 1) == 4);
    CHECK(t.entry(2, 3, 1) == 7);
    CHECK(t.entry(3, 1, 1) == 8);
    CHECK(t.entry(3, 2, 2) == 13);
    CHECK(t.is_standard());
    CHECK(Tableau::initial(mp({{}})).size() == 0);
}

TEST_CASE("tableau degrees") {
    ResidueData rd(2, {0});
    CHECK(tableau_degree(Tableau::initial(mp({{}})), rd) == 0);
    CHECK(tableau_degree(Tableau::initial(mp({{2}})), rd) == 1);
    CHECK(tableau_degree(Tableau::initial(mp({{1, 1}})), rd) == 0);
}

TEST_CASE("residue sequences") {
    ResidueData rd(3, {0, 0, 1});
    Tableau t = Tableau::initial(mp({{1}, {1}, {1}}));
    CHECK(t.residue_sequence(rd) == std::vector<int>{0, 0, 1});
    // place permutation: s_r swaps entries r, r+1 of the sequence
    Tableau u = Tableau::initial(mp({{2, 1}}));
    auto seq = u.residue_sequence(rd);
    auto seq2 = u.acted_simple(1).residue_sequence(rd);
    std::swap(seq[0], seq[1]);
    CHECK(seq == seq2);
    // rows of t^mu are arithmetic progressions of step +1 mod e
    for (auto& m : multipartitions(5, 2)) {
        ResidueData rr(3, {0, 2});
        Tableau t0 = Tableau::initial(m);
        for (int l = 1; l <= 2; ++l)
            for (int r = 1; r <= m.rows(l); ++r)
                for (int c = 1; c + 1 <= m.row_length(l, r); ++c)
                    CHECK(rr.res_eq(residue({l, r, c}, rr) + 1, residue({l, r, c + 1}, rr)));
    }
}

TEST_CASE("removable strips") {
    ResidueData rd(3, {0, 0, 1});
    auto nu = mp({{5, 3, 2, 1}, {2}, {3, 2}});
    auto strips = removable_strips(nu, 0, 2, rd);
    std::vector<RowIndex> rows;
    for (auto& s : strips) rows.push_back(s.row());
    CHECK(rows == std::vector<RowIndex>{{1, 1}, {1, 4}, {2, 1}, {3, 1}, {3, 2}});

    ResidueData rd1(0, {0});
    auto one = removable_strips(mp({{1}}), 0, 1, rd1);
    CHECK(one.size() == 1);
    CHECK(one[0].length == 1);
    // removing from row 1 of (2,2) breaks the shape
    auto none = removable_strips(mp({{2, 2}}), 1, 1, rd1);
    for (auto& s : none) CHECK(s.row() != RowIndex{1, 1});
}

TEST_CASE("tableau dominance and d(t)") {
    auto m = mp({{5, 4}});
    Tableau t0 = Tableau::initial(m);
    CHECK(t0.d_permutation().is_identity());
    Tableau t = t0;
    for (int r : {5, 6, 7, 8}) t = t.acted_simple(r);
    CHECK(t.d_permutation().canonical_word() == std::vector<int>{5, 6, 7, 8});
    CHECK(t.entry(1, 1, 5) == 9);

    for (auto& sh : {mp({{2, 1}}), mp({{2, 2}}), mp({{3, 2, 1}}), mp({{2, 1}, {2}})}) {
        auto tabs = standard_tableaux(sh);
        for (auto& s : tabs) {
            CHECK(dominates_tableaux(Tableau::initial(sh), s));
            CHECK(dominates_tableaux(s, s));
            for (auto& u : tabs)
                CHECK(dominates_tableaux(s, u) == s.d_permutation().bruhat_leq(u.d_permutation()));
        }
    }
}

TEST_CASE("standard tableaux enumeration") {
    CHECK(standard_tableaux(mp({{}})).size() == 1);
    CHECK(standard_tableaux(mp({{4}})).size() == 1);
    CHECK(standard_tableaux(mp({{2, 1}})).size() == 2);
    CHECK(standard_tableaux(mp({{2}, {1}, {3}, {}, {}})).size() == 60);
    for (auto& sh : {mp({{3, 2}}), mp({{2, 2}, {1}}), mp({{2, 1}, {2, 1}})})
        CHECK((long long)standard_tableaux(sh).size() == count_standard_tableaux(sh));
    // basis order: t^mu is first
    auto tabs = standard_tableaux(mp({{3, 2}, {1}}));
    CHECK(tabs[0] == Tableau::initial(mp({{3, 2}, {1}})));
}

TEST_CASE("Garnir data, worked two-row example") {
    ResidueData rd(2, {0, 0, 0});
    auto m = mp({{3, 1}, {7, 5}, {2, 1}});
    Node A{2, 1, 3};
    REQUIRE(is_garnir_node(m, A));
    GarnirData g = garnir_data(m, A, rd);
    CHECK(g.bA == 3);
    CHECK(g.aA == 2);
    CHECK(g.cA == 1);
    CHECK(g.kA == 8);
    CHECK(g.DA.size() == 3);
    std::set<std::vector<int>> words;
    for (auto& d : g.DA) words.insert(d.canonical_word());
    CHECK(words == std::set<std::vector<int>>{{}, {2}, {2, 1}});
    // t_A as drawn
    CHECK(g.tA.entry(2, 1, 1) == 5);
    CHECK(g.tA.entry(2, 1, 3) == 8);
    CHECK(g.tA.entry(2, 1, 7) == 14);
    CHECK(g.tA.entry(2, 2, 1) == 7);
    CHECK(g.tA.entry(2, 2, 2) == 12);
    CHECK(g.tA.is_standard());  // standard here since d0 != 1
    // brick transpositions
    REQUIRE(g.brick_transpositions.size() == 2);
    CHECK(g.brick_transpositions[0] ==
          Permutation::transposition(19, 8, 10) * Permutation::transposition(19, 9, 11));
    CHECK(g.brick_transpositions[1] ==
          Permutation::transposition(19, 10, 12) * Permutation::transposition(19, 11, 13));
    // the Garnir tableau is row standard but not standard
    CHECK(g.garnir_tableau.is_row_standard());
    CHECK_FALSE(g.garnir_tableau.is_standard());
    CHECK(g.garnir_tableau.entry(2, 1, 3) == 10);
    CHECK(g.garnir_tableau.entry(2, 2, 1) == 7);
    CHECK(g.garnir_tableau.entry(2, 2, 2) == 8);
}

TEST_CASE("Garnir data, degenerate cases") {
    ResidueData rd0(0, {0});
    auto m = mp({{2, 2}});
    GarnirData g = garnir_data(m, {1, 1, 1}, rd0);
    CHECK(g.belt.empty());
    CHECK(g.bA == 0);
    CHECK(g.DA.size() == 1);
    CHECK(g.tA == g.garnir_tableau);

    // delta < e: empty row-r part
    ResidueData rd3(3, {0});
    GarnirData g2 = garnir_data(mp({{2, 2}}), {1, 1, 1}, rd3);
    CHECK(g2.aA == 0);
    CHECK(g2.DA.size() == 1);
    CHECK_THROWS(garnir_data(mp({{2, 1}}), {1, 1, 2}, rd3));
}

TEST_CASE("Garnir group and coset properties") {
    ResidueData rd(2, {0});
    auto m = mp({{6, 6}});
    for (const auto& A : garnir_nodes(m)) {
        GarnirData g = garnir_data(m, A, rd);
        if (g.aA == 0 || g.cA == 0) {
            CHECK(g.DA.size() == 1);
            continue;
        }
        // |D_A| = binom(b, a)
        long long binom = 1;
        for (int i = 1; i <= g.aA; ++i) binom = binom * (g.bA - g.aA + i) / i;
        CHECK((long long)g.DA.size() == binom);
        // Coxeter relations for the brick transpositions
        int n = m.size();
        for (int r = 1; r < g.bA; ++r) {
            CHECK((g.brick_transpositions[r - 1] * g.brick_transpositions[r - 1]).is_identity());
            if (r + 1 < g.bA) {
                auto& a = g.brick_transpositions[r - 1];
                auto& b = g.brick_transpositions[r];
                CHECK(a * b * a == b * a * b);
            }
            for (int s = r + 2; s < g.bA; ++s) {
                auto& a = g.brick_transpositions[r - 1];
                auto& b = g.brick_transpositions[s - 1];
                CHECK(a * b == b * a);
            }
        }
        (void)n;
    }
}

TEST_CASE("multipartition counts") {
    CHECK(multipartitions(6, 2).size() == 65);
    CHECK(multipartitions(6, 3).size() == 221);
    CHECK(multipartitions(0, 2).size() == 1);
}
