#include "doctest.h"

#include "klrs/klr.hpp"

using namespace klrs;

TEST_CASE("word degrees") {
    ResidueData rd(3, {0});
    IndexVector bi{0, 1, 1, 2};
    CHECK(word_degree({GenLetter::y(2)}, bi, rd) == 2);
    CHECK(word_degree({GenLetter::psi(2)}, bi, rd) == -2);   // equal residues
    CHECK(word_degree({GenLetter::psi(1)}, bi, rd) == 1);    // adjacent residues
    CHECK(word_degree({}, bi, rd) == 0);
    CHECK(word_degree({GenLetter::e(bi)}, bi, rd) == 0);
    // additive under concatenation with threading
    GeneratorWord w1{GenLetter::psi(1), GenLetter::y(1)};
    GeneratorWord w2{GenLetter::psi(3), GenLetter::psi(2)};
    GeneratorWord w12 = w1;
    w12.insert(w12.end(), w2.begin(), w2.end());
    IndexVector mid = bi;
    swap_places(mid, 1);
    CHECK(word_degree(w12, bi, rd) == word_degree(w1, bi, rd) + word_degree(w2, mid, rd));
    CHECK_THROWS(word_degree({GenLetter::psi(4)}, bi, rd));
}

TEST_CASE("cyclotomic exponents") {
    ResidueData rd(3, {0, 2, 0});
    CHECK(rd.cyclotomic_exponent(0) == 2);
    CHECK(rd.cyclotomic_exponent(2) == 1);
    CHECK(rd.cyclotomic_exponent(1) == 0);
    ResidueData rd2(2, {0});
    CHECK(rd2.cyclotomic_exponent(1) == 0);
    ResidueData rd0(0, {3, 3, 5});
    CHECK(rd0.cyclotomic_exponent(3) == 2);
}

TEST_CASE("tau elements") {
    ResidueData rd(2, {0, 0, 0});
    Multipartition m({{3, 1}, {7, 5}, {2, 1}});
    GarnirData g = garnir_data(m, {2, 1, 3}, rd);

    Permutation id(3);
    GeneratorExpr t1 = tau_element(g, id);
    CHECK(t1.term_count() == 1);  // just e(i_A)

    Permutation s2 = Permutation::transposition(3, 2, 3);
    CHECK(tau_element(g, s2).term_count() == 2);

    Permutation s2s1 = s2 * Permutation::transposition(3, 1, 2);
    CHECK(tau_element(g, s2s1).term_count() == 4);  // 2^{l(d)}

    Permutation s1 = Permutation::transposition(3, 1, 2);
    CHECK_THROWS(tau_element(g, s1));  // not in D_A
}

TEST_CASE("generator expression normalization") {
    GeneratorExpr x(psi_word({1, 2}));
    x.add(psi_word({1, 2}), 2);
    CHECK(x.term_count() == 1);
    x.add(psi_word({1, 2}), -3);
    CHECK(x.term_count() == 0);
}
