#include "doctest.h"

#include "klrs/perm.hpp"

using namespace klrs;

TEST_CASE("left-to-right products and inverses") {
    Permutation a = Permutation::transposition(4, 1, 2);
    Permutation b = Permutation::transposition(4, 2, 3);
    Permutation ab = a * b;  // first a, then b
    CHECK(ab(1) == 3);
    CHECK(ab(2) == 1);
    CHECK(ab(3) == 2);
    CHECK((ab * ab.inverse()).is_identity());
}

TEST_CASE("cycle s(l,m) and its canonical word") {
    Permutation c = Permutation::cycle_lm(6, 2, 5);
    CHECK(c(2) == 5);
    CHECK(c(3) == 2);
    CHECK(c(5) == 4);
    CHECK(c.canonical_word() == std::vector<int>{2, 3, 4});
    CHECK(Permutation::from_word(6, {2, 3, 4}) == c);
}

TEST_CASE("canonical words are reduced and reproduce the permutation") {
    // all of S_5
    std::vector<int> img{1, 2, 3, 4, 5};
    do {
        Permutation w(img);
        auto word = w.canonical_word();
        CHECK((long long)word.size() == w.length());
        CHECK(Permutation::from_word(5, word) == w);
    } while (std::next_permutation(img.begin(), img.end()));
}

TEST_CASE("canonical word of the longest element of S_3 has length 3") {
    Permutation w0(std::vector<int>{3, 2, 1});
    CHECK(w0.canonical_word().size() == 3);
}

TEST_CASE("descent flags match length changes") {
    std::vector<int> img{1, 2, 3, 4};
    do {
        Permutation w(img);
        for (int r = 1; r < 4; ++r) {
            Permutation ws = w;
            ws.apply_simple_right(r);
            CHECK(w.has_right_descent(r) == (ws.length() < w.length()));
            Permutation sw(std::vector<int>{w(1), w(2), w(3), w(4)});
            // left descent: strip gives shorter word
            if (w.has_left_descent(r)) CHECK(w.strip_left(r).length() == w.length() - 1);
        }
    } while (std::next_permutation(img.begin(), img.end()));
}

TEST_CASE("Bruhat order agrees with the subword characterization on S_4") {
    std::vector<Permutation> all;
    std::vector<int> img{1, 2, 3, 4};
    do
        all.push_back(Permutation(img));
    while (std::next_permutation(img.begin(), img.end()));

    auto subword_leq = [&](const Permutation& u, const Permutation& w) {
        auto ww = w.canonical_word();
        // u <= w iff some subword of a reduced word of w multiplies to u
        int m = (int)ww.size();
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) sub.push_back(ww[i]);
            if (Permutation::from_word(4, sub) == u) return true;
        }
        return false;
    };
    for (const auto& u : all)
        for (const auto& w : all) CHECK(u.bruhat_leq(w) == subword_leq(u, w));
}
