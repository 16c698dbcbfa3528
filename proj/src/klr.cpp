#include "klrs/klr.hpp"

#include <algorithm>

namespace klrs {

long long word_degree(const GeneratorWord& w, IndexVector bi, const ResidueData& rd) {
    long long deg = 0;
    for (const auto& g : w) {
        switch (g.kind) {
            case GenLetter::Y:
                if (g.arg < 1 || g.arg > (int)bi.size()) throw std::out_of_range("y index");
                deg += 2;
                break;
            case GenLetter::Psi: {
                if (g.arg < 1 || g.arg + 1 > (int)bi.size()) throw std::out_of_range("psi index");
                deg -= rd.cartan(bi[g.arg - 1], bi[g.arg]);
                swap_places(bi, g.arg);
                break;
            }
            case GenLetter::Idem:
                break;  // degree 0, and it does not move strings
        }
    }
    return deg;
}

GeneratorExpr tau_element(const GarnirData& gd, const Permutation& d) {
    bool in_DA = false;
    for (const auto& x : gd.DA)
        if (x == d) in_DA = true;
    if (!in_DA) throw std::invalid_argument("d is not a minimal coset representative");

    int n = gd.tA.size();
    GeneratorExpr acc(GeneratorWord{GenLetter::e(IndexVector(gd.iA))});
    for (int r : d.canonical_word()) {
        const Permutation& wr = gd.brick_transpositions[r - 1];
        GeneratorExpr factor(GeneratorWord{});  // 1
        factor.add(psi_word(wr.canonical_word()), 1);
        acc = acc * factor;
    }
    (void)n;
    return acc;
}

}  // namespace klrs
