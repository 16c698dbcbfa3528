#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "klrs/combinat.hpp"
#include "klrs/perm.hpp"

namespace klrs {

using Coeff = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// residue vector, acted on by place permutations
using IndexVector = std::vector<int>;

inline void swap_places(IndexVector& bi, int r) { std::swap(bi[r - 1], bi[r]); }

struct GenLetter {
    enum Kind { Psi, Y, Idem } kind = Psi;
    int arg = 0;          // generator index for Psi / Y
    IndexVector idem;     // residue vector for Idem

    static GenLetter psi(int r) { return {Psi, r, {}}; }
    static GenLetter y(int s) { return {Y, s, {}}; }
    static GenLetter e(IndexVector bi) { return {Idem, 0, std::move(bi)}; }

    bool operator==(const GenLetter& o) const {
        return kind == o.kind && arg == o.arg && idem == o.idem;
    }
    bool operator<(const GenLetter& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (arg != o.arg) return arg < o.arg;
        return idem < o.idem;
    }
};

using GeneratorWord = std::vector<GenLetter>;

inline GeneratorWord psi_word(const std::vector<int>& rs) {
    GeneratorWord w;
    for (int r : rs) w.push_back(GenLetter::psi(r));
    return w;
}

// degree of a word applied in the sector bi (the residue vector at the point
// the first letter acts), threading bi through the place permutations
long long word_degree(const GeneratorWord& w, IndexVector bi, const ResidueData& rd);

// integer-linear combination of words; merges syntactically equal words only
class GeneratorExpr {
public:
    GeneratorExpr() = default;
    explicit GeneratorExpr(GeneratorWord w) { terms_[std::move(w)] = 1; }

    void add(const GeneratorWord& w, const Coeff& c) {
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            if (c != 0) terms_[w] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    GeneratorExpr operator*(const GeneratorExpr& o) const {
        GeneratorExpr out;
        for (auto& [w1, c1] : terms_)
            for (auto& [w2, c2] : o.terms_) {
                GeneratorWord w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                out.add(w, c1 * c2);
            }
        return out;
    }

    GeneratorExpr operator+(const GeneratorExpr& o) const {
        GeneratorExpr out = *this;
        for (auto& [w, c] : o.terms_) out.add(w, c);
        return out;
    }

    const std::map<GeneratorWord, Coeff>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

private:
    std::map<GeneratorWord, Coeff> terms_;
};

// tau^A_d = e(i_A) (psi_{w^A_{r_1}} + 1) ... (psi_{w^A_{r_k}} + 1) expanded
// along the canonical reduced word of d, each brick transposition expanded
// by its canonical reduced word
GeneratorExpr tau_element(const GarnirData& gd, const Permutation& d);

}  // namespace klrs
