#pragma once

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "klrs/klr.hpp"

namespace klrs {

struct EngineLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sparse module element in the standard basis, by basis index
using Element = std::map<int, Coeff>;

inline void add_scaled(Element& x, const Element& y, const Coeff& c) {
    if (c == 0) return;
    for (auto& [i, v] : y) {
        auto it = x.find(i);
        if (it == x.end()) {
            Coeff t = v * c;
            if (t != 0) x.emplace(i, std::move(t));
        } else {
            it->second += v * c;
            if (it->second == 0) x.erase(it);
        }
    }
}

// column-sparse exact matrix
struct ExactMatrix {
    int nrows = 0;
    std::vector<Element> cols;

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : nrows(r), cols(c) {}
    int ncols() const { return (int)cols.size(); }

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.cols[i][i] = 1;
        return m;
    }

    bool is_zero() const {
        for (auto& c : cols)
            if (!c.empty()) return false;
        return true;
    }
    Element apply(const Element& x) const {
        Element out;
        for (auto& [j, v] : x) add_scaled(out, cols[j], v);
        return out;
    }
    // matrix of "apply other first, then this"
    ExactMatrix operator*(const ExactMatrix& other) const {
        ExactMatrix out(nrows, other.ncols());
        for (int j = 0; j < other.ncols(); ++j) out.cols[j] = apply(other.cols[j]);
        return out;
    }
    ExactMatrix operator+(const ExactMatrix& o) const {
        ExactMatrix out = *this;
        for (int j = 0; j < ncols(); ++j) add_scaled(out.cols[j], o.cols[j], 1);
        return out;
    }
    ExactMatrix operator-(const ExactMatrix& o) const {
        ExactMatrix out = *this;
        for (int j = 0; j < ncols(); ++j) add_scaled(out.cols[j], o.cols[j], -1);
        return out;
    }
    ExactMatrix scaled(const Coeff& c) const {
        ExactMatrix out(nrows, ncols());
        if (c != 0)
            for (int j = 0; j < ncols(); ++j)
                for (auto& [i, v] : cols[j]) out.cols[j][i] = v * c;
        return out;
    }
    bool operator==(const ExactMatrix& o) const {
        return nrows == o.nrows && cols == o.cols;
    }
};

using LaurentPoly = std::map<int, long long>;  // exponent -> coefficient

struct FiltrationLayer {
    Node removed;
    Multipartition layer_shape;
    int shift = 0;  // d_A(nu)
};

struct RelationReport {
    struct Violation {
        std::string relation;
        std::string witness;
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

struct EngineSettings {
    long long step_cap = 10'000'000;   // worklist pops per action evaluation
    size_t word_cache_cap = 1 << 20;
};

// Graded Specht module realized on its standard-tableau basis.  Generator
// actions are computed by straightening words from the cyclic generator and
// memoized per (basis vector, letter).
class SpechtModule {
public:
    enum class WordScheme { Canonical, RestrictionSplit };

    SpechtModule(Multipartition shape, ResidueData rd,
                 WordScheme scheme = WordScheme::Canonical, int restriction_n = -1);

    const Multipartition& shape() const { return shape_; }
    const ResidueData& residue_data() const { return rd_; }
    int n() const { return n_; }
    int dim() const { return (int)basis_.size(); }

    const std::vector<Tableau>& basis() const { return basis_; }
    const Tableau& basis_tableau(int i) const { return basis_[i]; }
    int degree(int i) const { return degrees_[i]; }
    const IndexVector& residue_sequence(int i) const { return resseq_[i]; }
    const std::vector<int>& basis_word(int i) const { return words_[i]; }
    const Permutation& basis_perm(int i) const { return dperm_[i]; }

    int index_of(const Tableau& t) const;  // -1 if absent
    int index_of_initial() const { return 0; }

    // override the chosen reduced word of one basis vector; only allowed
    // before any action has been memoized
    void set_basis_word(int i, std::vector<int> word);

    // v_{t^mu} * word, straightened into the basis
    Element eval_word(const std::vector<int>& word) const;

    Element act_letter(int basis_index, int letter) const;  // letter: +r psi, -s y
    Element act(const Element& x, const GeneratorWord& w) const;

    ExactMatrix psi_matrix(int r) const;
    ExactMatrix y_matrix(int s) const;
    ExactMatrix idem_matrix(const IndexVector& bi) const;
    ExactMatrix matrix_of_word(const GeneratorWord& w) const;
    ExactMatrix psi_matrix_parallel(int r) const;  // per-column, thread-local caches
    ExactMatrix y_matrix_parallel(int s) const;

    LaurentPoly graded_dimension() const;

    // residue sequences realized by the basis, deduplicated
    std::vector<IndexVector> realized_sectors() const;

    long long degree_of(const Element& x) const;  // throws if inhomogeneous
    bool is_homogeneous(const Element& x) const;

    RelationReport verify_relations() const;

    EngineSettings& settings() { return settings_; }
    long long actions_computed() const { return actions_computed_; }

    // test hook: silently corrupt one memoized action
    void corrupt_memo_for_testing();

    std::string element_to_string(const Element& x) const;

private:
    friend struct EvalContext;
    Multipartition shape_;
    ResidueData rd_;
    int n_ = 0;
    WordScheme scheme_;
    int restriction_n_ = -1;

    std::vector<Tableau> basis_;
    std::vector<int> degrees_;
    std::vector<Permutation> dperm_;
    std::vector<std::vector<int>> words_;
    std::vector<IndexVector> resseq_;
    std::map<std::vector<int>, int> index_by_rowword_;
    IndexVector initial_res_;

    EngineSettings settings_;
    mutable std::map<std::pair<int, int>, Element> action_memo_;
    mutable std::map<std::vector<int>, Element> word_memo_;
    mutable long long actions_computed_ = 0;
    mutable std::recursive_mutex mutex_;
    mutable bool actions_started_ = false;

    std::vector<int> default_word(const Tableau& t) const;
    Element eval_word_impl(const std::vector<int>& word, bool use_shared_cache) const;
};

std::vector<FiltrationLayer> restriction_layers(const Multipartition& shape,
                                                const ResidueData& rd);

// graded restriction identity helper: Sum_A q^{d_A} dim_q S^{nu \ A}
LaurentPoly restricted_graded_dimension(const Multipartition& shape, const ResidueData& rd);
LaurentPoly graded_dimension_of_shape(const Multipartition& shape, const ResidueData& rd);

std::string laurent_to_string(const LaurentPoly& p);

}  // namespace klrs
