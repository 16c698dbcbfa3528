#include "klrs/specht.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#ifdef KLRS_HAVE_OPENMP
#include <omp.h>
#endif

namespace klrs {

// ---------------------------------------------------------------------------
// construction

SpechtModule::SpechtModule(Multipartition shape, ResidueData rd, WordScheme scheme,
                           int restriction_n)
    : shape_(std::move(shape)), rd_(std::move(rd)), scheme_(scheme),
      restriction_n_(restriction_n) {
    if (shape_.level() != rd_.level())
        throw std::invalid_argument("shape level does not match multicharge level");
    n_ = shape_.size();
    if (scheme_ == WordScheme::RestrictionSplit &&
        (restriction_n_ < 0 || restriction_n_ > n_))
        throw std::invalid_argument("bad restriction index");

    basis_ = standard_tableaux(shape_);
    Tableau t0 = Tableau::initial(shape_);
    if (basis_.empty() || !(basis_[0] == t0)) throw InternalError("basis order broken");

    initial_res_ = t0.residue_sequence(rd_);
    for (int i = 0; i < (int)basis_.size(); ++i) {
        const Tableau& t = basis_[i];
        index_by_rowword_[t.row_reading_word()] = i;
        degrees_.push_back(tableau_degree(t, rd_));
        dperm_.push_back(t.d_permutation());
        resseq_.push_back(t.residue_sequence(rd_));
        words_.push_back(default_word(t));
        if ((long long)words_.back().size() != dperm_.back().length())
            throw InternalError("chosen basis word is not reduced");
    }
}

std::vector<int> SpechtModule::default_word(const Tableau& t) const {
    if (scheme_ == WordScheme::Canonical || restriction_n_ >= n_)
        return t.d_permutation().canonical_word();
    // restriction split: canonical word of the carrier representative followed
    // by the canonical word of the S_{n0}-part
    int n0 = restriction_n_;
    Tableau low = t.restricted(n0);
    Permutation wlow_small = low.d_permutation();
    std::vector<int> img(n_);
    for (int i = 1; i <= n_; ++i) img[i - 1] = i <= n0 ? wlow_small(i) : i;
    Permutation wlow(img);
    Permutation rep = t.d_permutation() * wlow.inverse();
    std::vector<int> word = rep.canonical_word();
    auto tail = wlow.canonical_word();
    word.insert(word.end(), tail.begin(), tail.end());
    if ((long long)word.size() != t.d_permutation().length())
        throw InternalError("restriction-split word is not reduced");
    return word;
}

int SpechtModule::index_of(const Tableau& t) const {
    auto it = index_by_rowword_.find(t.row_reading_word());
    return it == index_by_rowword_.end() ? -1 : it->second;
}

void SpechtModule::set_basis_word(int i, std::vector<int> word) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (actions_started_) throw InternalError("cannot change basis words after actions started");
    Permutation p = Permutation::from_word(n_, word);
    if (p != dperm_[i] || (long long)word.size() != dperm_[i].length())
        throw std::invalid_argument("word is not a reduced expression of d(t)");
    words_[i] = std::move(word);
}

// ---------------------------------------------------------------------------
// the straightening engine

namespace {

struct Term {
    Coeff c;
    std::vector<int> word;  // +r = psi_r, -s = y_s
};

struct EvalCtx {
    const SpechtModule& M;
    const Multipartition& shape;
    const ResidueData& rd;
    const IndexVector& res0;
    int n;
    std::deque<Term> work;
    Element result;
    long long steps = 0;
    long long cap;
    std::map<std::vector<int>, Element>* cache;
    size_t cache_cap;
    std::map<std::vector<int>, GarnirData> garnir_cache;  // keyed by node triple

    EvalCtx(const SpechtModule& m, std::map<std::vector<int>, Element>* c, size_t ccap)
        : M(m), shape(m.shape()), rd(m.residue_data()),
          res0(m.dim() ? m.residue_sequence(0) : empty_res_), n(m.n()),
          cap(10'000'000), cache(c), cache_cap(ccap) {}

    static IndexVector empty_res_;

    void push(Coeff c, std::vector<int> w) {
        if (c != 0) work.push_back({std::move(c), std::move(w)});
    }

    IndexVector residues_after(const std::vector<int>& w, int upto) const {
        IndexVector cur = res0;
        for (int i = 0; i < upto; ++i)
            if (w[i] > 0) swap_places(cur, w[i]);
        return cur;
    }

    // braid move at absolute position k: [a,b,a] -> [b,a,b], emitting the
    // correction terms scaled by c
    void braid_move(std::vector<int>& w, int k, const Coeff& c) {
        int a = w[k], b = w[k + 1];
        if (w[k + 2] != a || std::abs(a - b) != 1) throw InternalError("bad braid window");
        int r0 = std::min(a, b);
        IndexVector bv = residues_after(w, k);
        int pr = bv[r0 - 1], pm = bv[r0], pq = bv[r0 + 1];  // positions r0, r0+1, r0+2
        bool forward = (a == r0);
        if (pr == pq) {
            auto rest_word = [&](std::vector<int> mid) {
                std::vector<int> nw(w.begin(), w.begin() + k);
                nw.insert(nw.end(), mid.begin(), mid.end());
                nw.insert(nw.end(), w.begin() + k + 3, w.end());
                return nw;
            };
            if (rd.e == 2) {
                if (pm != pr) {
                    int s = forward ? 1 : -1;
                    push(c * s, rest_word({-r0}));
                    push(c * (-2 * s), rest_word({-(r0 + 1)}));
                    push(c * s, rest_word({-(r0 + 2)}));
                }
            } else {
                int sign = 0;
                if (rd.res_eq(pm, (long long)pr - 1)) sign = 1;
                else if (rd.res_eq(pm, (long long)pr + 1)) sign = -1;
                if (sign != 0) push(c * (forward ? sign : -sign), rest_word({}));
            }
        }
        w[k] = b;
        w[k + 1] = a;
        w[k + 2] = b;
    }

    // bring letter r to position k of the reduced window w[k..m)
    void to_front(std::vector<int>& w, int k, int m, int r, const Coeff& c) {
        if (k >= m) throw InternalError("to_front: empty window");
        if (w[k] == r) return;
        if (std::abs(w[k] - r) >= 2) {
            to_front(w, k + 1, m, r, c);
            std::swap(w[k], w[k + 1]);
        } else {
            int w1 = w[k];
            to_front(w, k + 1, m, r, c);
            to_front(w, k + 2, m, w1, c);
            braid_move(w, k, c);
        }
    }

    // transform the reduced window w[begin..end) into target (same permutation)
    void transform_window(std::vector<int>& w, int begin, int end,
                          const std::vector<int>& target, const Coeff& c) {
        if (end - begin != (int)target.size()) throw InternalError("transform length mismatch");
        for (int t = 0; t < (int)target.size(); ++t) to_front(w, begin + t, end, target[t], c);
    }

    void handle_y(const Term& term, int iy) {
        const auto& w = term.word;
        int s = -w[iy];
        // residue vectors before each prefix position
        std::vector<IndexVector> rv(iy + 1);
        rv[0] = res0;
        for (int j = 0; j < iy; ++j) {
            rv[j + 1] = rv[j];
            swap_places(rv[j + 1], w[j]);
        }
        for (int j = iy - 1; j >= 0; --j) {
            int r = w[j];
            if (s == r + 1 || s == r) {
                if (rv[j][r - 1] == rv[j][r]) {
                    std::vector<int> nw(w.begin(), w.begin() + j);
                    nw.insert(nw.end(), w.begin() + j + 1, w.begin() + iy);
                    nw.insert(nw.end(), w.begin() + iy + 1, w.end());
                    push(term.c * (s == r + 1 ? 1 : -1), std::move(nw));
                }
                s = (s == r + 1) ? r : r + 1;
            }
        }
        // the dot reached v_{t^mu}: relation (b) kills the term
    }

    void handle_psi_square(const Term& term, int k) {
        std::vector<int> w = term.word;
        int r = w[k];
        Permutation p = Permutation::from_word(n, std::vector<int>(w.begin(), w.begin() + k));
        Permutation p2 = p;
        p2.apply_simple_right(r);  // shorter
        std::vector<int> target = p2.canonical_word();
        target.push_back(r);
        transform_window(w, 0, k, target, term.c);
        // w = T' ++ [r, r] ++ rest
        IndexVector bw = residues_after(w, k - 1);
        std::vector<int> head(w.begin(), w.begin() + k - 1);
        std::vector<int> rest(w.begin() + k + 1, w.end());
        auto with_mid = [&](std::vector<int> mid) {
            std::vector<int> nw = head;
            nw.insert(nw.end(), mid.begin(), mid.end());
            nw.insert(nw.end(), rest.begin(), rest.end());
            return nw;
        };
        int ir = bw[r - 1], ir1 = bw[r];
        if (ir == ir1) return;  // psi_r^2 = 0
        bool down = rd.res_eq(ir1, (long long)ir - 1);
        bool up = rd.res_eq(ir1, (long long)ir + 1);
        if (down && up) {  // e = 2: (y_{r+1}-y_r)(y_r-y_{r+1})
            push(term.c * 2, with_mid({-r, -(r + 1)}));
            push(-term.c, with_mid({-r, -r}));
            push(-term.c, with_mid({-(r + 1), -(r + 1)}));
        } else if (down) {  // i_r -> i_{r+1}: (y_{r+1} - y_r)
            push(term.c, with_mid({-(r + 1)}));
            push(-term.c, with_mid({-r}));
        } else if (up) {  // i_r <- i_{r+1}: (y_r - y_{r+1})
            push(term.c, with_mid({-r}));
            push(-term.c, with_mid({-(r + 1)}));
        } else {
            push(term.c, with_mid({}));
        }
    }

    const GarnirData& garnir_for(const Node& a) {
        std::vector<int> key{a.comp, a.row, a.col};
        auto it = garnir_cache.find(key);
        if (it != garnir_cache.end()) return it->second;
        return garnir_cache.emplace(key, garnir_data(shape, a, rd)).first->second;
    }

    void handle_garnir(const Term& term, const Tableau& u, const Permutation& w) {
        const GarnirData* gd = nullptr;
        Permutation z;
        for (int l = 1; l <= shape.level() && !gd; ++l)
            for (int x = 1; x + 1 <= shape.rows(l) && !gd; ++x)
                for (int col = 1; col <= shape.row_length(l, x + 1); ++col) {
                    if (u.entry(l, x, col) <= u.entry(l, x + 1, col)) continue;
                    const GarnirData& g = garnir_for({l, x, col});
                    Permutation dG = g.garnir_tableau.d_permutation();
                    Permutation zc = dG.inverse() * w;
                    if (dG.length() + zc.length() == w.length()) {
                        gd = &g;
                        z = zc;
                        break;
                    }
                }
        if (!gd) throw InternalError("no Garnir factorization for a non-standard tableau");

        std::vector<int> tA_word = gd->tA.d_permutation().canonical_word();
        std::vector<int> d0word = gd->d0.canonical_word();
        std::vector<std::vector<int>> brick_words;
        for (const auto& bt : gd->brick_transpositions)
            brick_words.push_back(bt.canonical_word());
        std::vector<int> zword = z.canonical_word();

        std::vector<int> target = tA_word;
        for (int r : d0word) {
            const auto& bw = brick_words[r - 1];
            target.insert(target.end(), bw.begin(), bw.end());
        }
        size_t garnir_len = target.size();
        target.insert(target.end(), zword.begin(), zword.end());
        if ((long long)target.size() != w.length() || Permutation::from_word(n, target) != w)
            throw InternalError("Garnir target word is not a reduced factorization");

        std::vector<int> cur = term.word;
        transform_window(cur, 0, (int)cur.size(), target, term.c);

        // expand sum_{d in D_A} psi_{t_A} tau^A_d = 0 and solve for the
        // longest term (the one whose word underlies the Garnir tableau)
        std::map<std::vector<int>, long long> cnt;
        for (const auto& d : gd->DA) {
            std::vector<int> dr = d.canonical_word();
            int m = (int)dr.size();
            for (int mask = 0; mask < (1 << m); ++mask) {
                std::vector<int> wd;
                for (int i = 0; i < m; ++i)
                    if (mask & (1 << i)) {
                        const auto& bw = brick_words[dr[i] - 1];
                        wd.insert(wd.end(), bw.begin(), bw.end());
                    }
                ++cnt[wd];
            }
        }
        std::vector<int> full(target.begin() + tA_word.size(), target.begin() + garnir_len);
        auto itf = cnt.find(full);
        if (itf == cnt.end() || itf->second != 1)
            throw InternalError("Garnir leading term has unexpected multiplicity");
        cnt.erase(itf);
        for (const auto& [wd, mult] : cnt) {
            std::vector<int> nw = tA_word;
            nw.insert(nw.end(), wd.begin(), wd.end());
            nw.insert(nw.end(), zword.begin(), zword.end());
            push(-term.c * mult, std::move(nw));
        }
    }

    void run() {
        while (!work.empty()) {
            if (++steps > cap)
                throw EngineLimitError("rewrite step cap exceeded on shape " + shape.to_string());
            Term term = std::move(work.front());
            work.pop_front();

            if (cache) {
                auto it = cache->find(term.word);
                if (it != cache->end()) {
                    add_scaled(result, it->second, term.c);
                    continue;
                }
            }

            int iy = -1;
            for (int i = 0; i < (int)term.word.size(); ++i)
                if (term.word[i] < 0) {
                    iy = i;
                    break;
                }
            if (iy >= 0) {
                handle_y(term, iy);
                continue;
            }

            // pure psi word: find the first non-reduced prefix
            std::vector<int> pos(n + 1);
            std::iota(pos.begin(), pos.end(), 0);
            int bad = -1;
            for (int k = 0; k < (int)term.word.size(); ++k) {
                int r = term.word[k];
                if (pos[r] > pos[r + 1]) {
                    bad = k;
                    break;
                }
                std::swap(pos[r], pos[r + 1]);
            }
            if (bad >= 0) {
                handle_psi_square(term, bad);
                continue;
            }

            Permutation w = Permutation::from_word(n, term.word);
            Tableau u = Tableau::initial(shape).acted(w);
            if (u.is_standard()) {
                int idx = M.index_of(u);
                if (idx < 0) throw InternalError("standard tableau missing from basis");
                std::vector<int> cur = term.word;
                transform_window(cur, 0, (int)cur.size(), M.basis_word(idx), term.c);
                auto it = result.find(idx);
                if (it == result.end()) result.emplace(idx, term.c);
                else {
                    it->second += term.c;
                    if (it->second == 0) result.erase(it);
                }
                continue;
            }
            if (!u.is_row_standard()) {
                // w has a reduced word starting with a row generator of t^mu;
                // relation (c) kills the leading term
                Tableau t0 = Tableau::initial(shape);
                int rho = 0;
                for (int r = 1; r < n && !rho; ++r)
                    if (row_of(t0.node_of(r)) == row_of(t0.node_of(r + 1)) && w.has_left_descent(r))
                        rho = r;
                if (!rho) throw InternalError("non-row-standard tableau without row descent");
                std::vector<int> target{rho};
                auto restw = w.strip_left(rho).canonical_word();
                target.insert(target.end(), restw.begin(), restw.end());
                std::vector<int> cur = term.word;
                transform_window(cur, 0, (int)cur.size(), target, term.c);
                continue;
            }
            handle_garnir(term, u, w);
        }
    }
};

IndexVector EvalCtx::empty_res_;

}  // namespace

Element SpechtModule::eval_word_impl(const std::vector<int>& word, bool use_shared_cache) const {
    std::map<std::vector<int>, Element> local;
    std::map<std::vector<int>, Element>* cache = use_shared_cache ? &word_memo_ : &local;
    if (use_shared_cache) {
        auto it = word_memo_.find(word);
        if (it != word_memo_.end()) return it->second;
    }
    EvalCtx ctx(*this, cache, settings_.word_cache_cap);
    ctx.cap = settings_.step_cap;
    ctx.push(1, word);
    ctx.run();
    if (cache->size() < settings_.word_cache_cap) (*cache)[word] = ctx.result;
    return std::move(ctx.result);
}

Element SpechtModule::eval_word(const std::vector<int>& word) const {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    actions_started_ = true;
    for (int g : word) {
        if (g == 0 || g > n_ - 1 || g < -n_) throw std::out_of_range("generator index");
    }
    return eval_word_impl(word, true);
}

Element SpechtModule::act_letter(int basis_index, int letter) const {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    actions_started_ = true;
    auto key = std::make_pair(basis_index, letter);
    auto it = action_memo_.find(key);
    if (it != action_memo_.end()) return it->second;
    std::vector<int> word = words_[basis_index];
    word.push_back(letter);
    Element out = eval_word_impl(word, true);
    ++actions_computed_;
    action_memo_[key] = out;
    return out;
}

Element SpechtModule::act(const Element& x, const GeneratorWord& w) const {
    Element cur = x;
    for (const auto& g : w) {
        switch (g.kind) {
            case GenLetter::Idem: {
                if ((int)g.idem.size() != n_) throw std::out_of_range("idempotent length");
                Element next;
                for (auto& [i, c] : cur) {
                    bool match = true;
                    for (int k = 0; k < n_ && match; ++k)
                        if (!rd_.res_eq(resseq_[i][k], g.idem[k])) match = false;
                    if (match) next.emplace(i, c);
                }
                cur = std::move(next);
                break;
            }
            case GenLetter::Psi: {
                if (g.arg < 1 || g.arg > n_ - 1) throw std::out_of_range("psi index");
                Element next;
                for (auto& [i, c] : cur) add_scaled(next, act_letter(i, g.arg), c);
                cur = std::move(next);
                break;
            }
            case GenLetter::Y: {
                if (g.arg < 1 || g.arg > n_) throw std::out_of_range("y index");
                Element next;
                for (auto& [i, c] : cur) add_scaled(next, act_letter(i, -g.arg), c);
                cur = std::move(next);
                break;
            }
        }
    }
    return cur;
}

// ---------------------------------------------------------------------------
// matrices

ExactMatrix SpechtModule::psi_matrix(int r) const {
    ExactMatrix m(dim(), dim());
    for (int t = 0; t < dim(); ++t) m.cols[t] = act_letter(t, r);
    return m;
}

ExactMatrix SpechtModule::y_matrix(int s) const {
    ExactMatrix m(dim(), dim());
    for (int t = 0; t < dim(); ++t) m.cols[t] = act_letter(t, -s);
    return m;
}

ExactMatrix SpechtModule::idem_matrix(const IndexVector& bi) const {
    ExactMatrix m(dim(), dim());
    if ((int)bi.size() != n_) throw std::out_of_range("idempotent length");
    for (int t = 0; t < dim(); ++t) {
        bool match = true;
        for (int k = 0; k < n_ && match; ++k)
            if (!rd_.res_eq(resseq_[t][k], bi[k])) match = false;
        if (match) m.cols[t][t] = 1;
    }
    return m;
}

ExactMatrix SpechtModule::matrix_of_word(const GeneratorWord& w) const {
    ExactMatrix m = ExactMatrix::identity(dim());
    for (const auto& g : w) {
        ExactMatrix step;
        switch (g.kind) {
            case GenLetter::Psi: step = psi_matrix(g.arg); break;
            case GenLetter::Y: step = y_matrix(g.arg); break;
            case GenLetter::Idem: step = idem_matrix(g.idem); break;
        }
        m = step * m;
    }
    return m;
}

static ExactMatrix letter_matrix_parallel(const SpechtModule& M, int letter) {
    ExactMatrix m(M.dim(), M.dim());
#ifdef KLRS_HAVE_OPENMP
    int nthreads = std::max(1, omp_get_max_threads());
#else
    int nthreads = 1;
#endif
    // one engine clone per worker; identical basis words so the columns match
    std::vector<std::unique_ptr<SpechtModule>> clones;
    for (int w = 0; w < nthreads; ++w) {
        clones.push_back(std::make_unique<SpechtModule>(M.shape(), M.residue_data()));
        for (int i = 0; i < M.dim(); ++i) clones.back()->set_basis_word(i, M.basis_word(i));
    }
#ifdef KLRS_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int t = 0; t < M.dim(); ++t) {
#ifdef KLRS_HAVE_OPENMP
        SpechtModule& local = *clones[omp_get_thread_num()];
#else
        SpechtModule& local = *clones[0];
#endif
        std::vector<int> word = M.basis_word(t);
        word.push_back(letter);
        m.cols[t] = local.eval_word(word);
    }
    return m;
}

ExactMatrix SpechtModule::psi_matrix_parallel(int r) const { return letter_matrix_parallel(*this, r); }
ExactMatrix SpechtModule::y_matrix_parallel(int s) const { return letter_matrix_parallel(*this, -s); }

LaurentPoly SpechtModule::graded_dimension() const {
    LaurentPoly p;
    for (int d : degrees_) ++p[d];
    return p;
}

std::vector<IndexVector> SpechtModule::realized_sectors() const {
    std::vector<IndexVector> out = resseq_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long long SpechtModule::degree_of(const Element& x) const {
    if (x.empty()) throw std::invalid_argument("degree of zero element");
    long long d = degrees_[x.begin()->first];
    for (auto& [i, c] : x)
        if (degrees_[i] != d) throw std::invalid_argument("inhomogeneous element");
    return d;
}

bool SpechtModule::is_homogeneous(const Element& x) const {
    if (x.empty()) return true;
    long long d = degrees_[x.begin()->first];
    for (auto& [i, c] : x)
        if (degrees_[i] != d) return false;
    return true;
}

void SpechtModule::corrupt_memo_for_testing() {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (dim() == 0 || n_ == 0) return;
    act_letter(dim() - 1, -n_);
    auto& entry = action_memo_[{dim() - 1, -n_}];
    entry[0] += 1;
    word_memo_.clear();
}

std::string SpechtModule::element_to_string(const Element& x) const {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [i, c] : x) {
        if (!first) os << " + ";
        os << c.str() << "*v[" << basis_[i].to_string() << "]";
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// relation verification

RelationReport SpechtModule::verify_relations() const {
    RelationReport rep;
    auto fail = [&](const std::string& rel, const std::string& wit) {
        rep.violations.push_back({rel, wit});
    };
    int N = dim();
    if (n_ == 0) return rep;

    std::vector<ExactMatrix> Psi(n_), Y(n_ + 1);
    for (int r = 1; r < n_; ++r) Psi[r] = psi_matrix(r);
    for (int s = 1; s <= n_; ++s) Y[s] = y_matrix(s);

    // sector list: realized residue sequences and their one-swap neighbours
    std::vector<IndexVector> sectors = realized_sectors();
    {
        std::vector<IndexVector> extra;
        for (const auto& bi : sectors)
            for (int r = 1; r < n_; ++r) {
                IndexVector bj = bi;
                swap_places(bj, r);
                extra.push_back(bj);
            }
        sectors.insert(sectors.end(), extra.begin(), extra.end());
        std::sort(sectors.begin(), sectors.end());
        sectors.erase(std::unique(sectors.begin(), sectors.end()), sectors.end());
    }
    std::map<IndexVector, ExactMatrix> E;
    for (const auto& bi : sectors) E[bi] = idem_matrix(bi);
    auto sector_name = [](const IndexVector& bi) {
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < bi.size(); ++i) os << (i ? "," : "") << bi[i];
        os << ")";
        return os.str();
    };

    // sum of realized idempotents is the identity
    {
        ExactMatrix sum(N, N);
        for (const auto& bi : realized_sectors()) sum = sum + E[bi];
        if (!(sum == ExactMatrix::identity(N))) fail("sum e(i) = 1", "");
    }

    for (const auto& bi : sectors) {
        const ExactMatrix& Ei = E[bi];
        if (Ei.is_zero()) continue;
        // cyclotomic relation
        {
            int pow = rd_.cyclotomic_exponent(bi[0]);
            ExactMatrix m = Ei;
            for (int k = 0; k < pow; ++k) m = Y[1] * m;
            if (!m.is_zero()) fail("y_1^{(Lambda,alpha)} e(i) = 0", sector_name(bi));
        }
        for (int r = 1; r < n_; ++r) {
            IndexVector sbi = bi;
            swap_places(sbi, r);
            // psi_r e(i) = e(s_r i) psi_r
            if (!(Psi[r] * Ei == E[sbi] * Psi[r]))
                fail("psi_r e(i) = e(s_r i) psi_r", sector_name(bi) + " r=" + std::to_string(r));
            int ir = bi[r - 1], ir1 = bi[r];
            Coeff delta = (ir == ir1) ? 1 : 0;
            // psi_r y_{r+1} e(i) = (y_r psi_r + delta) e(i)
            if (!(Y[r + 1] * Psi[r] * Ei == Psi[r] * Y[r] * Ei + Ei.scaled(delta)))
                fail("psi_r y_{r+1} e(i) = (y_r psi_r + d) e(i)",
                     sector_name(bi) + " r=" + std::to_string(r));
            // y_{r+1} psi_r e(i) = (psi_r y_r + delta) e(i)
            if (!(Psi[r] * Y[r + 1] * Ei == Y[r] * Psi[r] * Ei + Ei.scaled(delta)))
                fail("y_{r+1} psi_r e(i) = (psi_r y_r + d) e(i)",
                     sector_name(bi) + " r=" + std::to_string(r));
            // quadratic relation
            {
                ExactMatrix lhs = Psi[r] * Psi[r] * Ei;
                bool down = rd_.res_eq(ir1, (long long)ir - 1);
                bool up = rd_.res_eq(ir1, (long long)ir + 1);
                ExactMatrix rhs(N, N);
                if (ir == ir1) {
                    // zero
                } else if (down && up) {
                    rhs = (Y[r] - Y[r + 1]) * (Y[r + 1] - Y[r]) * Ei;
                } else if (down) {
                    rhs = (Y[r + 1] - Y[r]) * Ei;
                } else if (up) {
                    rhs = (Y[r] - Y[r + 1]) * Ei;
                } else {
                    rhs = Ei;
                }
                if (!(lhs == rhs)) fail("quadratic psi_r^2 e(i)", sector_name(bi) + " r=" + std::to_string(r));
            }
        }
        // braid relation
        for (int r = 1; r + 1 < n_; ++r) {
            int ir = bi[r - 1], ir1 = bi[r], ir2 = bi[r + 1];
            ExactMatrix lhs = Psi[r] * Psi[r + 1] * Psi[r] * Ei;
            ExactMatrix rhs = Psi[r + 1] * Psi[r] * Psi[r + 1] * Ei;
            if (ir == ir2) {
                bool down = rd_.res_eq(ir1, (long long)ir - 1);
                bool up = rd_.res_eq(ir1, (long long)ir + 1);
                if (down && up)
                    rhs = rhs + (Y[r] - Y[r + 1].scaled(2) + Y[r + 2]) * Ei;
                else if (down)
                    rhs = rhs + Ei;
                else if (up)
                    rhs = rhs - Ei;
            }
            if (!(lhs == rhs)) fail("braid relation", sector_name(bi) + " r=" + std::to_string(r));
        }
    }

    // y_r y_s commute; psi_r y_s (s != r,r+1) commute; distant psi commute
    for (int r = 1; r <= n_; ++r)
        for (int s = r + 1; s <= n_; ++s)
            if (!(Y[r] * Y[s] == Y[s] * Y[r])) fail("y_r y_s = y_s y_r", std::to_string(r) + "," + std::to_string(s));
    for (int r = 1; r < n_; ++r)
        for (int s = 1; s <= n_; ++s)
            if (s != r && s != r + 1 && !(Psi[r] * Y[s] == Y[s] * Psi[r]))
                fail("psi_r y_s = y_s psi_r", std::to_string(r) + "," + std::to_string(s));
    for (int r = 1; r < n_; ++r)
        for (int s = r + 2; s < n_; ++s)
            if (!(Psi[r] * Psi[s] == Psi[s] * Psi[r]))
                fail("psi_r psi_s = psi_s psi_r", std::to_string(r) + "," + std::to_string(s));

    // Specht relations on the cyclic generator
    {
        Element v0{{0, 1}};
        for (int s = 1; s <= n_; ++s)
            if (!Y[s].apply(v0).empty()) fail("v y_s = 0", "s=" + std::to_string(s));
        Tableau t0 = Tableau::initial(shape_);
        for (int r = 1; r < n_; ++r)
            if (row_of(t0.node_of(r)) == row_of(t0.node_of(r + 1)))
                if (!Psi[r].apply(v0).empty()) fail("v psi_r = 0 inside a row", "r=" + std::to_string(r));
        for (const auto& a : garnir_nodes(shape_)) {
            GarnirData gd = garnir_data(shape_, a, rd_);
            GeneratorExpr total;
            for (const auto& d : gd.DA) {
                GeneratorExpr tau = tau_element(gd, d);
                for (auto& [wrd, c] : tau.terms()) {
                    GeneratorWord full = psi_word(gd.tA.d_permutation().canonical_word());
                    full.insert(full.end(), wrd.begin(), wrd.end());
                    total.add(full, c);
                }
            }
            Element img;
            for (auto& [wrd, c] : total.terms()) add_scaled(img, act(v0, wrd), c);
            if (!img.empty())
                fail("homogeneous Garnir relation", "node (" + std::to_string(a.comp) + "," +
                                                        std::to_string(a.row) + "," +
                                                        std::to_string(a.col) + ")");
        }
    }

    // basis words reproduce the basis vectors through one-letter actions
    for (int t = 0; t < N; ++t) {
        Element v{{0, 1}};
        for (int g : words_[t]) v = Psi[g].apply(v);
        Element want{{t, 1}};
        if (!(v == want)) fail("basis word consistency", basis_[t].to_string());
    }

    // homogeneity of the letter matrices
    for (int r = 1; r < n_; ++r)
        for (int j = 0; j < N; ++j)
            for (auto& [i, c] : Psi[r].cols[j]) {
                long long want = degrees_[j] - rd_.cartan(resseq_[j][r - 1], resseq_[j][r]);
                if (degrees_[i] != want) fail("psi matrix homogeneity", "r=" + std::to_string(r));
            }
    for (int s = 1; s <= n_; ++s)
        for (int j = 0; j < N; ++j)
            for (auto& [i, c] : Y[s].cols[j])
                if (degrees_[i] != degrees_[j] + 2) fail("y matrix homogeneity", "s=" + std::to_string(s));

    return rep;
}

// ---------------------------------------------------------------------------
// restriction combinatorics

std::vector<FiltrationLayer> restriction_layers(const Multipartition& shape,
                                                const ResidueData& rd) {
    std::vector<FiltrationLayer> out;
    for (const auto& a : boundary_nodes(shape).removable)
        out.push_back({a, shape.with_node_removed(a), node_degree(shape, a, rd)});
    return out;
}

LaurentPoly graded_dimension_of_shape(const Multipartition& shape, const ResidueData& rd) {
    LaurentPoly p;
    for (const auto& t : standard_tableaux(shape)) ++p[tableau_degree(t, rd)];
    return p;
}

LaurentPoly restricted_graded_dimension(const Multipartition& shape, const ResidueData& rd) {
    LaurentPoly total;
    for (const auto& layer : restriction_layers(shape, rd)) {
        LaurentPoly p = graded_dimension_of_shape(layer.layer_shape, rd);
        for (auto& [d, c] : p) total[d + layer.shift] += c;
    }
    return total;
}

std::string laurent_to_string(const LaurentPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, c] : p) {
        if (c == 0) continue;
        if (!first) os << " + ";
        os << c;
        if (d != 0) os << "*q^" << d;
        first = false;
    }
    return os.str();
}

}  // namespace klrs
