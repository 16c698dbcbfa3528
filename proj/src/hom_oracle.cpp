#include "klrs/hom_oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#ifdef KLRS_HAVE_OPENMP
#include <omp.h>
#endif

namespace klrs {

namespace {

// field abstraction for the elimination; rationals or F_p
struct RatField {
    using T = Rational;
    static T from(const Coeff& c) { return Rational(c); }
    static bool zero(const T& x) { return x == 0; }
    static T neg(const T& x) { return -x; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T div(const T& a, const T& b) { return a / b; }
    static void axpy(T& x, const T& a, const T& y) { x += a * y; }
};

struct PrimeField {
    long long p;
    using T = long long;
    T from(const Coeff& c) const {
        Coeff r = c % p;
        long long v = r.convert_to<long long>();
        return v < 0 ? v + p : v;
    }
    bool zero(T x) const { return x == 0; }
    T neg(T x) const { return x == 0 ? 0 : p - x; }
    T mul(T a, T b) const { return (T)((__int128)a * b % p); }
    T inv(T a) const {
        // extended Euclid
        long long t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            long long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return t < 0 ? t + p : t;
    }
    T div(T a, T b) const { return mul(a, inv(b)); }
    void axpy(T& x, T a, T y) const { x = (x + mul(a, y)) % p; }
};

template <class T>
using SparseRow = std::map<int, T>;

// sparse Gaussian elimination; returns the nullspace as dense columns
template <class Field>
static std::vector<std::vector<typename Field::T>> nullspace(
    const Field& F, std::vector<SparseRow<typename Field::T>> rows, int nvars) {
    using T = typename Field::T;
    std::vector<SparseRow<T>> reduced;   // rows in echelon form
    std::vector<int> pivot_of_row;
    std::vector<int> row_of_var(nvars, -1);
    for (auto& row : rows) {
        SparseRow<T> r = std::move(row);
        for (;;) {
            while (!r.empty() && F.zero(r.begin()->second)) r.erase(r.begin());
            if (r.empty()) break;
            int pv = r.begin()->first;
            int owner = row_of_var[pv];
            if (owner < 0) {
                // normalize and store
                T lead = r.begin()->second;
                for (auto& [j, v] : r) v = F.div(v, lead);
                row_of_var[pv] = (int)reduced.size();
                reduced.push_back(std::move(r));
                pivot_of_row.push_back(pv);
                break;
            }
            const SparseRow<T>& o = reduced[owner];
            T factor = F.neg(r.begin()->second);
            for (auto& [j, v] : o) {
                auto it = r.find(j);
                if (it == r.end()) {
                    T nv{};
                    F.axpy(nv, factor, v);
                    if (!F.zero(nv)) r.emplace(j, nv);
                } else {
                    F.axpy(it->second, factor, v);
                    if (F.zero(it->second)) r.erase(it);
                }
            }
        }
    }
    // back substitution to full reduced form
    for (int i = (int)reduced.size() - 1; i >= 0; --i) {
        for (int k = 0; k < i; ++k) {
            auto& rk = reduced[k];
            auto it = rk.find(pivot_of_row[i]);
            if (it == rk.end()) continue;
            T factor = F.neg(it->second);
            rk.erase(it);
            for (auto& [j, v] : reduced[i]) {
                if (j == pivot_of_row[i]) continue;
                auto jt = rk.find(j);
                if (jt == rk.end()) {
                    T nv{};
                    F.axpy(nv, factor, v);
                    if (!F.zero(nv)) rk.emplace(j, nv);
                } else {
                    F.axpy(jt->second, factor, v);
                    if (F.zero(jt->second)) rk.erase(jt);
                }
            }
        }
    }
    std::vector<bool> is_pivot(nvars, false);
    for (int pv : pivot_of_row) is_pivot[pv] = true;
    std::vector<std::vector<T>> basis;
    for (int v = 0; v < nvars; ++v) {
        if (is_pivot[v]) continue;
        std::vector<T> sol(nvars, T{});
        sol[v] = F.from(1);
        for (size_t i = 0; i < reduced.size(); ++i) {
            auto it = reduced[i].find(v);
            if (it != reduced[i].end()) sol[pivot_of_row[i]] = F.neg(it->second);
        }
        basis.push_back(std::move(sol));
    }
    return basis;
}

template <class Field>
static int rank_of(const Field& F, std::vector<SparseRow<typename Field::T>> rows, int nvars) {
    auto ns = nullspace(F, std::move(rows), nvars);
    return nvars - (int)ns.size();
}

struct GeneratorSet {
    std::vector<ExactMatrix> src, tgt;  // same order
};

static GeneratorSet generator_matrices(const SpechtModule& A, const SpechtModule& B) {
    GeneratorSet g;
    for (int s = 1; s <= A.n(); ++s) {
        g.src.push_back(A.y_matrix(s));
        g.tgt.push_back(B.y_matrix(s));
    }
    for (int r = 1; r < A.n(); ++r) {
        g.src.push_back(A.psi_matrix(r));
        g.tgt.push_back(B.psi_matrix(r));
    }
    return g;
}

struct Block {
    std::vector<std::pair<int, int>> vars;        // (target row, source col)
    std::map<std::pair<int, int>, int> var_index;
};

// variables: pairs with matching residue sequences and deg_i - deg_j = d
static Block block_for_degree(const SpechtModule& src, const SpechtModule& tgt, long long d) {
    Block b;
    for (int i = 0; i < tgt.dim(); ++i)
        for (int j = 0; j < src.dim(); ++j) {
            if (tgt.degree(i) - src.degree(j) != d) continue;
            bool match = true;
            const auto& ri = tgt.residue_sequence(i);
            const auto& rj = src.residue_sequence(j);
            for (int k = 0; k < tgt.n() && match; ++k)
                if (!tgt.residue_data().res_eq(ri[k], rj[k])) match = false;
            if (!match) continue;
            b.var_index[{i, j}] = (int)b.vars.size();
            b.vars.push_back({i, j});
        }
    return b;
}

// equations: for each generator g and matrix entry (i, j),
//   sum_k Mt[i][k] F[k][j] - sum_k F[i][k] Ms[k][j] = 0
template <class T>
static std::vector<SparseRow<T>> build_equations(const Block& blk, const GeneratorSet& gens,
                                                 const std::function<T(const Coeff&)>& conv,
                                                 const std::function<bool(const T&)>& is_zero) {
    std::map<std::pair<long long, long long>, SparseRow<Coeff>> eqs;
    auto key = [](int g, int i, int j) {
        return std::make_pair((long long)g, (long long)i * 1000000 + j);
    };
    for (size_t g = 0; g < gens.src.size(); ++g) {
        const ExactMatrix& Ms = gens.src[g];
        const ExactMatrix& Mt = gens.tgt[g];
        for (int v = 0; v < (int)blk.vars.size(); ++v) {
            auto [k, j] = blk.vars[v];
            for (auto& [i, c] : Mt.cols[k]) eqs[key((int)g, i, j)][v] += c;
        }
        for (int v = 0; v < (int)blk.vars.size(); ++v) {
            auto [i, k2] = blk.vars[v];
            for (int j2 = 0; j2 < (int)Ms.cols.size(); ++j2) {
                auto it = Ms.cols[j2].find(k2);
                if (it == Ms.cols[j2].end()) continue;
                eqs[key((int)g, i, j2)][v] -= it->second;
            }
        }
    }
    std::vector<SparseRow<T>> rows;
    for (auto& [k, r] : eqs) {
        SparseRow<T> clean;
        for (auto& [v, c] : r) {
            if (c == 0) continue;
            T fc = conv(c);
            if (!is_zero(fc)) clean.emplace(v, fc);
        }
        if (!clean.empty()) rows.push_back(std::move(clean));
    }
    return rows;
}

}  // namespace

IntertwinerSpace intertwiner_space(const SpechtModule& src, const SpechtModule& tgt,
                                   const OracleOptions& opts) {
    if (src.n() != tgt.n()) throw std::invalid_argument("modules of different rank");
    IntertwinerSpace out;
    out.source = src.shape();
    out.target = tgt.shape();

    GeneratorSet gens = generator_matrices(src, tgt);

    std::vector<long long> degrees;
    if (opts.degrees) {
        degrees = *opts.degrees;
    } else {
        std::set<long long> ds;
        for (int i = 0; i < tgt.dim(); ++i)
            for (int j = 0; j < src.dim(); ++j) ds.insert((long long)tgt.degree(i) - src.degree(j));
        degrees.assign(ds.begin(), ds.end());
    }

    std::vector<std::pair<int, std::vector<ExactMatrix>>> results(degrees.size());
#ifdef KLRS_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, opts.jobs)) if (opts.jobs > 1)
#endif
    for (int di = 0; di < (int)degrees.size(); ++di) {
        long long d = degrees[di];
        Block blk = block_for_degree(src, tgt, d);
        if (blk.vars.empty()) {
            results[di] = {0, {}};
            continue;
        }
        std::vector<std::vector<Rational>> sols;
        int dim = 0;
        if (opts.prime == 0) {
            RatField F;
            auto rows = build_equations<Rational>(
                blk, gens, [](const Coeff& c) { return Rational(c); },
                [](const Rational& x) { return x == 0; });
            sols = nullspace(F, std::move(rows), (int)blk.vars.size());
            dim = (int)sols.size();
        } else {
            PrimeField F{opts.prime};
            auto rows = build_equations<long long>(
                blk, gens, [&](const Coeff& c) { return F.from(c); },
                [&](const long long& x) { return F.zero(x); });
            auto fs = nullspace(F, std::move(rows), (int)blk.vars.size());
            dim = (int)fs.size();
            for (auto& s : fs) {
                std::vector<Rational> r(s.size());
                for (size_t k = 0; k < s.size(); ++k) r[k] = s[k];
                sols.push_back(std::move(r));
            }
        }
        std::vector<ExactMatrix> maps;
        if (opts.with_bases) {
            for (auto& sol : sols) {
                // clear denominators to get an integer matrix
                Coeff lcm = 1;
                for (auto& x : sol)
                    if (x != 0) {
                        Coeff den = boost::multiprecision::denominator(x);
                        lcm = boost::multiprecision::lcm(lcm, den);
                    }
                ExactMatrix m(tgt.dim(), src.dim());
                for (int v = 0; v < (int)blk.vars.size(); ++v) {
                    if (sol[v] == 0) continue;
                    Rational scaled = sol[v] * Rational(lcm);
                    m.cols[blk.vars[v].second][blk.vars[v].first] =
                        boost::multiprecision::numerator(scaled);
                }
                maps.push_back(std::move(m));
            }
        }
        results[di] = {dim, std::move(maps)};
    }

    for (int di = 0; di < (int)degrees.size(); ++di) {
        if (results[di].first == 0) continue;
        out.degree_dims[degrees[di]] = results[di].first;
        out.bases[degrees[di]] = std::move(results[di].second);
    }
    return out;
}

bool is_intertwiner(const SpechtModule& src, const SpechtModule& tgt, const ExactMatrix& F,
                    std::string* violated) {
    auto check = [&](const ExactMatrix& Ms, const ExactMatrix& Mt, const std::string& name) {
        if (Mt * F == F * Ms) return true;
        if (violated) *violated = name;
        return false;
    };
    for (int s = 1; s <= src.n(); ++s)
        if (!check(src.y_matrix(s), tgt.y_matrix(s), "y_" + std::to_string(s))) return false;
    for (int r = 1; r < src.n(); ++r)
        if (!check(src.psi_matrix(r), tgt.psi_matrix(r), "psi_" + std::to_string(r))) return false;
    for (auto& bi : src.realized_sectors())
        if (!check(src.idem_matrix(bi), tgt.idem_matrix(bi), "e(i)")) return false;
    return true;
}

bool in_intertwiner_span(const IntertwinerSpace& space, long long degree, const ExactMatrix& F) {
    auto it = space.bases.find(degree);
    std::vector<ExactMatrix> basis;
    if (it != space.bases.end()) basis = it->second;

    // collect the union of supports as variables
    std::map<std::pair<int, int>, int> var;
    auto note = [&](const ExactMatrix& m) {
        for (int j = 0; j < m.ncols(); ++j)
            for (auto& [i, c] : m.cols[j])
                var.emplace(std::make_pair(i, j), (int)var.size());
    };
    for (auto& b : basis) note(b);
    note(F);

    auto to_row = [&](const ExactMatrix& m) {
        SparseRow<Rational> r;
        for (int j = 0; j < m.ncols(); ++j)
            for (auto& [i, c] : m.cols[j]) r[var[{i, j}]] = Rational(c);
        return r;
    };
    RatField Fld;
    std::vector<SparseRow<Rational>> rows;
    for (auto& b : basis) rows.push_back(to_row(b));
    int r0 = rank_of(Fld, rows, (int)var.size());
    rows.clear();
    for (auto& b : basis) rows.push_back(to_row(b));
    rows.push_back(to_row(F));
    int r1 = rank_of(Fld, rows, (int)var.size());
    return r1 == r0;
}

}  // namespace klrs
