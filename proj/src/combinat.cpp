#include "klrs/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace klrs {

std::string Multipartition::to_string() const {
    std::ostringstream os;
    for (int l = 1; l <= level(); ++l) {
        if (l > 1) os << "|";
        const auto& c = comps_[l - 1];
        if (c.empty()) os << "-";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ",";
            os << c[i];
        }
    }
    return os.str();
}

int residue(const Node& a, const ResidueData& rd) {
    if (a.comp < 1 || a.comp > rd.level()) throw std::out_of_range("component index out of range");
    return rd.reduce((long long)rd.charge[a.comp - 1] - a.row + a.col);
}

BoundaryNodes boundary_nodes(const Multipartition& mp) {
    BoundaryNodes out;
    for (int l = 1; l <= mp.level(); ++l) {
        int rr = mp.rows(l);
        for (int r = 1; r <= rr + 1; ++r) {
            Node add{l, r, mp.row_length(l, r) + 1};
            if (mp.is_addable(add)) out.addable.push_back(add);
            Node rem{l, r, mp.row_length(l, r)};
            if (r <= rr && mp.is_removable(rem)) out.removable.push_back(rem);
        }
    }
    return out;
}

bool dominates(const Multipartition& a, const Multipartition& b) {
    int lev = std::max(a.level(), b.level());
    long long ca = 0, cb = 0;
    for (int m = 1; m <= lev; ++m) {
        int rr = std::max(m <= a.level() ? a.rows(m) : 0, m <= b.level() ? b.rows(m) : 0);
        long long pa = ca, pb = cb;
        for (int s = 1; s <= rr; ++s) {
            pa += (m <= a.level()) ? a.row_length(m, s) : 0;
            pb += (m <= b.level()) ? b.row_length(m, s) : 0;
            if (pa < pb) return false;
        }
        ca = pa;
        cb = pb;
    }
    return true;
}

int node_degree(const Multipartition& mp, const Node& a, const ResidueData& rd) {
    assert(mp.is_removable(a));
    int i = residue(a, rd);
    auto bn = boundary_nodes(mp);
    int d = 0;
    for (const auto& x : bn.addable)
        if (row_of(a) < row_of(x) && residue(x, rd) == i) ++d;
    for (const auto& x : bn.removable)
        if (row_of(a) < row_of(x) && residue(x, rd) == i) --d;
    return d;
}

std::vector<Strip> removable_strips(const Multipartition& mp, int j, int maxlen,
                                    const ResidueData& rd) {
    std::vector<Strip> out;
    for (int l = 1; l <= mp.level(); ++l)
        for (int r = 1; r <= mp.rows(l); ++r) {
            int len = mp.row_length(l, r);
            int below = mp.row_length(l, r + 1);
            for (int d = 1; d <= maxlen && d <= len - below; ++d) {
                Node leftmost{l, r, len - d + 1};
                if (residue(leftmost, rd) == rd.reduce(j)) out.push_back({leftmost, d, rd.reduce(j)});
            }
        }
    return out;
}

Tableau Tableau::initial(const Multipartition& mp) {
    std::vector<std::vector<std::vector<int>>> rows(mp.level());
    int k = 0;
    for (int l = 1; l <= mp.level(); ++l) {
        rows[l - 1].resize(mp.rows(l));
        for (int r = 1; r <= mp.rows(l); ++r)
            for (int c = 1; c <= mp.row_length(l, r); ++c) rows[l - 1][r - 1].push_back(++k);
    }
    return Tableau(mp, std::move(rows));
}

Node Tableau::node_of(int k) const {
    for (int l = 1; l <= shape_.level(); ++l)
        for (int r = 1; r <= shape_.rows(l); ++r)
            for (int c = 1; c <= shape_.row_length(l, r); ++c)
                if (rows_[l - 1][r - 1][c - 1] == k) return {l, r, c};
    throw std::out_of_range("entry not present in tableau");
}

bool Tableau::is_row_standard() const {
    for (auto& comp : rows_)
        for (auto& row : comp)
            for (size_t c = 0; c + 1 < row.size(); ++c)
                if (row[c] >= row[c + 1]) return false;
    return true;
}

bool Tableau::is_standard() const {
    if (!is_row_standard()) return false;
    for (auto& comp : rows_)
        for (size_t r = 0; r + 1 < comp.size(); ++r)
            for (size_t c = 0; c < comp[r + 1].size(); ++c)
                if (comp[r][c] >= comp[r + 1][c]) return false;
    return true;
}

Tableau Tableau::acted(const Permutation& w) const {
    Tableau t = *this;
    for (auto& comp : t.rows_)
        for (auto& row : comp)
            for (auto& v : row) v = w(v);
    return t;
}

Tableau Tableau::acted_simple(int r) const {
    Tableau t = *this;
    for (auto& comp : t.rows_)
        for (auto& row : comp)
            for (auto& v : row) {
                if (v == r) v = r + 1;
                else if (v == r + 1) v = r;
            }
    return t;
}

Permutation Tableau::d_permutation() const {
    int n = size();
    Tableau t0 = initial(shape_);
    std::vector<int> img(n);
    for (int l = 1; l <= shape_.level(); ++l)
        for (int r = 1; r <= shape_.rows(l); ++r)
            for (int c = 1; c <= shape_.row_length(l, r); ++c)
                img[t0.entry(l, r, c) - 1] = entry(l, r, c);
    return Permutation(std::move(img));
}

Multipartition Tableau::restricted_shape(int k) const {
    std::vector<std::vector<int>> cs(shape_.level());
    for (int l = 1; l <= shape_.level(); ++l)
        for (int r = 1; r <= shape_.rows(l); ++r) {
            int cnt = 0;
            for (int c = 1; c <= shape_.row_length(l, r); ++c)
                if (entry(l, r, c) <= k) ++cnt;
            cs[l - 1].push_back(cnt);
        }
    return Multipartition(std::move(cs));
}

Tableau Tableau::restricted(int k) const {
    Multipartition sh = restricted_shape(k);
    std::vector<std::vector<std::vector<int>>> rows(sh.level());
    for (int l = 1; l <= sh.level(); ++l) {
        rows[l - 1].resize(sh.rows(l));
        for (int r = 1; r <= sh.rows(l); ++r)
            for (int c = 1; c <= sh.row_length(l, r); ++c)
                rows[l - 1][r - 1].push_back(entry(l, r, c));
    }
    return Tableau(sh, std::move(rows));
}

std::vector<int> Tableau::row_reading_word() const {
    std::vector<int> out;
    for (auto& comp : rows_)
        for (auto& row : comp) out.insert(out.end(), row.begin(), row.end());
    return out;
}

std::vector<int> Tableau::residue_sequence(const ResidueData& rd) const {
    std::vector<int> res(size());
    for (int l = 1; l <= shape_.level(); ++l)
        for (int r = 1; r <= shape_.rows(l); ++r)
            for (int c = 1; c <= shape_.row_length(l, r); ++c)
                res[entry(l, r, c) - 1] = residue({l, r, c}, rd);
    return res;
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    for (int l = 1; l <= shape_.level(); ++l) {
        if (l > 1) os << "|";
        for (int r = 1; r <= shape_.rows(l); ++r) {
            if (r > 1) os << "/";
            for (int c = 1; c <= shape_.row_length(l, r); ++c) {
                if (c > 1) os << ",";
                os << entry(l, r, c);
            }
        }
    }
    return os.str();
}

int tableau_degree(const Tableau& t, const ResidueData& rd) {
    if (!t.is_standard()) throw std::invalid_argument("degree requires a standard tableau");
    int deg = 0;
    Multipartition sh = t.shape();
    for (int k = t.size(); k >= 1; --k) {
        Node a = t.node_of(k);
        deg += node_degree(sh, a, rd);
        sh = sh.with_node_removed(a);
    }
    return deg;
}

bool dominates_tableaux(const Tableau& s, const Tableau& t) {
    if (s.shape() != t.shape()) throw std::invalid_argument("tableaux of different shape");
    for (int k = 1; k <= s.size(); ++k)
        if (!dominates(s.restricted_shape(k), t.restricted_shape(k))) return false;
    return true;
}

std::vector<Tableau> standard_tableaux(const Multipartition& mp) {
    // place n, n-1, ..., 1 at removable nodes of the shrinking shape
    std::vector<Tableau> out;
    int n = mp.size();
    std::vector<std::vector<std::vector<int>>> rows(mp.level());
    for (int l = 1; l <= mp.level(); ++l) {
        rows[l - 1].resize(mp.rows(l));
        for (int r = 1; r <= mp.rows(l); ++r) rows[l - 1][r - 1].assign(mp.row_length(l, r), 0);
    }
    Tableau t(mp, rows);
    std::function<void(Multipartition, int)> rec = [&](Multipartition sh, int k) {
        if (k == 0) {
            out.push_back(t);
            return;
        }
        for (const auto& a : boundary_nodes(sh).removable) {
            t.set_entry(a, k);
            rec(sh.with_node_removed(a), k - 1);
            t.set_entry(a, 0);
        }
    };
    rec(mp, n);
    // canonical basis order: row reading word, lexicographically
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return a.row_reading_word() < b.row_reading_word();
    });
    return out;
}

long long count_standard_tableaux(const Multipartition& mp) {
    std::map<std::vector<std::vector<int>>, long long> memo;
    std::function<long long(const Multipartition&)> rec = [&](const Multipartition& sh) -> long long {
        if (sh.size() == 0) return 1;
        auto key = sh.components();
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        long long total = 0;
        for (const auto& a : boundary_nodes(sh).removable) total += rec(sh.with_node_removed(a));
        memo[key] = total;
        return total;
    };
    return rec(mp);
}

bool is_garnir_node(const Multipartition& mp, const Node& a) {
    return mp.contains(a) && mp.contains({a.comp, a.row + 1, a.col});
}

std::vector<Node> garnir_nodes(const Multipartition& mp) {
    std::vector<Node> out;
    for (const auto& a : mp.nodes())
        if (is_garnir_node(mp, a)) out.push_back(a);
    return out;
}

Permutation GarnirData::brick_image(const Permutation& d, int n) const {
    Permutation w(n);
    for (int r : d.canonical_word()) w = w * brick_transpositions[r - 1];
    return w;
}

GarnirData garnir_data(const Multipartition& mp, const Node& a, const ResidueData& rd) {
    if (!is_garnir_node(mp, a)) throw std::invalid_argument("not a Garnir node");
    GarnirData g;
    g.A = a;
    int n = mp.size();
    int l = a.comp, r = a.row, c = a.col;
    int rowlen = mp.row_length(l, r);

    if (rd.e > 0) {
        g.aA = (rowlen - c + 1) / rd.e;          // complete bricks from column c rightwards
        g.cA = c / rd.e;                          // complete bricks ending at column c
        g.bA = g.aA + g.cA;
        for (int k = 0; k < g.aA * rd.e; ++k) g.belt.push_back({l, r, c + k});
        for (int k = 0; k < g.cA * rd.e; ++k) g.belt.push_back({l, r + 1, c - g.cA * rd.e + 1 + k});
    }

    // t_A: agrees with t^mu outside the segment [t^mu(A), t^mu(l,r+1,c)]; the
    // segment fills (1) row r+1 left of the belt, (2) row r of the belt,
    // (3) row r+1 of the belt, (4) the rest of row r.
    Tableau t0 = Tableau::initial(mp);
    g.tA = t0;
    int v = t0.entry(a);
    auto put = [&](int comp, int row, int col) { g.tA.set_entry({comp, row, col}, v++); };
    for (int x = 1; x <= c - g.cA * rd.e; ++x) put(l, r + 1, x);
    for (int x = c; x < c + g.aA * rd.e; ++x) put(l, r, x);
    for (int x = c - g.cA * rd.e + 1; x <= c; ++x) put(l, r + 1, x);
    for (int x = c + g.aA * rd.e; x <= rowlen; ++x) put(l, r, x);
    assert(v == t0.entry({l, r + 1, c}) + 1);
    assert(g.tA.is_row_standard());

    g.kA = g.tA.entry(a);
    // brick transpositions are only used when D_A is nontrivial, which needs
    // bricks in both rows; the belt values k_A .. k_A + e*b_A - 1 are then
    // consecutive in t_A by the filling order
    if (g.aA > 0 && g.cA > 0)
        for (int br = 1; br < g.bA; ++br) {
            Permutation w(n);
            for (int x = g.kA + rd.e * (br - 1); x <= g.kA + br * rd.e - 1; ++x) {
                assert(x + rd.e <= n);
                w = w * Permutation::transposition(n, x, x + rd.e);
            }
            g.brick_transpositions.push_back(w);
        }

    // minimal right coset representatives: increasing on {1..a} and {a+1..b}
    int b = std::max(g.bA, 1);
    std::vector<int> img(b);
    std::iota(img.begin(), img.end(), 1);
    do {
        bool ok = true;
        for (int i = 1; i < g.aA; ++i)
            if (img[i - 1] > img[i]) ok = false;
        for (int i = g.aA + 1; i < g.bA; ++i)
            if (img[i - 1] > img[i]) ok = false;
        if (ok) g.DA.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    g.d0 = g.DA.front();
    for (const auto& d : g.DA)
        if (d.length() > g.d0.length()) g.d0 = d;

    g.garnir_tableau = g.tA.acted(g.brick_image(g.d0, n));
    g.iA = g.tA.residue_sequence(rd);
    return g;
}

static void partitions_of(int n, int maxpart, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Multipartition> multipartitions(int n, int level) {
    std::vector<std::vector<std::vector<int>>> parts(n + 1);
    for (int m = 0; m <= n; ++m) {
        std::vector<int> cur;
        partitions_of(m, m == 0 ? 1 : m, cur, parts[m]);
        if (m == 0) parts[m] = {{}};
    }
    std::vector<Multipartition> out;
    std::vector<std::vector<int>> comps(level);
    std::function<void(int, int)> rec = [&](int l, int rem) {
        if (l == level) {
            if (rem == 0) out.push_back(Multipartition(comps));
            return;
        }
        for (int m = 0; m <= rem; ++m)
            for (auto& p : parts[m]) {
                comps[l] = p;
                rec(l + 1, rem - m);
            }
        comps[l].clear();
    };
    rec(0, n);
    return out;
}

}  // namespace klrs
