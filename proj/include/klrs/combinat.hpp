#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klrs/perm.hpp"

namespace klrs {

// Quantum characteristic e (0 or >= 2) together with the multicharge.
// Residues live in Z/eZ for e > 0 and in Z for e = 0.
struct ResidueData {
    int e = 0;
    std::vector<int> charge;

    ResidueData() = default;
    ResidueData(int e_, std::vector<int> charge_) : e(e_), charge(std::move(charge_)) {
        if (e == 1 || e < 0) throw std::invalid_argument("quantum characteristic must be 0 or >= 2");
        if (charge.empty()) throw std::invalid_argument("multicharge must be non-empty");
    }

    int level() const { return (int)charge.size(); }

    int reduce(long long x) const {
        if (e == 0) return (int)x;
        long long m = x % e;
        if (m < 0) m += e;
        return (int)m;
    }
    bool res_eq(long long a, long long b) const { return reduce(a) == reduce(b); }

    // Cartan matrix of the quiver with arrows i -> i-1
    int cartan(int i, int j) const {
        i = reduce(i);
        j = reduce(j);
        if (i == j) return 2;
        bool up = res_eq(j, (long long)i + 1);
        bool down = res_eq(j, (long long)i - 1);
        if (up && down) return -2;  // only for e = 2
        if (up || down) return -1;
        return 0;
    }

    // (Lambda, alpha_i): multiplicity of i among the charges mod e
    int cyclotomic_exponent(int i) const {
        int c = 0;
        for (int k : charge)
            if (res_eq(k, i)) ++c;
        return c;
    }
};

// A node (component, row, column), all 1-based.
struct Node {
    int comp = 0, row = 0, col = 0;
    bool operator==(const Node& o) const { return comp == o.comp && row == o.row && col == o.col; }
    bool operator!=(const Node& o) const { return !(*this == o); }
    // row-reading order
    bool operator<(const Node& o) const {
        if (comp != o.comp) return comp < o.comp;
        if (row != o.row) return row < o.row;
        return col < o.col;
    }
};

struct RowIndex {
    int comp = 0, row = 0;
    bool operator==(const RowIndex& o) const { return comp == o.comp && row == o.row; }
    bool operator!=(const RowIndex& o) const { return !(*this == o); }
    bool operator<(const RowIndex& o) const {
        return comp < o.comp || (comp == o.comp && row < o.row);
    }
    bool operator<=(const RowIndex& o) const { return *this < o || *this == o; }
};

inline RowIndex row_of(const Node& a) { return {a.comp, a.row}; }

class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<std::vector<int>> comps) : comps_(std::move(comps)) {
        for (auto& c : comps_) {
            while (!c.empty() && c.back() == 0) c.pop_back();
            for (size_t i = 0; i + 1 < c.size(); ++i)
                if (c[i] < c[i + 1]) throw std::invalid_argument("component is not a partition");
            for (int p : c)
                if (p < 0) throw std::invalid_argument("negative part");
        }
    }

    int level() const { return (int)comps_.size(); }
    const std::vector<std::vector<int>>& components() const { return comps_; }
    const std::vector<int>& component(int l) const { return comps_[l - 1]; }

    int size() const {
        int n = 0;
        for (auto& c : comps_)
            for (int p : c) n += p;
        return n;
    }

    int rows(int l) const { return (int)comps_[l - 1].size(); }
    int row_length(int l, int r) const {
        const auto& c = comps_[l - 1];
        return r <= (int)c.size() ? c[r - 1] : 0;
    }

    bool contains(const Node& a) const {
        return a.comp >= 1 && a.comp <= level() && a.row >= 1 && a.col >= 1 &&
               a.col <= row_length(a.comp, a.row);
    }

    bool operator==(const Multipartition& o) const { return comps_ == o.comps_; }
    bool operator!=(const Multipartition& o) const { return comps_ != o.comps_; }
    bool operator<(const Multipartition& o) const { return comps_ < o.comps_; }

    std::vector<Node> nodes() const {
        std::vector<Node> out;
        for (int l = 1; l <= level(); ++l)
            for (int r = 1; r <= rows(l); ++r)
                for (int c = 1; c <= row_length(l, r); ++c) out.push_back({l, r, c});
        return out;
    }

    Multipartition with_node_removed(const Node& a) const {
        auto cs = comps_;
        cs[a.comp - 1][a.row - 1] -= 1;
        return Multipartition(std::move(cs));
    }
    Multipartition with_node_added(const Node& a) const {
        auto cs = comps_;
        if ((int)cs[a.comp - 1].size() < a.row) cs[a.comp - 1].resize(a.row, 0);
        cs[a.comp - 1][a.row - 1] += 1;
        return Multipartition(std::move(cs));
    }

    bool is_removable(const Node& a) const {
        if (!contains(a)) return false;
        if (a.col != row_length(a.comp, a.row)) return false;
        return a.col - 1 >= row_length(a.comp, a.row + 1);
    }
    bool is_addable(const Node& a) const {
        if (a.comp < 1 || a.comp > level() || a.row < 1) return false;
        if (a.col != row_length(a.comp, a.row) + 1) return false;
        if (a.row == 1) return true;
        return a.col <= row_length(a.comp, a.row - 1);
    }

    // componentwise, rowwise maximum
    Multipartition union_with(const Multipartition& o) const {
        assert(level() == o.level());
        std::vector<std::vector<int>> cs(level());
        for (int l = 1; l <= level(); ++l) {
            int rr = std::max(rows(l), o.rows(l));
            for (int r = 1; r <= rr; ++r)
                cs[l - 1].push_back(std::max(row_length(l, r), o.row_length(l, r)));
        }
        return Multipartition(std::move(cs));
    }

    bool contains_shape(const Multipartition& o) const {
        if (level() != o.level()) return false;
        for (int l = 1; l <= level(); ++l)
            for (int r = 1; r <= o.rows(l); ++r)
                if (o.row_length(l, r) > row_length(l, r)) return false;
        return true;
    }

    std::string to_string() const;

private:
    std::vector<std::vector<int>> comps_;
};

int residue(const Node& a, const ResidueData& rd);

// addable / removable nodes, each sorted by row order
struct BoundaryNodes {
    std::vector<Node> addable;
    std::vector<Node> removable;
};
BoundaryNodes boundary_nodes(const Multipartition& mp);

bool dominates(const Multipartition& a, const Multipartition& b);
inline bool strictly_dominates(const Multipartition& a, const Multipartition& b) {
    return a != b && dominates(a, b);
}

// d_A(mu) for a removable node A: addable minus removable same-residue nodes
// strictly below A
int node_degree(const Multipartition& mp, const Node& a, const ResidueData& rd);

// A removable j-strip: contiguous run of nodes at the end of one row whose
// removal leaves a multipartition; j is the residue of the leftmost node.
struct Strip {
    Node leftmost;
    int length = 0;
    int j = 0;
    RowIndex row() const { return {leftmost.comp, leftmost.row}; }
    std::vector<Node> nodes() const {
        std::vector<Node> out;
        for (int k = 0; k < length; ++k)
            out.push_back({leftmost.comp, leftmost.row, leftmost.col + k});
        return out;
    }
    bool contains(const Node& a) const {
        return a.comp == leftmost.comp && a.row == leftmost.row && a.col >= leftmost.col &&
               a.col < leftmost.col + length;
    }
};

std::vector<Strip> removable_strips(const Multipartition& mp, int j, int maxlen,
                                    const ResidueData& rd);

class Tableau {
public:
    Tableau() = default;
    Tableau(Multipartition shape, std::vector<std::vector<std::vector<int>>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {}

    // the row-reading tableau t^mu
    static Tableau initial(const Multipartition& mp);

    const Multipartition& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    int entry(const Node& a) const { return rows_[a.comp - 1][a.row - 1][a.col - 1]; }
    int entry(int l, int r, int c) const { return rows_[l - 1][r - 1][c - 1]; }
    void set_entry(const Node& a, int v) { rows_[a.comp - 1][a.row - 1][a.col - 1] = v; }

    Node node_of(int k) const;  // position of entry k
    RowIndex row_of_entry(int k) const { return row_of(node_of(k)); }

    bool is_row_standard() const;
    bool is_standard() const;

    // right action by a place permutation on entries
    Tableau acted(const Permutation& w) const;
    Tableau acted_simple(int r) const;  // swap entries r, r+1

    // d(t) with t = t^shape * d(t)
    Permutation d_permutation() const;

    // subtableau of entries 1..k
    Multipartition restricted_shape(int k) const;
    Tableau restricted(int k) const;

    std::vector<int> row_reading_word() const;
    std::vector<int> residue_sequence(const ResidueData& rd) const;
    std::string to_string() const;

    bool operator==(const Tableau& o) const { return shape_ == o.shape_ && rows_ == o.rows_; }

private:
    Multipartition shape_;
    std::vector<std::vector<std::vector<int>>> rows_;
};

int tableau_degree(const Tableau& t, const ResidueData& rd);

bool dominates_tableaux(const Tableau& s, const Tableau& t);

std::vector<Tableau> standard_tableaux(const Multipartition& mp);
long long count_standard_tableaux(const Multipartition& mp);

// Garnir data at a Garnir node A (one with (l, r+1, c) in the diagram).
// The belt is the union of the maximal run of complete e-bricks starting at
// column c in row (l,r) and the maximal run ending at column c in row (l,r+1).
struct GarnirData {
    Node A;
    std::vector<Node> belt;
    int bA = 0, aA = 0, cA = 0;
    int kA = 0;                      // t_A(A), start of the first brick
    Tableau tA;                      // the belt-ordered tableau of the relation
    Tableau garnir_tableau;          // t_A * w^A_{d0}, the classical Garnir tableau
    std::vector<Permutation> DA;     // minimal right coset reps of S_a x S_c in S_b
    Permutation d0;                  // the longest element of DA
    std::vector<Permutation> brick_transpositions;  // w^A_r, 1 <= r < bA
    std::vector<int> iA;             // residue sequence of tA

    // image of d in S_n under the brick embedding w^A
    Permutation brick_image(const Permutation& d, int n) const;
};

bool is_garnir_node(const Multipartition& mp, const Node& a);
std::vector<Node> garnir_nodes(const Multipartition& mp);
GarnirData garnir_data(const Multipartition& mp, const Node& a, const ResidueData& rd);

std::vector<Multipartition> multipartitions(int n, int level);

}  // namespace klrs
