#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <vector>

namespace klrs {

// Permutations of {1,...,n} stored by images.  Products are read left to
// right throughout: (v*w)(x) = w(v(x)).  Reduced words are sequences
// [r1,...,rl] with perm = s_{r1} * ... * s_{rl}.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {}

    static Permutation transposition(int n, int a, int b) {
        Permutation p(n);
        std::swap(p.img_[a - 1], p.img_[b - 1]);
        return p;
    }

    // s(l,m) = (l,l+1)(l+1,l+2)...(m-1,m), the cycle sending l -> m and
    // x -> x-1 for l < x <= m.  Canonical word [l, l+1, ..., m-1].
    static Permutation cycle_lm(int n, int l, int m) {
        Permutation p(n);
        for (int r = l; r < m; ++r) p = p * transposition(n, r, r + 1);
        return p;
    }

    static Permutation from_word(int n, const std::vector<int>& word) {
        Permutation p(n);
        for (int r : word) p.apply_simple_right(r);
        return p;
    }

    int size() const { return (int)img_.size(); }
    int operator()(int x) const { return img_[x - 1]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if (img_[i - 1] != i) return false;
        return true;
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    // left-to-right product: first *this, then o
    Permutation operator*(const Permutation& o) const {
        Permutation r;
        r.img_.resize(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = o.img_[img_[i] - 1];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.img_.resize(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i] - 1] = (int)i + 1;
        return r;
    }

    // this * s_r, in place
    void apply_simple_right(int r) {
        for (auto& v : img_)
            if (v == r) v = r + 1;
            else if (v == r + 1) v = r;
    }

    long long length() const {
        long long inv = 0;
        for (size_t i = 0; i < img_.size(); ++i)
            for (size_t j = i + 1; j < img_.size(); ++j)
                if (img_[i] > img_[j]) ++inv;
        return inv;
    }

    // w has a reduced word starting with r  <=>  w(r) > w(r+1)
    bool has_left_descent(int r) const { return img_[r - 1] > img_[r]; }
    // w has a reduced word ending with r  <=>  position of r after position of r+1
    bool has_right_descent(int r) const {
        int pr = 0, pr1 = 0;
        for (int i = 0; i < size(); ++i) {
            if (img_[i] == r) pr = i;
            if (img_[i] == r + 1) pr1 = i;
        }
        return pr > pr1;
    }

    // strips the left descent r: returns w' with s_r * w' = w, additive length
    Permutation strip_left(int r) const {
        assert(has_left_descent(r));
        Permutation w = *this;
        std::swap(w.img_[r - 1], w.img_[r]);
        return w;
    }

    // lexicographically-least-descent reduced word; [] for the identity
    std::vector<int> canonical_word() const {
        std::vector<int> word;
        Permutation w = *this;
        for (;;) {
            int r = 0;
            for (int i = 1; i < w.size(); ++i)
                if (w.img_[i - 1] > w.img_[i]) { r = i; break; }
            if (r == 0) break;
            word.push_back(r);
            std::swap(w.img_[r - 1], w.img_[r]);
        }
        return word;
    }

    // Ehresmann criterion for the Bruhat order
    bool bruhat_leq(const Permutation& w) const {
        assert(size() == w.size());
        std::vector<int> a, b;
        for (int k = 1; k <= size(); ++k) {
            a.push_back(img_[k - 1]);
            b.push_back(w.img_[k - 1]);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            for (int i = 0; i < k; ++i)
                if (a[i] > b[i]) return false;
        }
        return true;
    }

private:
    std::vector<int> img_;
};

inline std::vector<int> word_of_cycle_lm(int l, int m) {
    std::vector<int> w;
    for (int r = l; r < m; ++r) w.push_back(r);
    return w;
}

}  // namespace klrs
