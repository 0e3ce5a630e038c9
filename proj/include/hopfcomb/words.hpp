#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace hopfcomb {

/// A word over the positive integers.  Used for endofunctions, permutations,
/// parking functions and compositions alike; the graded degree is the length.
/// Ordering is degree-first, then lexicographic, which is the canonical term
/// order everywhere in the library.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<int> letters) : a_(std::move(letters)) {}
    Word(std::initializer_list<int> letters) : a_(letters) {}

    int size() const { return static_cast<int>(a_.size()); }
    int degree() const { return size(); }
    bool empty() const { return a_.empty(); }

    /// 1-based letter access: letter(i) is the image of i for function words.
    int letter(int i) const { return a_[static_cast<std::size_t>(i - 1)]; }
    int& letter(int i) { return a_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& letters() const { return a_; }
    void push_back(int x) { a_.push_back(x); }

    std::strong_ordering operator<=>(const Word& o) const {
        if (a_.size() != o.a_.size()) return a_.size() <=> o.a_.size();
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (a_[i] != o.a_[i]) return a_[i] <=> o.a_[i];
        return std::strong_ordering::equal;
    }
    bool operator==(const Word& o) const { return a_ == o.a_; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(a_[i]);
        }
        return s;
    }

  private:
    std::vector<int> a_;
};

inline Word identity_word(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Word(std::move(v));
}

// --- predicates ------------------------------------------------------------

inline bool is_endofunction(const Word& w) {
    for (int x : w.letters())
        if (x < 1 || x > w.size()) return false;
    return true;
}

inline bool is_permutation(const Word& w) {
    std::vector<bool> seen(static_cast<std::size_t>(w.size()) + 1, false);
    for (int x : w.letters()) {
        if (x < 1 || x > w.size() || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

/// Parking condition: the nondecreasing rearrangement b satisfies b_i <= i.
inline bool is_parking(const Word& w) {
    std::vector<int> b = w.letters();
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 1 || b[i] > static_cast<int>(i) + 1) return false;
    }
    return true;
}

inline bool is_nondecreasing(const Word& w) {
    return std::is_sorted(w.letters().begin(), w.letters().end());
}

inline bool is_composition(const Word& w) {
    for (int x : w.letters())
        if (x < 1) return false;
    return true;
}

// --- elementary operations ---------------------------------------------------

/// Standardization: the permutation with the same relative order, ties broken
/// left to right (ranks equal letters in reading order).
inline Word standardize(const Word& w) {
    int n = w.size();
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
        return w.letters()[static_cast<std::size_t>(i)] < w.letters()[static_cast<std::size_t>(j)];
    });
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) out[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])] = r + 1;
    return Word(std::move(out));
}

/// f * g: act with f on {1..n} and with g shifted to {n+1..n+m}.
inline Word shifted_concat(const Word& f, const Word& g) {
    std::vector<int> v = f.letters();
    v.reserve(v.size() + g.letters().size());
    for (int x : g.letters()) v.push_back(x + f.size());
    return Word(std::move(v));
}

/// Functional composition (a after b): result(i) = a(b(i)).
inline Word compose(const Word& a, const Word& b) {
    std::vector<int> v(static_cast<std::size_t>(b.size()));
    for (int i = 1; i <= b.size(); ++i) v[static_cast<std::size_t>(i - 1)] = a.letter(b.letter(i));
    return Word(std::move(v));
}

inline Word inverse(const Word& p) {
    std::vector<int> v(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) v[static_cast<std::size_t>(p.letter(i) - 1)] = i;
    return Word(std::move(v));
}

/// All interleavings of u and v (as a flat list; callers on disjoint alphabets
/// receive pairwise distinct words).
inline std::vector<Word> shuffle_words(const Word& u, const Word& v) {
    std::vector<Word> out;
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(u.size() + v.size()));
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == u.size() && j == v.size()) {
            out.emplace_back(cur);
            return;
        }
        if (i < u.size()) {
            cur.push_back(u.letter(i + 1));
            self(self, i + 1, j);
            cur.pop_back();
        }
        if (j < v.size()) {
            cur.push_back(v.letter(j + 1));
            self(self, i, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Shuffles of (1..n) with (n+1..n+m): the relabelling permutations that
/// appear in products of sum-of-monomials bases.
inline std::vector<Word> block_shuffles(int n, int m) {
    std::vector<int> hi(static_cast<std::size_t>(m));
    std::iota(hi.begin(), hi.end(), n + 1);
    return shuffle_words(identity_word(n), Word(std::move(hi)));
}

/// Positions 0 < k < n where the function word splits as f|g with f acting on
/// {1..k} and the suffix taking values in {k+1..n}.
inline std::vector<int> split_points(const Word& w) {
    std::vector<int> pts;
    int n = w.size();
    for (int k = 1; k < n; ++k) {
        bool ok = true;
        for (int i = 1; i <= k && ok; ++i) ok = w.letter(i) <= k;
        for (int i = k + 1; i <= n && ok; ++i) ok = w.letter(i) > k;
        if (ok) pts.push_back(k);
    }
    return pts;
}

inline bool is_connected(const Word& w) { return w.size() >= 1 && split_points(w).empty(); }

inline Word subword_prefix(const Word& w, int k) {
    std::vector<int> v(w.letters().begin(), w.letters().begin() + k);
    return Word(std::move(v));
}

/// Suffix of length n-k, shifted down by k (for coproduct legs).
inline Word subword_suffix_shifted(const Word& w, int k) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(w.size() - k));
    for (int i = k + 1; i <= w.size(); ++i) v.push_back(w.letter(i) - k);
    return Word(std::move(v));
}

/// Maximal factorization w = w1 * w2 * ... * wr into connected factors.
inline std::vector<Word> connected_factors(const Word& w) {
    std::vector<Word> out;
    if (w.empty()) return out;
    std::vector<int> pts = split_points(w);
    pts.push_back(w.size());
    int prev = 0;
    for (int k : pts) {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(k - prev));
        for (int i = prev + 1; i <= k; ++i) v.push_back(w.letter(i) - prev);
        out.emplace_back(std::move(v));
        prev = k;
    }
    return out;
}

/// Number of inversions (the Coxeter length for permutations).
inline int inversion_count(const Word& w) {
    int n = w.size(), c = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w.letter(i) > w.letter(j)) ++c;
    return c;
}

/// Inversions across a cut: pairs i <= k < j with w_i > w_j.
inline int cross_inversions(const Word& w, int k) {
    int c = 0;
    for (int i = 1; i <= k; ++i)
        for (int j = k + 1; j <= w.size(); ++j)
            if (w.letter(i) > w.letter(j)) ++c;
    return c;
}

/// Descent composition of a permutation: run lengths between descents.
inline Word descent_composition(const Word& p) {
    std::vector<int> parts;
    int run = 0;
    for (int i = 1; i <= p.size(); ++i) {
        ++run;
        if (i == p.size() || p.letter(i) > p.letter(i + 1)) {
            parts.push_back(run);
            run = 0;
        }
    }
    return Word(std::move(parts));
}

}  // namespace hopfcomb
