#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "linear.hpp"
#include "words.hpp"

namespace hopfcomb {

/// A cycle (c_0, c_1, ..., c_{k-1}) means the successor of c_i is c_{i+1},
/// indices mod k.  Stored canonically with the smallest entry first.
class Cycle {
  public:
    Cycle() = default;
    explicit Cycle(std::vector<int> cyc) : w_(std::move(cyc)) {
        if (!w_.empty()) {
            auto it = std::min_element(w_.begin(), w_.end());
            std::rotate(w_.begin(), it, w_.end());
        }
    }

    int size() const { return static_cast<int>(w_.size()); }
    const std::vector<int>& word() const { return w_; }

    /// All k linear readings of the cycle, one per starting point.
    std::vector<std::vector<int>> rotations() const {
        std::vector<std::vector<int>> out;
        std::vector<int> r = w_;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            out.push_back(r);
            std::rotate(r.begin(), r.begin() + 1, r.end());
        }
        return out;
    }

    std::vector<int> support_sorted() const {
        std::vector<int> s = w_;
        std::sort(s.begin(), s.end());
        return s;
    }

    std::strong_ordering operator<=>(const Cycle& o) const {
        // order by minimal entry, then length, then word (within one
        // permutation the minima are distinct, so this sorts by minima)
        if (w_.empty() || o.w_.empty()) return w_.size() <=> o.w_.size();
        if (w_[0] != o.w_[0]) return w_[0] <=> o.w_[0];
        if (w_.size() != o.w_.size()) return w_.size() <=> o.w_.size();
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] != o.w_[i]) return w_[i] <=> o.w_[i];
        return std::strong_ordering::equal;
    }
    bool operator==(const Cycle& o) const { return w_ == o.w_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(w_[i]);
        }
        return s + ")";
    }

  private:
    std::vector<int> w_;
};

/// A set of disjoint cycles, kept sorted (by minimal entries).
class CycleSet {
  public:
    CycleSet() = default;
    explicit CycleSet(std::vector<Cycle> cs) : cs_(std::move(cs)) { std::sort(cs_.begin(), cs_.end()); }

    int count() const { return static_cast<int>(cs_.size()); }
    int degree() const {
        int d = 0;
        for (const auto& c : cs_) d += c.size();
        return d;
    }
    const std::vector<Cycle>& cycles() const { return cs_; }

    std::strong_ordering operator<=>(const CycleSet& o) const {
        if (int d = degree(), e = o.degree(); d != e) return d <=> e;
        if (cs_.size() != o.cs_.size()) return cs_.size() <=> o.cs_.size();
        for (std::size_t i = 0; i < cs_.size(); ++i)
            if (auto c = cs_[i] <=> o.cs_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
    bool operator==(const CycleSet& o) const { return cs_ == o.cs_; }

    std::string str() const {
        if (cs_.empty()) return "()";
        std::string s;
        for (const auto& c : cs_) s += c.str();
        return s;
    }

  private:
    std::vector<Cycle> cs_;
};

// --- permutation <-> cycles ---------------------------------------------------

inline CycleSet cycle_decomposition(const Word& p) {
    std::vector<Cycle> out;
    std::vector<bool> seen(static_cast<std::size_t>(p.size()) + 1, false);
    for (int i = 1; i <= p.size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            cyc.push_back(j);
            j = p.letter(j);
        }
        out.emplace_back(std::move(cyc));
    }
    return CycleSet(std::move(out));
}

/// One-line word of the permutation with the given cycles; the supports must
/// partition {1..n} where n is the total degree.
inline Word one_line(const CycleSet& cs) {
    int n = cs.degree();
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (const Cycle& c : cs.cycles()) {
        const auto& w = c.word();
        for (std::size_t i = 0; i < w.size(); ++i) {
            int from = w[i], to = w[(i + 1) % w.size()];
            if (from < 1 || from > n) throw StructureError("cycle entry outside 1..n in one_line");
            v[static_cast<std::size_t>(from - 1)] = to;
        }
    }
    for (int x : v)
        if (x == 0) throw StructureError("cycle supports do not cover 1..n in one_line");
    return Word(std::move(v));
}

// --- relabelling ----------------------------------------------------------------

inline Cycle relabel_cycle(const Cycle& c, const std::map<int, int>& m) {
    std::vector<int> w;
    w.reserve(c.word().size());
    for (int x : c.word()) w.push_back(m.at(x));
    return Cycle(std::move(w));
}

inline CycleSet shift_cycles(const CycleSet& cs, int offset) {
    std::vector<Cycle> out;
    for (const Cycle& c : cs.cycles()) {
        std::vector<int> w;
        for (int x : c.word()) w.push_back(x + offset);
        out.emplace_back(std::move(w));
    }
    return CycleSet(std::move(out));
}

/// Pack the union of supports order-preservingly onto {1..k}.
inline CycleSet std_cycles(const std::vector<Cycle>& subset) {
    std::vector<int> sup;
    for (const Cycle& c : subset)
        for (int x : c.word()) sup.push_back(x);
    std::sort(sup.begin(), sup.end());
    std::map<int, int> m;
    for (std::size_t i = 0; i < sup.size(); ++i) m[sup[i]] = static_cast<int>(i) + 1;
    std::vector<Cycle> out;
    for (const Cycle& c : subset) out.push_back(relabel_cycle(c, m));
    return CycleSet(std::move(out));
}

// --- cyclic shuffle and matchings ---------------------------------------------

/// Cyclic shuffle of two cycles on disjoint supports: all cycles whose word,
/// read cyclically, restricts to a rotation of each argument.  Computed by
/// shuffling all rotation pairs and grouping the linear words into circular
/// classes; every class must receive all size(a)+size(b) of its readings.
inline std::vector<Cycle> cyclic_shuffle(const Cycle& a, const Cycle& b) {
    std::map<std::vector<int>, int> classes;  // canonical rotation -> linear readings seen
    for (const auto& u : a.rotations()) {
        for (const auto& v : b.rotations()) {
            for (const Word& w : shuffle_words(Word(u), Word(v))) {
                classes[Cycle(w.letters()).word()] += 1;
            }
        }
    }
    int k = a.size() + b.size();
    std::vector<Cycle> out;
    for (const auto& [word, mult] : classes) {
        if (mult != k) throw StructureError("incomplete circular class in cyclic shuffle");
        out.emplace_back(word);
    }
    return out;
}

/// Product of two disjoint-support cycle sets by partial matchings: choose
/// same-size subsets of either side, a bijection between them, and replace
/// each matched pair by one term of its cyclic shuffle; unmatched cycles pass
/// through.  Distinct choices yield distinct cycle sets, so all coefficients
/// are 1.
inline LinComb<CycleSet> matching_product(const CycleSet& A, const CycleSet& B) {
    const auto& as = A.cycles();
    const auto& bs = B.cycles();
    int na = static_cast<int>(as.size()), nb = static_cast<int>(bs.size());
    LinComb<CycleSet> result;

    std::vector<int> chosen_a;  // indices into as, increasing
    std::vector<int> chosen_b;  // matched partner (index into bs) per chosen_a slot

    auto emit = [&]() {
        std::vector<bool> used_b(static_cast<std::size_t>(nb), false);
        for (int j : chosen_b) used_b[static_cast<std::size_t>(j)] = true;
        // fixed part: unmatched cycles
        std::vector<Cycle> base;
        {
            std::vector<bool> used_a(static_cast<std::size_t>(na), false);
            for (int i : chosen_a) used_a[static_cast<std::size_t>(i)] = true;
            for (int i = 0; i < na; ++i)
                if (!used_a[static_cast<std::size_t>(i)]) base.push_back(as[static_cast<std::size_t>(i)]);
            for (int j = 0; j < nb; ++j)
                if (!used_b[static_cast<std::size_t>(j)]) base.push_back(bs[static_cast<std::size_t>(j)]);
        }
        // expand choices of merged cycles, one per matched pair
        std::vector<std::vector<Cycle>> options;
        for (std::size_t t = 0; t < chosen_a.size(); ++t)
            options.push_back(cyclic_shuffle(as[static_cast<std::size_t>(chosen_a[t])],
                                             bs[static_cast<std::size_t>(chosen_b[t])]));
        std::vector<Cycle> cur = base;
        auto rec = [&](auto&& self, std::size_t t) -> void {
            if (t == options.size()) {
                result.add(CycleSet(cur), Scalar(1));
                return;
            }
            for (const Cycle& c : options[t]) {
                cur.push_back(c);
                self(self, t + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    };

    auto pick = [&](auto&& self, int next_a) -> void {
        emit();  // current matching (possibly empty) as-is
        for (int i = next_a; i < na; ++i) {
            std::vector<bool> used_b(static_cast<std::size_t>(nb), false);
            for (int j : chosen_b) used_b[static_cast<std::size_t>(j)] = true;
            for (int j = 0; j < nb; ++j) {
                if (used_b[static_cast<std::size_t>(j)]) continue;
                chosen_a.push_back(i);
                chosen_b.push_back(j);
                self(self, i + 1);
                chosen_a.pop_back();
                chosen_b.pop_back();
            }
        }
    };
    pick(pick, 0);
    return result;
}

// --- invariants of permutations -------------------------------------------------

/// Set partition of {1..n} into cycle supports, blocks sorted by minima.
inline std::vector<std::vector<int>> cycle_supports(const Word& p) {
    std::vector<std::vector<int>> blocks;
    const CycleSet cs = cycle_decomposition(p);
    for (const Cycle& c : cs.cycles()) blocks.push_back(c.support_sorted());
    return blocks;
}

/// Cycle sizes in the order of the cycles' minimal elements (a composition).
inline Word ordered_cycle_type(const Word& p) {
    std::vector<int> parts;
    const CycleSet cs = cycle_decomposition(p);
    for (const Cycle& c : cs.cycles()) parts.push_back(c.size());
    return Word(std::move(parts));
}

/// Cycle sizes sorted decreasingly (a partition).
inline Word cycle_type_partition(const Word& p) {
    std::vector<int> parts;
    const CycleSet cs = cycle_decomposition(p);
    for (const Cycle& c : cs.cycles()) parts.push_back(c.size());
    std::sort(parts.rbegin(), parts.rend());
    return Word(std::move(parts));
}

// --- cyclic standardization ----------------------------------------------------

/// Minimal rotation of a word that may contain repeated letters.
inline std::vector<int> min_rotation(const std::vector<int>& w) {
    std::vector<int> best = w, cur = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end())) best = cur;
    }
    return best;
}

/// Cyclic standardization of a multiset of cyclic words (letters may repeat):
/// rotate each to its minimal reading, sort the readings lexicographically,
/// concatenate, standardize the concatenation, and cut it back into cycles of
/// the original lengths.
inline CycleSet cstd(const std::vector<Word>& cyclic_words) {
    std::vector<std::vector<int>> rots;
    for (const Word& w : cyclic_words) rots.push_back(min_rotation(w.letters()));
    std::sort(rots.begin(), rots.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    std::vector<int> concat;
    for (const auto& r : rots) concat.insert(concat.end(), r.begin(), r.end());
    Word st = standardize(Word(std::move(concat)));
    std::vector<Cycle> cycles;
    int pos = 0;
    for (const auto& r : rots) {
        std::vector<int> cyc;
        for (std::size_t i = 0; i < r.size(); ++i) cyc.push_back(st.letter(++pos));
        cycles.emplace_back(std::move(cyc));
    }
    return CycleSet(std::move(cycles));
}

}  // namespace hopfcomb
