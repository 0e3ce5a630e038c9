#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "scalar.hpp"
#include "words.hpp"

namespace hopfcomb {

// Partitions are Words with weakly decreasing parts; compositions are Words
// with positive parts.  Degree of either is the sum of parts, exposed here.

inline int parts_sum(const Word& w) {
    int s = 0;
    for (int x : w.letters()) s += x;
    return s;
}

inline bool is_partition(const Word& w) {
    if (!is_composition(w)) return false;
    return std::is_sorted(w.letters().rbegin(), w.letters().rend());
}

inline std::vector<Word> compositions_of(int n) {
    std::vector<Word> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            cur.push_back(p);
            self(self, rem - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

inline std::vector<Word> partitions_of(int n) {
    std::vector<Word> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Does composition J refine composition I (consecutive parts of J sum to the
/// parts of I, in order)?
inline bool refines(const Word& J, const Word& I) {
    std::size_t j = 0;
    for (int part : I.letters()) {
        int acc = 0;
        while (acc < part) {
            if (j >= J.letters().size()) return false;
            acc += J.letters()[j++];
        }
        if (acc != part) return false;
    }
    return j == J.letters().size();
}

/// All compositions refining I.
inline std::vector<Word> refinements_of(const Word& I) {
    std::vector<Word> out{Word{}};
    for (int part : I.letters()) {
        std::vector<Word> next;
        for (const Word& prefix : out) {
            for (const Word& piece : compositions_of(part)) {
                std::vector<int> v = prefix.letters();
                v.insert(v.end(), piece.letters().begin(), piece.letters().end());
                next.emplace_back(std::move(v));
            }
        }
        out = std::move(next);
    }
    return out;
}

inline Word sort_to_partition(const Word& w) {
    std::vector<int> v = w.letters();
    std::sort(v.rbegin(), v.rend());
    return Word(std::move(v));
}

inline Word partition_union(const Word& a, const Word& b) {
    std::vector<int> v = a.letters();
    v.insert(v.end(), b.letters().begin(), b.letters().end());
    std::sort(v.rbegin(), v.rend());
    return Word(std::move(v));
}

inline std::map<int, int> part_multiplicities(const Word& lambda) {
    std::map<int, int> m;
    for (int x : lambda.letters()) ++m[x];
    return m;
}

inline mpz_class factorial(int n) {
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// z_lambda = prod_i i^{m_i} m_i!  (order of the centralizer of a permutation
/// of cycle type lambda).
inline mpz_class z_of(const Word& lambda) {
    mpz_class z = 1;
    for (auto [part, mult] : part_multiplicities(lambda)) {
        for (int i = 0; i < mult; ++i) z *= part;
        z *= factorial(mult);
    }
    return z;
}

inline int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

inline std::vector<int> divisors(int n) {
    std::vector<int> d;
    for (int i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

// --- symmetric group characters ------------------------------------------------

namespace detail {
/// Beta-set of a partition: {lambda_i + (len - i)} for i = 1..len, distinct,
/// returned sorted increasingly.
inline std::vector<int> beta_set(const std::vector<int>& lambda) {
    int len = static_cast<int>(lambda.size());
    std::vector<int> b;
    for (int i = 1; i <= len; ++i) b.push_back(lambda[static_cast<std::size_t>(i - 1)] + (len - i));
    std::sort(b.begin(), b.end());
    return b;
}

inline std::vector<int> partition_from_beta(std::vector<int> b) {
    std::sort(b.begin(), b.end());
    int len = static_cast<int>(b.size());
    std::vector<int> lam;
    for (int i = len - 1; i >= 0; --i) {
        int part = b[static_cast<std::size_t>(i)] - i;
        if (part > 0) lam.push_back(part);
    }
    return lam;  // decreasing
}

inline mpz_class mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t pos) {
    if (pos == mu.size()) return lambda.empty() ? mpz_class(1) : mpz_class(0);
    int r = mu[pos];
    std::vector<int> b = beta_set(lambda);
    mpz_class total = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        int nb = b[i] - r;
        if (nb < 0) continue;
        if (std::find(b.begin(), b.end(), nb) != b.end()) continue;
        int between = 0;  // elements strictly between nb and b[i] determine the strip height
        for (int x : b)
            if (x > nb && x < b[i]) ++between;
        std::vector<int> b2 = b;
        b2[i] = nb;
        mpz_class sub = mn_rec(partition_from_beta(std::move(b2)), mu, pos + 1);
        if (between % 2 == 1) sub = -sub;
        total += sub;
    }
    return total;
}
}  // namespace detail

/// Irreducible character chi^lambda evaluated on the class of cycle type mu
/// (Murnaghan-Nakayama recursion; mu may be any composition of |lambda|).
inline mpz_class character_value(const Word& lambda, const Word& mu) {
    if (parts_sum(lambda) != parts_sum(mu)) throw StructureError("character_value: sizes differ");
    return detail::mn_rec(lambda.letters(), mu.letters(), 0);
}

// --- set partitions --------------------------------------------------------------

/// A set partition of {1..n}: blocks sorted increasingly inside, blocks
/// ordered by their minima.
class SetPartition {
  public:
    SetPartition() = default;
    explicit SetPartition(std::vector<std::vector<int>> blocks) : b_(std::move(blocks)) {
        for (auto& blk : b_) std::sort(blk.begin(), blk.end());
        std::sort(b_.begin(), b_.end());
        n_ = 0;
        for (const auto& blk : b_) n_ += static_cast<int>(blk.size());
    }

    int degree() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return b_; }

    std::strong_ordering operator<=>(const SetPartition& o) const {
        if (n_ != o.n_) return n_ <=> o.n_;
        if (b_ != o.b_) return b_ < o.b_ ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    bool operator==(const SetPartition& o) const { return b_ == o.b_; }

    /// Block sizes in block order (a composition).
    Word block_sizes() const {
        std::vector<int> v;
        for (const auto& blk : b_) v.push_back(static_cast<int>(blk.size()));
        return Word(std::move(v));
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < b_.size(); ++i) {
            if (i) s += "|";
            for (std::size_t j = 0; j < b_[i].size(); ++j) {
                if (j) s += ",";
                s += std::to_string(b_[i][j]);
            }
        }
        return s + "}";
    }

  private:
    std::vector<std::vector<int>> b_;
    int n_ = 0;
};

inline std::vector<SetPartition> set_partitions_of(int n) {
    std::vector<SetPartition> out;
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            out.emplace_back(blocks);
            return;
        }
        // Index-based: the recursive call grows `blocks`, which may
        // reallocate and invalidate references into it.
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            blocks[bi].push_back(i);
            self(self, i + 1);
            blocks[bi].pop_back();
        }
        blocks.push_back({i});
        self(self, i + 1);
        blocks.pop_back();
    };
    rec(rec, 1);
    return out;
}

}  // namespace hopfcomb
