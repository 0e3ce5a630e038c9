#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "words.hpp"

namespace hopfcomb {

/// Enumeration guards: these bounds keep exhaustive loops inside the time
/// budgets of the verification suites.  Exceeding one throws BudgetError
/// rather than silently hanging.
inline constexpr int kMaxEndofunctionDegree = 7;   // n^n terms
inline constexpr int kMaxPermutationDegree = 9;    // n! terms
inline constexpr int kMaxParkingDegree = 8;        // (n+1)^(n-1) terms

inline void check_budget(int n, int limit, const char* what) {
    if (n < 0) throw StructureError(std::string(what) + ": negative degree");
    if (n > limit)
        throw BudgetError(std::string(what) + ": degree " + std::to_string(n) + " exceeds enumeration bound " +
                          std::to_string(limit));
}

inline std::vector<Word> all_endofunctions(int n) {
    check_budget(n, kMaxEndofunctionDegree, "all_endofunctions");
    std::vector<Word> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 1);
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    while (true) {
        out.emplace_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n) {
            cur[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

inline std::vector<Word> all_permutations(int n) {
    check_budget(n, kMaxPermutationDegree, "all_permutations");
    std::vector<Word> out;
    std::vector<int> cur(static_cast<std::size_t>(n));
    std::iota(cur.begin(), cur.end(), 1);
    do {
        out.emplace_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return out;
}

inline std::vector<Word> all_parking_functions(int n) {
    check_budget(n, kMaxParkingDegree, "all_parking_functions");
    std::vector<Word> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(n), 1);
    while (true) {
        Word w(cur);
        if (is_parking(w)) out.push_back(std::move(w));
        int i = n - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n) {
            cur[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

inline std::vector<Word> all_nondecreasing_parking_functions(int n) {
    std::vector<Word> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int i, int low) -> void {
        if (i > n) {
            out.emplace_back(cur);
            return;
        }
        for (int v = low; v <= i; ++v) {
            cur.push_back(v);
            self(self, i + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 1, 1);
    return out;
}

inline std::vector<Word> all_involutions(int n) {
    std::vector<Word> out;
    for (const Word& p : all_permutations(n))
        if (compose(p, p) == identity_word(n)) out.push_back(p);
    return out;
}

template <class Pred>
inline std::vector<Word> filtered(std::vector<Word> v, Pred pred) {
    std::vector<Word> out;
    for (auto& w : v)
        if (pred(w)) out.push_back(std::move(w));
    return out;
}

}  // namespace hopfcomb
