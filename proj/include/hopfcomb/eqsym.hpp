#pragma once
// EQSym: the commutative Hopf algebra on endofunctions in the M basis, and
// its graded dual ESym in the S basis (free over connected endofunctions).
//
// Product rule: M_f M_g = sum over shuffles tau of (1..n) with (n+1..n+m) of
// M_h where h = tau^{-1} . (f*g) . tau and f*g is the shifted concatenation.
// Coproduct rule: Delta M_h = sum over splittings h = f*g of M_f (x) M_g.
// The S basis carries the transposed structure: S^f S^g = S^{f*g}, and
// Delta S^h collects the product constants C_{f,g}^h.

#include <map>
#include <utility>

#include <hopfcomb/linear.hpp>
#include <hopfcomb/words.hpp>

namespace hopfcomb {

/// M_f * M_g in EQSym. Coefficient of M_h counts the block shuffles tau with
/// h = tau^{-1} . (f*g) . tau. Results are memoized per (f,g).
inline LinComb<Word> eqsym_product(const Word& f, const Word& g) {
    thread_local std::map<std::pair<Word, Word>, LinComb<Word>> cache;
    const auto key = std::make_pair(f, g);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    LinComb<Word> out;
    const Word fg = shifted_concat(f, g);
    for (const Word& tau : block_shuffles(f.size(), g.size())) {
        out.add(compose(inverse(tau), compose(fg, tau)), Scalar(1));
    }
    if (f.degree() + g.degree() < 8) cache.emplace(key, out);
    return out;
}

/// Delta M_h: deconcatenation over every way to write h as a shifted
/// concatenation, including the trivial splits at both ends.
inline Tensor2<Word> eqsym_coproduct(const Word& h) {
    Tensor2<Word> out;
    out.add({Word{}, h}, Scalar(1));
    for (int k : split_points(h)) {
        out.add({subword_prefix(h, k), subword_suffix_shifted(h, k)}, Scalar(1));
    }
    if (h.size() > 0) out.add({h, Word{}}, Scalar(1));
    return out;
}

/// S^f * S^g = S^{f*g} (shifted concatenation of indices).
inline LinComb<Word> esym_product(const Word& f, const Word& g) {
    return LinComb<Word>::basis(shifted_concat(f, g));
}

/// Delta S^h = sum_{f,g} C_{f,g}^h S^f (x) S^g, the transpose of
/// eqsym_product. For each cut size k and each block shuffle tau of
/// (1..k),(k+1..n): u = tau . h . tau^{-1}; when u splits at k the pair
/// (prefix, shifted suffix) receives one unit.
inline Tensor2<Word> esym_coproduct(const Word& h) {
    const int n = h.size();
    Tensor2<Word> out;
    for (int k = 0; k <= n; ++k) {
        for (const Word& tau : block_shuffles(k, n - k)) {
            const Word u = compose(tau, compose(h, inverse(tau)));
            bool splits = true;
            for (int i = 1; i <= k && splits; ++i) splits = u.letter(i) <= k;
            for (int i = k + 1; i <= n && splits; ++i) splits = u.letter(i) > k;
            if (splits) {
                out.add({subword_prefix(u, k), subword_suffix_shifted(u, k)}, Scalar(1));
            }
        }
    }
    return out;
}

}  // namespace hopfcomb
