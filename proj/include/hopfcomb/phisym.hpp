#pragma once
// PhiSym: the cocommutative Hopf algebra on permutations in the phi basis.
// The product merges cycle sets through matchings and cyclic shuffles; the
// coproduct unshuffles the set of cycles. Two further bases Sprime (products
// of phi over connected factors) and Ssec (iterated matching products of
// single cycles) are unitriangular over phi, and the quotient by cycle type
// yields a copy of the symmetric functions with basis Y_lambda.

#include <string>
#include <utility>
#include <vector>

#include <hopfcomb/cycles.hpp>
#include <hopfcomb/hopf.hpp>
#include <hopfcomb/linear.hpp>
#include <hopfcomb/partitions.hpp>
#include <hopfcomb/words.hpp>

namespace hopfcomb {

/// phi_alpha * phi_beta: matchings of the cycles of alpha with the shifted
/// cycles of beta; matched pairs run over cyclic shuffles. All coefficients
/// are 0 or 1.
inline LinComb<Word> phi_product(const Word& alpha, const Word& beta) {
    const CycleSet c1 = cycle_decomposition(alpha);
    const CycleSet c2 = shift_cycles(cycle_decomposition(beta), alpha.size());
    return matching_product(c1, c2).map_keys(
        [](const CycleSet& cs) { return LinComb<Word>::basis(one_line(cs)); });
}

/// Delta phi_sigma: unshuffle the cycle set; each subset/complement pair is
/// standardized on both sides.
inline Tensor2<Word> phi_coproduct(const Word& sigma) {
    const CycleSet cs = cycle_decomposition(sigma);
    const auto& cycles = cs.cycles();
    const int r = static_cast<int>(cycles.size());
    Tensor2<Word> out;
    for (unsigned long msk = 0; msk < (1ul << r); ++msk) {
        std::vector<Cycle> a;
        std::vector<Cycle> b;
        for (int i = 0; i < r; ++i) {
            if (msk >> i & 1) a.push_back(cycles[static_cast<std::size_t>(i)]);
            else b.push_back(cycles[static_cast<std::size_t>(i)]);
        }
        out.add({one_line(std_cycles(a)), one_line(std_cycles(b))}, Scalar(1));
    }
    return out;
}

/// Sprime_sigma = phi_{sigma_1} ... phi_{sigma_r} over the maximal
/// factorization of sigma into connected factors, expanded in the phi basis.
inline LinComb<Word> sprime_expand(const Word& sigma) {
    LinComb<Word> out = LinComb<Word>::basis(Word{});
    for (const Word& factor : connected_factors(sigma)) {
        out = multiply_elements(out, LinComb<Word>::basis(factor),
                                [](const Word& a, const Word& b) { return phi_product(a, b); });
    }
    return out;
}

/// Ssec_sigma = iterated matching product of the single cycles of sigma,
/// expanded in the phi basis.
inline LinComb<Word> ssec_expand(const Word& sigma) {
    const CycleSet cs = cycle_decomposition(sigma);
    LinComb<CycleSet> acc;
    acc.add(CycleSet{}, Scalar(1));
    for (const Cycle& c : cs.cycles()) {
        LinComb<CycleSet> next;
        for (const auto& [k, v] : acc) {
            next += matching_product(k, CycleSet(std::vector<Cycle>{c})) * v;
        }
        acc = std::move(next);
    }
    return acc.map_keys([](const CycleSet& k) { return LinComb<Word>::basis(one_line(k)); });
}

inline int connected_factor_count(const Word& w) {
    return static_cast<int>(connected_factors(w).size());
}

inline int cycle_count(const Word& w) { return cycle_decomposition(w).count(); }

namespace detail {

/// Invert a unitriangular expansion: peel off the key of maximal rank, whose
/// expansion is itself plus strictly lower-rank phi terms.
template <class Expand, class Rank>
LinComb<Word> invert_unitriangular(const LinComb<Word>& x, Expand&& expand, Rank&& rank,
                                   const std::string& what) {
    LinComb<Word> residual = x;
    LinComb<Word> out;
    while (!residual.is_zero()) {
        const Word* best = nullptr;
        int best_rank = -1;
        for (const auto& [k, c] : residual) {
            const int rk = rank(k);
            if (rk > best_rank) {
                best_rank = rk;
                best = &k;
            }
        }
        const Word key = *best;
        const Scalar coeff = residual.coefficient(key);
        out.add(key, coeff);
        residual -= expand(key) * coeff;
        if (!residual.coefficient(key).is_zero())
            throw StructureError(what + " conversion is not unitriangular at " + key.str());
    }
    return out;
}

}  // namespace detail

/// Convert a phi-basis element into the Sprime basis.
inline LinComb<Word> phi_to_sprime(const LinComb<Word>& x) {
    return detail::invert_unitriangular(
        x, [](const Word& s) { return sprime_expand(s); },
        [](const Word& s) { return connected_factor_count(s); }, "Sprime");
}

/// Convert a phi-basis element into the Ssec basis.
inline LinComb<Word> phi_to_ssec(const LinComb<Word>& x) {
    return detail::invert_unitriangular(
        x, [](const Word& s) { return ssec_expand(s); },
        [](const Word& s) { return cycle_count(s); }, "Ssec");
}

// --- the quotient by cycle type: Y_lambda --------------------------------------

/// Canonical representative permutation of a cycle type: consecutive
/// increasing cycles (1..l1)(l1+1..l1+l2)...
inline Word y_representative(const Word& lambda) {
    std::vector<Cycle> cycles;
    int start = 1;
    for (int part : lambda.letters()) {
        std::vector<int> seq;
        for (int i = start; i < start + part; ++i) seq.push_back(i);
        cycles.emplace_back(std::move(seq));
        start += part;
    }
    return one_line(CycleSet(std::move(cycles)));
}

/// Project a phi-basis element onto the quotient by cycle type (keys become
/// partitions).
inline LinComb<Word> y_project(const LinComb<Word>& phi_elt) {
    LinComb<Word> out;
    for (const auto& [k, c] : phi_elt) out.add(cycle_type_partition(k), c);
    return out;
}

/// Y product computed from explicitly chosen class representatives.
inline LinComb<Word> y_product_from(const Word& rep_lambda, const Word& rep_mu) {
    return y_project(phi_product(rep_lambda, rep_mu));
}

inline LinComb<Word> y_product(const Word& lambda, const Word& mu) {
    return y_product_from(y_representative(lambda), y_representative(mu));
}

inline Tensor2<Word> y_coproduct(const Word& lambda) {
    Tensor2<Word> out;
    for (const auto& [pr, c] : phi_coproduct(y_representative(lambda))) {
        out.add({cycle_type_partition(pr.first), cycle_type_partition(pr.second)}, c);
    }
    return out;
}

/// Image of Y_lambda in the monomial symmetric basis:
/// (prod_i m_i!) / (prod_j (lambda_j - 1)!) times m_lambda.
inline Scalar y_to_m_coefficient(const Word& lambda) {
    mpz_class num = 1;
    for (const auto& [part, mult] : part_multiplicities(lambda)) num *= factorial(mult);
    mpz_class den = 1;
    for (int part : lambda.letters()) den *= factorial(part - 1);
    mpq_class r(num, den);
    r.canonicalize();
    return Scalar(r);
}

inline LinComb<Word> y_to_m(const Word& lambda) {
    LinComb<Word> out;
    out.add(lambda, y_to_m_coefficient(lambda));
    return out;
}

}  // namespace hopfcomb
