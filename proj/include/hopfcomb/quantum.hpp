#pragma once
// q-deformations on the permutation and composition algebras: the
// shifted-shuffle product with the q-graded deconcatenation coproduct mapping
// into a chi-twisted tensor square, quantum quasi-symmetric functions realized
// by q-commuting letters together with the dual twisted algebra on
// compositions, the projection q^{l(sigma)} F_{c(sigma)} onto descent classes,
// q-graded congruence normal forms (sylvester and hypoplactic flavours), and
// the one-parameter coproduct family generated on connected permutations.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <iterator>
#include <map>
#include <utility>
#include <vector>

#include <hopfcomb/enumerate.hpp>
#include <hopfcomb/hopf.hpp>
#include <hopfcomb/linear.hpp>
#include <hopfcomb/partitions.hpp>
#include <hopfcomb/scalar.hpp>
#include <hopfcomb/words.hpp>

namespace hopfcomb {

// --- the permutation algebra and its q-coproduct ----------------------------------

/// F_alpha * F_beta: sum of F_w over shuffles of alpha with beta shifted.
inline LinComb<Word> fqsym_product(const Word& a, const Word& b) {
    std::vector<int> hi = b.letters();
    for (int& x : hi) x += a.size();
    LinComb<Word> out;
    for (const Word& w : shuffle_words(a, Word(std::move(hi)))) out.add(w, Scalar(1));
    return out;
}

/// Untwisted coproduct: standardized deconcatenation at every cut.
inline Tensor2<Word> fqsym_coproduct(const Word& s) {
    Tensor2<Word> out;
    const auto& v = s.letters();
    for (int k = 0; k <= s.size(); ++k) {
        Word pre(std::vector<int>(v.begin(), v.begin() + k));
        Word suf(std::vector<int>(v.begin() + k, v.end()));
        out.add({standardize(pre), standardize(suf)}, Scalar(1));
    }
    return out;
}

/// Delta_q F_sigma = sum over cuts of q^{inv(prefix, suffix)} F (x) F, where
/// the exponent counts inversions of sigma with one element on each side.
inline Tensor2<Word> delta_q(const Word& s) {
    Tensor2<Word> out;
    const auto& v = s.letters();
    for (int k = 0; k <= s.size(); ++k) {
        Word pre(std::vector<int>(v.begin(), v.begin() + k));
        Word suf(std::vector<int>(v.begin() + k, v.end()));
        out.add({standardize(pre), standardize(suf)}, Scalar::q(cross_inversions(s, k)));
    }
    return out;
}

// --- twisted tensor multiplication -------------------------------------------------

/// (a (x) b) . (a' (x) b') = chi(b, a') (aa' (x) bb') with
/// chi(b, a') = q^{deg(b) deg(a')} for the supplied degree; pass
/// twist = false for the ordinary componentwise product.
template <class ProdA, class ProdB, class DegFn>
Tensor2<Word> twisted_multiply(const Tensor2<Word>& s, const Tensor2<Word>& t, ProdA&& pa,
                               ProdB&& pb, bool twist, DegFn&& deg) {
    Tensor2<Word> out;
    for (const auto& [p1, c1] : s) {
        for (const auto& [p2, c2] : t) {
            const Scalar chi = twist ? Scalar::q(deg(p1.second) * deg(p2.first)) : Scalar(1);
            const LinComb<Word> left = pa(p1.first, p2.first);
            const LinComb<Word> right = pb(p1.second, p2.second);
            for (const auto& [lk, lc] : left)
                for (const auto& [rk, rc] : right) out.add({lk, rk}, c1 * c2 * chi * lc * rc);
        }
    }
    return out;
}

inline Tensor2<Word> fqsym_twisted_multiply(const Tensor2<Word>& s, const Tensor2<Word>& t) {
    return twisted_multiply(
        s, t, [](const Word& x, const Word& y) { return fqsym_product(x, y); },
        [](const Word& x, const Word& y) { return fqsym_product(x, y); }, true,
        [](const Word& w) { return w.size(); });
}

// --- the composition algebra NCSF_q ------------------------------------------------

/// Degree of a composition index: the sum of its parts.
inline int composition_weight(const Word& i) {
    int s = 0;
    for (int p : i.letters()) s += p;
    return s;
}

/// S^I S^J = S^{I.J}: plain concatenation of compositions.
inline LinComb<Word> ncsfq_product(const Word& i, const Word& j) {
    std::vector<int> w = i.letters();
    w.insert(w.end(), j.letters().begin(), j.letters().end());
    return LinComb<Word>::basis(Word(std::move(w)));
}

/// Delta_q S_n = sum_{i+j=n} q^{ij} S_i (x) S_j (S_0 = 1).
inline Tensor2<Word> ncsfq_generator_coproduct(int n) {
    Tensor2<Word> out;
    for (int i = 0; i <= n; ++i) {
        const int j = n - i;
        Word left = i == 0 ? Word{} : Word{i};
        Word right = j == 0 ? Word{} : Word{j};
        out.add({left, right}, Scalar::q(i * j));
    }
    return out;
}

/// Extend multiplicatively through the chi-twisted tensor square, where the
/// twist degree of S^I is the weight |I|.
inline Tensor2<Word> ncsfq_coproduct(const Word& i) {
    Tensor2<Word> acc;
    acc.add({Word{}, Word{}}, Scalar(1));
    for (int part : i.letters()) {
        acc = twisted_multiply(
            acc, ncsfq_generator_coproduct(part),
            [](const Word& x, const Word& y) { return ncsfq_product(x, y); },
            [](const Word& x, const Word& y) { return ncsfq_product(x, y); }, true,
            [](const Word& w) { return composition_weight(w); });
    }
    return acc;
}

// --- quantum quasi-symmetric functions ---------------------------------------------

namespace detail {

inline void qsymq_shuffle_rec(const std::vector<int>& i, std::size_t ii,
                              const std::vector<int>& j, std::size_t jj, int sum_i_rest,
                              std::vector<int>& acc, const Scalar& coeff, bool merge_weighted,
                              LinComb<Word>& out) {
    if (jj == j.size()) {
        std::vector<int> w = acc;
        w.insert(w.end(), i.begin() + static_cast<std::ptrdiff_t>(ii), i.end());
        out.add(Word(std::move(w)), coeff);
        return;
    }
    if (ii == i.size()) {
        std::vector<int> w = acc;
        w.insert(w.end(), j.begin() + static_cast<std::ptrdiff_t>(jj), j.end());
        out.add(Word(std::move(w)), coeff);
        return;
    }
    const int a = i[ii];
    const int b = j[jj];
    // part of I goes first: no letters of J cross anything
    acc.push_back(a);
    qsymq_shuffle_rec(i, ii + 1, j, jj, sum_i_rest - a, acc, coeff, merge_weighted, out);
    acc.pop_back();
    // part of J goes first: its letters pass every remaining letter of I
    acc.push_back(b);
    qsymq_shuffle_rec(i, ii, j, jj + 1, sum_i_rest, acc, coeff * Scalar::q(b * sum_i_rest),
                      merge_weighted, out);
    acc.pop_back();
    // merge a and b into one part: in the letter realization b's letters pass
    // only the parts of I strictly after a; the dual rule charges the merged
    // pair as a crossing as well
    const int merge_exp = merge_weighted ? b * sum_i_rest : b * (sum_i_rest - a);
    acc.push_back(a + b);
    qsymq_shuffle_rec(i, ii + 1, j, jj + 1, sum_i_rest - a, acc, coeff * Scalar::q(merge_exp),
                      merge_weighted, out);
    acc.pop_back();
}

}  // namespace detail

/// M_I M_J in the realization by q-commuting letters x_j x_i = q x_i x_j for
/// j > i: the quasi-shuffle of compositions where a part b of J passing a
/// part a of I contributes q^{ab} and merged parts contribute nothing.
inline LinComb<Word> qsymq_product(const Word& i, const Word& j) {
    LinComb<Word> out;
    std::vector<int> acc;
    detail::qsymq_shuffle_rec(i.letters(), 0, j.letters(), 0, composition_weight(i), acc,
                              Scalar(1), false, out);
    return out;
}

/// The transpose of the ncsfq coproduct: the quasi-shuffle in which merged
/// parts are charged q^{ab} exactly like crossings.  Differs from the
/// realization product only on merge terms (smallest case: the coefficient of
/// M_(2) in M_(1) M_(1) is q here and 1 in the realization).
inline LinComb<Word> qsymq_dual_product(const Word& i, const Word& j) {
    LinComb<Word> out;
    std::vector<int> acc;
    detail::qsymq_shuffle_rec(i.letters(), 0, j.letters(), 0, composition_weight(i), acc,
                              Scalar(1), true, out);
    return out;
}

/// Delta_q M_I: plain deconcatenation of the composition (the q-deformation
/// leaves the monomial coproduct untouched).
inline Tensor2<Word> qsymq_coproduct(const Word& i) {
    Tensor2<Word> out;
    const auto& v = i.letters();
    for (int k = 0; k <= i.size(); ++k) {
        Word left(std::vector<int>(v.begin(), v.begin() + k));
        Word right(std::vector<int>(v.begin() + k, v.end()));
        out.add({left, right}, Scalar(1));
    }
    return out;
}

/// F_I = sum of M_J over refinements J of I.
inline LinComb<Word> qsym_fundamental_to_monomial(const Word& i) {
    LinComb<Word> out;
    for (const Word& j : refinements_of(i)) out.add(j, Scalar(1));
    return out;
}

/// phi(F_sigma) = q^{l(sigma)} F_{c(sigma)}: Coxeter length as inversion
/// count, descent composition as the index; returned in the fundamental
/// basis of the composition algebra.
inline LinComb<Word> phi_map(const Word& sigma) {
    LinComb<Word> out;
    out.add(descent_composition(sigma), Scalar::q(inversion_count(sigma)));
    return out;
}

/// The same image expanded into the monomial basis.
inline LinComb<Word> phi_map_monomial(const Word& sigma) {
    return qsym_fundamental_to_monomial(descent_composition(sigma)) *
           Scalar::q(inversion_count(sigma));
}

// --- q-graded congruences -----------------------------------------------------------

enum class Congruence {
    QSylvester,    // u ca v b w  ==  q . u ac v b w   with a <= b < c
    QHypoplactic,  // the sylvester rule plus  u b v ca w == q . u b v ac w  with a < b <= c
};

struct CongruenceNormalForm {
    Word representative;  // lexicographically minimal word in the class
    int exponent;         // w == q^exponent . representative
    bool operator==(const CongruenceNormalForm&) const = default;
};

namespace detail {

/// One-step rewrites w -> (neighbour, potential difference p(w) - p(nb)).
/// The sources of the q-rules sit one power above their targets.
inline std::vector<std::pair<Word, int>> congruence_moves(const Word& w, Congruence c) {
    std::vector<std::pair<Word, int>> out;
    const std::vector<int>& v = w.letters();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const int x = v[i];
        const int y = v[i + 1];
        if (x == y) continue;
        const int cc = std::max(x, y);
        const int aa = std::min(x, y);
        // sylvester pattern: some b after the pair with a <= b < c
        bool applies = false;
        for (std::size_t jp = i + 2; jp < n && !applies; ++jp)
            if (aa <= v[jp] && v[jp] < cc) applies = true;
        // hypoplactic extra pattern: some b before the pair with a < b <= c
        if (!applies && c == Congruence::QHypoplactic)
            for (std::size_t jp = 0; jp < i && !applies; ++jp)
                if (aa < v[jp] && v[jp] <= cc) applies = true;
        if (!applies) continue;
        std::vector<int> nb = v;
        std::swap(nb[i], nb[i + 1]);
        // (c a) is one q above (a c) in both rules
        out.emplace_back(Word(std::move(nb)), x > y ? +1 : -1);
    }
    return out;
}

}  // namespace detail

/// Explore the congruence class of w, checking that the q-exponent is
/// consistent along every rewrite path; returns the lexicographically
/// minimal representative and the exponent of w over it.
inline CongruenceNormalForm congruence_normal_form(const Word& w, Congruence c) {
    std::map<Word, int> potential{{w, 0}};
    std::deque<Word> queue{w};
    Word best = w;
    int best_pot = 0;
    while (!queue.empty()) {
        const Word cur = queue.front();
        queue.pop_front();
        const int pc = potential.at(cur);
        for (const auto& [nb, diff] : detail::congruence_moves(cur, c)) {
            const int pn = pc - diff;
            auto it = potential.find(nb);
            if (it == potential.end()) {
                potential.emplace(nb, pn);
                queue.push_back(nb);
                if (nb < best) {
                    best = nb;
                    best_pot = pn;
                }
            } else if (it->second != pn) {
                throw StructureError("congruence not q-graded at " + nb.str());
            }
        }
    }
    return {best, -best_pot};
}

/// All members of the congruence class of w.
inline std::vector<Word> congruence_class(const Word& w, Congruence c) {
    std::map<Word, bool> seen{{w, true}};
    std::deque<Word> queue{w};
    while (!queue.empty()) {
        const Word cur = queue.front();
        queue.pop_front();
        for (const auto& [nb, diff] : detail::congruence_moves(cur, c)) {
            (void)diff;
            if (!seen.count(nb)) {
                seen.emplace(nb, true);
                queue.push_back(nb);
            }
        }
    }
    std::vector<Word> out;
    out.reserve(seen.size());
    for (const auto& [k, val] : seen) {
        (void)val;
        out.push_back(k);
    }
    return out;
}

/// Number of congruence classes of permutations of S_n; exponent consistency
/// is verified on every class along the way.
inline std::size_t congruence_class_count(int n, Congruence c) {
    std::map<Word, bool> seen;
    std::size_t classes = 0;
    for (const Word& s : all_permutations(n)) {
        if (seen.count(s)) continue;
        ++classes;
        for (const Word& m : congruence_class(s, c)) seen.emplace(m, true);
        (void)congruence_normal_form(s, c);  // throws if the class is not q-graded
    }
    return classes;
}

// --- the one-parameter coproduct family ---------------------------------------------

enum class FamilyMode {
    Ordinary,  // extend multiplicatively through the plain tensor square
    Twisted,   // extend through the chi-twisted tensor square
};

/// Express F_sigma in the free-generator basis of products of F_c over
/// connected permutations c: returns (sequence of connected factors,
/// coefficient) pairs.  Works by peeling the lexicographically largest
/// remaining term, whose finest factorization names a product basis element
/// with the same lexicographically-smallest shuffle term.
inline std::vector<std::pair<std::vector<Word>, Scalar>> fqsym_in_connected_products(
    const Word& sigma) {
    std::vector<std::pair<std::vector<Word>, Scalar>> result;
    LinComb<Word> residual = LinComb<Word>::basis(sigma);
    while (!residual.is_zero()) {
        const auto last = std::prev(residual.end());
        const Word lead = last->first;
        const Scalar coeff = last->second;
        const std::vector<Word> factors = connected_factors(lead);
        LinComb<Word> prod = LinComb<Word>::basis(Word{});
        for (const Word& f : factors)
            prod = multiply_elements(
                prod, LinComb<Word>::basis(f),
                [](const Word& x, const Word& y) { return fqsym_product(x, y); });
        residual -= prod * coeff;
        if (!residual.coefficient(lead).is_zero())
            throw StructureError("connected-product conversion is not unitriangular at " +
                                 lead.str());
        result.emplace_back(factors, coeff);
    }
    return result;
}

/// The coproduct family: the q-graded cut formula on connected permutations,
/// extended multiplicatively (ordinary or twisted mode) through the
/// free-generator expression of F_sigma.  Coefficients stay formal in q.
inline Tensor2<Word> delta_family(const Word& sigma, FamilyMode mode) {
    Tensor2<Word> out;
    for (const auto& [factors, coeff] : fqsym_in_connected_products(sigma)) {
        Tensor2<Word> acc;
        acc.add({Word{}, Word{}}, Scalar(1));
        for (const Word& f : factors) {
            acc = twisted_multiply(
                acc, delta_q(f),
                [](const Word& x, const Word& y) { return fqsym_product(x, y); },
                [](const Word& x, const Word& y) { return fqsym_product(x, y); },
                mode == FamilyMode::Twisted, [](const Word& w) { return w.size(); });
        }
        out += acc * coeff;
    }
    return out;
}

namespace detail {

/// Rank of a matrix with exact scalar entries by Gaussian elimination.
inline std::size_t matrix_rank(std::vector<std::vector<Scalar>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            const Scalar f = m[r][col] / m[rank][col];
            for (std::size_t k = col; k < cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Dimension of the primitive elements in degree n for the family coproduct
/// specialized at q = 0: the exact nullspace of the reduced coproduct.
inline int primitive_dimension_q0(int n, FamilyMode mode) {
    const std::vector<Word> basis = all_permutations(n);
    std::map<std::pair<Word, Word>, std::size_t> columns;
    std::vector<Tensor2<Word>> reduced;
    reduced.reserve(basis.size());
    for (const Word& s : basis) {
        const Tensor2<Word> t = delta_family(s, mode).eval_q(Scalar(0));
        Tensor2<Word> red;
        for (const auto& [pr, c] : t) {
            if (pr.first.empty() || pr.second.empty()) continue;
            red.add(pr, c);
            columns.emplace(pr, 0);
        }
        reduced.push_back(std::move(red));
    }
    std::size_t idx = 0;
    for (auto& [pr, val] : columns) {
        (void)pr;
        val = idx++;
    }
    std::vector<std::vector<Scalar>> m(basis.size(), std::vector<Scalar>(columns.size()));
    for (std::size_t r = 0; r < reduced.size(); ++r)
        for (const auto& [pr, c] : reduced[r]) m[r][columns.at(pr)] = c;
    return static_cast<int>(basis.size()) - static_cast<int>(detail::matrix_rank(std::move(m)));
}

}  // namespace hopfcomb
