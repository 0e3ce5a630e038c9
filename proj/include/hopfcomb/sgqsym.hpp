#pragma once
// SGQSym: the Hopf subalgebra of EQSym spanned by M_sigma over permutations,
// with three equivalent product routes (inherited conjugation rule, cycle
// splitting, dual splitting counts), its dual SGSym, and the subalgebra tower
// PiQSym (set partitions, u_pi) > QSym copy (compositions, uq) > Sym copy
// (partitions, ul), plus the symmetric-function embedding data and the
// involutive-span check.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <hopfcomb/cycles.hpp>
#include <hopfcomb/enumerate.hpp>
#include <hopfcomb/eqsym.hpp>
#include <hopfcomb/hopf.hpp>
#include <hopfcomb/linear.hpp>
#include <hopfcomb/partitions.hpp>
#include <hopfcomb/words.hpp>

namespace hopfcomb {

/// M_alpha * M_beta for permutations: the inherited rule. Closure into
/// permutation keys is verified.
inline LinComb<Word> sg_product(const Word& alpha, const Word& beta) {
    LinComb<Word> out = eqsym_product(alpha, beta);
    for (const auto& [h, c] : out) {
        if (!is_permutation(h))
            throw StructureError("sg_product: non-permutation output key " + h.str());
    }
    return out;
}

/// Deconcatenation coproduct restricted to permutations.
inline Tensor2<Word> sg_coproduct(const Word& sigma) { return eqsym_coproduct(sigma); }

/// Independent product route: split [n+m] into an n-set A and its complement
/// B, and relabel the cycles of alpha into A and of beta into B by the unique
/// increasing maps.
inline LinComb<Word> sg_product_cycle_splitting(const Word& alpha, const Word& beta) {
    const int n = alpha.size();
    const int m = beta.size();
    const CycleSet ca = cycle_decomposition(alpha);
    const CycleSet cb = cycle_decomposition(beta);
    LinComb<Word> out;
    std::vector<char> mask(static_cast<std::size_t>(n + m));
    std::fill(mask.begin(), mask.begin() + n, 1);
    do {
        std::map<int, int> into_a;
        std::map<int, int> into_b;
        int ka = 0;
        int kb = 0;
        for (int v = 1; v <= n + m; ++v) {
            if (mask[static_cast<std::size_t>(v - 1)]) into_a[++ka] = v;
            else into_b[++kb] = v;
        }
        std::vector<Cycle> cycles;
        for (const Cycle& c : ca.cycles()) cycles.push_back(relabel_cycle(c, into_a));
        for (const Cycle& c : cb.cycles()) cycles.push_back(relabel_cycle(c, into_b));
        out.add(one_line(CycleSet(std::move(cycles))), Scalar(1));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

/// C_{alpha,beta}^gamma as the number of complementary cycle-subset pairs of
/// gamma whose standardizations are (alpha, beta).
inline long dual_splitting_count(const Word& gamma, const Word& alpha, const Word& beta) {
    if (alpha.size() + beta.size() != gamma.size())
        throw StructureError("dual_splitting_count: degrees do not add up");
    const CycleSet cg = cycle_decomposition(gamma);
    const auto& cycles = cg.cycles();
    const int r = static_cast<int>(cycles.size());
    long count = 0;
    for (unsigned long msk = 0; msk < (1ul << r); ++msk) {
        std::vector<Cycle> a;
        std::vector<Cycle> b;
        for (int i = 0; i < r; ++i) {
            if (msk >> i & 1) a.push_back(cycles[static_cast<std::size_t>(i)]);
            else b.push_back(cycles[static_cast<std::size_t>(i)]);
        }
        int da = 0;
        for (const Cycle& c : a) da += c.size();
        if (da != alpha.size()) continue;
        if (one_line(std_cycles(a)) == alpha && one_line(std_cycles(b)) == beta) ++count;
    }
    return count;
}

// --- the subalgebra tower u_pi / uq / ul --------------------------------------

/// Cycle-support set partition of a permutation.
inline SetPartition csupp(const Word& p) { return SetPartition(cycle_supports(p)); }

/// All cycles on a given support set (fix the minimum, permute the rest).
inline std::vector<Cycle> cycles_on_support(const std::vector<int>& support) {
    std::vector<int> sorted = support;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> rest(sorted.begin() + 1, sorted.end());
    std::sort(rest.begin(), rest.end());
    std::vector<Cycle> out;
    do {
        std::vector<int> seq;
        seq.push_back(sorted.front());
        seq.insert(seq.end(), rest.begin(), rest.end());
        out.emplace_back(seq);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

/// All permutations whose cycle-support partition equals pi.
inline std::vector<Word> permutations_with_csupp(const SetPartition& pi) {
    std::vector<std::vector<Cycle>> choices;
    for (const auto& blk : pi.blocks()) choices.push_back(cycles_on_support(blk));
    std::vector<Word> out;
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
        std::vector<Cycle> cycles;
        for (std::size_t i = 0; i < choices.size(); ++i) cycles.push_back(choices[i][idx[i]]);
        out.push_back(one_line(CycleSet(std::move(cycles))));
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < choices[i].size()) break;
            idx[i] = 0;
        }
        if (i == idx.size()) break;
    }
    return out;
}

/// u_pi = sum of M_sigma over csupp(sigma) = pi.
inline LinComb<Word> pi_expand(const SetPartition& pi) {
    LinComb<Word> out;
    for (const Word& sigma : permutations_with_csupp(pi)) out.add(sigma, Scalar(1));
    return out;
}

/// uq_I = sum of M_sigma over ordered cycle type b(sigma) = I.
inline LinComb<Word> uq_expand(const Word& composition) {
    int n = 0;
    for (int part : composition.letters()) n += part;
    LinComb<Word> out;
    for (const Word& sigma : all_permutations(n)) {
        if (ordered_cycle_type(sigma) == composition) out.add(sigma, Scalar(1));
    }
    return out;
}

/// ul_lambda = sum of M_sigma over cycle type C(sigma) = lambda.
inline LinComb<Word> ul_expand(const Word& partition) {
    int n = 0;
    for (int part : partition.letters()) n += part;
    LinComb<Word> out;
    for (const Word& sigma : all_permutations(n)) {
        if (cycle_type_partition(sigma) == partition) out.add(sigma, Scalar(1));
    }
    return out;
}

namespace detail {

/// Regroup an M-basis element into class sums: every key maps to its class
/// via `classify`, and all members of a touched class (via `members`) must
/// carry the same coefficient.
template <class ClassKey, class Classify, class Members>
LinComb<ClassKey> reexpress_by_class(const LinComb<Word>& x, Classify&& classify,
                                     Members&& members, const std::string& what) {
    LinComb<ClassKey> out;
    std::map<ClassKey, Scalar> seen;
    for (const auto& [k, c] : x) seen.emplace(classify(k), c);
    for (const auto& [cls, coeff] : seen) {
        for (const Word& member : members(cls)) {
            if (!(x.coefficient(member) == coeff))
                throw StructureError("not in span of " + what + ": uneven class " + cls.str());
        }
        out.add(cls, coeff);
    }
    return out;
}

template <class ClassKey, class Classify, class Members>
Tensor2<ClassKey> reexpress_tensor_by_class(const Tensor2<Word>& x, Classify&& classify,
                                            Members&& members, const std::string& what) {
    Tensor2<ClassKey> out;
    std::map<std::pair<ClassKey, ClassKey>, Scalar> seen;
    for (const auto& [pr, c] : x) seen.emplace(std::make_pair(classify(pr.first), classify(pr.second)), c);
    for (const auto& [clspair, coeff] : seen) {
        for (const Word& a : members(clspair.first)) {
            for (const Word& b : members(clspair.second)) {
                if (!(x.coefficient({a, b}) == coeff))
                    throw StructureError("not in span of " + what + " (x) " + what +
                                         ": uneven class pair " + clspair.first.str() + ", " +
                                         clspair.second.str());
            }
        }
        out.add(clspair, coeff);
    }
    return out;
}

inline std::vector<Word> permutations_with_uq(const Word& composition) {
    int n = 0;
    for (int part : composition.letters()) n += part;
    std::vector<Word> out;
    for (const Word& sigma : all_permutations(n))
        if (ordered_cycle_type(sigma) == composition) out.push_back(sigma);
    return out;
}

inline std::vector<Word> permutations_with_ul(const Word& partition) {
    int n = 0;
    for (int part : partition.letters()) n += part;
    std::vector<Word> out;
    for (const Word& sigma : all_permutations(n))
        if (cycle_type_partition(sigma) == partition) out.push_back(sigma);
    return out;
}

}  // namespace detail

inline LinComb<SetPartition> pi_reexpress(const LinComb<Word>& x) {
    return detail::reexpress_by_class<SetPartition>(
        x, [](const Word& w) { return csupp(w); },
        [](const SetPartition& pi) { return permutations_with_csupp(pi); }, "u_pi");
}

inline LinComb<SetPartition> pi_product(const SetPartition& a, const SetPartition& b) {
    const auto prod = multiply_elements(pi_expand(a), pi_expand(b),
                                        [](const Word& f, const Word& g) { return sg_product(f, g); });
    return pi_reexpress(prod);
}

inline Tensor2<SetPartition> pi_coproduct(const SetPartition& pi) {
    Tensor2<Word> t;
    for (const auto& [sigma, c] : pi_expand(pi)) t += sg_coproduct(sigma) * c;
    return detail::reexpress_tensor_by_class<SetPartition>(
        t, [](const Word& w) { return csupp(w); },
        [](const SetPartition& p) { return permutations_with_csupp(p); }, "u_pi");
}

inline LinComb<Word> uq_reexpress(const LinComb<Word>& x) {
    return detail::reexpress_by_class<Word>(
        x, [](const Word& w) { return ordered_cycle_type(w); },
        [](const Word& comp) { return detail::permutations_with_uq(comp); }, "uq");
}

inline LinComb<Word> uq_product(const Word& first, const Word& second) {
    const auto prod = multiply_elements(uq_expand(first), uq_expand(second),
                                        [](const Word& f, const Word& g) { return sg_product(f, g); });
    return uq_reexpress(prod);
}

inline Tensor2<Word> uq_coproduct(const Word& composition) {
    Tensor2<Word> t;
    for (const auto& [sigma, c] : uq_expand(composition)) t += sg_coproduct(sigma) * c;
    return detail::reexpress_tensor_by_class<Word>(
        t, [](const Word& w) { return ordered_cycle_type(w); },
        [](const Word& comp) { return detail::permutations_with_uq(comp); }, "uq");
}

inline LinComb<Word> ul_reexpress(const LinComb<Word>& x) {
    return detail::reexpress_by_class<Word>(
        x, [](const Word& w) { return cycle_type_partition(w); },
        [](const Word& lam) { return detail::permutations_with_ul(lam); }, "ul");
}

inline LinComb<Word> ul_product(const Word& lambda, const Word& mu) {
    const auto prod = multiply_elements(ul_expand(lambda), ul_expand(mu),
                                        [](const Word& f, const Word& g) { return sg_product(f, g); });
    return ul_reexpress(prod);
}

inline Tensor2<Word> ul_coproduct(const Word& partition) {
    Tensor2<Word> t;
    for (const auto& [sigma, c] : ul_expand(partition)) t += sg_coproduct(sigma) * c;
    return detail::reexpress_tensor_by_class<Word>(
        t, [](const Word& w) { return cycle_type_partition(w); },
        [](const Word& lam) { return detail::permutations_with_ul(lam); }, "ul");
}

// --- symmetric-function embedding data -----------------------------------------

/// Cyclic character l_n^{(0)} = (1/n) sum_{d|n} phi(d) p_d^{n/d}, expressed in
/// the power-sum basis (keys are partitions).
inline LinComb<Word> cyclic_character(int n) {
    if (n < 1) throw StructureError("cyclic_character: n must be >= 1");
    LinComb<Word> out;
    for (int d : divisors(n)) {
        std::vector<int> parts(static_cast<std::size_t>(n / d), d);
        out.add(Word(std::move(parts)), Scalar(mpq_class(euler_phi(d), n)));
    }
    return out;
}

/// Sign of a partition: (-1)^(n - length).
inline int partition_sign(const Word& lambda) {
    int n = 0;
    for (int part : lambda.letters()) n += part;
    return ((n - lambda.size()) % 2 == 0) ? 1 : -1;
}

/// j(p_lambda) = z_lambda ul_lambda (the embedding sends p*_lambda to
/// ul_lambda). Result in the ul basis (partition keys).
inline LinComb<Word> j_p_in_ul(const Word& lambda) {
    LinComb<Word> out;
    out.add(lambda, Scalar(z_of(lambda)));
    return out;
}

/// j(e_n) = sum over partitions of n of sign(lambda) ul_lambda.
inline LinComb<Word> j_e_in_ul(int n) {
    LinComb<Word> out;
    for (const Word& lambda : partitions_of(n)) out.add(lambda, Scalar(partition_sign(lambda)));
    return out;
}

/// j(h_n) = sum over partitions of n of ul_lambda.
inline LinComb<Word> j_h_in_ul(int n) {
    LinComb<Word> out;
    for (const Word& lambda : partitions_of(n)) out.add(lambda, Scalar(1));
    return out;
}

/// j(s_lambda) = sum over partitions mu of chi^lambda(mu) ul_mu.
inline LinComb<Word> j_s_in_ul(const Word& lambda) {
    int n = 0;
    for (int part : lambda.letters()) n += part;
    LinComb<Word> out;
    for (const Word& mu : partitions_of(n)) out.add(mu, Scalar(character_value(lambda, mu)));
    return out;
}

// --- involutive span ------------------------------------------------------------

inline bool is_involution(const Word& p) {
    return is_permutation(p) && compose(p, p) == identity_word(p.size());
}

/// Check that products of involutive-indexed M's stay in the involutive span
/// and coproduct legs remain involutions, for all degrees up to n. Returns a
/// witness string on failure.
inline std::optional<std::string> involutive_span_check(int n) {
    for (int a = 1; a < n; ++a) {
        for (const Word& p : all_involutions(a)) {
            for (int b = 1; a + b <= n; ++b) {
                for (const Word& r : all_involutions(b)) {
                    for (const auto& [h, c] : sg_product(p, r)) {
                        if (!is_involution(h))
                            return "product " + p.str() + " * " + r.str() +
                                   " leaves span at " + h.str();
                    }
                }
            }
        }
    }
    for (int a = 1; a <= n; ++a) {
        for (const Word& p : all_involutions(a)) {
            for (const auto& [pr, c] : sg_coproduct(p)) {
                if (!is_involution(pr.first) || !is_involution(pr.second))
                    return "coproduct of " + p.str() + " leaves span (x) span";
            }
        }
    }
    return std::nullopt;
}

}  // namespace hopfcomb
