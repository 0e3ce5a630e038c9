#pragma once
// Independent brute-force realizations at finite truncation N, used to
// cross-check every combinatorial structure-constant rule:
//   - commuting variables x_{ij} modulo relation ideals (row-uniqueness
//     always; optional column-uniqueness, column-order compatibility, and
//     chain relations) for the endofunction, permutation, and nondecreasing
//     parking-function algebras;
//   - noncommuting biword letters for the cycle algebra;
//   - q-commuting single-index letters for the quantum quasi-symmetric
//     algebra;
//   - plain commuting variables for classical monomial symmetric functions.
// Re-identification consumes whole polynomials back into the M bases and
// fails loudly on any orphan monomial, making the spanning claims executable.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <hopfcomb/cycles.hpp>
#include <hopfcomb/enumerate.hpp>
#include <hopfcomb/eqsym.hpp>
#include <hopfcomb/linear.hpp>
#include <hopfcomb/parking.hpp>
#include <hopfcomb/partitions.hpp>
#include <hopfcomb/phisym.hpp>
#include <hopfcomb/quantum.hpp>
#include <hopfcomb/scalar.hpp>
#include <hopfcomb/sgqsym.hpp>
#include <hopfcomb/words.hpp>

namespace hopfcomb {

// --- commuting x_{ij} modulo relation ideals ----------------------------------------

/// Monomial in the x_{ij}: a set of (row, column) pairs kept sorted by row.
/// At most one pair per row (the defining relations kill everything else,
/// squares included).
struct XMon {
    std::vector<std::pair<int, int>> pairs;
    auto operator<=>(const XMon&) const = default;
    std::string str() const {
        std::string s;
        for (const auto& [i, j] : pairs)
            s += "x(" + std::to_string(i) + "," + std::to_string(j) + ")";
        return s.empty() ? "1" : s;
    }
};

/// Which optional relation families are imposed on top of row-uniqueness.
struct XRelations {
    bool col_unique = false;    // x_{ik} x_{jk} = 0 for all i, j, k
    bool order_compat = false;  // x_{ij} x_{kl} = 0 for i < k and j > l
    bool chain = false;         // x_{ij} x_{jk} = 0 for i != k
};

inline constexpr XRelations kRowUnique{};
inline constexpr XRelations kColUnique{true, false, false};
inline constexpr XRelations kOrderCompat{false, true, false};
inline constexpr XRelations kChain{true, false, true};

/// Does a row-sorted pair list survive the optional relations?
inline bool xmon_admissible(const std::vector<std::pair<int, int>>& p, const XRelations& rel) {
    if (rel.col_unique) {
        std::vector<int> cols;
        cols.reserve(p.size());
        for (const auto& [i, j] : p) cols.push_back(j);
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) return false;
    }
    if (rel.order_compat) {
        for (std::size_t k = 1; k < p.size(); ++k)
            if (p[k].second < p[k - 1].second) return false;
    }
    if (rel.chain) {
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = 0; b < p.size(); ++b)
                if (a != b && p[a].second == p[b].first && p[a].first != p[b].second)
                    return false;
    }
    return true;
}

/// Product of two monomials in the quotient; empty when a relation kills it.
inline std::optional<XMon> xmon_multiply(const XMon& a, const XMon& b, const XRelations& rel) {
    std::vector<std::pair<int, int>> merged;
    merged.reserve(a.pairs.size() + b.pairs.size());
    std::merge(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(),
               std::back_inserter(merged));
    for (std::size_t k = 1; k < merged.size(); ++k)
        if (merged[k].first == merged[k - 1].first) return std::nullopt;
    if (!xmon_admissible(merged, rel)) return std::nullopt;
    return XMon{std::move(merged)};
}

namespace detail {

template <class Fn>
void for_each_combination(int N, int k, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    if (k > N) return;
    while (true) {
        fn(idx);
        int p = k - 1;
        while (p >= 0 && idx[static_cast<std::size_t>(p)] == N - (k - 1 - p)) --p;
        if (p < 0) return;
        ++idx[static_cast<std::size_t>(p)];
        for (int r = p + 1; r < k; ++r)
            idx[static_cast<std::size_t>(r)] = idx[static_cast<std::size_t>(r - 1)] + 1;
    }
}

}  // namespace detail

/// Truncated realization of M_f: the sum over increasing row choices
/// i_1 < ... < i_n <= N of x_{i_1 i_f(1)} ... x_{i_n i_f(n)}, keeping only
/// monomials admissible under the chosen relations.  Empty when N < deg(f).
inline LinComb<XMon> expand_M(const Word& f, int N, const XRelations& rel = kRowUnique) {
    LinComb<XMon> out;
    const int n = f.size();
    detail::for_each_combination(N, n, [&](const std::vector<int>& rows) {
        std::vector<std::pair<int, int>> p;
        p.reserve(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k)
            p.emplace_back(rows[static_cast<std::size_t>(k - 1)],
                           rows[static_cast<std::size_t>(f.letter(k) - 1)]);
        if (xmon_admissible(p, rel)) out.add(XMon{std::move(p)}, Scalar(1));
    });
    return out;
}

/// Product of two truncated realizations in the quotient ring.
inline LinComb<XMon> x_multiply(const LinComb<XMon>& a, const LinComb<XMon>& b,
                                const XRelations& rel = kRowUnique) {
    LinComb<XMon> out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            if (auto m = xmon_multiply(ma, mb, rel)) out.add(*m, ca * cb);
    return out;
}

/// Re-identify a polynomial as a combination of truncated M expansions,
/// consuming it completely: every monomial must read off a function word
/// (columns inside the row set), and every group must be an exact scalar
/// multiple of the corresponding full expansion.
inline LinComb<Word> reidentify_x(const LinComb<XMon>& poly, int N,
                                  const XRelations& rel = kRowUnique) {
    std::map<Word, LinComb<XMon>> groups;
    for (const auto& [m, c] : poly) {
        std::vector<int> rows;
        rows.reserve(m.pairs.size());
        for (const auto& [i, j] : m.pairs) rows.push_back(i);
        std::vector<int> fword;
        fword.reserve(m.pairs.size());
        for (const auto& [i, j] : m.pairs) {
            const auto it = std::lower_bound(rows.begin(), rows.end(), j);
            if (it == rows.end() || *it != j)
                throw StructureError("orphan monomial in re-identification: " + m.str());
            fword.push_back(static_cast<int>(it - rows.begin()) + 1);
        }
        groups[Word(std::move(fword))].add(m, c);
    }
    LinComb<Word> out;
    for (const auto& [g, sub] : groups) {
        const Scalar c = sub.begin()->second;
        if (!(sub == expand_M(g, N, rel) * c))
            throw StructureError("group does not match a multiple of the expansion of M_" +
                                 g.str());
        out.add(g, c);
    }
    return out;
}

/// Outcome of a verification sweep: how many identities were checked, and a
/// witness for the first failure if any.
struct OracleReport {
    int checks = 0;
    bool ok = true;
    std::string witness;
};

enum class OracleAlgebra { EQSym, SGQSym, CCQSym };

inline const char* oracle_algebra_name(OracleAlgebra a) {
    switch (a) {
        case OracleAlgebra::EQSym: return "EQSym";
        case OracleAlgebra::SGQSym: return "SGQSym";
        default: return "CCQSym";
    }
}

/// Check combinatorial structure constants against the truncated realization
/// for every basis pair within the total-degree budget.
inline OracleReport verify_structure_constants(OracleAlgebra algebra, int deg_budget, int N) {
    if (N < 2 * deg_budget)
        throw StructureError("truncation too small: need N >= twice the degree budget");
    const XRelations rel = algebra == OracleAlgebra::EQSym    ? kRowUnique
                           : algebra == OracleAlgebra::SGQSym ? kColUnique
                                                              : kOrderCompat;
    const auto keys = [&](int n) {
        switch (algebra) {
            case OracleAlgebra::EQSym: return all_endofunctions(n);
            case OracleAlgebra::SGQSym: return all_permutations(n);
            default: return all_nondecreasing_parking_functions(n);
        }
    };
    const auto rule = [&](const Word& a, const Word& b) {
        switch (algebra) {
            case OracleAlgebra::EQSym: return eqsym_product(a, b);
            case OracleAlgebra::SGQSym: return sg_product(a, b);
            default: return ccq_product(a, b);
        }
    };
    OracleReport rep;
    for (int n = 1; n < deg_budget; ++n) {
        for (int m = 1; n + m <= deg_budget; ++m) {
            for (const Word& a : keys(n)) {
                const LinComb<XMon> ea = expand_M(a, N, rel);
                for (const Word& b : keys(m)) {
                    ++rep.checks;
                    try {
                        const LinComb<Word> got =
                            reidentify_x(x_multiply(ea, expand_M(b, N, rel), rel), N, rel);
                        if (!(got == rule(a, b))) {
                            rep.ok = false;
                            rep.witness = std::string(oracle_algebra_name(algebra)) + " M_" +
                                          a.str() + " * M_" + b.str();
                            return rep;
                        }
                    } catch (const StructureError& e) {
                        rep.ok = false;
                        rep.witness = std::string(oracle_algebra_name(algebra)) + " M_" +
                                      a.str() + " * M_" + b.str() + ": " + e.what();
                        return rep;
                    }
                }
            }
        }
    }
    return rep;
}

// --- noncommuting biwords -----------------------------------------------------------

/// A word in the noncommuting letters a_{ij}, written as a biword: top row of
/// x-letters, bottom row of a-letters.
struct BiMon {
    std::vector<int> top;
    std::vector<int> bottom;
    auto operator<=>(const BiMon&) const = default;
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < top.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(top[i]);
        }
        s += " ; ";
        for (std::size_t i = 0; i < bottom.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(bottom[i]);
        }
        return s + ")";
    }
};

/// Concatenation product of biword monomials (the letters do not commute).
inline BiMon bimon_multiply(const BiMon& a, const BiMon& b) {
    BiMon out = a;
    out.top.insert(out.top.end(), b.top.begin(), b.top.end());
    out.bottom.insert(out.bottom.end(), b.bottom.begin(), b.bottom.end());
    return out;
}

inline LinComb<BiMon> biword_multiply(const LinComb<BiMon>& a, const LinComb<BiMon>& b) {
    LinComb<BiMon> out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) out.add(bimon_multiply(ma, mb), ca * cb);
    return out;
}

namespace detail {

/// Standardized cycle words of a cycle: reading successive images from each
/// starting point and standardizing onto {1..k}.
inline std::set<Word> standardized_cycle_words(const Cycle& c) {
    std::set<Word> out;
    for (const auto& rot : c.rotations()) out.insert(standardize(Word(rot)));
    return out;
}

/// All bottom subwords over {1..N} of length k whose standardization has its
/// inverse among the targets.
inline std::vector<std::vector<int>> admissible_bottoms(int k, int N,
                                                        const std::set<Word>& targets) {
    std::vector<std::vector<int>> out;
    std::vector<int> w(static_cast<std::size_t>(k), 1);
    while (true) {
        if (targets.count(inverse(standardize(Word(w))))) out.push_back(w);
        int p = k - 1;
        while (p >= 0 && w[static_cast<std::size_t>(p)] == N) --p;
        if (p < 0) break;
        ++w[static_cast<std::size_t>(p)];
        for (int r = p + 1; r < k; ++r) w[static_cast<std::size_t>(r)] = 1;
    }
    return out;
}

}  // namespace detail

/// Truncated biword realization of phi_sigma: sum over biwords whose top
/// letters are constant exactly on the cycles of sigma, and whose bottom
/// subword on each cycle's positions standardizes to the inverse of a
/// standardized cycle word of that cycle.
inline LinComb<BiMon> expand_phi(const Word& sigma, int N) {
    const int n = sigma.size();
    const CycleSet decomposition = cycle_decomposition(sigma);
    const std::vector<Cycle>& cycles = decomposition.cycles();
    const int r = static_cast<int>(cycles.size());
    std::vector<std::vector<int>> supports;
    std::vector<std::vector<std::vector<int>>> bottoms;
    supports.reserve(static_cast<std::size_t>(r));
    bottoms.reserve(static_cast<std::size_t>(r));
    for (const Cycle& c : cycles) {
        supports.push_back(c.support_sorted());
        bottoms.push_back(
            detail::admissible_bottoms(c.size(), N, detail::standardized_cycle_words(c)));
    }
    LinComb<BiMon> out;
    std::vector<int> xval(static_cast<std::size_t>(r));
    std::vector<std::size_t> bchoice(static_cast<std::size_t>(r));
    // enumerate injective top assignments and admissible bottoms per cycle
    std::function<void(int)> rec = [&](int ci) {
        if (ci == r) {
            BiMon m;
            m.top.assign(static_cast<std::size_t>(n), 0);
            m.bottom.assign(static_cast<std::size_t>(n), 0);
            for (int cc = 0; cc < r; ++cc) {
                const auto& sup = supports[static_cast<std::size_t>(cc)];
                const auto& w =
                    bottoms[static_cast<std::size_t>(cc)][bchoice[static_cast<std::size_t>(cc)]];
                for (std::size_t t = 0; t < sup.size(); ++t) {
                    m.top[static_cast<std::size_t>(sup[t] - 1)] =
                        xval[static_cast<std::size_t>(cc)];
                    m.bottom[static_cast<std::size_t>(sup[t] - 1)] = w[t];
                }
            }
            out.add(std::move(m), Scalar(1));
            return;
        }
        for (int v = 1; v <= N; ++v) {
            bool used = false;
            for (int p = 0; p < ci; ++p)
                if (xval[static_cast<std::size_t>(p)] == v) used = true;
            if (used) continue;
            xval[static_cast<std::size_t>(ci)] = v;
            for (std::size_t bi = 0; bi < bottoms[static_cast<std::size_t>(ci)].size(); ++bi) {
                bchoice[static_cast<std::size_t>(ci)] = bi;
                rec(ci + 1);
            }
        }
    };
    rec(0);
    return out;
}

/// Re-identify a biword polynomial as a combination of phi expansions.
inline LinComb<Word> reidentify_phi(const LinComb<BiMon>& poly, int N) {
    std::map<Word, LinComb<BiMon>> groups;
    for (const auto& [m, c] : poly) {
        const int n = static_cast<int>(m.top.size());
        // positions grouped by top letter
        std::map<int, std::vector<int>> classes;
        for (int p = 1; p <= n; ++p) classes[m.top[static_cast<std::size_t>(p - 1)]].push_back(p);
        std::vector<int> image(static_cast<std::size_t>(n), 0);
        for (const auto& [x, pos] : classes) {
            std::vector<int> sub;
            sub.reserve(pos.size());
            for (int p : pos) sub.push_back(m.bottom[static_cast<std::size_t>(p - 1)]);
            const Word u = inverse(standardize(Word(std::move(sub))));
            const std::size_t k = pos.size();
            for (std::size_t t = 0; t < k; ++t) {
                const int from = pos[static_cast<std::size_t>(u.letter(static_cast<int>(t) + 1) - 1)];
                const int to =
                    pos[static_cast<std::size_t>(u.letter(static_cast<int>((t + 1) % k) + 1) - 1)];
                image[static_cast<std::size_t>(from - 1)] = to;
            }
        }
        groups[Word(std::move(image))].add(m, c);
    }
    LinComb<Word> out;
    for (const auto& [g, sub] : groups) {
        if (!is_permutation(g))
            throw StructureError("biword read-off is not a permutation: " + g.str());
        const Scalar c = sub.begin()->second;
        if (!(sub == expand_phi(g, N) * c))
            throw StructureError("group does not match a multiple of the expansion of phi_" +
                                 g.str());
        out.add(g, c);
    }
    return out;
}

/// Check the cycle-algebra structure constants against the biword oracle for
/// every pair of permutations within the total-degree budget.
inline OracleReport verify_phi_constants(int deg_budget, int N) {
    if (N < deg_budget)
        throw StructureError("truncation too small: need N >= the degree budget");
    OracleReport rep;
    for (int n = 1; n < deg_budget; ++n) {
        for (int m = 1; n + m <= deg_budget; ++m) {
            for (const Word& a : all_permutations(n)) {
                const LinComb<BiMon> ea = expand_phi(a, N);
                for (const Word& b : all_permutations(m)) {
                    ++rep.checks;
                    try {
                        const LinComb<Word> got =
                            reidentify_phi(biword_multiply(ea, expand_phi(b, N)), N);
                        if (!(got == phi_product(a, b))) {
                            rep.ok = false;
                            rep.witness = "phi_" + a.str() + " * phi_" + b.str();
                            return rep;
                        }
                    } catch (const StructureError& e) {
                        rep.ok = false;
                        rep.witness =
                            "phi_" + a.str() + " * phi_" + b.str() + ": " + e.what();
                        return rep;
                    }
                }
            }
        }
    }
    return rep;
}

// --- q-commuting letters ------------------------------------------------------------

/// Normal-ordered monomial in q-commuting letters x_1..x_N: an exponent
/// vector with trailing zeros trimmed.  The accumulated q-power lives in the
/// coefficient.
struct QCMon {
    std::vector<int> exps;
    auto operator<=>(const QCMon&) const = default;
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0)
                s += "x" + std::to_string(i + 1) +
                     (exps[i] > 1 ? "^" + std::to_string(exps[i]) : "");
        return s.empty() ? "1" : s;
    }
};

inline QCMon qcmon_trim(std::vector<int> exps) {
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
    return QCMon{std::move(exps)};
}

/// Normal-order a word of variable indices: sorting x_{w_1}...x_{w_k} into
/// ascending order costs one power of q per strict inversion.
inline LinComb<QCMon> qc_normal_order(const std::vector<int>& letters) {
    int maxv = 0;
    for (int v : letters) maxv = std::max(maxv, v);
    std::vector<int> exps(static_cast<std::size_t>(maxv), 0);
    for (int v : letters) ++exps[static_cast<std::size_t>(v - 1)];
    LinComb<QCMon> out;
    out.add(qcmon_trim(std::move(exps)), Scalar::q(inversion_count(Word(letters))));
    return out;
}

/// Product of two normal-ordered monomials: every letter of the right factor
/// passes every strictly larger letter of the left factor.
inline std::pair<QCMon, Scalar> qcmon_multiply(const QCMon& a, const QCMon& b) {
    std::vector<int> exps(std::max(a.exps.size(), b.exps.size()), 0);
    for (std::size_t i = 0; i < a.exps.size(); ++i) exps[i] += a.exps[i];
    for (std::size_t i = 0; i < b.exps.size(); ++i) exps[i] += b.exps[i];
    long crossings = 0;
    for (std::size_t u = 0; u < a.exps.size(); ++u)
        for (std::size_t v = 0; v < u && v < b.exps.size(); ++v)
            crossings += static_cast<long>(a.exps[u]) * b.exps[v];
    return {qcmon_trim(std::move(exps)), Scalar::q(static_cast<int>(crossings))};
}

inline LinComb<QCMon> qc_multiply(const LinComb<QCMon>& a, const LinComb<QCMon>& b) {
    LinComb<QCMon> out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto [m, q] = qcmon_multiply(ma, mb);
            out.add(std::move(m), ca * cb * q);
        }
    return out;
}

/// Truncated realization of the monomial basis element M_I: the sum over
/// supports i_1 < ... < i_k <= N of x_{i_1}^{I_1} ... x_{i_k}^{I_k}.
inline LinComb<QCMon> expand_qc(const Word& I, int N) {
    LinComb<QCMon> out;
    const int k = I.size();
    detail::for_each_combination(N, k, [&](const std::vector<int>& sup) {
        std::vector<int> exps(static_cast<std::size_t>(sup.back()), 0);
        for (int t = 0; t < k; ++t)
            exps[static_cast<std::size_t>(sup[static_cast<std::size_t>(t)] - 1)] = I.letter(t + 1);
        out.add(qcmon_trim(std::move(exps)), Scalar(1));
    });
    return out;
}

/// Re-identify a q-commuting polynomial as a combination of M expansions;
/// coefficients may be polynomials in q.
inline LinComb<Word> reidentify_qc(const LinComb<QCMon>& poly, int N) {
    std::map<Word, LinComb<QCMon>> groups;
    for (const auto& [m, c] : poly) {
        std::vector<int> comp;
        for (int e : m.exps)
            if (e > 0) comp.push_back(e);
        groups[Word(std::move(comp))].add(m, c);
    }
    LinComb<Word> out;
    for (const auto& [g, sub] : groups) {
        const Scalar c = sub.begin()->second;
        if (!(sub == expand_qc(g, N) * c))
            throw StructureError("group does not match a multiple of the expansion of M_" +
                                 g.str());
        out.add(g, c);
    }
    return out;
}

/// Check the quantum quasi-symmetric product rule against the q-commuting
/// oracle for every pair of compositions within the total-weight budget.
inline OracleReport verify_qsymq(int deg_budget, int N) {
    if (N < 2 * deg_budget)
        throw StructureError("truncation too small: need N >= twice the degree budget");
    OracleReport rep;
    for (int wa = 1; wa < deg_budget; ++wa) {
        for (int wb = 1; wa + wb <= deg_budget; ++wb) {
            for (const Word& i : compositions_of(wa)) {
                const LinComb<QCMon> ei = expand_qc(i, N);
                for (const Word& j : compositions_of(wb)) {
                    ++rep.checks;
                    try {
                        const LinComb<Word> got =
                            reidentify_qc(qc_multiply(ei, expand_qc(j, N)), N);
                        if (!(got == qsymq_product(i, j))) {
                            rep.ok = false;
                            rep.witness = "M_" + i.str() + " * M_" + j.str();
                            return rep;
                        }
                    } catch (const StructureError& e) {
                        rep.ok = false;
                        rep.witness = "M_" + i.str() + " * M_" + j.str() + ": " + e.what();
                        return rep;
                    }
                }
            }
        }
    }
    return rep;
}

// --- symmetric-function identities inside the realization ---------------------------

namespace detail {

/// Sum over diagonal "determinant-like" terms: for every increasing row
/// choice and every permutation, weight(sigma) times the matrix monomial.
template <class WeightFn>
LinComb<XMon> diagonal_sum(int n, int N, WeightFn&& weight) {
    LinComb<XMon> out;
    const std::vector<Word> perms = all_permutations(n);
    for_each_combination(N, n, [&](const std::vector<int>& rows) {
        for (const Word& s : perms) {
            const Scalar w = weight(s);
            if (w.is_zero()) continue;
            std::vector<std::pair<int, int>> p;
            p.reserve(static_cast<std::size_t>(n));
            for (int k = 1; k <= n; ++k)
                p.emplace_back(rows[static_cast<std::size_t>(k - 1)],
                               rows[static_cast<std::size_t>(s.letter(k) - 1)]);
            out.add(XMon{std::move(p)}, w);
        }
    });
    return out;
}

/// Realize a combination of class sums ul_lambda as a truncated polynomial.
inline LinComb<XMon> realize_ul(const LinComb<Word>& in_ul, int N) {
    LinComb<XMon> out;
    for (const auto& [lambda, c] : in_ul)
        for (const auto& [sigma, c2] : ul_expand(lambda)) out += expand_M(sigma, N) * (c * c2);
    return out;
}

}  // namespace detail

/// Trace of the n-th power of the truncated matrix X = (x_{ij}) in the
/// row-relation quotient: only injective index cycles survive.
inline LinComb<XMon> trace_power(int n, int N) {
    LinComb<XMon> out;
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::function<void(int)> rec = [&](int d) {
        if (d == n) {
            std::vector<std::pair<int, int>> p;
            p.reserve(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k)
                p.emplace_back(idx[static_cast<std::size_t>(k)],
                               idx[static_cast<std::size_t>((k + 1) % n)]);
            std::sort(p.begin(), p.end());
            out.add(XMon{std::move(p)}, Scalar(1));
            return;
        }
        for (int v = 1; v <= N; ++v) {
            bool used = false;
            for (int k = 0; k < d; ++k)
                if (idx[static_cast<std::size_t>(k)] == v) used = true;
            if (used) continue;  // a repeated row annihilates the monomial
            idx[static_cast<std::size_t>(d)] = v;
            rec(d + 1);
        }
    };
    rec(0);
    return out;
}

/// Verify the classical images inside the realization: the trace powers
/// against cycle class sums, and the diagonal minor / permanent / immanant
/// sums against the signed, plain, and character-weighted ul combinations.
inline OracleReport verify_sym_identities(int n_max, int N) {
    if (N < 2 * n_max)
        throw StructureError("truncation too small: need N >= twice the degree bound");
    OracleReport rep;
    for (int n = 1; n <= n_max; ++n) {
        // trace identity: tr(X^n) = n * (sum of M_sigma over n-cycles)
        ++rep.checks;
        LinComb<XMon> cyc;
        for (const Word& s : all_permutations(n))
            if (cycle_decomposition(s).count() == 1) cyc += expand_M(s, N);
        if (!(trace_power(n, N) == cyc * Scalar(n))) {
            rep.ok = false;
            rep.witness = "trace identity at n = " + std::to_string(n);
            return rep;
        }
        // minor identity: sum of diagonal n-minors = signed cycle-type sums
        ++rep.checks;
        const LinComb<XMon> minors = detail::diagonal_sum(
            n, N, [](const Word& s) { return Scalar(partition_sign(cycle_type_partition(s))); });
        if (!(minors == detail::realize_ul(j_e_in_ul(n), N))) {
            rep.ok = false;
            rep.witness = "minor identity at n = " + std::to_string(n);
            return rep;
        }
        // permanent identity: the same minors of the permanent
        ++rep.checks;
        const LinComb<XMon> perms =
            detail::diagonal_sum(n, N, [](const Word&) { return Scalar(1); });
        if (!(perms == detail::realize_ul(j_h_in_ul(n), N))) {
            rep.ok = false;
            rep.witness = "permanent identity at n = " + std::to_string(n);
            return rep;
        }
        // immanant identities, one per partition of n
        for (const Word& lambda : partitions_of(n)) {
            ++rep.checks;
            const LinComb<XMon> imm = detail::diagonal_sum(n, N, [&](const Word& s) {
                return Scalar(character_value(lambda, cycle_type_partition(s)));
            });
            if (!(imm == detail::realize_ul(j_s_in_ul(lambda), N))) {
                rep.ok = false;
                rep.witness = "immanant identity at lambda = " + lambda.str();
                return rep;
            }
        }
    }
    return rep;
}

// --- classical monomial symmetric functions ------------------------------------------

/// Exponent vector of a plain commutative monomial in x_1..x_N.
struct SymMon {
    std::vector<int> exps;
    auto operator<=>(const SymMon&) const = default;
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0)
                s += "x" + std::to_string(i + 1) +
                     (exps[i] > 1 ? "^" + std::to_string(exps[i]) : "");
        return s.empty() ? "1" : s;
    }
};

/// Expansion of the monomial symmetric function m_lambda in N variables.
inline LinComb<SymMon> expand_m_sym(const Word& lambda, int N) {
    LinComb<SymMon> out;
    if (lambda.size() > N) return out;
    std::vector<int> exps(static_cast<std::size_t>(N), 0);
    for (int t = 1; t <= lambda.size(); ++t)
        exps[static_cast<std::size_t>(t - 1)] = lambda.letter(t);
    std::sort(exps.begin(), exps.end());
    do {
        out.add(SymMon{exps}, Scalar(1));
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

/// Product of two monomial symmetric functions, computed by expanding in N
/// commuting variables, multiplying, and regrouping by exponent partition;
/// stable in N once N is at least the total degree.
inline LinComb<Word> sym_monomial_product(const Word& lambda, const Word& mu, int N) {
    LinComb<SymMon> prod;
    for (const auto& [ma, ca] : expand_m_sym(lambda, N))
        for (const auto& [mb, cb] : expand_m_sym(mu, N)) {
            std::vector<int> exps(static_cast<std::size_t>(N), 0);
            for (std::size_t i = 0; i < ma.exps.size(); ++i) exps[i] += ma.exps[i];
            for (std::size_t i = 0; i < mb.exps.size(); ++i) exps[i] += mb.exps[i];
            prod.add(SymMon{std::move(exps)}, ca * cb);
        }
    std::map<Word, LinComb<SymMon>> groups;
    for (const auto& [m, c] : prod) {
        std::vector<int> nz;
        for (int e : m.exps)
            if (e > 0) nz.push_back(e);
        std::sort(nz.begin(), nz.end(), std::greater<int>());
        groups[Word(std::move(nz))].add(m, c);
    }
    LinComb<Word> out;
    for (const auto& [nu, sub] : groups) {
        const Scalar c = sub.begin()->second;
        if (!(sub == expand_m_sym(nu, N) * c))
            throw StructureError("monomial product group is not a multiple of m_" + nu.str());
        out.add(nu, c);
    }
    return out;
}

}  // namespace hopfcomb
