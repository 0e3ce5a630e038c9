#pragma once
// Parking-function algebras: CPQSym (the commutative algebra on parking
// functions inside the endofunction algebra), its quotient CCQSym by the
// non-nondecreasing span (Catalan dimensions), the subalgebra of sums over
// labellings of a functional graph (unlabelled parking graphs), and the
// rooted-forest basis regrouping nondecreasing parking functions.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <hopfcomb/enumerate.hpp>
#include <hopfcomb/eqsym.hpp>
#include <hopfcomb/graphs.hpp>
#include <hopfcomb/hopf.hpp>
#include <hopfcomb/linear.hpp>
#include <hopfcomb/partitions.hpp>
#include <hopfcomb/sgqsym.hpp>
#include <hopfcomb/words.hpp>

namespace hopfcomb {

// --- CPQSym ---------------------------------------------------------------------

/// M_p * M_r for parking functions: the conjugation-by-shuffle rule of the
/// endofunction algebra, with the parking property of every output key
/// checked (the span is closed).
inline LinComb<Word> cpq_product(const Word& p, const Word& r) {
    if (!is_parking(p) || !is_parking(r))
        throw StructureError("cpq_product: key is not a parking function");
    LinComb<Word> out = eqsym_product(p, r);
    for (const auto& [k, c] : out) {
        if (!is_parking(k))
            throw StructureError("cpq_product left the parking span at " + k.str());
    }
    return out;
}

/// Deconcatenation coproduct; both legs of every split of a parking function
/// are again parking functions.
inline Tensor2<Word> cpq_coproduct(const Word& p) {
    if (!is_parking(p)) throw StructureError("cpq_coproduct: key is not a parking function");
    Tensor2<Word> out = eqsym_coproduct(p);
    for (const auto& [pr, c] : out) {
        if (!is_parking(pr.first) || !is_parking(pr.second))
            throw StructureError("cpq_coproduct left the parking span at " + pr.first.str() +
                                 " (x) " + pr.second.str());
    }
    return out;
}

// --- CCQSym: quotient by the non-nondecreasing span -----------------------------

inline bool is_ccq_key(const Word& p) { return is_parking(p) && is_nondecreasing(p); }

/// Quotient projection: kill every M_p whose key is not nondecreasing.
inline LinComb<Word> ccq_project(const LinComb<Word>& x) {
    LinComb<Word> out;
    for (const auto& [k, c] : x) {
        if (is_nondecreasing(k)) out.add(k, c);
    }
    return out;
}

inline Tensor2<Word> ccq_project_tensor(const Tensor2<Word>& t) {
    Tensor2<Word> out;
    for (const auto& [pr, c] : t) {
        if (is_nondecreasing(pr.first) && is_nondecreasing(pr.second)) out.add(pr, c);
    }
    return out;
}

/// Product in the quotient: multiply the (canonical, nondecreasing)
/// representatives in CPQSym and project.
inline LinComb<Word> ccq_product(const Word& a, const Word& b) {
    return ccq_project(cpq_product(a, b));
}

inline Tensor2<Word> ccq_coproduct(const Word& p) { return ccq_project_tensor(cpq_coproduct(p)); }

// --- unlabelled graphs: sums over labellings -------------------------------------

/// Sum of M_p over the parking functions whose functional graph lies in the
/// isomorphism class G.
inline LinComb<Word> upg_expand(const GraphKey& g) {
    LinComb<Word> out;
    for (const Word& p : all_parking_functions(g.n)) {
        if (graph_key_of(p) == g) out.add(p, Scalar(1));
    }
    return out;
}

/// The same sum taken over all endofunctions with graph class G.
inline LinComb<Word> ueg_expand(const GraphKey& g) {
    LinComb<Word> out;
    for (const Word& f : all_endofunctions(g.n)) {
        if (graph_key_of(f) == g) out.add(f, Scalar(1));
    }
    return out;
}

namespace detail {

inline std::vector<Word> parking_with_graph(const GraphKey& g) {
    std::vector<Word> out;
    for (const Word& p : all_parking_functions(g.n))
        if (graph_key_of(p) == g) out.push_back(p);
    return out;
}

inline std::vector<Word> endofunctions_with_graph(const GraphKey& g) {
    std::vector<Word> out;
    for (const Word& f : all_endofunctions(g.n))
        if (graph_key_of(f) == g) out.push_back(f);
    return out;
}

}  // namespace detail

/// Regroup a combination of parking keys into parking class sums.  Sums over
/// parking labellings do NOT close under the product: already for the
/// degree-2 class with a loop plus one attached node, the square of the class
/// sum (M_11 squared) reaches only three of the four parking functions in the
/// disjoint-union class — 1331 is missed, since no block-shuffle conjugate of
/// 1133 equals it — so this regrouping throws on such products.  The honest
/// subalgebra of sums over labellings lives on the endofunction classes
/// (ueg_product below); this helper is kept so the defect stays observable.
inline LinComb<GraphKey> upg_reexpress(const LinComb<Word>& x) {
    return detail::reexpress_by_class<GraphKey>(
        x, [](const Word& w) { return graph_key_of(w); },
        [](const GraphKey& g) { return detail::parking_with_graph(g); }, "UPG");
}

/// Coproducts of parking class sums do regroup: the two legs of every
/// splitting are parking functions, and splittings biject with pairs of
/// labelled graphs on the component split, uniformly over the class.
inline Tensor2<GraphKey> upg_coproduct(const GraphKey& g) {
    Tensor2<Word> t;
    for (const auto& [p, c] : upg_expand(g)) t += cpq_coproduct(p) * c;
    return detail::reexpress_tensor_by_class<GraphKey>(
        t, [](const Word& w) { return graph_key_of(w); },
        [](const GraphKey& k) { return detail::parking_with_graph(k); }, "UPG");
}

/// Product of two sums over ALL labellings (endofunction classes): always a
/// single multiple of the disjoint union's class, because conjugation
/// preserves the graph and every split of the union's components into a copy
/// of each factor arises from exactly one block shuffle.
inline LinComb<GraphKey> ueg_product(const GraphKey& a, const GraphKey& b) {
    const auto prod = multiply_elements(ueg_expand(a), ueg_expand(b),
                                        [](const Word& f, const Word& g) { return eqsym_product(f, g); });
    return detail::reexpress_by_class<GraphKey>(
        prod, [](const Word& w) { return graph_key_of(w); },
        [](const GraphKey& g) { return detail::endofunctions_with_graph(g); }, "UEG");
}

inline Tensor2<GraphKey> ueg_coproduct(const GraphKey& g) {
    Tensor2<Word> t;
    for (const auto& [f, c] : ueg_expand(g)) t += eqsym_coproduct(f) * c;
    return detail::reexpress_tensor_by_class<GraphKey>(
        t, [](const Word& w) { return graph_key_of(w); },
        [](const GraphKey& k) { return detail::endofunctions_with_graph(k); }, "UEG");
}

/// Split a canonical graph code into its component codes ("[...]" groups).
inline std::vector<std::string> component_codes(const std::string& code) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : code) {
        cur += ch;
        if (ch == '[') ++depth;
        else if (ch == ']' && --depth == 0) {
            out.push_back(cur);
            cur.clear();
        }
    }
    return out;
}

/// Degree of a component code = number of nodes = number of '(' characters.
inline int component_degree(const std::string& comp) {
    int d = 0;
    for (char ch : comp) d += (ch == '(');
    return d;
}

inline GraphKey assemble_graph_key(std::vector<std::string> comps) {
    std::sort(comps.begin(), comps.end());
    GraphKey g;
    for (const auto& c : comps) {
        g.n += component_degree(c);
        g.code += c;
    }
    return g;
}

/// Disjoint union of two graph classes (concatenation of graphs).
inline GraphKey graph_disjoint_union(const GraphKey& a, const GraphKey& b) {
    std::vector<std::string> comps = component_codes(a.code);
    for (auto& c : component_codes(b.code)) comps.push_back(c);
    return assemble_graph_key(std::move(comps));
}

/// Combinatorial coproduct rule: unshuffle the multiset of connected
/// components, each distinct sub-multiset/complement split once.
inline Tensor2<GraphKey> upg_component_unshuffle(const GraphKey& g) {
    const std::vector<std::string> comps = component_codes(g.code);
    const std::size_t r = comps.size();
    Tensor2<GraphKey> out;
    std::map<std::pair<GraphKey, GraphKey>, bool> seen;
    for (unsigned long msk = 0; msk < (1ul << r); ++msk) {
        std::vector<std::string> a, b;
        for (std::size_t i = 0; i < r; ++i) {
            if (msk >> i & 1) a.push_back(comps[i]);
            else b.push_back(comps[i]);
        }
        const std::pair<GraphKey, GraphKey> pr{assemble_graph_key(std::move(a)),
                                               assemble_graph_key(std::move(b))};
        if (!seen.emplace(pr, true).second) continue;
        out.add(pr, Scalar(1));
    }
    return out;
}

/// Multiplicity of the disjoint union in a product of two class sums: for
/// each distinct connected component, choose which of its copies in the union
/// came from the left factor (a product of binomial coefficients).
inline Scalar unlabelled_product_multiplicity(const GraphKey& a, const GraphKey& b) {
    std::map<std::string, std::pair<int, int>> mult;
    for (const auto& c : component_codes(a.code)) ++mult[c].first;
    for (const auto& c : component_codes(b.code)) ++mult[c].second;
    mpz_class m = 1;
    for (const auto& [c, ab] : mult)
        m *= factorial(ab.first + ab.second) / (factorial(ab.first) * factorial(ab.second));
    return Scalar(m);
}

/// Combinatorial product rule for the unlabelled-graph algebra: concatenation
/// of graphs, carried with the multiplicity the sums over labellings force.
/// Agrees with expanding and regrouping endofunction class sums, and exhibits
/// the algebra as polynomial on the connected graph codes.
inline LinComb<GraphKey> unlabelled_product(const GraphKey& a, const GraphKey& b) {
    LinComb<GraphKey> out;
    out.add(graph_disjoint_union(a, b), unlabelled_product_multiplicity(a, b));
    return out;
}

/// Combinatorial coproduct rule: unshuffle of the connected components, each
/// distinct split of the component multiset once.
inline Tensor2<GraphKey> unlabelled_coproduct(const GraphKey& g) {
    return upg_component_unshuffle(g);
}

// --- rooted forests ---------------------------------------------------------------

/// Nondecreasing parking functions are exactly the labellings in which every
/// cycle of the functional graph is a loop, so their graph codes are forests
/// of rooted trees (the loops mark the roots).
inline GraphKey forest_key_of(const Word& p) {
    GraphKey g = graph_key_of(p);
    if (!is_forest_code(g.code))
        throw StructureError("forest_key_of: graph of " + p.str() + " is not a forest");
    return g;
}

namespace detail {

inline std::vector<Word> nondecreasing_parking_with_forest(const GraphKey& g) {
    std::vector<Word> out;
    for (const Word& p : all_nondecreasing_parking_functions(g.n))
        if (graph_key_of(p) == g) out.push_back(p);
    return out;
}

}  // namespace detail

/// M_F = sum over nondecreasing parking functions with graph support F.
inline LinComb<Word> forest_expand(const GraphKey& f) {
    LinComb<Word> out;
    for (const Word& p : detail::nondecreasing_parking_with_forest(f)) out.add(p, Scalar(1));
    return out;
}

inline LinComb<GraphKey> forest_reexpress(const LinComb<Word>& x) {
    return detail::reexpress_by_class<GraphKey>(
        x, [](const Word& w) { return forest_key_of(w); },
        [](const GraphKey& g) { return detail::nondecreasing_parking_with_forest(g); }, "Forest");
}

/// Multiply two forest sums through CCQSym and regroup by forest; throws if
/// the result fails to regroup (closure is checked, not assumed).
inline LinComb<GraphKey> forest_product(const GraphKey& a, const GraphKey& b) {
    const auto prod = multiply_elements(forest_expand(a), forest_expand(b),
                                        [](const Word& p, const Word& r) { return ccq_product(p, r); });
    return forest_reexpress(prod);
}

inline Tensor2<GraphKey> forest_coproduct(const GraphKey& f) {
    Tensor2<Word> t;
    for (const auto& [p, c] : forest_expand(f)) t += ccq_coproduct(p) * c;
    return detail::reexpress_tensor_by_class<GraphKey>(
        t, [](const Word& w) { return forest_key_of(w); },
        [](const GraphKey& g) { return detail::nondecreasing_parking_with_forest(g); }, "Forest");
}

// --- dimension enumerations -------------------------------------------------------

/// Distinct functional-graph classes of parking functions in degree n.
inline std::vector<GraphKey> parking_graph_classes(int n) {
    std::map<GraphKey, bool> seen;
    std::vector<GraphKey> out;
    for (const Word& p : all_parking_functions(n)) {
        GraphKey g = graph_key_of(p);
        if (seen.emplace(g, true).second) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Distinct functional-graph classes of all endofunctions in degree n.
inline std::vector<GraphKey> endofunction_graph_classes(int n) {
    std::map<GraphKey, bool> seen;
    std::vector<GraphKey> out;
    for (const Word& f : all_endofunctions(n)) {
        GraphKey g = graph_key_of(f);
        if (seen.emplace(g, true).second) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Distinct forest classes of nondecreasing parking functions in degree n.
inline std::vector<GraphKey> forest_classes(int n) {
    std::map<GraphKey, bool> seen;
    std::vector<GraphKey> out;
    for (const Word& p : all_nondecreasing_parking_functions(n)) {
        GraphKey g = forest_key_of(p);
        if (seen.emplace(g, true).second) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hopfcomb
