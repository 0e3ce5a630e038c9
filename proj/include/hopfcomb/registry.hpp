#pragma once
// Uniform registry of all the algebras: each entry exposes degree-homogeneous
// basis keys encoded as words, a product, a coproduct, a grading, and whether
// the compatibility law uses the graded twist on the tensor square.  A generic
// checker verifies unit, counit, associativity, coassociativity, and
// product/coproduct compatibility exhaustively within a degree budget.

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <hopfcomb/enumerate.hpp>
#include <hopfcomb/eqsym.hpp>
#include <hopfcomb/graphs.hpp>
#include <hopfcomb/hopf.hpp>
#include <hopfcomb/linear.hpp>
#include <hopfcomb/parking.hpp>
#include <hopfcomb/partitions.hpp>
#include <hopfcomb/phisym.hpp>
#include <hopfcomb/quantum.hpp>
#include <hopfcomb/scalar.hpp>
#include <hopfcomb/sgqsym.hpp>
#include <hopfcomb/words.hpp>

namespace hopfcomb {

// --- key encodings ------------------------------------------------------------------

/// Encode a set partition as the word sending each element to the index of
/// its block, blocks numbered by increasing minimum (a restricted-growth
/// word: every letter is at most one more than the maximum before it).
inline Word set_partition_word(const SetPartition& pi) {
    std::vector<int> w(static_cast<std::size_t>(pi.degree()), 0);
    const auto& blocks = pi.blocks();
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
        for (int e : blocks[bi]) w[static_cast<std::size_t>(e - 1)] = static_cast<int>(bi) + 1;
    return Word(std::move(w));
}

inline bool is_set_partition_word(const Word& w) {
    int seen = 0;
    for (int v : w.letters()) {
        if (v < 1 || v > seen + 1) return false;
        seen = std::max(seen, v);
    }
    return true;
}

inline SetPartition set_partition_from_word(const Word& w) {
    if (!is_set_partition_word(w))
        throw StructureError("not a restricted-growth block word: " + w.str());
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= w.size(); ++i) {
        const std::size_t b = static_cast<std::size_t>(w.letter(i));
        if (b > blocks.size()) blocks.emplace_back();
        blocks[b - 1].push_back(i);
    }
    return SetPartition(std::move(blocks));
}

/// Minimal parking function whose functional graph lies in the class.
inline Word upg_representative(const GraphKey& g) {
    if (g.n == 0) return Word();
    const std::vector<Word> members = detail::parking_with_graph(g);
    if (members.empty()) throw StructureError("no parking labelling of class " + g.str());
    return *std::min_element(members.begin(), members.end());
}

/// Minimal nondecreasing parking function with the given forest class.
inline Word forest_representative(const GraphKey& g) {
    if (g.n == 0) return Word();
    const std::vector<Word> members = detail::nondecreasing_parking_with_forest(g);
    if (members.empty()) throw StructureError("no nondecreasing labelling of forest " + g.str());
    return *std::min_element(members.begin(), members.end());
}

// --- the registry ---------------------------------------------------------------------

/// One registered graded bialgebra, with keys uniformly encoded as words.
struct AlgebraOps {
    std::string name;
    std::string basis;     // display letter of the distinguished basis
    std::string key_kind;  // human-readable description of valid keys
    bool twisted = false;  // compatibility holds for the graded-twist tensor square
    std::function<std::vector<Word>(int)> keys;  // canonical degree-n basis keys
    std::function<bool(const Word&)> valid_key;
    std::function<Word(const Word&)> canonical;  // canonical key of the same basis element
    std::function<LinComb<Word>(const Word&, const Word&)> product;
    std::function<Tensor2<Word>(const Word&)> coproduct;
    std::function<int(const Word&)> weight;  // grading; also the twist exponent
};

namespace detail {

inline int word_size(const Word& w) { return w.size(); }
inline Word word_identity(const Word& w) { return w; }

inline std::vector<Word> upg_keys(int n) {
    if (n == 0) return {Word()};
    std::map<GraphKey, Word> reps;
    for (const Word& p : all_parking_functions(n)) {
        auto [it, fresh] = reps.emplace(graph_key_of(p), p);
        if (!fresh && p < it->second) it->second = p;
    }
    std::vector<Word> out;
    out.reserve(reps.size());
    for (const auto& [g, rep] : reps) out.push_back(rep);
    return out;
}

inline std::vector<Word> forest_keys(int n) {
    if (n == 0) return {Word()};
    std::map<GraphKey, Word> reps;
    for (const Word& p : all_nondecreasing_parking_functions(n)) {
        auto [it, fresh] = reps.emplace(forest_key_of(p), p);
        if (!fresh && p < it->second) it->second = p;
    }
    std::vector<Word> out;
    out.reserve(reps.size());
    for (const auto& [g, rep] : reps) out.push_back(rep);
    return out;
}

inline std::map<std::string, AlgebraOps> build_registry() {
    std::map<std::string, AlgebraOps> reg;
    const auto add = [&reg](AlgebraOps ops) { reg.emplace(ops.name, std::move(ops)); };

    add({"EQSym", "M", "endofunction word", false,
         [](int n) { return n == 0 ? std::vector<Word>{Word()} : all_endofunctions(n); },
         [](const Word& w) { return is_endofunction(w); }, word_identity,
         [](const Word& a, const Word& b) { return eqsym_product(a, b); },
         [](const Word& w) { return eqsym_coproduct(w); }, word_size});

    add({"ESym", "S", "endofunction word", false,
         [](int n) { return n == 0 ? std::vector<Word>{Word()} : all_endofunctions(n); },
         [](const Word& w) { return is_endofunction(w); }, word_identity,
         [](const Word& a, const Word& b) { return esym_product(a, b); },
         [](const Word& w) { return esym_coproduct(w); }, word_size});

    add({"SGQSym", "M", "permutation", false,
         [](int n) { return n == 0 ? std::vector<Word>{Word()} : all_permutations(n); },
         [](const Word& w) { return is_permutation(w); }, word_identity,
         [](const Word& a, const Word& b) { return sg_product(a, b); },
         [](const Word& w) { return sg_coproduct(w); }, word_size});

    add({"PiQSym", "u", "set partition as a restricted-growth block word", false,
         [](int n) {
             if (n == 0) return std::vector<Word>{Word()};
             std::vector<Word> out;
             for (const SetPartition& pi : set_partitions_of(n))
                 out.push_back(set_partition_word(pi));
             return out;
         },
         [](const Word& w) { return is_set_partition_word(w); }, word_identity,
         [](const Word& a, const Word& b) {
             LinComb<Word> out;
             for (const auto& [pi, c] :
                  pi_product(set_partition_from_word(a), set_partition_from_word(b)))
                 out.add(set_partition_word(pi), c);
             return out;
         },
         [](const Word& w) {
             Tensor2<Word> out;
             for (const auto& [pr, c] : pi_coproduct(set_partition_from_word(w)))
                 out.add({set_partition_word(pr.first), set_partition_word(pr.second)}, c);
             return out;
         },
         word_size});

    add({"QSym", "uq", "composition", false,
         [](int n) { return n == 0 ? std::vector<Word>{Word()} : compositions_of(n); },
         [](const Word& w) { return is_composition(w); }, word_identity,
         [](const Word& a, const Word& b) { return uq_product(a, b); },
         [](const Word& w) { return uq_coproduct(w); },
         [](const Word& w) { return parts_sum(w); }});

    add({"Sym", "ul", "partition", false,
         [](int n) { return n == 0 ? std::vector<Word>{Word()} : partitions_of(n); },
         [](const Word& w) { return is_partition(w); }, word_identity,
         [](const Word& a, const Word& b) { return ul_product(a, b); },
         [](const Word& w) { return ul_coproduct(w); },
         [](const Word& w) { return parts_sum(w); }});

    add({"PhiSym", "phi", "permutation", false,
         [](int n) { return n == 0 ? std::vector<Word>{Word()} : all_permutations(n); },
         [](const Word& w) { return is_permutation(w); }, word_identity,
         [](const Word& a, const Word& b) { return phi_product(a, b); },
         [](const Word& w) { return phi_coproduct(w); }, word_size});

    add({"CPQSym", "M", "parking function", false,
         [](int n) { return n == 0 ? std::vector<Word>{Word()} : all_parking_functions(n); },
         [](const Word& w) { return is_parking(w); }, word_identity,
         [](const Word& a, const Word& b) { return cpq_product(a, b); },
         [](const Word& w) { return cpq_coproduct(w); }, word_size});

    add({"CCQSym", "M", "nondecreasing parking function", false,
         [](int n) {
             return n == 0 ? std::vector<Word>{Word()} : all_nondecreasing_parking_functions(n);
         },
         [](const Word& w) { return is_parking(w) && is_nondecreasing(w); }, word_identity,
         [](const Word& a, const Word& b) { return ccq_product(a, b); },
         [](const Word& w) { return ccq_coproduct(w); }, word_size});

    add({"UPG", "G", "parking function naming its graph class", false, upg_keys,
         [](const Word& w) { return is_parking(w); },
         [](const Word& w) { return w.empty() ? w : upg_representative(graph_key_of(w)); },
         [](const Word& a, const Word& b) {
             LinComb<Word> out;
             for (const auto& [g, c] : unlabelled_product(graph_key_of(a), graph_key_of(b)))
                 out.add(upg_representative(g), c);
             return out;
         },
         [](const Word& w) {
             Tensor2<Word> out;
             for (const auto& [pr, c] : unlabelled_coproduct(graph_key_of(w)))
                 out.add({upg_representative(pr.first), upg_representative(pr.second)}, c);
             return out;
         },
         word_size});

    add({"Forest", "F", "nondecreasing parking function naming its forest class", false,
         forest_keys, [](const Word& w) { return is_parking(w) && is_nondecreasing(w); },
         [](const Word& w) { return w.empty() ? w : forest_representative(forest_key_of(w)); },
         [](const Word& a, const Word& b) {
             LinComb<Word> out;
             for (const auto& [g, c] : forest_product(forest_key_of(a), forest_key_of(b)))
                 out.add(forest_representative(g), c);
             return out;
         },
         [](const Word& w) {
             Tensor2<Word> out;
             for (const auto& [pr, c] : forest_coproduct(forest_key_of(w)))
                 out.add({forest_representative(pr.first), forest_representative(pr.second)}, c);
             return out;
         },
         word_size});

    add({"FQSym_q", "F", "permutation", true,
         [](int n) { return n == 0 ? std::vector<Word>{Word()} : all_permutations(n); },
         [](const Word& w) { return is_permutation(w); }, word_identity,
         [](const Word& a, const Word& b) { return fqsym_product(a, b); },
         [](const Word& w) { return delta_q(w); }, word_size});

    add({"NCSF_q", "S", "composition", true,
         [](int n) { return n == 0 ? std::vector<Word>{Word()} : compositions_of(n); },
         [](const Word& w) { return is_composition(w); }, word_identity,
         [](const Word& a, const Word& b) { return ncsfq_product(a, b); },
         [](const Word& w) { return ncsfq_coproduct(w); },
         [](const Word& w) { return parts_sum(w); }});

    add({"QSym_q", "M", "composition", true,
         [](int n) { return n == 0 ? std::vector<Word>{Word()} : compositions_of(n); },
         [](const Word& w) { return is_composition(w); }, word_identity,
         [](const Word& a, const Word& b) { return qsymq_product(a, b); },
         [](const Word& w) { return qsymq_coproduct(w); },
         [](const Word& w) { return parts_sum(w); }});

    return reg;
}

}  // namespace detail

/// Registered algebra tags, in presentation order.
inline const std::vector<std::string>& algebra_tags() {
    static const std::vector<std::string> tags = {
        "EQSym", "ESym",    "SGQSym", "PiQSym", "QSym",    "Sym",    "PhiSym",
        "CPQSym", "CCQSym", "UPG",    "Forest", "FQSym_q", "NCSF_q", "QSym_q"};
    return tags;
}

inline const std::map<std::string, AlgebraOps>& algebra_registry() {
    static const std::map<std::string, AlgebraOps> reg = detail::build_registry();
    return reg;
}

inline const AlgebraOps& algebra(const std::string& tag) {
    const auto& reg = algebra_registry();
    const auto it = reg.find(tag);
    if (it == reg.end()) throw StructureError("unknown algebra: " + tag);
    return it->second;
}

// --- axiom checking -------------------------------------------------------------------

struct AxiomReport {
    int checks = 0;
    bool ok = true;
    std::string witness;

    void fail(std::string w) {
        if (ok) {
            ok = false;
            witness = std::move(w);
        }
    }
};

/// Exhaustively verify unit, counit, associativity, coassociativity, and the
/// (possibly twisted) product/coproduct compatibility on all basis keys up to
/// the total-degree budget.  Stops at the first counterexample.
inline AxiomReport check_hopf_axioms(const std::string& tag, int max_degree) {
    const AlgebraOps& ops = algebra(tag);
    AxiomReport rep;

    std::map<int, std::vector<Word>> keys;
    for (int n = 1; n <= max_degree; ++n) keys[n] = ops.keys(n);

    const auto single = [](const Word& w) {
        LinComb<Word> e;
        e.add(w, Scalar(1));
        return e;
    };

    // unit, counit, coassociativity per key
    for (int n = 1; n <= max_degree; ++n) {
        for (const Word& a : keys[n]) {
            ++rep.checks;
            if (!(ops.product(Word(), a) == single(a)) ||
                !(ops.product(a, Word()) == single(a))) {
                rep.fail(tag + ": unit law fails at " + a.str());
                return rep;
            }
            const Tensor2<Word> d = ops.coproduct(a);
            LinComb<Word> left, right;
            for (const auto& [pr, c] : d) {
                if (pr.first.empty()) left.add(pr.second, c);
                if (pr.second.empty()) right.add(pr.first, c);
            }
            ++rep.checks;
            if (!(left == single(a)) || !(right == single(a))) {
                rep.fail(tag + ": counit law fails at " + a.str());
                return rep;
            }
            LinComb<std::tuple<Word, Word, Word>> l3, r3;
            for (const auto& [pr, c] : d) {
                for (const auto& [qr, c2] : ops.coproduct(pr.first))
                    l3.add({qr.first, qr.second, pr.second}, c * c2);
                for (const auto& [qr, c2] : ops.coproduct(pr.second))
                    r3.add({pr.first, qr.first, qr.second}, c * c2);
            }
            ++rep.checks;
            if (!(l3 == r3)) {
                rep.fail(tag + ": coassociativity fails at " + a.str());
                return rep;
            }
        }
    }

    // compatibility on pairs
    for (int n = 1; n < max_degree; ++n) {
        for (int m = 1; n + m <= max_degree; ++m) {
            for (const Word& a : keys[n]) {
                for (const Word& b : keys[m]) {
                    ++rep.checks;
                    const Tensor2<Word> lhs = coproduct_linear(ops.product(a, b), ops.coproduct);
                    const Tensor2<Word> rhs =
                        twisted_multiply(ops.coproduct(a), ops.coproduct(b), ops.product,
                                         ops.product, ops.twisted, ops.weight);
                    if (!(lhs == rhs)) {
                        rep.fail(tag + ": compatibility fails at " + a.str() + " * " + b.str());
                        return rep;
                    }
                }
            }
        }
    }

    // associativity on triples
    for (int n = 1; n < max_degree; ++n) {
        for (int m = 1; n + m < max_degree; ++m) {
            for (int p = 1; n + m + p <= max_degree; ++p) {
                for (const Word& a : keys[n]) {
                    for (const Word& b : keys[m]) {
                        for (const Word& c : keys[p]) {
                            ++rep.checks;
                            LinComb<Word> lhs, rhs;
                            for (const auto& [k, cc] : ops.product(a, b))
                                lhs += ops.product(k, c) * cc;
                            for (const auto& [k, cc] : ops.product(b, c))
                                rhs += ops.product(a, k) * cc;
                            if (!(lhs == rhs)) {
                                rep.fail(tag + ": associativity fails at " + a.str() + " * " +
                                         b.str() + " * " + c.str());
                                return rep;
                            }
                        }
                    }
                }
            }
        }
    }

    return rep;
}

/// Check that the coproduct is symmetric under leg exchange on all keys up to
/// the degree budget.
inline AxiomReport check_cocommutative(const std::string& tag, int max_degree) {
    const AlgebraOps& ops = algebra(tag);
    AxiomReport rep;
    for (int n = 1; n <= max_degree; ++n) {
        for (const Word& a : ops.keys(n)) {
            ++rep.checks;
            const Tensor2<Word> d = ops.coproduct(a);
            if (!(d == flip(d))) {
                rep.fail(tag + ": coproduct not symmetric at " + a.str());
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace hopfcomb
