#pragma once
// Named verification suites behind the CLI `verify` subcommand.  Each suite
// runs a list of independent checks and reports one line per check; a line
// carries the check's name, its outcome, and a witness on failure.
//
//   hopf-axioms  generic unit/counit/(co)associativity/compatibility sweeps
//   oracle       structure constants re-derived from brute-force realizations
//   dims         graded dimension and generator-count series against known values
//   duality      product/coproduct transposes and basis-change identities
//   quantum      q-deformation laws (fixed budgets, independent of --degree)
//   all          every suite above in order

#include <map>
#include <string>
#include <vector>

#include <hopfcomb/oracle.hpp>
#include <hopfcomb/registry.hpp>
#include <hopfcomb/series.hpp>

namespace hopfcomb {

struct CheckLine {
    std::string name;
    bool ok = true;
    std::string witness;
};

namespace verifydetail {

inline std::string series_str(const std::vector<mpz_class>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out;
}

inline void push_report(std::vector<CheckLine>& out, std::string name, int checks, bool ok,
                        std::string witness) {
    out.push_back({std::move(name) + " (" + std::to_string(checks) + " checks)", ok,
                   std::move(witness)});
}

/// Compare a computed series with its expected prefix and emit one line.
inline void push_series(std::vector<CheckLine>& out, const std::string& name,
                        const std::vector<mpz_class>& got, const std::vector<mpz_class>& want) {
    bool ok = got.size() <= want.size();
    for (std::size_t i = 0; ok && i < got.size(); ++i) ok = got[i] == want[i];
    std::string witness;
    if (!ok)
        witness = "expected prefix of " + series_str(want);
    out.push_back({name + ": " + series_str(got), ok, std::move(witness)});
}

}  // namespace verifydetail

// --- hopf-axioms -----------------------------------------------------------------------

inline std::vector<CheckLine> verify_hopf_axioms_suite(int degree) {
    std::vector<CheckLine> out;
    for (const auto& [tag, ops] : algebra_registry()) {
        const AxiomReport r = check_hopf_axioms(tag, degree);
        verifydetail::push_report(out, "hopf-axioms " + tag + " degree<=" + std::to_string(degree),
                                  r.checks, r.ok, r.witness);
    }
    for (const char* tag : {"ESym", "PhiSym", "Sym", "UPG", "Forest"}) {
        const AxiomReport r = check_cocommutative(tag, degree);
        verifydetail::push_report(
            out, std::string("cocommutative ") + tag + " degree<=" + std::to_string(degree),
            r.checks, r.ok, r.witness);
    }
    return out;
}

// --- oracle ----------------------------------------------------------------------------

inline std::vector<CheckLine> verify_oracle_suite(int degree, int truncation) {
    if (truncation < 2 * degree)
        throw BudgetError("oracle suite needs truncation >= 2*degree, got truncation " +
                          std::to_string(truncation) + " for degree " + std::to_string(degree));
    std::vector<CheckLine> out;
    const std::string budget =
        " degree<=" + std::to_string(degree) + " truncation " + std::to_string(truncation);
    for (OracleAlgebra alg : {OracleAlgebra::EQSym, OracleAlgebra::SGQSym, OracleAlgebra::CCQSym}) {
        const OracleReport r = verify_structure_constants(alg, degree, truncation);
        verifydetail::push_report(
            out, "oracle " + std::string(oracle_algebra_name(alg)) + " x-realization" + budget,
            r.checks, r.ok, r.witness);
    }
    {
        // The biword expansion grows too fast beyond 6 variables to be useful
        // interactively, so its truncation is capped.
        const int d = std::min(degree, 4);
        const int n = std::min(truncation, 6);
        const OracleReport r = verify_phi_constants(d, n);
        verifydetail::push_report(out,
                                  "oracle PhiSym biword-realization degree<=" + std::to_string(d) +
                                      " truncation " + std::to_string(n),
                                  r.checks, r.ok, r.witness);
    }
    {
        const OracleReport r = verify_qsymq(degree, truncation);
        verifydetail::push_report(out, "oracle QSym_q q-commuting-realization" + budget, r.checks,
                                  r.ok, r.witness);
    }
    {
        const int d = std::min(degree, 4);
        const OracleReport r = verify_sym_identities(d, truncation);
        verifydetail::push_report(out,
                                  "oracle Sym matrix-identities degree<=" + std::to_string(d) +
                                      " truncation " + std::to_string(truncation),
                                  r.checks, r.ok, r.witness);
    }
    return out;
}

// --- dims ------------------------------------------------------------------------------

inline std::vector<CheckLine> verify_dims_suite(int degree) {
    std::vector<CheckLine> out;

    // Connected endofunctions generate ESym freely; their counts drive the
    // free-Lie dimension series of the primitive Lie algebra of the dual.
    static const std::vector<mpz_class> want_connected = {1, 3, 20, 197, 2511, 38924};
    static const std::vector<mpz_class> want_lie = {1, 3, 23, 223, 2800, 42576};
    const int cd = std::min(degree, 6);
    std::vector<mpz_class> connected;
    for (int n = 1; n <= cd; ++n) {
        long cnt = 0;
        for (const Word& f : all_endofunctions(n))
            if (is_connected(f)) ++cnt;
        connected.emplace_back(cnt);
    }
    verifydetail::push_series(out, "dims ESym connected generators n=1.." + std::to_string(cd),
                              connected, want_connected);
    verifydetail::push_series(out, "dims L(ESym) free-Lie n=1.." + std::to_string(cd),
                              lie_dims_from_generators(connected, cd), want_lie);

    const auto graded_dims = [](const std::string& tag, int lo, int hi) {
        std::vector<mpz_class> dims;
        for (int n = lo; n <= hi; ++n)
            dims.emplace_back(static_cast<long>(algebra(tag).keys(n).size()));
        return dims;
    };

    static const std::vector<mpz_class> want_catalan = {1, 2, 5, 14, 42, 132, 429};
    const int ccd = std::min(degree, 7);
    verifydetail::push_series(out, "dims CCQSym n=1.." + std::to_string(ccd),
                              graded_dims("CCQSym", 1, ccd), want_catalan);

    static const std::vector<mpz_class> want_upg = {1, 1, 3, 7, 19, 47};
    const int ud = std::min(degree, 5);
    verifydetail::push_series(out, "dims UPG n=0.." + std::to_string(ud),
                              graded_dims("UPG", 0, ud), want_upg);

    const int ed = std::min(degree, 6);
    std::vector<mpz_class> want_endo;
    for (int n = 1; n <= ed; ++n) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
        want_endo.push_back(p);
    }
    verifydetail::push_series(out, "dims EQSym n=1.." + std::to_string(ed),
                              graded_dims("EQSym", 1, ed), want_endo);

    const int sd = std::min(degree, 7);
    std::vector<mpz_class> want_fact;
    for (int n = 1; n <= sd; ++n) want_fact.push_back(factorial(n));
    verifydetail::push_series(out, "dims SGQSym n=1.." + std::to_string(sd),
                              graded_dims("SGQSym", 1, sd), want_fact);

    return out;
}

// --- duality ---------------------------------------------------------------------------

inline std::vector<CheckLine> verify_duality_suite(int degree) {
    std::vector<CheckLine> out;

    {  // The ESym coproduct is the transpose of the EQSym product.
        const AlgebraOps& eq = algebra("EQSym");
        const AlgebraOps& es = algebra("ESym");
        int checks = 0;
        bool ok = true;
        std::string witness;
        for (int n = 0; n <= degree && ok; ++n) {
            const std::vector<Word> hs = es.keys(n);
            std::map<Word, Tensor2<Word>> cop;
            for (const Word& h : hs) cop.emplace(h, es.coproduct(h));
            for (int a = 0; a <= n && ok; ++a) {
                for (const Word& f : eq.keys(a)) {
                    for (const Word& g : eq.keys(n - a)) {
                        const LinComb<Word> p = eq.product(f, g);
                        for (const Word& h : hs) {
                            ++checks;
                            if (!(p.coefficient(h) == cop.at(h).coefficient({f, g}))) {
                                ok = false;
                                witness = "coefficient of " + h.str() + " in M_" + f.str() +
                                          " . M_" + g.str() + " differs from the coproduct side";
                                break;
                            }
                        }
                        if (!ok) break;
                    }
                    if (!ok) break;
                }
            }
        }
        verifydetail::push_report(
            out, "duality ESym coproduct transposes EQSym product degree<=" +
                     std::to_string(degree),
            checks, ok, witness);
    }

    {  // The two cycle-unfolding bases are distinct vector-space bases with
       // IDENTICAL structure constants (shifted concatenation), and those
       // constants are the transpose of the SGQSym coproduct.
        int checks = 0;
        bool ok = true;
        std::string witness;
        const auto mul_phi = [](const Word& x, const Word& y) { return phi_product(x, y); };
        for (int a = 0; a <= degree && ok; ++a) {
            for (int b = 0; a + b <= degree && ok; ++b) {
                std::map<Word, Tensor2<Word>> cop;
                for (const Word& r : algebra("SGQSym").keys(a + b))
                    cop.emplace(r, sg_coproduct(r));
                for (const Word& s : algebra("SGQSym").keys(a)) {
                    for (const Word& t : algebra("SGQSym").keys(b)) {
                        const LinComb<Word> want = LinComb<Word>::basis(shifted_concat(s, t));
                        LinComb<Word> transpose;
                        for (const auto& [r, dc] : cop) transpose.add(r, dc.coefficient({s, t}));
                        const LinComb<Word> in_sprime = phi_to_sprime(multiply_elements(
                            sprime_expand(s), sprime_expand(t), mul_phi));
                        const LinComb<Word> in_ssec = phi_to_ssec(multiply_elements(
                            ssec_expand(s), ssec_expand(t), mul_phi));
                        checks += 3;
                        if (!(in_sprime == want && in_ssec == want && transpose == want)) {
                            ok = false;
                            witness = "structure constants differ at " + s.str() + " . " +
                                      t.str();
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
        }
        verifydetail::push_report(
            out,
            "duality Sprime=Ssec constants transpose the SGQSym coproduct degree<=" +
                std::to_string(degree),
            checks, ok, witness);
    }

    {  // Y_lambda -> (coefficient) m_lambda is an algebra morphism onto
       // monomial symmetric functions; verified against the independent
       // exponent-vector realization in 8 variables.
        const int bound = 6;
        const int vars = 8;
        int checks = 0;
        bool ok = true;
        std::string witness;
        for (int a = 1; a < bound && ok; ++a) {
            for (int b = 1; a + b <= bound && ok; ++b) {
                for (const Word& lam : partitions_of(a)) {
                    for (const Word& mu : partitions_of(b)) {
                        const LinComb<Word> lhs = y_product(lam, mu).map_keys(
                            [](const Word& nu) { return y_to_m(nu); });
                        const LinComb<Word> rhs =
                            sym_monomial_product(lam, mu, vars) *
                            (y_to_m_coefficient(lam) * y_to_m_coefficient(mu));
                        ++checks;
                        if (!(lhs == rhs)) {
                            ok = false;
                            witness = "Y_" + lam.str() + " . Y_" + mu.str() +
                                      " fails the monomial morphism";
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
        }
        verifydetail::push_report(out, "duality Y-to-monomial morphism |lambda|+|mu|<=6", checks,
                                  ok, witness);
    }

    return out;
}

// --- quantum ---------------------------------------------------------------------------

/// Fixed budgets: the q-deformation laws are checked at the depths where they
/// are decisive but still fast, independently of --degree.
inline std::vector<CheckLine> verify_quantum_suite() {
    std::vector<CheckLine> out;

    {  // Delta_q is an algebra morphism into the graded-twist tensor square.
        int checks = 0;
        bool ok = true;
        std::string witness;
        for (int a = 1; a <= 4 && ok; ++a) {
            for (int b = 1; a + b <= 5 && ok; ++b) {
                for (const Word& s : all_permutations(a)) {
                    for (const Word& t : all_permutations(b)) {
                        const Tensor2<Word> lhs = coproduct_linear(
                            fqsym_product(s, t), [](const Word& w) { return delta_q(w); });
                        const Tensor2<Word> rhs =
                            fqsym_twisted_multiply(delta_q(s), delta_q(t));
                        ++checks;
                        if (!(lhs == rhs)) {
                            ok = false;
                            witness = "Delta_q fails at F_" + s.str() + " . F_" + t.str();
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
        }
        verifydetail::push_report(out, "quantum Delta_q twisted morphism |a|+|b|<=5", checks, ok,
                                  witness);
    }

    {  // At q = 1 the deformation degenerates to the classical coproduct.
        int checks = 0;
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= 5 && ok; ++n)
            for (const Word& s : all_permutations(n)) {
                ++checks;
                if (!(delta_q(s).eval_q(Scalar(1)) == fqsym_coproduct(s))) {
                    ok = false;
                    witness = "q=1 degeneration fails at F_" + s.str();
                    break;
                }
            }
        verifydetail::push_report(out, "quantum Delta_q at q=1 is the classical coproduct n<=5",
                                  checks, ok, witness);
    }

    {  // The descent projection F_sigma -> q^inv(sigma) F_{c(sigma)} is an
       // algebra morphism onto QSym_q.
        int checks = 0;
        bool ok = true;
        std::string witness;
        for (int a = 1; a <= 3 && ok; ++a) {
            for (int b = 1; a + b <= 4 && ok; ++b) {
                for (const Word& s : all_permutations(a)) {
                    for (const Word& t : all_permutations(b)) {
                        const LinComb<Word> lhs = fqsym_product(s, t).map_keys(
                            [](const Word& w) { return phi_map(w); });
                        const LinComb<Word> rhs = multiply_elements(
                            phi_map(s), phi_map(t),
                            [](const Word& x, const Word& y) { return qsymq_product(x, y); });
                        ++checks;
                        if (!(lhs == rhs)) {
                            ok = false;
                            witness = "descent projection fails at F_" + s.str() + " . F_" +
                                      t.str();
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
        }
        verifydetail::push_report(out, "quantum descent projection morphism |a|+|b|<=4", checks,
                                  ok, witness);
    }

    {  // Both q-congruences are q-graded with Catalan-many classes.
        static const std::vector<mpz_class> catalan = {1, 2, 5, 14, 42};
        for (const auto& [label, cong] :
             std::vector<std::pair<std::string, Congruence>>{
                 {"q-sylvester", Congruence::QSylvester},
                 {"q-hypoplactic", Congruence::QHypoplactic}}) {
            std::vector<mpz_class> counts;
            for (int n = 1; n <= 5; ++n)
                counts.emplace_back(static_cast<long>(congruence_class_count(n, cong)));
            verifydetail::push_series(out, "quantum " + label + " class counts n=1..5", counts,
                                      catalan);
        }
    }

    {  // The q=0 member of the coproduct family is cocommutative in the
       // plain-extension mode.
        int checks = 0;
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= 4 && ok; ++n)
            for (const Word& s : all_permutations(n)) {
                const Tensor2<Word> t =
                    delta_family(s, FamilyMode::Ordinary).eval_q(Scalar(0));
                ++checks;
                if (!(t == flip(t))) {
                    ok = false;
                    witness = "Delta^(0) not cocommutative at F_" + s.str();
                    break;
                }
            }
        verifydetail::push_report(out, "quantum Delta^(0) ordinary-mode cocommutative n<=4",
                                  checks, ok, witness);
    }

    {  // Primitive-space dimensions of the q=0 family, both extension modes.
        static const std::vector<mpz_class> want_ordinary = {1, 1, 4, 17, 92};
        static const std::vector<mpz_class> want_twisted = {1, 1, 3, 13, 71};
        std::vector<mpz_class> ord, tw;
        for (int n = 1; n <= 5; ++n) {
            ord.emplace_back(primitive_dimension_q0(n, FamilyMode::Ordinary));
            tw.emplace_back(primitive_dimension_q0(n, FamilyMode::Twisted));
        }
        verifydetail::push_series(out, "quantum Delta^(0) ordinary primitive dims n=1..5", ord,
                                  want_ordinary);
        verifydetail::push_series(out, "quantum Delta^(0) twisted primitive dims n=1..5", tw,
                                  want_twisted);
    }

    return out;
}

// --- dispatcher ------------------------------------------------------------------------

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"hopf-axioms", "oracle",  "dims",
                                                   "duality",     "quantum", "all"};
    return names;
}

inline std::vector<CheckLine> run_verify_suite(const std::string& suite, int degree,
                                               int truncation) {
    if (suite == "hopf-axioms") return verify_hopf_axioms_suite(degree);
    if (suite == "oracle") return verify_oracle_suite(degree, truncation);
    if (suite == "dims") return verify_dims_suite(degree);
    if (suite == "duality") return verify_duality_suite(degree);
    if (suite == "quantum") return verify_quantum_suite();
    if (suite == "all") {
        std::vector<CheckLine> out;
        for (const std::vector<CheckLine>& part :
             {verify_hopf_axioms_suite(degree), verify_oracle_suite(degree, truncation),
              verify_dims_suite(degree), verify_duality_suite(degree), verify_quantum_suite()})
            out.insert(out.end(), part.begin(), part.end());
        return out;
    }
    throw ParseError("unknown verification suite: " + suite);
}

}  // namespace hopfcomb
