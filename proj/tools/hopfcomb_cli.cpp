// hopfcomb: exact computation in combinatorial Hopf algebras.
//
// Subcommands:
//   product      multiply two elements of one algebra
//   coproduct    expand the coproduct of an element, printed as sums of a (x) b
//   convert      change basis (phi/Sprime/Ssec, Y -> m, F -> QSym_q bases)
//   normal-form  q-congruence normal form of a word (q-sylvester / q-hypoplactic)
//   dims         graded dimension and generator-count series
//   verify       run a named verification suite, one report line per check
//
// Exit codes: 0 success, 1 verification/structural failure, 2 usage error,
// 3 expression parse error, 4 enumeration budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <hopfcomb/expr.hpp>
#include <hopfcomb/verify.hpp>

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- shared helpers ----------------------------------------------------------------------

/// "q" keeps coefficients formal; any integer substitutes that value.
std::optional<hopfcomb::Scalar> parse_q_value(const std::string& s) {
    if (s == "q") return std::nullopt;
    std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw UsageError("invalid --q value: " + s);
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw UsageError("--q expects \"q\" or an integer, got: " + s);
    return hopfcomb::Scalar(mpz_class(s));
}

json json_int(const mpz_class& v) {
    if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
    return v.get_str();
}

json element_json(const hopfcomb::Element& e) {
    json terms = json::array();
    for (const auto& [k, c] : e.terms)
        terms.push_back({{"key", hopfcomb::render_key(e.algebra, e.basis, k)},
                         {"coeff", hopfcomb::render_coeff(c)}});
    return {{"algebra", e.algebra}, {"basis", e.basis}, {"terms", terms}};
}

json tensor_json(const std::string& tag, const std::string& basis,
                 const hopfcomb::Tensor2<hopfcomb::Word>& t) {
    json terms = json::array();
    for (const auto& [kk, c] : t)
        terms.push_back({{"left", hopfcomb::render_key(tag, basis, kk.first)},
                         {"right", hopfcomb::render_key(tag, basis, kk.second)},
                         {"coeff", hopfcomb::render_coeff(c)}});
    return {{"algebra", tag}, {"basis", basis}, {"terms", terms}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

/// Parse two operands that must live in one algebra; either may omit the
/// algebra bracket as long as the other supplies it.
std::pair<hopfcomb::Element, hopfcomb::Element> parse_pair(const std::string& a,
                                                           const std::string& b) {
    std::optional<hopfcomb::Element> ea;
    try {
        ea = hopfcomb::parse_element(a);
    } catch (const hopfcomb::ParseError&) {
        ea.reset();
    }
    if (ea) return {*ea, hopfcomb::parse_element(b, ea->algebra)};
    const hopfcomb::Element eb = hopfcomb::parse_element(b);
    return {hopfcomb::parse_element(a, eb.algebra), eb};
}

void require_distinguished(const hopfcomb::Element& e, const char* operation) {
    const std::string& want = hopfcomb::algebra(e.algebra).basis;
    if (e.basis != want)
        throw UsageError(std::string(operation) + " is defined on the " + want + " basis of " +
                         e.algebra + "; convert " + e.basis + " first");
}

/// A plain word argument: comma-separated letters, or compact digits when
/// multi-character and comma-free.
hopfcomb::Word parse_plain_word(const std::string& text) {
    for (char ch : text)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != ',')
            throw hopfcomb::ParseError("invalid word: \"" + text + "\"");
    const hopfcomb::Word w = hopfcomb::exprdetail::interpret_key_text(text, "SGQSym", "M");
    for (int i = 1; i <= w.size(); ++i)
        if (w.letter(i) < 1) throw hopfcomb::ParseError("word letters are positive: \"" + text + "\"");
    return w;
}

// --- subcommands ---------------------------------------------------------------------

int cmd_product(const std::string& a_text, const std::string& b_text, const std::string& format,
                const std::string& q_value) {
    auto [a, b] = parse_pair(a_text, b_text);
    if (a.algebra != b.algebra)
        throw UsageError("product operands live in different algebras: " + a.algebra + " and " +
                         b.algebra);
    require_distinguished(a, "product");
    require_distinguished(b, "product");
    const hopfcomb::AlgebraOps& ops = hopfcomb::algebra(a.algebra);
    hopfcomb::Element result{a.algebra, a.basis,
                             hopfcomb::multiply_elements(a.terms, b.terms, ops.product)};
    if (const auto qv = parse_q_value(q_value)) result.terms = result.terms.eval_q(*qv);
    if (format == "json")
        emit(element_json(result));
    else
        std::cout << hopfcomb::render_element(result) << "\n";
    return 0;
}

int cmd_coproduct(const std::string& text, const std::string& format, const std::string& q_value) {
    const hopfcomb::Element e = hopfcomb::parse_element(text);
    require_distinguished(e, "coproduct");
    const hopfcomb::AlgebraOps& ops = hopfcomb::algebra(e.algebra);
    hopfcomb::Tensor2<hopfcomb::Word> t = hopfcomb::coproduct_linear(e.terms, ops.coproduct);
    if (const auto qv = parse_q_value(q_value)) t = t.eval_q(*qv);
    if (format == "json")
        emit(tensor_json(e.algebra, e.basis, t));
    else
        std::cout << hopfcomb::render_tensor(e.algebra, e.basis, t) << "\n";
    return 0;
}

struct Target {
    std::string basis;
    std::string algebra;  // empty: inferred from the source
};

Target parse_target(const std::string& s) {
    const std::size_t lb = s.find('[');
    if (lb == std::string::npos) return {s, ""};
    if (s.back() != ']' || lb + 2 > s.size() - 1)
        throw UsageError("malformed --to target: " + s);
    return {s.substr(0, lb), hopfcomb::resolve_algebra_tag(s.substr(lb + 1, s.size() - lb - 2))};
}

hopfcomb::Element convert_element(const hopfcomb::Element& e, const Target& t) {
    using hopfcomb::LinComb;
    using hopfcomb::Word;
    const bool same_algebra = t.algebra.empty() || t.algebra == e.algebra;
    if (same_algebra && t.basis == e.basis) return e;

    if (e.algebra == "PhiSym" && same_algebra &&
        (t.basis == "phi" || t.basis == "Sprime" || t.basis == "Ssec")) {
        LinComb<Word> in_phi;
        if (e.basis == "phi")
            in_phi = e.terms;
        else if (e.basis == "Sprime")
            in_phi = e.terms.map_keys([](const Word& s) { return hopfcomb::sprime_expand(s); });
        else if (e.basis == "Ssec")
            in_phi = e.terms.map_keys([](const Word& s) { return hopfcomb::ssec_expand(s); });
        else
            throw UsageError("no conversion from the " + e.basis + " basis to " + t.basis);
        if (t.basis == "phi") return {"PhiSym", "phi", in_phi};
        if (t.basis == "Sprime") return {"PhiSym", "Sprime", hopfcomb::phi_to_sprime(in_phi)};
        return {"PhiSym", "Ssec", hopfcomb::phi_to_ssec(in_phi)};
    }

    if (e.algebra == "PhiSym" && e.basis == "Y" && t.basis == "m" &&
        (t.algebra.empty() || t.algebra == "Sym"))
        return {"Sym", "m", e.terms.map_keys([](const Word& l) { return hopfcomb::y_to_m(l); })};

    if (e.algebra == "FQSym_q" && e.basis == "F" && t.algebra == "QSym_q") {
        if (t.basis == "F")
            return {"QSym_q", "F",
                    e.terms.map_keys([](const Word& s) { return hopfcomb::phi_map(s); })};
        if (t.basis == "M")
            return {"QSym_q", "M",
                    e.terms.map_keys([](const Word& s) { return hopfcomb::phi_map_monomial(s); })};
    }

    if (e.algebra == "QSym_q" && e.basis == "F" && t.basis == "M" &&
        (t.algebra.empty() || t.algebra == "QSym_q"))
        return {"QSym_q", "M", e.terms.map_keys([](const Word& i) {
                    return hopfcomb::qsym_fundamental_to_monomial(i);
                })};

    throw UsageError("unsupported conversion from " + e.basis + "[" + e.algebra + "] to " +
                     t.basis + (t.algebra.empty() ? "" : "[" + t.algebra + "]"));
}

int cmd_convert(const std::string& text, const std::string& to, const std::string& format,
                const std::string& q_value) {
    const Target target = parse_target(to);
    hopfcomb::Element result = convert_element(hopfcomb::parse_element(text), target);
    if (const auto qv = parse_q_value(q_value)) result.terms = result.terms.eval_q(*qv);
    if (format == "json")
        emit(element_json(result));
    else
        std::cout << hopfcomb::render_element(result) << "\n";
    return 0;
}

int cmd_normal_form(const std::string& word_text, const std::string& congruence,
                    const std::string& format) {
    const hopfcomb::Word w = parse_plain_word(word_text);
    const hopfcomb::Congruence c = congruence == "q-sylvester"
                                       ? hopfcomb::Congruence::QSylvester
                                       : hopfcomb::Congruence::QHypoplactic;
    const hopfcomb::CongruenceNormalForm nf = hopfcomb::congruence_normal_form(w, c);
    std::string rep;
    for (int i = 1; i <= nf.representative.size(); ++i) {
        if (i > 1) rep += ',';
        rep += std::to_string(nf.representative.letter(i));
    }
    if (format == "json") {
        emit({{"congruence", congruence}, {"representative", rep}, {"exponent", nf.exponent}});
    } else if (nf.exponent == 0) {
        std::cout << rep << "\n";
    } else if (nf.exponent == 1) {
        std::cout << "q * " << rep << "\n";
    } else {
        std::cout << "q^" << nf.exponent << " * " << rep << "\n";
    }
    return 0;
}

int cmd_dims(const std::string& algebra_name, int nmax, const std::string& format) {
    if (nmax < 1) throw UsageError("dims needs a positive degree bound");

    const auto connected_counts = [](int upto) {
        std::vector<mpz_class> out;
        for (int n = 1; n <= upto; ++n) {
            long cnt = 0;
            for (const hopfcomb::Word& f : hopfcomb::all_endofunctions(n))
                if (hopfcomb::is_connected(f)) ++cnt;
            out.emplace_back(cnt);
        }
        return out;
    };

    const auto print_series = [&](const std::string& label, const std::vector<mpz_class>& v) {
        if (format == "json") return;  // folded into one object below
        std::cout << label << " " << algebra_name << " n=1.." << nmax << ": "
                  << hopfcomb::verifydetail::series_str(v) << "\n";
    };

    if (algebra_name == "L(EQSym)" || algebra_name == "L(ESym)") {
        const std::vector<mpz_class> lie =
            hopfcomb::lie_dims_from_generators(connected_counts(nmax), nmax);
        print_series("dims", lie);
        if (format == "json") emit({{"algebra", algebra_name}, {"dims", [&] {
                                        json a = json::array();
                                        for (const auto& v : lie) a.push_back(json_int(v));
                                        return a;
                                    }()}});
        return 0;
    }

    const std::string tag = hopfcomb::resolve_algebra_tag(algebra_name);
    std::vector<mpz_class> dims;
    for (int n = 1; n <= nmax; ++n)
        dims.emplace_back(static_cast<long>(hopfcomb::algebra(tag).keys(n).size()));
    print_series("dims", dims);

    std::optional<std::vector<mpz_class>> generators;
    if (tag == "EQSym" || tag == "ESym") generators = connected_counts(nmax);
    if (generators) print_series("generators", *generators);

    if (format == "json") {
        json j = {{"algebra", tag}, {"dims", json::array()}};
        for (const auto& v : dims) j["dims"].push_back(json_int(v));
        if (generators) {
            j["generators"] = json::array();
            for (const auto& v : *generators) j["generators"].push_back(json_int(v));
        }
        emit(j);
    }
    return 0;
}

int cmd_verify(const std::string& suite, int degree, int truncation, const std::string& format) {
    const std::vector<hopfcomb::CheckLine> lines =
        hopfcomb::run_verify_suite(suite, degree, truncation);
    bool all_ok = true;
    for (const auto& l : lines) all_ok = all_ok && l.ok;
    if (format == "json") {
        json checks = json::array();
        for (const auto& l : lines) {
            json c = {{"name", l.name}, {"ok", l.ok}};
            if (!l.ok) c["witness"] = l.witness;
            checks.push_back(c);
        }
        emit({{"suite", suite},
              {"degree", degree},
              {"truncation", truncation},
              {"ok", all_ok},
              {"checks", checks}});
    } else {
        for (const auto& l : lines) {
            if (l.ok)
                std::cout << "ok   " << l.name << "\n";
            else
                std::cout << "FAIL " << l.name << " -- " << l.witness << "\n";
        }
        std::cout << "suite " << suite << ": " << (all_ok ? "PASS" : "FAIL") << " ("
                  << lines.size() << " lines)\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation in combinatorial Hopf algebras"};
    app.require_subcommand(1);

    std::string expr_a, expr_b, expr_one, to_target, word_text, algebra_name, suite;
    std::string format_product = "text", format_coproduct = "text", format_convert = "text",
                format_nf = "text", format_dims = "text", format_verify = "text";
    std::string q_product = "q", q_coproduct = "q", q_convert = "q";
    std::string congruence = "q-sylvester";
    int nmax = 0, degree = 3, truncation = 6;

    const auto add_format = [](CLI::App* cmd, std::string& var) {
        cmd->add_option("--format", var, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* prod = app.add_subcommand("product", "multiply two elements of one algebra");
    prod->add_option("a", expr_a, "left factor, e.g. M[EQSym]:1")->required();
    prod->add_option("b", expr_b, "right factor")->required();
    add_format(prod, format_product);
    prod->add_option("--q", q_product, "substitute a value for q (\"q\" keeps it formal)")
        ->capture_default_str();

    CLI::App* cop = app.add_subcommand("coproduct", "expand the coproduct of an element");
    cop->add_option("a", expr_one, "element, e.g. M[EQSym]:4,2,3,2,2,7,7")->required();
    add_format(cop, format_coproduct);
    cop->add_option("--q", q_coproduct, "substitute a value for q (\"q\" keeps it formal)")
        ->capture_default_str();

    CLI::App* conv = app.add_subcommand(
        "convert", "change basis: phi/Sprime/Ssec, Y -> m, F[FQSym_q] -> F|M[QSym_q]");
    conv->add_option("a", expr_one, "element to convert")->required();
    conv->add_option("--to", to_target, "target basis, optionally basis[Algebra]")->required();
    add_format(conv, format_convert);
    conv->add_option("--q", q_convert, "substitute a value for q (\"q\" keeps it formal)")
        ->capture_default_str();

    CLI::App* nf = app.add_subcommand("normal-form", "q-congruence normal form of a word");
    nf->add_option("word", word_text, "word, e.g. 2,1,3 or 213")->required();
    nf->add_option("--congruence", congruence, "which congruence")
        ->check(CLI::IsMember({"q-sylvester", "q-hypoplactic"}))
        ->capture_default_str();
    add_format(nf, format_nf);

    CLI::App* dims = app.add_subcommand("dims", "graded dimensions / generator counts");
    dims->add_option("algebra", algebra_name, "algebra tag, or L(EQSym)/L(ESym) for Lie dims")
        ->required();
    dims->add_option("n", nmax, "degree bound")->required();
    add_format(dims, format_dims);

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "one of: hopf-axioms, oracle, dims, duality, quantum, all")
        ->required()
        ->check(CLI::IsMember(hopfcomb::verify_suite_names()));
    ver->add_option("--degree", degree, "total-degree budget for exhaustive sweeps")
        ->capture_default_str();
    ver->add_option("--truncation", truncation,
                    "number of realization variables for the oracle suite")
        ->capture_default_str();
    add_format(ver, format_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*prod) return cmd_product(expr_a, expr_b, format_product, q_product);
        if (*cop) return cmd_coproduct(expr_one, format_coproduct, q_coproduct);
        if (*conv) return cmd_convert(expr_one, to_target, format_convert, q_convert);
        if (*nf) return cmd_normal_form(word_text, congruence, format_nf);
        if (*dims) return cmd_dims(algebra_name, nmax, format_dims);
        if (*ver) return cmd_verify(suite, degree, truncation, format_verify);
    } catch (const hopfcomb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const hopfcomb::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
