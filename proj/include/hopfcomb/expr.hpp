#pragma once
// Text input/output for basis elements.  The grammar is
//
//   element  :=  term ( ('+'|'-') term )*
//   term     :=  [coeff '*'] atom  |  coeff
//   atom     :=  basis ['[' algebra ']'] ':' key
//   coeff    :=  integer  |  integer '/' integer  |  [integer '*'] 'q' ['^' integer]
//             |  '(' signed sum of such monomials ')'
//   key      :=  comma-separated positive integers  |  compact digit string
//             |  '{' block (',' block)* ('|' block (',' block)*)* '}'   (set partition)
//             |  (empty: the unit)
//
// so e.g.  2*M[SGQSym]:1,2 + M[SGQSym]:2,1  and  (1+q)*F[FQSym_q]:2,1.
// Compact digit form ("2431" for "2,4,3,1") is accepted on input only for
// permutation-keyed bases, where it is unambiguous; rendering always uses the
// comma form.  Rendering a canonical element and re-parsing it (with the
// algebra supplied by context when the text omits it) gives back an equal
// element.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <hopfcomb/registry.hpp>

namespace hopfcomb {

/// A parsed expression: a linear combination in one named basis of one algebra.
struct Element {
    std::string algebra;
    std::string basis;
    LinComb<Word> terms;
};

/// Resolve a user-facing algebra name to a registry tag.  "FQSym" is accepted
/// as an alias for the q-deformed FQSym_q (its q = 1 specialization is the
/// classical algebra, so the alias names the same structure constants).
inline std::string resolve_algebra_tag(const std::string& name) {
    const std::string tag = (name == "FQSym") ? "FQSym_q" : name;
    if (algebra_registry().find(tag) == algebra_registry().end())
        throw ParseError("unknown algebra: " + name);
    return tag;
}

/// Basis labels accepted for an algebra: the distinguished basis plus the
/// alternative bases that `convert` understands.
inline std::vector<std::string> basis_catalog(const std::string& tag) {
    std::vector<std::string> out{algebra(tag).basis};
    if (tag == "PhiSym") {
        out.push_back("Sprime");
        out.push_back("Ssec");
        out.push_back("Y");
    }
    if (tag == "QSym_q") out.push_back("F");
    if (tag == "Sym") out.push_back("m");
    return out;
}

inline bool basis_known(const std::string& tag, const std::string& basis) {
    const std::vector<std::string> cat = basis_catalog(tag);
    return std::find(cat.begin(), cat.end(), basis) != cat.end();
}

/// Key validity: the distinguished basis defers to the registry entry; the
/// alternative bases carry their own index sets.
inline bool basis_key_valid(const std::string& tag, const std::string& basis, const Word& k) {
    if (basis == algebra(tag).basis) return algebra(tag).valid_key(k);
    if (basis == "Sprime" || basis == "Ssec") return is_permutation(k);
    if (basis == "Y" || basis == "m") return is_partition(k);
    if (basis == "F") return is_composition(k);
    return false;
}

inline Word basis_canonical_key(const std::string& tag, const std::string& basis, const Word& k) {
    if (basis == algebra(tag).basis) return algebra(tag).canonical(k);
    return k;
}

/// Bases whose keys are permutations, enabling unambiguous compact digit input.
inline bool permutation_keyed(const std::string& tag, const std::string& basis) {
    if (tag == "SGQSym" || tag == "FQSym_q") return basis == algebra(tag).basis;
    if (tag == "PhiSym") return basis == "phi" || basis == "Sprime" || basis == "Ssec";
    return false;
}

// --- rendering --------------------------------------------------------------------------

/// Scalar::str() already yields one multiplicative token (multi-term
/// q-polynomials come back parenthesised), so it is the coefficient rendering.
inline std::string render_coeff(const Scalar& c) { return c.str(); }

/// Key text: set-partition braces for the distinguished basis of PiQSym,
/// comma-separated letters otherwise; the empty key renders empty.
inline std::string render_key(const std::string& tag, const std::string& basis, const Word& k) {
    if (k.empty()) return "";
    if (tag == "PiQSym" && basis == algebra(tag).basis) return set_partition_from_word(k).str();
    std::string out;
    for (int i = 1; i <= k.size(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(k.letter(i));
    }
    return out;
}

/// One basis element; the empty key is the unit and renders as "1".
inline std::string render_atom(const std::string& tag, const std::string& basis, const Word& k,
                               bool with_algebra = false) {
    if (k.empty()) return "1";
    std::string out = basis;
    if (with_algebra) out += "[" + tag + "]";
    return out + ":" + render_key(tag, basis, k);
}

inline std::string render_term(const std::string& tag, const std::string& basis, const Word& k,
                               const Scalar& c, bool with_algebra = false) {
    if (k.empty()) return render_coeff(c);
    if (c.is_one()) return render_atom(tag, basis, k, with_algebra);
    return render_coeff(c) + "*" + render_atom(tag, basis, k, with_algebra);
}

namespace exprdetail {

/// Join term strings, folding a leading minus into the separator.
inline void join_term(std::string& out, const std::string& term) {
    if (out.empty()) {
        out = term;
    } else if (!term.empty() && term.front() == '-') {
        out += " - " + term.substr(1);
    } else {
        out += " + " + term;
    }
}

}  // namespace exprdetail

inline std::string render_element(const Element& e, bool with_algebra = false) {
    if (e.terms.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : e.terms)
        exprdetail::join_term(out, render_term(e.algebra, e.basis, k, c, with_algebra));
    return out;
}

/// Tensors render with a literal " (x) " between the two legs.
inline std::string render_tensor(const std::string& tag, const std::string& basis,
                                 const Tensor2<Word>& t, bool with_algebra = false) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [kk, c] : t) {
        std::string pair = render_atom(tag, basis, kk.first, with_algebra) + " (x) " +
                           render_atom(tag, basis, kk.second, with_algebra);
        exprdetail::join_term(out, c.is_one() ? pair : render_coeff(c) + "*" + pair);
    }
    return out;
}

// --- parsing ----------------------------------------------------------------------------

namespace exprdetail {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek(std::size_t off = 0) const { return pos + off < s.size() ? s[pos + off] : '\0'; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* where) {
        if (!consume(c))
            throw ParseError(std::string("expected '") + c + "' " + where + " at position " +
                             std::to_string(pos) + " in \"" + s + "\"");
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }
};

inline bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline std::string parse_ident(Cursor& c) {
    std::string out;
    while (!c.eof() && ident_char(c.peek())) out += c.s[c.pos++];
    if (out.empty() || std::isdigit(static_cast<unsigned char>(out.front())))
        c.fail("expected a name");
    return out;
}

inline mpz_class parse_unsigned(Cursor& c) {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) digits += c.s[c.pos++];
    if (digits.empty()) c.fail("expected a number");
    return mpz_class(digits);
}

inline int parse_small_unsigned(Cursor& c) {
    const mpz_class v = parse_unsigned(c);
    if (!v.fits_sint_p()) c.fail("number out of range");
    return static_cast<int>(v.get_si());
}

/// True when the cursor sits on a formal "q" (not on an identifier that merely
/// starts with the letter q).
inline bool at_formal_q(const Cursor& c) {
    return c.peek() == 'q' && !ident_char(c.peek(1)) && c.peek(1) != '[' && c.peek(1) != ':';
}

/// One multiplicative coefficient token:  int | int/int | [int*]q[^int].
/// A '*' is absorbed only when a formal q follows, so "2*M:1" keeps its atom.
inline Scalar parse_scalar_monomial(Cursor& c) {
    if (at_formal_q(c)) {
        ++c.pos;
        int e = 1;
        if (c.consume('^')) e = parse_small_unsigned(c);
        return Scalar::q(e);
    }
    const mpz_class n = parse_unsigned(c);
    if (c.peek() == '/') {
        ++c.pos;
        const mpz_class d = parse_unsigned(c);
        if (d == 0) c.fail("zero denominator");
        return Scalar(mpq_class(n, d));
    }
    const std::size_t save = c.pos;
    c.skip_ws();
    if (c.consume('*')) {
        c.skip_ws();
        if (at_formal_q(c)) {
            ++c.pos;
            int e = 1;
            if (c.consume('^')) e = parse_small_unsigned(c);
            return Scalar(n) * Scalar::q(e);
        }
    }
    c.pos = save;
    return Scalar(n);
}

/// Parenthesised signed sum of coefficient monomials.
inline Scalar parse_paren_scalar(Cursor& c) {
    c.expect('(', "to open a coefficient");
    c.skip_ws();
    bool neg = c.consume('-');
    if (!neg) c.consume('+');
    c.skip_ws();
    Scalar acc = parse_scalar_monomial(c);
    if (neg) acc = -acc;
    for (;;) {
        c.skip_ws();
        if (c.consume(')')) return acc;
        bool minus;
        if (c.consume('+'))
            minus = false;
        else if (c.consume('-'))
            minus = true;
        else
            c.fail("expected '+', '-' or ')' in a coefficient");
        c.skip_ws();
        const Scalar m = parse_scalar_monomial(c);
        acc = minus ? acc - m : acc + m;
    }
}

/// Set-partition key "{1,2,4|3}": validates that the blocks partition
/// {1,...,n} and encodes as a restricted-growth block word.
inline Word parse_set_partition_key(Cursor& c) {
    c.expect('{', "to open a set partition");
    std::vector<std::vector<int>> blocks;
    std::vector<int> seen;
    c.skip_ws();
    if (c.consume('}')) return Word();
    for (;;) {
        std::vector<int> block;
        for (;;) {
            c.skip_ws();
            const int e = parse_small_unsigned(c);
            if (e < 1) c.fail("set-partition entries are positive");
            block.push_back(e);
            seen.push_back(e);
            c.skip_ws();
            if (!c.consume(',')) break;
        }
        blocks.push_back(std::move(block));
        if (c.consume('|')) continue;
        c.expect('}', "to close a set partition");
        break;
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != static_cast<int>(i) + 1)
            c.fail("set-partition blocks must partition 1..n");
    return set_partition_word(SetPartition(std::move(blocks)));
}

struct RawAtom {
    std::string basis;
    std::string algebra;  // empty when the text omits the bracket
    bool braced = false;
    Word braced_key;       // set when braced
    std::string key_text;  // digits and commas, when not braced
};

inline RawAtom parse_atom(Cursor& c) {
    RawAtom a;
    a.basis = parse_ident(c);
    if (c.consume('[')) {
        a.algebra = parse_ident(c);
        c.expect(']', "after the algebra name");
    }
    c.expect(':', "after the basis name");
    if (c.peek() == '{') {
        a.braced = true;
        a.braced_key = parse_set_partition_key(c);
    } else {
        while (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == ',')
            a.key_text += c.s[c.pos++];
    }
    return a;
}

/// Interpret the digits-and-commas text of a key.  With commas every segment
/// is one letter; without commas a multi-character string is compact digit
/// form for permutation-keyed bases and a single letter otherwise.
inline Word interpret_key_text(const std::string& text, const std::string& tag,
                               const std::string& basis) {
    if (text.empty()) return Word();
    const auto letter_of = [&text](const std::string& seg) {
        if (seg.empty()) throw ParseError("empty letter in key \"" + text + "\"");
        const mpz_class v(seg);
        if (!v.fits_sint_p()) throw ParseError("letter out of range in key \"" + text + "\"");
        return static_cast<int>(v.get_si());
    };
    std::vector<int> letters;
    if (text.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t comma = std::min(text.find(',', start), text.size());
            letters.push_back(letter_of(text.substr(start, comma - start)));
            start = comma + 1;
            if (comma == text.size()) break;
        }
    } else if (text.size() > 1 && permutation_keyed(tag, basis)) {
        for (char ch : text) letters.push_back(ch - '0');
    } else {
        letters.push_back(letter_of(text));
    }
    return Word(std::move(letters));
}

struct RawTerm {
    Scalar coeff{1};
    bool has_atom = false;
    RawAtom atom;
};

inline RawTerm parse_term(Cursor& c, bool negative) {
    RawTerm t;
    bool have_coeff = false;
    const char p = c.peek();
    if (p == '(') {
        t.coeff = parse_paren_scalar(c);
        have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(p)) || at_formal_q(c)) {
        t.coeff = parse_scalar_monomial(c);
        have_coeff = true;
    }
    if (have_coeff) {
        const std::size_t save = c.pos;
        c.skip_ws();
        if (c.consume('*')) {
            c.skip_ws();
            t.atom = parse_atom(c);
            t.has_atom = true;
        } else {
            c.pos = save;
        }
    } else {
        t.atom = parse_atom(c);
        t.has_atom = true;
    }
    if (negative) t.coeff = -t.coeff;
    return t;
}

}  // namespace exprdetail

/// Parse a full expression.  The algebra may be named by any atom; all named
/// algebras must agree.  When no atom names one, `algebra_hint` supplies it.
inline Element parse_element(const std::string& text, const std::string& algebra_hint = "") {
    exprdetail::Cursor c{text};
    std::vector<exprdetail::RawTerm> terms;
    c.skip_ws();
    if (c.eof()) c.fail("empty expression");
    terms.push_back(exprdetail::parse_term(c, c.consume('-')));
    for (;;) {
        c.skip_ws();
        if (c.eof()) break;
        bool minus;
        if (c.consume('+'))
            minus = false;
        else if (c.consume('-'))
            minus = true;
        else
            c.fail("expected '+' or '-' between terms");
        c.skip_ws();
        terms.push_back(exprdetail::parse_term(c, minus));
    }

    std::string tag;
    for (const auto& t : terms)
        if (t.has_atom && !t.atom.algebra.empty()) {
            const std::string r = resolve_algebra_tag(t.atom.algebra);
            if (tag.empty())
                tag = r;
            else if (tag != r)
                throw ParseError("mixed algebras in one expression: " + tag + " and " + r);
        }
    if (tag.empty()) {
        if (algebra_hint.empty()) throw ParseError("expression names no algebra: \"" + text + "\"");
        tag = resolve_algebra_tag(algebra_hint);
    }

    std::string basis;
    for (const auto& t : terms)
        if (t.has_atom) {
            if (!basis_known(tag, t.atom.basis))
                throw ParseError("unknown basis " + t.atom.basis + " for " + tag);
            if (basis.empty())
                basis = t.atom.basis;
            else if (basis != t.atom.basis)
                throw ParseError("mixed bases in one expression: " + basis + " and " + t.atom.basis);
        }
    if (basis.empty()) basis = algebra(tag).basis;

    Element e{tag, basis, {}};
    for (const auto& t : terms) {
        Word k;
        if (t.has_atom) {
            if (t.atom.braced) {
                if (!(tag == "PiQSym" && basis == algebra(tag).basis))
                    throw ParseError("set-partition keys only index the u basis of PiQSym");
                k = t.atom.braced_key;
            } else {
                k = exprdetail::interpret_key_text(t.atom.key_text, tag, basis);
            }
            if (!basis_key_valid(tag, basis, k))
                throw ParseError("invalid key for " + basis + "[" + tag + "]: \"" +
                                 (t.atom.braced ? render_key(tag, basis, k) : t.atom.key_text) +
                                 "\"");
            k = basis_canonical_key(tag, basis, k);
        }
        e.terms.add(k, t.coeff);
    }
    return e;
}

}  // namespace hopfcomb
