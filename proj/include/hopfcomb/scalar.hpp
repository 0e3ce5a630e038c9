#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hopfcomb {

/// Raised when an operation would exceed a hard enumeration budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when textual input cannot be interpreted.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when scalar kinds cannot legally combine (rational with q-polynomial).
struct ScalarKindError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a computation detects that an assumed structural property fails
/// (for instance a quotient that is not well defined on the chosen spanning set).
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Polynomial in one formal variable q with arbitrary-precision integer
/// coefficients.  coeff(k) is the coefficient of q^k; the representation is
/// always trimmed so that the leading coefficient is nonzero.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(mpz_class constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }

    /// The monomial q^power (power >= 0).
    static QPoly q(int power = 1) {
        QPoly p;
        p.c_.assign(static_cast<std::size_t>(power) + 1, mpz_class(0));
        p.c_.back() = 1;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree in q; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const mpz_class& coeff(int k) const {
        static const mpz_class zero(0);
        if (k < 0 || k > degree()) return zero;
        return c_[static_cast<std::size_t>(k)];
    }

    QPoly& operator+=(const QPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    QPoly operator-() const {
        QPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    std::strong_ordering operator<=>(const QPoly& o) const {
        if (c_.size() != o.c_.size()) return c_.size() <=> o.c_.size();
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    /// Substitute a rational value for q.
    mpq_class eval(const mpq_class& v) const {
        mpq_class acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
        return acc;
    }

    /// Canonical text, highest power first, e.g. "q^3+2*q-1".
    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const mpz_class& a = coeff(k);
            if (a == 0) continue;
            mpz_class mag = abs(a);
            if (out.empty()) {
                if (a < 0) out += "-";
            } else {
                out += (a < 0) ? "-" : "+";
            }
            bool unit = (mag == 1);
            if (k == 0) {
                out += mag.get_str();
            } else {
                if (!unit) out += mag.get_str() + "*";
                out += "q";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    /// Number of nonzero terms.
    int term_count() const {
        int c = 0;
        for (const auto& x : c_)
            if (x != 0) ++c;
        return c;
    }

  private:
    std::vector<mpz_class> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Exact scalar: an arbitrary-precision integer, rational, or integer
/// polynomial in q.  Integers combine freely with either extension; combining
/// a non-integer rational with a non-constant q-polynomial is an error.
///
/// Normal form: rationals with denominator 1 and constant q-polynomials are
/// stored as integers, so equality is kind-insensitive on common values.
class Scalar {
  public:
    enum class Kind { Integer, Rational, Poly };

    Scalar() : v_(mpz_class(0)) {}
    Scalar(int n) : v_(mpz_class(n)) {}
    Scalar(long n) : v_(mpz_class(n)) {}
    Scalar(mpz_class n) : v_(std::move(n)) {}
    Scalar(mpq_class r) : v_(std::move(r)) { normalize(); }
    Scalar(QPoly p) : v_(std::move(p)) { normalize(); }

    static Scalar q(int power = 1) { return Scalar(QPoly::q(power)); }
    static Scalar rational(long num, long den) {
        mpq_class r(num, den);
        r.canonicalize();
        return Scalar(r);
    }

    Kind kind() const { return static_cast<Kind>(v_.index()); }
    bool is_zero() const {
        switch (kind()) {
            case Kind::Integer: return std::get<0>(v_) == 0;
            case Kind::Rational: return std::get<1>(v_) == 0;
            default: return std::get<2>(v_).is_zero();
        }
    }
    bool is_one() const { return kind() == Kind::Integer && std::get<0>(v_) == 1; }

    const mpz_class& as_integer() const {
        if (kind() != Kind::Integer) throw ScalarKindError("scalar is not an integer: " + str());
        return std::get<0>(v_);
    }
    mpq_class as_rational() const {
        if (kind() == Kind::Integer) return mpq_class(std::get<0>(v_));
        if (kind() == Kind::Rational) return std::get<1>(v_);
        throw ScalarKindError("scalar is not rational: " + str());
    }
    QPoly as_poly() const {
        if (kind() == Kind::Integer) return QPoly(std::get<0>(v_));
        if (kind() == Kind::Poly) return std::get<2>(v_);
        throw ScalarKindError("scalar is not a q-polynomial: " + str());
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
    }
    Scalar operator-() const {
        switch (kind()) {
            case Kind::Integer: return Scalar(mpz_class(-std::get<0>(v_)));
            case Kind::Rational: return Scalar(mpq_class(-std::get<1>(v_)));
            default: return Scalar(-std::get<2>(v_));
        }
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Exact division; integer/integer promotes to a rational, and a
    /// q-polynomial can only be divided by an exactly dividing integer.
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw ScalarKindError("division by zero");
        if (b.kind() == Kind::Poly) throw ScalarKindError("division by a q-polynomial is not supported");
        if (a.kind() == Kind::Poly) {
            if (b.kind() != Kind::Integer) throw ScalarKindError("cannot divide q-polynomial by rational");
            const mpz_class& d = b.as_integer();
            QPoly p = a.as_poly();
            QPoly r;
            for (int k = 0; k <= p.degree(); ++k) {
                mpz_class c = p.coeff(k);
                if (c % d != 0) throw ScalarKindError("inexact q-polynomial division");
                r += QPoly(mpz_class(c / d)) * QPoly::q(k);
            }
            return Scalar(r);
        }
        mpq_class r = a.as_rational() / b.as_rational();
        return Scalar(r);
    }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Scalar& o) const {
        if (v_.index() != o.v_.index()) return v_.index() <=> o.v_.index();
        switch (kind()) {
            case Kind::Integer: {
                int c = cmp(std::get<0>(v_), std::get<0>(o.v_));
                return c <=> 0;
            }
            case Kind::Rational: {
                int c = cmp(std::get<1>(v_), std::get<1>(o.v_));
                return c <=> 0;
            }
            default: return std::get<2>(v_) <=> std::get<2>(o.v_);
        }
    }

    /// Substitute a value for q (identity on integer and rational scalars).
    Scalar eval_q(const Scalar& value) const {
        if (kind() != Kind::Poly) return *this;
        const QPoly& p = std::get<2>(v_);
        Scalar acc(0);
        for (int k = p.degree(); k >= 0; --k) acc = acc * value + Scalar(mpz_class(p.coeff(k)));
        return acc;
    }

    /// Canonical text.  Multi-term q-polynomials are parenthesised so scalars
    /// always read back as one multiplicative token.
    std::string str() const {
        switch (kind()) {
            case Kind::Integer: return std::get<0>(v_).get_str();
            case Kind::Rational: {
                const mpq_class& r = std::get<1>(v_);
                return r.get_num().get_str() + "/" + r.get_den().get_str();
            }
            default: {
                const QPoly& p = std::get<2>(v_);
                std::string body = p.str();
                if (p.term_count() > 1 || body.front() == '-') return "(" + body + ")";
                return body;
            }
        }
    }

  private:
    std::variant<mpz_class, mpq_class, QPoly> v_;

    void normalize() {
        if (kind() == Kind::Rational) {
            mpq_class& r = std::get<1>(v_);
            r.canonicalize();
            if (r.get_den() == 1) v_ = mpz_class(r.get_num());
        } else if (kind() == Kind::Poly) {
            const QPoly& p = std::get<2>(v_);
            if (p.degree() <= 0) v_ = mpz_class(p.coeff(0));
        }
    }

    template <class Op>
    static Scalar combine(const Scalar& a, const Scalar& b, Op op) {
        Kind ka = a.kind(), kb = b.kind();
        if (ka == Kind::Integer && kb == Kind::Integer)
            return Scalar(mpz_class(op(std::get<0>(a.v_), std::get<0>(b.v_))));
        bool pa = ka == Kind::Poly, pb = kb == Kind::Poly;
        bool ra = ka == Kind::Rational, rb = kb == Kind::Rational;
        if ((pa && rb) || (ra && pb))
            throw ScalarKindError("cannot combine rational " + (ra ? a.str() : b.str()) +
                                  " with q-polynomial " + (pa ? a.str() : b.str()));
        if (pa || pb) return Scalar(op(a.as_poly(), b.as_poly()));
        return Scalar(mpq_class(op(a.as_rational(), b.as_rational())));
    }
};

}  // namespace hopfcomb
