#include <catch2/catch_amalgamated.hpp>

#include "hopfcomb/linear.hpp"
#include "hopfcomb/scalar.hpp"

using namespace hopfcomb;

TEST_CASE("integer scalars behave like integers") {
    Scalar a(3), b(-5);
    CHECK((a + b).str() == "-2");
    CHECK((a * b).str() == "-15");
    CHECK((a - b).str() == "8");
    CHECK(a != b);
    CHECK(Scalar(0).is_zero());
    CHECK(!a.is_zero());
}

TEST_CASE("rational scalars normalize and demote") {
    Scalar half = Scalar::rational(1, 2);
    CHECK(half.str() == "1/2");
    CHECK((half + half).str() == "1");
    CHECK((half + half).kind() == Scalar::Kind::Integer);
    CHECK((Scalar(1) / Scalar(3)).str() == "1/3");
    CHECK((Scalar(4) / Scalar(2)).str() == "2");
    CHECK((Scalar::rational(2, 4)).str() == "1/2");
}

TEST_CASE("polynomial scalars in q") {
    Scalar q = Scalar::q();
    Scalar p = q * q + Scalar(2) * q - Scalar(1);
    CHECK(p.str() == "(q^2+2*q-1)");
    CHECK(((q + Scalar(1)) * (q - Scalar(1))).str() == "(q^2-1)");
    CHECK((q - q).is_zero());
    CHECK(Scalar::q(3).str() == "q^3");
    // constant polynomials demote to integers
    CHECK((q * Scalar(0) + Scalar(7)).kind() == Scalar::Kind::Integer);
    // evaluation
    CHECK(p.eval_q(mpq_class(2)).str() == "7");
    CHECK(p.eval_q(mpq_class(1)).str() == "2");
    // exact division by integers
    CHECK(((Scalar(2) * q) / Scalar(2)).str() == "q");
    CHECK_THROWS_AS((q + Scalar(1)) / Scalar(2), ScalarKindError);
}

TEST_CASE("mixing rationals and polynomials is rejected") {
    CHECK_THROWS_AS(Scalar::rational(1, 2) * Scalar::q(), ScalarKindError);
    CHECK_THROWS_AS(Scalar::rational(1, 2) + Scalar::q(), ScalarKindError);
    // integers promote freely in both directions
    CHECK((Scalar(2) + Scalar::rational(1, 2)).str() == "5/2");
    CHECK((Scalar(2) + Scalar::q()).str() == "(q+2)");
}

TEST_CASE("linear combinations collect and drop zeros") {
    LinComb<int> x = LinComb<int>::basis(1) + LinComb<int>::basis(2);
    LinComb<int> y = LinComb<int>::basis(1) - LinComb<int>::basis(2);
    LinComb<int> s = x + y;
    CHECK(s.term_count() == 1);
    CHECK(s.coefficient(1).str() == "2");
    CHECK(s.coefficient(2).is_zero());
    CHECK((x - x).is_zero());
    CHECK((x * Scalar(3)).coefficient(2).str() == "3");
}

TEST_CASE("tensors and bilinear extension") {
    auto a = LinComb<int>::basis(1) + LinComb<int>::basis(2);
    auto b = LinComb<int>::basis(10);
    auto t = tensor(a, b);
    CHECK(t.term_count() == 2);
    CHECK(t.coefficient({2, 10}).str() == "1");
    auto f = flip(t);
    CHECK(f.coefficient({10, 2}).str() == "1");
    auto prod = bilinear(a, a, [](int u, int v) { return LinComb<int>::basis(u + v); });
    CHECK(prod.coefficient(3).str() == "2");
    CHECK(prod.coefficient(2).str() == "1");
    CHECK(prod.coefficient(4).str() == "1");
}
