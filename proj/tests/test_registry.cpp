#include <catch2/catch_amalgamated.hpp>

#include <hopfcomb/registry.hpp>

using namespace hopfcomb;

TEST_CASE("the registry knows every algebra and rejects unknown tags") {
    REQUIRE(algebra_tags().size() == 14);
    for (const std::string& tag : algebra_tags()) {
        const AlgebraOps& ops = algebra(tag);
        REQUIRE(ops.name == tag);
        REQUIRE(!ops.basis.empty());
        REQUIRE(ops.keys(0).size() == 1);
        REQUIRE(ops.keys(0).front() == Word());
        REQUIRE(!ops.keys(1).empty());
    }
    REQUIRE_THROWS_AS(algebra("NoSuch"), StructureError);
    REQUIRE(algebra("FQSym_q").twisted);
    REQUIRE(algebra("NCSF_q").twisted);
    REQUIRE(algebra("QSym_q").twisted);
    REQUIRE(!algebra("EQSym").twisted);
}

TEST_CASE("set partitions round-trip through restricted-growth words") {
    REQUIRE(is_set_partition_word(Word{1, 2, 1}));
    REQUIRE(!is_set_partition_word(Word{2, 1}));
    REQUIRE(!is_set_partition_word(Word{1, 3}));
    for (int n = 0; n <= 4; ++n) {
        for (const SetPartition& pi : set_partitions_of(n)) {
            const Word w = set_partition_word(pi);
            REQUIRE(is_set_partition_word(w));
            REQUIRE(set_partition_from_word(w) == pi);
        }
    }
    REQUIRE_THROWS_AS(set_partition_from_word(Word{2, 1}), StructureError);
}

TEST_CASE("graph-class keys canonicalize to minimal representatives") {
    REQUIRE(algebra("UPG").canonical(Word{1, 2, 1}) == Word{1, 1, 3});
    REQUIRE(algebra("UPG").canonical(Word{1, 1, 3}) == Word{1, 1, 3});
    REQUIRE(algebra("Forest").canonical(Word{1, 2, 2}) == Word{1, 1, 3});

    const std::vector<std::size_t> upg_dims = {1, 1, 3, 7, 19, 47};
    for (int n = 0; n <= 5; ++n) REQUIRE(algebra("UPG").keys(n).size() == upg_dims[n]);

    const std::vector<std::size_t> forest_dims = {1, 1, 2, 4, 9};
    for (int n = 0; n <= 4; ++n) REQUIRE(algebra("Forest").keys(n).size() == forest_dims[n]);
}

TEST_CASE("bialgebra axioms hold exhaustively within the degree budget") {
    for (const std::string& tag : algebra_tags()) {
        const int budget = 4;
        const AxiomReport rep = check_hopf_axioms(tag, budget);
        INFO(tag << ": " << rep.witness);
        REQUIRE(rep.ok);
        REQUIRE(rep.checks > 0);
    }
}

TEST_CASE("cocommutativity holds exactly where expected") {
    REQUIRE(check_cocommutative("PhiSym", 4).ok);
    REQUIRE(check_cocommutative("ESym", 3).ok);
    REQUIRE(check_cocommutative("Sym", 4).ok);
    REQUIRE(check_cocommutative("UPG", 4).ok);
    REQUIRE(check_cocommutative("Forest", 4).ok);
}

TEST_CASE("the compatibility of the graded coproduct needs the twist") {
    const AlgebraOps& ops = algebra("FQSym_q");
    const Word one{1};
    const Tensor2<Word> lhs = coproduct_linear(ops.product(one, one), ops.coproduct);
    const Tensor2<Word> untwisted = twisted_multiply(ops.coproduct(one), ops.coproduct(one),
                                                     ops.product, ops.product, false, ops.weight);
    REQUIRE(!(lhs == untwisted));
    REQUIRE(lhs.coefficient({Word{1}, Word{1}}) == Scalar(1) + Scalar::q(1));
    REQUIRE(untwisted.coefficient({Word{1}, Word{1}}) == Scalar(2));
}
