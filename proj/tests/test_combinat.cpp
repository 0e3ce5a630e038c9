#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hopfcomb/cycles.hpp"
#include "hopfcomb/enumerate.hpp"
#include "hopfcomb/graphs.hpp"
#include "hopfcomb/partitions.hpp"
#include "hopfcomb/series.hpp"
#include "hopfcomb/words.hpp"

using namespace hopfcomb;

TEST_CASE("word basics") {
    Word w{3, 1, 1, 2};
    CHECK(w.str() == "3,1,1,2");
    CHECK(standardize(w) == Word{4, 1, 2, 3});
    CHECK(standardize(Word{1, 1, 2, 1, 2, 1, 3, 1, 3, 2}) == Word{1, 2, 6, 3, 7, 4, 9, 5, 10, 8});
    CHECK(shifted_concat(Word{2, 1}, Word{1, 3, 2}) == Word{2, 1, 3, 5, 4});
    CHECK(is_permutation(Word{2, 3, 1}));
    CHECK(!is_permutation(Word{2, 2, 1}));
    CHECK(is_endofunction(Word{2, 2, 1}));
    CHECK(!is_endofunction(Word{4, 1, 1}));
    CHECK(is_parking(Word{3, 1, 1}));
    CHECK(!is_parking(Word{3, 3, 1}));
    CHECK(is_nondecreasing(Word{1, 1, 3}));
    CHECK(Word{1, 2} < Word{2, 1});
    CHECK(Word{9, 9} < Word{1, 1, 1});  // degree dominates
}

TEST_CASE("composition and inversion of permutations") {
    Word p{2, 3, 1}, q{3, 1, 2};
    CHECK(compose(p, q) == identity_word(3));
    CHECK(inverse(p) == q);
    CHECK(compose(q, p) == identity_word(3));
    CHECK(inversion_count(Word{3, 2, 1}) == 3);
    CHECK(inversion_count(identity_word(4)) == 0);
    CHECK(cross_inversions(Word{2, 4, 3, 1}, 2) == 3);
    CHECK(descent_composition(Word{2, 4, 3, 1}) == Word{2, 1, 1});
    CHECK(descent_composition(identity_word(3)) == Word{3});
}

TEST_CASE("shuffles") {
    CHECK(shuffle_words(Word{1, 2}, Word{3, 4}).size() == 6);
    CHECK(block_shuffles(2, 1).size() == 3);
    auto sh = block_shuffles(1, 1);
    REQUIRE(sh.size() == 2);
    CHECK(sh[0] == Word{1, 2});
    CHECK(sh[1] == Word{2, 1});
}

TEST_CASE("splitting and connectedness of function words") {
    CHECK(split_points(Word{1, 2}) == std::vector<int>{1});
    CHECK(split_points(Word{2, 1}).empty());
    CHECK(is_connected(Word{2, 1}));
    CHECK(!is_connected(Word{1, 2}));
    auto f = connected_factors(Word{2, 1, 3, 5, 4});
    REQUIRE(f.size() == 3);
    CHECK(f[0] == Word{2, 1});
    CHECK(f[1] == Word{1});
    CHECK(f[2] == Word{2, 1});
    // splitting at k requires prefix values <= k and suffix values > k
    CHECK(split_points(Word{1, 1, 3}) == std::vector<int>{2});
}

TEST_CASE("cycle decomposition round trip") {
    Word p{2, 1, 3};
    CycleSet cs = cycle_decomposition(p);
    CHECK(cs.str() == "(1,2)(3)");
    CHECK(one_line(cs) == p);
    for (const Word& w : all_permutations(4)) CHECK(one_line(cycle_decomposition(w)) == w);
    CHECK(cycle_decomposition(Word{3, 1, 2}).str() == "(1,3,2)");  // 1 -> 3 -> 2 -> 1
}

TEST_CASE("cycle invariants") {
    Word p{3, 5, 4, 1, 2, 6};  // cycles (1,3,4)(2,5)(6)
    CHECK(ordered_cycle_type(p) == Word{3, 2, 1});
    CHECK(cycle_type_partition(p) == Word{3, 2, 1});
    auto sup = cycle_supports(p);
    REQUIRE(sup.size() == 3);
    CHECK(sup[0] == std::vector<int>{1, 3, 4});
    CHECK(sup[1] == std::vector<int>{2, 5});
    CHECK(sup[2] == std::vector<int>{6});
}

TEST_CASE("standardizing and shifting cycle subsets") {
    Cycle a({3, 7}), b({5, 9, 6});
    CycleSet st = std_cycles({a, b});
    CHECK(st.str() == "(1,4)(2,5,3)");
    CHECK(shift_cycles(CycleSet({Cycle({1, 2})}), 3).str() == "(4,5)");
}

TEST_CASE("cyclic shuffles") {
    auto one = cyclic_shuffle(Cycle({1}), Cycle({2}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].str() == "(1,2)");
    auto two = cyclic_shuffle(Cycle({1, 2}), Cycle({3}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].str() == "(1,2,3)");
    CHECK(two[1].str() == "(1,3,2)");
    // sizes: k1*k2*binom(k1+k2,k1)/(k1+k2)
    CHECK(cyclic_shuffle(Cycle({1, 2}), Cycle({3, 4})).size() == 6);
    CHECK(cyclic_shuffle(Cycle({1, 2, 3}), Cycle({4, 5})).size() == 12);
}

TEST_CASE("matching products") {
    CycleSet A({Cycle({1}), Cycle({2})}), B({Cycle({3})});
    auto prod = matching_product(A, B);
    CHECK(prod.term_count() == 3);
    CHECK(prod.coefficient(CycleSet({Cycle({1}), Cycle({2}), Cycle({3})})).str() == "1");
    CHECK(prod.coefficient(CycleSet({Cycle({1, 3}), Cycle({2})})).str() == "1");
    CHECK(prod.coefficient(CycleSet({Cycle({1}), Cycle({2, 3})})).str() == "1");
    // all coefficients in matching products are 1
    CycleSet C({Cycle({1, 2}), Cycle({3})}), D({Cycle({4}), Cycle({5})});
    for (const auto& [k, c] : matching_product(C, D)) CHECK(c.str() == "1");
}

TEST_CASE("cyclic standardization") {
    // minimal rotations sort lexicographically as raw sequences
    CHECK(min_rotation({2, 1, 1}) == std::vector<int>{1, 1, 2});
    CHECK(min_rotation({3, 1, 2}) == std::vector<int>{1, 2, 3});
    CycleSet cs = cstd({Word{1, 3, 2}, Word{1, 2}, Word{1, 1, 2}, Word{1, 3}});
    CHECK(cs.str() == "(1,2,6)(3,7)(4,9)(5,10,8)");
    CHECK(one_line(cs).size() == 10);
    // cstd of a permutation's own cycle words is the identity operation
    Word p{2, 1, 3};
    CycleSet pc = cycle_decomposition(p);
    std::vector<Word> words;
    for (const Cycle& c : pc.cycles()) words.emplace_back(c.word());
    CHECK(cstd(words) == pc);
}

TEST_CASE("compositions and partitions") {
    CHECK(compositions_of(4).size() == 8);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(0).size() == 1);
    CHECK(refines(Word{1, 2, 1}, Word{1, 3}));
    CHECK(refines(Word{1, 1, 2}, Word{1, 3}));
    CHECK(!refines(Word{2, 1, 1}, Word{1, 3}));
    auto r = refinements_of(Word{2});
    CHECK(r.size() == 2);
    CHECK(sort_to_partition(Word{1, 3, 2}) == Word{3, 2, 1});
    CHECK(partition_union(Word{2, 1}, Word{3, 1}) == Word{3, 2, 1, 1});
    CHECK(z_of(Word{2, 1}) == 2);
    CHECK(z_of(Word{2, 2}) == 8);
    CHECK(z_of(Word{3, 1, 1}) == 6);
    CHECK(z_of(Word{1, 1, 1}) == 6);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
    CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("symmetric group characters") {
    CHECK(character_value(Word{2}, Word{2}) == 1);
    CHECK(character_value(Word{1, 1}, Word{2}) == -1);
    CHECK(character_value(Word{2, 1}, Word{1, 1, 1}) == 2);
    CHECK(character_value(Word{2, 1}, Word{2, 1}) == 0);
    CHECK(character_value(Word{2, 1}, Word{3}) == -1);
    CHECK(character_value(Word{2, 2}, Word{2, 2}) == 2);
    CHECK(character_value(Word{3, 1}, Word{2, 1, 1}) == 1);
    // column orthogonality at the identity class: sum of squares = n!
    mpz_class sum = 0;
    for (const Word& lam : partitions_of(4)) {
        mpz_class d = character_value(lam, Word{1, 1, 1, 1});
        sum += d * d;
    }
    CHECK(sum == 24);
}

TEST_CASE("set partitions") {
    CHECK(set_partitions_of(3).size() == 5);
    CHECK(set_partitions_of(4).size() == 15);
    for (int n = 1; n <= 5; ++n) {
        for (const SetPartition& sp : set_partitions_of(n)) {
            std::vector<int> seen;
            for (const auto& blk : sp.blocks()) seen.insert(seen.end(), blk.begin(), blk.end());
            std::sort(seen.begin(), seen.end());
            REQUIRE(seen == identity_word(n).letters());
        }
    }
    SetPartition sp({{2}, {1, 3}});
    CHECK(sp.str() == "{1,3|2}");
    CHECK(sp.block_sizes() == Word{2, 1});
    CHECK(sp.degree() == 3);
}

TEST_CASE("functional graph codes count isomorphism classes") {
    std::vector<std::size_t> expect = {1, 3, 7, 19, 47};  // mappings on n points up to iso
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> codes;
        for (const Word& f : all_endofunctions(n)) codes.insert(functional_graph_code(f));
        CHECK(codes.size() == expect[static_cast<std::size_t>(n - 1)]);
    }
    // nondecreasing parking functions have loop-only cycles: rooted forests
    std::vector<std::size_t> forest_expect = {1, 2, 4, 9, 20};
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> codes;
        for (const Word& f : all_nondecreasing_parking_functions(n)) {
            std::string c = functional_graph_code(f);
            CHECK(is_forest_code(c));
            codes.insert(c);
        }
        CHECK(codes.size() == forest_expect[static_cast<std::size_t>(n - 1)]);
    }
    // isomorphic relabellings collide: 1,1 vs 2,2
    CHECK(functional_graph_code(Word{1, 1}) == functional_graph_code(Word{2, 2}));
    CHECK(functional_graph_code(Word{1, 1}) != functional_graph_code(Word{2, 1}));
}

TEST_CASE("enumerations") {
    CHECK(all_endofunctions(3).size() == 27);
    CHECK(all_endofunctions(0).size() == 1);
    CHECK(all_permutations(4).size() == 24);
    CHECK(all_parking_functions(3).size() == 16);
    CHECK(all_parking_functions(4).size() == 125);
    CHECK(all_nondecreasing_parking_functions(4).size() == 14);  // Catalan
    CHECK(all_involutions(4).size() == 10);
    CHECK_THROWS_AS(all_endofunctions(20), BudgetError);
}

TEST_CASE("free Lie dimensions from generator series") {
    auto l = lie_dims_from_generators({2, 0, 0, 0}, 4);
    REQUIRE(l.size() == 4);
    CHECK(l[0] == 2);
    CHECK(l[1] == 1);
    CHECK(l[2] == 2);
    CHECK(l[3] == 3);
    auto l2 = lie_dims_from_generators({1, 3, 20, 197, 2511, 38924}, 6);
    CHECK(l2[0] == 1);
    CHECK(l2[1] == 3);
    CHECK(l2[2] == 23);
    CHECK(l2[3] == 223);
    CHECK(l2[4] == 2800);
    CHECK(l2[5] == 42576);
}
