#include <catch2/catch_amalgamated.hpp>

#include <utility>
#include <vector>

#include <hopfcomb/enumerate.hpp>
#include <hopfcomb/hopf.hpp>
#include <hopfcomb/parking.hpp>

using namespace hopfcomb;

namespace {

LinComb<Word> lin(std::initializer_list<std::pair<Word, int>> terms) {
    LinComb<Word> e;
    for (const auto& [w, c] : terms) e.add(w, Scalar(c));
    return e;
}

Tensor2<Word> ten(std::initializer_list<std::tuple<Word, Word, int>> terms) {
    Tensor2<Word> e;
    for (const auto& [a, b, c] : terms) e.add({a, b}, Scalar(c));
    return e;
}

}  // namespace

TEST_CASE("cpq_product reproduces the worked displays") {
    CHECK(cpq_product(Word{1}, Word{1, 1}) ==
          lin({{Word{1, 2, 2}, 1}, {Word{1, 2, 1}, 1}, {Word{1, 1, 3}, 1}}));
    CHECK(cpq_product(Word{1}, Word{2, 2, 1}) ==
          lin({{Word{1, 3, 3, 2}, 1},
               {Word{3, 2, 3, 1}, 1},
               {Word{2, 2, 3, 1}, 1},
               {Word{2, 2, 1, 4}, 1}}));
    CHECK(cpq_product(Word{1, 2}, Word{2, 1}) ==
          lin({{Word{1, 2, 4, 3}, 1},
               {Word{1, 4, 3, 2}, 1},
               {Word{4, 2, 3, 1}, 1},
               {Word{1, 3, 2, 4}, 1},
               {Word{3, 2, 1, 4}, 1},
               {Word{2, 1, 3, 4}, 1}}));
}

TEST_CASE("cpq_coproduct reproduces the worked splittings") {
    CHECK(cpq_coproduct(Word{5, 2, 5, 1, 2, 4}) ==
          ten({{Word{5, 2, 5, 1, 2, 4}, Word{}, 1}, {Word{}, Word{5, 2, 5, 1, 2, 4}, 1}}));
    CHECK(cpq_coproduct(Word{4, 1, 3, 1, 1, 6, 6}) ==
          ten({{Word{4, 1, 3, 1, 1, 6, 6}, Word{}, 1},
               {Word{4, 1, 3, 1, 1}, Word{1, 1}, 1},
               {Word{}, Word{4, 1, 3, 1, 1, 6, 6}, 1}}));
}

TEST_CASE("parking span is closed under product and coproduct") {
    for (int a = 0; a <= 5; ++a) {
        for (int b = 0; a + b <= 5; ++b) {
            for (const Word& p : all_parking_functions(a)) {
                for (const Word& r : all_parking_functions(b)) {
                    REQUIRE_NOTHROW(cpq_product(p, r));
                }
            }
        }
    }
    for (int n = 0; n <= 5; ++n) {
        for (const Word& p : all_parking_functions(n)) REQUIRE_NOTHROW(cpq_coproduct(p));
    }
}

TEST_CASE("ccq_project kills the non-nondecreasing keys") {
    CHECK(ccq_project(cpq_product(Word{1}, Word{1, 1})) ==
          lin({{Word{1, 2, 2}, 1}, {Word{1, 1, 3}, 1}}));
    CHECK(ccq_product(Word{}, Word{1, 1, 2}) == lin({{Word{1, 1, 2}, 1}}));
    CHECK(ccq_product(Word{1, 1, 2}, Word{}) == lin({{Word{1, 1, 2}, 1}}));
}

TEST_CASE("CCQSym dimensions are the Catalan numbers") {
    const std::vector<std::size_t> expected{1, 1, 2, 5, 14, 42};
    for (int n = 0; n <= 5; ++n) {
        CHECK(all_nondecreasing_parking_functions(n).size() == expected[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("the non-nondecreasing span is an ideal and a coideal") {
    for (int a = 1; a <= 4; ++a) {
        for (const Word& p : all_parking_functions(a)) {
            if (is_nondecreasing(p)) continue;
            for (int b = 0; a + b <= 4; ++b) {
                for (const Word& q : all_parking_functions(b)) {
                    for (const auto& [k, c] : cpq_product(p, q)) REQUIRE_FALSE(is_nondecreasing(k));
                    for (const auto& [k, c] : cpq_product(q, p)) REQUIRE_FALSE(is_nondecreasing(k));
                }
            }
            for (const auto& [pr, c] : cpq_coproduct(p)) {
                REQUIRE_FALSE((is_nondecreasing(pr.first) && is_nondecreasing(pr.second)));
            }
        }
    }
}

TEST_CASE("unlabelled graph dimensions") {
    const std::vector<std::size_t> expected{1, 1, 3, 7, 19, 47};
    for (int n = 0; n <= 5; ++n) {
        CHECK(parking_graph_classes(n).size() == expected[static_cast<std::size_t>(n)]);
    }
    // every functional graph of an endofunction admits a parking labelling,
    // so the two families of classes coincide
    for (int n = 0; n <= 5; ++n) {
        CHECK(endofunction_graph_classes(n) == parking_graph_classes(n));
    }
}

TEST_CASE("endofunction class sums close under the product") {
    const GraphKey loop = graph_key_of(Word{1});
    const GraphKey two_loops = graph_disjoint_union(loop, loop);
    LinComb<GraphKey> expected;
    expected.add(two_loops, Scalar(2));
    CHECK(ueg_product(loop, loop) == expected);
    CHECK(unlabelled_product(loop, loop) == expected);

    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; a + b <= 4; ++b) {
            for (const GraphKey& g : endofunction_graph_classes(a)) {
                for (const GraphKey& h : endofunction_graph_classes(b)) {
                    REQUIRE(ueg_product(g, h) == unlabelled_product(g, h));
                }
            }
        }
    }
}

TEST_CASE("parking class sums do not close under the product") {
    // the square of the class sum of the loop-plus-one-node graph misses the
    // parking function 1331 while hitting its three classmates, so the
    // regrouping over parking labellings must fail there
    const GraphKey g = graph_key_of(Word{1, 1});
    const LinComb<Word> square =
        multiply_elements(upg_expand(g), upg_expand(g),
                          [](const Word& p, const Word& r) { return cpq_product(p, r); });
    CHECK(square == lin({{Word{1, 1, 3, 3}, 2}, {Word{1, 2, 1, 2}, 2}, {Word{1, 2, 2, 1}, 2}}));
    CHECK(graph_key_of(Word{1, 3, 3, 1}) == graph_disjoint_union(g, g));
    CHECK(is_parking(Word{1, 3, 3, 1}));
    CHECK_THROWS_AS(upg_reexpress(square), StructureError);
}

TEST_CASE("unlabelled coproducts unshuffle the connected components") {
    for (int n = 0; n <= 4; ++n) {
        for (const GraphKey& g : parking_graph_classes(n)) {
            REQUIRE(upg_coproduct(g) == unlabelled_coproduct(g));
            REQUIRE(ueg_coproduct(g) == unlabelled_coproduct(g));
        }
    }
}

TEST_CASE("forest dimensions count rooted forests") {
    const std::vector<std::size_t> expected{1, 1, 2, 4, 9, 20};
    for (int n = 0; n <= 5; ++n) {
        CHECK(forest_classes(n).size() == expected[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("nondecreasing parking functions have one loop per component") {
    for (int n = 0; n <= 5; ++n) {
        for (const Word& p : all_nondecreasing_parking_functions(n)) {
            REQUIRE(is_forest_code(graph_key_of(p).code));
        }
    }
}

TEST_CASE("the single-node forest squares to twice the two-root forest") {
    const GraphKey root = graph_key_of(Word{1});
    const GraphKey two_roots = graph_disjoint_union(root, root);
    LinComb<GraphKey> expected;
    expected.add(two_roots, Scalar(2));
    CHECK(forest_product(root, root) == expected);

    Tensor2<GraphKey> dexp;
    dexp.add({two_roots, GraphKey{}}, Scalar(1));
    dexp.add({root, root}, Scalar(1));
    dexp.add({GraphKey{}, two_roots}, Scalar(1));
    CHECK(forest_coproduct(two_roots) == dexp);
}

TEST_CASE("forest products and coproducts stay in the forest span") {
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; a + b <= 4; ++b) {
            for (const GraphKey& f : forest_classes(a)) {
                for (const GraphKey& g : forest_classes(b)) {
                    REQUIRE_NOTHROW(forest_product(f, g));
                }
            }
        }
    }
    for (int n = 0; n <= 4; ++n) {
        for (const GraphKey& f : forest_classes(n)) REQUIRE_NOTHROW(forest_coproduct(f));
    }
}
