#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "lincbo/implications.hpp"
#include "test_util.hpp"

using namespace lincbo;
using testutil::attrs;

TEST_CASE("validity in a single attribute set") {
    Implication imp(attrs(4, {4}), attrs(4, {2, 3, 4}));
    REQUIRE(holds_in(imp, attrs(4, {1, 2})));        // premise not contained
    REQUIRE_FALSE(holds_in(imp, attrs(4, {1, 4})));
    REQUIRE_FALSE(holds_in(Implication(attrs(4, {}), attrs(4, {1})), attrs(4, {})));
}

TEST_CASE("validity in a context") {
    FormalContext k1 = testutil::k1();
    REQUIRE(is_valid_in_context(Implication(attrs(4, {4}), attrs(4, {2, 3, 4})), k1));
    REQUIRE_FALSE(is_valid_in_context(Implication(attrs(4, {2}), attrs(4, {1, 2})), k1));
    FormalContext no_objects(0, 4, {});
    REQUIRE(is_valid_in_context(Implication(attrs(4, {1}), AttributeSet::full(4)), no_objects));
}

TEST_CASE("theory append maintains the premise lists") {
    Theory theory(4);
    REQUIRE(theory.add(attrs(4, {4}), attrs(4, {2, 3, 4})) == 0);
    REQUIRE(theory.add(attrs(4, {2, 4}), attrs(4, {2, 3, 4})) == 1);
    REQUIRE(theory.premise_list(3) == std::vector<std::uint32_t>{0, 1});
    REQUIRE(theory.premise_list(1) == std::vector<std::uint32_t>{1});
    REQUIRE(theory.premise_list(0).empty());

    theory.add(attrs(4, {}), attrs(4, {1}));
    for (int a = 0; a < 4; ++a)
        for (std::uint32_t j : theory.premise_list(a)) REQUIRE(j != 2);
}

TEST_CASE("list structure consistent after random appends") {
    testutil::Xorshift64Star rng(21);
    Theory theory = testutil::random_theory(12, 40, rng, true);
    for (int a = 0; a < 12; ++a) {
        const auto& list = theory.premise_list(a);
        REQUIRE(std::is_sorted(list.begin(), list.end()));
        REQUIRE(std::adjacent_find(list.begin(), list.end()) == list.end());
        for (std::uint32_t j : list) REQUIRE(theory[j].premise.contains(a));
    }
    for (std::size_t j = 0; j < theory.size(); ++j)
        theory[j].premise.for_each([&](int a) {
            const auto& list = theory.premise_list(a);
            REQUIRE(std::find(list.begin(), list.end(), j) != list.end());
        });
}

TEST_CASE("naive closure") {
    Theory theory(4);
    theory.add(attrs(4, {4}), attrs(4, {2, 3, 4}));
    theory.add(attrs(4, {2, 3}), attrs(4, {2, 3, 4}));
    REQUIRE(naive_closure(theory, attrs(4, {4})) == attrs(4, {2, 3, 4}));
    REQUIRE(naive_closure(theory, AttributeSet::full(4)) == AttributeSet::full(4));

    Theory with_empty(4);
    with_empty.add(attrs(4, {}), attrs(4, {1}));
    REQUIRE(naive_closure(with_empty, attrs(4, {})) == attrs(4, {1}));
}

TEST_CASE("brute-force models") {
    Theory empty(3);
    REQUIRE(models_bruteforce(empty).size() == 8);

    Theory collapse(3);
    collapse.add(attrs(3, {}), AttributeSet::full(3));
    auto models = models_bruteforce(collapse);
    REQUIRE(models.size() == 1);
    REQUIRE(models[0] == AttributeSet::full(3));

    Theory big(21);
    REQUIRE_THROWS_AS(models_bruteforce(big), std::invalid_argument);

    SECTION("models of the worked basis are exactly its intents") {
        Theory basis(4);
        basis.add(attrs(4, {4}), attrs(4, {2, 3, 4}));
        basis.add(attrs(4, {2, 3}), attrs(4, {2, 3, 4}));
        auto models_sorted = testutil::sorted_lectic(models_bruteforce(basis));
        std::vector<AttributeSet> intents{attrs(4, {}),  attrs(4, {3}),    attrs(4, {2}), attrs(4, {2, 3, 4}),
                                          attrs(4, {1}), attrs(4, {1, 3}), attrs(4, {1, 2}),
                                          AttributeSet::full(4)};
        REQUIRE(models_sorted == intents);
    }
}

TEST_CASE("model sets form closure systems and naive closure is the least model") {
    testutil::Xorshift64Star rng(33);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(rng.below(6));
        Theory theory = testutil::random_theory(n, 10, rng, true);
        auto models = models_bruteforce(theory);

        bool has_top = false;
        for (const auto& m : models) has_top = has_top || m == AttributeSet::full(n);
        REQUIRE(has_top);
        for (std::size_t i = 0; i < models.size(); ++i)
            for (std::size_t j = i + 1; j < models.size(); ++j) {
                AttributeSet meet = models[i] & models[j];
                REQUIRE(std::find(models.begin(), models.end(), meet) != models.end());
            }

        AttributeSet z = testutil::random_subset(n, 35, rng);
        AttributeSet closed = naive_closure(theory, z);
        REQUIRE(std::find(models.begin(), models.end(), closed) != models.end());
        for (const auto& m : models)
            if (z.is_subset_of(m)) REQUIRE(closed.is_subset_of(m));
    }
}
