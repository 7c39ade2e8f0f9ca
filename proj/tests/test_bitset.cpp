#include <catch2/catch_amalgamated.hpp>

#include "lincbo/bitset.hpp"
#include "test_util.hpp"

using lincbo::AttributeSet;
using lincbo::lectic_less;
using testutil::attrs;

TEST_CASE("membership and counting") {
    AttributeSet s(130);
    REQUIRE(s.empty());
    s.add(0);
    s.add(64);
    s.add(129);
    REQUIRE(s.count() == 3);
    REQUIRE(s.contains(64));
    REQUIRE_FALSE(s.contains(63));
    s.remove(64);
    REQUIRE(s.count() == 2);
    REQUIRE(s.min() == 0);
    REQUIRE(s.pop_min() == 0);
    REQUIRE(s.pop_min() == 129);
    REQUIRE(s.pop_min() == -1);
}

TEST_CASE("set algebra and subset tests") {
    AttributeSet a = attrs(10, {1, 3, 5});
    AttributeSet b = attrs(10, {3, 5, 7});
    REQUIRE((a | b) == attrs(10, {1, 3, 5, 7}));
    REQUIRE((a & b) == attrs(10, {3, 5}));
    REQUIRE((a - b) == attrs(10, {1}));
    REQUIRE(attrs(10, {3, 5}).is_subset_of(a));
    REQUIRE_FALSE(a.is_subset_of(b));
    REQUIRE(attrs(10, {3}).is_proper_subset_of(a));
    REQUIRE_FALSE(a.is_proper_subset_of(a));
    REQUIRE(a.count_minus(b) == 1);
    REQUIRE(a.intersects(b));
    REQUIRE_FALSE(attrs(10, {1}).intersects(attrs(10, {2})));
}

TEST_CASE("capacity mismatch is rejected") {
    AttributeSet a(4), b(5);
    REQUIRE_THROWS_AS(a |= b, std::invalid_argument);
    REQUIRE_THROWS_AS(a.is_subset_of(b), std::invalid_argument);
}

TEST_CASE("full and trim keep high bits clean") {
    AttributeSet y = AttributeSet::full(70);
    REQUIRE(y.count() == 70);
    REQUIRE(y.contains(69));
    y.clear_above(64);
    REQUIRE(y.count() == 65);
    y.clear_above(-1);
    REQUIRE(y.empty());
}

TEST_CASE("prefix_equal compares strictly below the limit") {
    AttributeSet a = attrs(8, {1, 2, 8});
    AttributeSet b = attrs(8, {1, 2, 5});
    REQUIRE(a.prefix_equal(b, 4));          // indices 0..3 agree
    REQUIRE_FALSE(a.prefix_equal(b, 5));    // index 4 differs
    REQUIRE(a.prefix_equal(b, 0));
    REQUIRE(a.prefix_equal(b, -3));
}

TEST_CASE("absorb merges new members and reports the lowest") {
    AttributeSet d = attrs(8, {2, 4});
    AttributeSet z(8);
    REQUIRE(d.absorb(attrs(8, {2, 4}), z) == -1);
    REQUIRE(z.empty());
    REQUIRE(d.absorb(attrs(8, {3, 4, 7}), z) == 2);  // internal index of display 3
    REQUIRE(d == attrs(8, {2, 3, 4, 7}));
    REQUIRE(z == attrs(8, {3, 7}));
}

TEST_CASE("lectic order matches the binary-number reading") {
    // Y = {1,2,3,4}: {} < {4} and {3,4} < {2}.
    REQUIRE(lectic_less(attrs(4, {}), attrs(4, {4})));
    REQUIRE(lectic_less(attrs(4, {3, 4}), attrs(4, {2})));
    REQUIRE_FALSE(lectic_less(attrs(4, {2}), attrs(4, {3, 4})));
    REQUIRE_FALSE(lectic_less(attrs(4, {2}), attrs(4, {2})));
}

TEST_CASE("lectic order extends inclusion and is total") {
    testutil::Xorshift64Star rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        AttributeSet a = testutil::random_subset(70, 30, rng);
        AttributeSet b = testutil::random_subset(70, 30, rng);
        if (a.is_proper_subset_of(b)) REQUIRE(lectic_less(a, b));
        int relations = (a == b ? 1 : 0) + (lectic_less(a, b) ? 1 : 0) + (lectic_less(b, a) ? 1 : 0);
        REQUIRE(relations == 1);
    }
}

TEST_CASE("display uses 1-based indices") {
    REQUIRE(lincbo::to_display_string(attrs(5, {1, 3})) == "{1,3}");
    REQUIRE(lincbo::to_display_string(AttributeSet(5)) == "{}");
}
