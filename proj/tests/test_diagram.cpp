#include <doctest.h>

#include "helpers.hpp"
#include "skewkit/equivalence.hpp"

using namespace skewkit;
using testing_helpers::S;

TEST_CASE("partitions and conjugates") {
    CHECK(is_partition({3, 2, 2}));
    CHECK_FALSE(is_partition({2, 3}));
    CHECK_FALSE(is_partition({2, 0}));
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate({}) == Partition{});
    for (auto& p : testing_helpers::partitions_up_to(8)) CHECK(conjugate(conjugate(p)) == p);
    CHECK(contains({3, 2}, {2, 2}));
    CHECK_FALSE(contains({3, 2}, {1, 1, 1}));
}

TEST_CASE("skew diagram basics") {
    auto d = S({3, 2, 2, 1}, {2, 1});
    CHECK(d.size() == 5);
    CHECK(d.rows() == 4);
    CHECK(d.lambda() == Partition{3, 2, 2, 1});
    CHECK(d.mu() == Partition{2, 1});
    CHECK(S(d.lambda(), d.mu()) == d);
    // rows 0 and 1 only meet at a corner
    CHECK_FALSE(is_connected(d));
    CHECK_FALSE(is_connected(S({2, 1}, {1})));
    CHECK(is_connected(S({3, 3, 2}, {1})));
    // leading full columns are stripped
    CHECK(S({3, 3}, {1, 1}) == S({2, 2}));
    CHECK_THROWS_AS(S({2}, {3}), InvalidInput);
}

TEST_CASE("non skew cell sets are rejected") {
    CHECK_FALSE(is_skew_shape({{0, 0}, {1, 1}}));
    CHECK_FALSE(is_skew_shape({{0, 0}, {0, 1}, {1, 1}}));
    CHECK(is_skew_shape({{0, 1}, {1, 0}, {1, 1}}));
    CHECK_THROWS_AS(SkewDiagram::from_cells({{0, 0}, {0, 1}, {1, 1}}), InvalidInput);
}

TEST_CASE("transpose and rotation are involutions") {
    for (int n = 1; n <= 7; ++n)
        for (auto& d : enumerate_connected(n)) {
            CHECK(transpose(transpose(d)) == d);
            CHECK(rotate180(rotate180(d)) == d);
            CHECK(transpose(d).size() == d.size());
            CHECK(rotate180(transpose(d)) == transpose(rotate180(d)));
        }
}

TEST_CASE("connected enumeration matches the pair enumeration") {
    for (int n = 1; n <= 8; ++n) {
        auto want = testing_helpers::connected_by_pairs(n);
        const auto& got = enumerate_connected(n);
        CAPTURE(n);
        CHECK(got.size() == want.size());
        CHECK(std::set<SkewDiagram>(got.begin(), got.end()) == want);
    }
    CHECK(enumerate_connected(3).size() == 4);
}

TEST_CASE("ribbons") {
    CHECK(is_ribbon(S({3, 2}, {1})));
    CHECK_FALSE(is_ribbon(S({2, 2})));
    for (int n = 1; n <= 7; ++n)
        for (auto& d : enumerate_connected(n)) {
            auto nw = nw_ribbon(d), se = se_ribbon(d);
            CHECK(is_ribbon(nw));
            CHECK(is_ribbon(se));
            // one cell of the outer ribbon per diagonal
            CHECK(nw.size() == se.size());
            if (is_ribbon(d)) {
                CHECK(nw == d);
                CHECK(nw_body(d).empty());
            }
            CHECK(nw_body(d).size() + nw.size() == d.size());
        }
}

TEST_CASE("disjoint sums") {
    auto a = S({2, 1}), b = S({1});
    auto s = disjoint_sum({a, b});
    CHECK(s.size() == 4);
    CHECK_FALSE(is_connected(s));
    CHECK(disjoint_sum({}).empty());
}

TEST_CASE("render draws one line per row") {
    auto txt = render(S({2, 1}, {1}));
    CHECK(std::count(txt.begin(), txt.end(), '\n') >= 1);
}
