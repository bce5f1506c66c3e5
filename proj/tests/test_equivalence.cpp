#include <doctest.h>

#include "helpers.hpp"
#include "skewkit/equivalence.hpp"
#include "skewkit/json_io.hpp"

using namespace skewkit;
using testing_helpers::S;

TEST_CASE("a diagram is equivalent to its rotation") {
    for (int n = 1; n <= 8; ++n)
        for (auto& d : enumerate_connected(n)) CHECK(skew_schur(d) == skew_schur(rotate180(d)));
}

TEST_CASE("classes are deterministic and consistent") {
    auto a = classify(7, 1);
    auto b = classify(7, 2);
    REQUIRE(a.size() == b.size());
    std::size_t members = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].members == b[i].members);
        CHECK(a[i].fingerprint_key == b[i].fingerprint_key);
        CHECK(check_class_invariants(a[i]).ok);
        CHECK(is_power_of_two(a[i].members.size()));
        for (auto& m : a[i].members) CHECK(skew_schur(m) == a[i].fingerprint);
        members += a[i].members.size();
    }
    std::size_t total = 0;
    for (int n = 1; n <= 7; ++n) total += enumerate_connected(n).size();
    CHECK(members == total);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].fingerprint_key < a[i].fingerprint_key);
}

TEST_CASE("class invariants") {
    auto d = S({3, 2, 2, 1}, {2, 1});
    auto inv = invariants_of(d);
    CHECK(inv.cells == 5);
    CHECK(inv.rows == 4);
    CHECK(inv.row_lengths == d.row_lengths());
    CHECK(invariants_of(rotate180(d)) == inv);
}

TEST_CASE("powers of two") {
    CHECK(is_power_of_two(1));
    CHECK(is_power_of_two(8));
    CHECK_FALSE(is_power_of_two(0));
    CHECK_FALSE(is_power_of_two(6));
}

TEST_CASE("classify_exact partitions one size") {
    auto cls = classify_exact(6);
    std::size_t members = 0;
    for (auto& c : cls) {
        members += c.members.size();
        for (auto& m : c.members) CHECK(m.size() == 6);
    }
    CHECK(members == enumerate_connected(6).size());
}

TEST_CASE("diagram JSON round trips") {
    for (int n = 1; n <= 6; ++n)
        for (auto& d : enumerate_connected(n)) {
            CHECK(diagram_from_json(diagram_to_json(d)) == d);
            CHECK(diagram_from_json(json{{"cells", cells_to_json(d.cells())}}) == d);
        }
    CHECK(diagram_from_string(R"({"lambda":[2,2],"mu":[1]})") == S({2, 2}, {1}));
    CHECK_THROWS_AS(diagram_from_string(R"({"lambda":[1,2]})"), InvalidInput);
    CHECK_THROWS(diagram_from_string("{"));
}

TEST_CASE("expansion JSON") {
    auto f = skew_schur(S({2, 2}, {1}));
    auto j = schur_to_json(f);
    CHECK(j.dump() == R"([{"partition":[2,1],"coeff":1}])");
    CHECK(schur_from_json(j) == f);
}

TEST_CASE("placement JSON") {
    auto E = S({3, 2}, {1});
    for (const char* t : {"null", "\"empty\"", "[]", "{}"}) CHECK(placement_from_string(E, t).W.empty());
    auto pl = make_placement(S({3, 3, 2}, {1}), S({1}));
    REQUIRE(pl);
    auto back = placement_from_json(pl->E, placement_to_json(*pl));
    CHECK(back.ne == pl->ne);
    CHECK(back.sw == pl->sw);
    CHECK(back.kase == pl->kase);
    auto viaw = placement_from_string(pl->E, R"({"lambda":[1]})");
    CHECK(viaw.ne == pl->ne);
}
