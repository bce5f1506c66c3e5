#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "skewkit/equivalence.hpp"
#include "skewkit/ribbon.hpp"

using namespace skewkit;
using testing_helpers::S;

TEST_CASE("determinant of each outside decomposition is s_D") {
    for (int n = 1; n <= 7; ++n)
        for (auto& d : enumerate_connected(n))
            for (auto k : {DecompKind::Northwest, DecompKind::Southeast, DecompKind::JacobiTrudi}) {
                CAPTURE(render(d));
                CAPTURE(kind_name(k));
                auto dec = decompose(d, k);
                CHECK(dec.directions_consistent);
                CHECK(hamel_goulden(d, dec).det == skew_schur(d));
            }
}

TEST_CASE("decomposition shape") {
    for (int n = 1; n <= 6; ++n)
        for (auto& d : enumerate_connected(n)) {
            auto nw = northwest_decomposition(d);
            std::size_t cells = 0;
            for (auto& r : nw.ribbons) cells += r.size();
            CHECK(cells == d.size());
            CHECK(static_cast<int>(nw.strip.size()) == nw.max_content - nw.min_content + 1);
            if (is_ribbon(d)) CHECK(nw.ribbons.size() == 1);
            auto jt = jacobi_trudi_decomposition(d);
            CHECK(jt.ribbons.size() == d.lambda().size());
        }
}

TEST_CASE("strip intervals") {
    auto d = S({3, 3, 2}, {1});
    auto dec = northwest_decomposition(d);
    auto whole = strip_interval(dec, dec.min_content, dec.max_content);
    CHECK(whole.kind == StripInterval::Kind::Ribbon);
    CHECK(whole.cells.size() == dec.strip.size());
    CHECK(strip_interval(dec, 1, 0).kind == StripInterval::Kind::Empty);
    CHECK(strip_interval(dec, 2, 0).kind == StripInterval::Kind::Undefined);
    CHECK(strip_schur(strip_interval(dec, 1, 0)) == SchurPoly::one());
    CHECK(strip_schur(strip_interval(dec, 2, 0)).is_zero());
    for (std::size_t i = 0; i < dec.ribbons.size(); ++i) {
        auto s = hash_op(dec, i, i);
        CHECK(SkewDiagram::from_cells(s.cells) == SkewDiagram::from_cells(dec.ribbons[i]));
    }
}

TEST_CASE("kind names round trip") {
    for (auto k : {DecompKind::Northwest, DecompKind::Southeast, DecompKind::JacobiTrudi})
        CHECK(parse_kind(kind_name(k)) == k);
    CHECK_THROWS_AS(parse_kind("sideways"), InvalidInput);
}

TEST_CASE("Sylvester identity on random integer matrices") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> v(-4, 4), sz(2, 5);
    std::function<bool(const long long&)> is0 = [](const long long& x) { return x == 0; };
    for (int t = 0; t < 40; ++t) {
        int n = sz(rng);
        Matrix<long long> m(n, std::vector<long long>(n));
        for (auto& r : m)
            for (auto& x : r) x = v(rng);
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (rng() % 2) s.push_back(i);
        if (static_cast<int>(s.size()) == n) s.pop_back();
        CHECK(sylvester_check<long long>(m, s, 0LL, 1LL, is0));
    }
}
