#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "skewkit/equivalence.hpp"
#include "skewkit/schur.hpp"

using namespace skewkit;
using testing_helpers::S;

TEST_CASE("row DP agrees with tableau backtracking") {
    for (auto& lam : testing_helpers::partitions_up_to(8))
        for (auto& mu : testing_helpers::partitions_up_to(partition_size(lam)))
            if (contains(lam, mu)) {
                CAPTURE(partition_str(lam));
                CAPTURE(partition_str(mu));
                CHECK(lr_fillings(lam, mu) == lr_fillings_backtrack(lam, mu));
            }
}

TEST_CASE("s21 squared") {
    SchurPoly want;
    for (Partition p : {Partition{4, 2}, {4, 1, 1}, {3, 3}, {3, 1, 1, 1}, {2, 2, 2}, {2, 2, 1, 1}}) want.add(p, 1);
    want.add({3, 2, 1}, 2);
    CHECK(lr_product({2, 1}, {2, 1}) == want);
    CHECK(skew_schur(disjoint_sum({S({2, 1}), S({2, 1})})) == want);
}

TEST_CASE("straight shapes expand to themselves") {
    for (auto& lam : testing_helpers::partitions_up_to(7))
        if (!lam.empty()) CHECK(skew_schur(S(lam)) == SchurPoly::term(lam));
}

TEST_CASE("LR coefficients are symmetric in mu and nu") {
    auto ps = testing_helpers::partitions_up_to(4);
    for (auto& a : ps)
        for (auto& b : ps) CHECK(lr_product(a, b) == lr_product(b, a));
}

TEST_CASE("skew coefficients equal product coefficients") {
    // <s_{λ/μ}, s_ν> = <s_λ, s_μ s_ν>
    for (auto& lam : testing_helpers::partitions_of(6, 6))
        for (auto& mu : testing_helpers::partitions_up_to(3))
            if (contains(lam, mu) && partition_size(mu) < 6) {
                auto f = skew_schur(S(lam, mu));
                for (auto& [nu, c] : f.terms()) CHECK(lr_product(mu, nu).coeff(lam) == c);
                for (auto& nu : testing_helpers::partitions_of(6 - partition_size(mu), 6))
                    CHECK(lr_coefficient(lam, mu, nu) == f.coeff(nu));
            }
}

TEST_CASE("omega") {
    for (int n = 1; n <= 7; ++n)
        for (auto& d : enumerate_connected(n)) {
            auto f = skew_schur(d);
            CHECK(omega(omega(f)) == f);
            CHECK(omega(f) == skew_schur(transpose(d)));
        }
}

TEST_CASE("rotation preserves the expansion") {
    for (int n = 1; n <= 7; ++n)
        for (auto& d : enumerate_connected(n)) CHECK(skew_schur(rotate180(d)) == skew_schur(d));
}

TEST_CASE("expansion agrees with semistandard fillings") {
    for (int n = 1; n <= 6; ++n)
        for (auto& d : enumerate_connected(n)) {
            CAPTURE(render(d));
            CHECK(monomial_oracle(d, n) == schur_to_monomials(skew_schur(d), n));
        }
}

TEST_CASE("polynomial arithmetic") {
    auto a = SchurPoly::term({1});
    CHECK(power(a, 2) == SchurPoly::term({2}) + SchurPoly::term({1, 1}));
    CHECK((a - a).is_zero());
    CHECK(multiply(a, SchurPoly::one()) == a);
    CHECK(a.scaled(3).coeff({1}) == 3);
    CHECK(power(a, 3).degree() == 3);
    CHECK_THROWS_AS(checked_mul(Coeff(1) << 62, 4), std::overflow_error);
    CHECK_THROWS_AS(checked_add(std::numeric_limits<Coeff>::max(), 1), std::overflow_error);
}

TEST_CASE("integer determinants") {
    CHECK(det_int({{2, 1}, {7, 4}}) == 1);
    CHECK(det_int({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> v(-5, 5);
    for (int t = 0; t < 30; ++t) {
        std::vector<std::vector<long long>> m(4, std::vector<long long>(4));
        for (auto& r : m)
            for (auto& x : r) x = v(rng);
        auto sw = m;
        std::swap(sw[0], sw[2]);
        CHECK(det_int(sw) == -det_int(m));
    }
}
