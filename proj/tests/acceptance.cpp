// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "skewkit/composition.hpp"
#include "skewkit/equivalence.hpp"
#include "skewkit/example_suite.hpp"
#include "skewkit/ribbon.hpp"

using namespace skewkit;

namespace {

SkewDiagram S(const Partition& lam, const Partition& mu = {}) { return make_skew(lam, mu); }

WPlacement place(const SkewDiagram& E, const SkewDiagram& W) {
    auto pl = make_placement(E, W);
    if (!pl) throw InvalidInput("W does not sit in both corners of E");
    return *pl;
}

struct Result {
    bool ok = true;
    std::ostringstream why;
    std::ostringstream info;
    int failures = 0;
    void expect(bool cond, const std::string& what) {
        if (cond) return;
        // keep the first few witnesses
        if (failures++ < 5) why << (ok ? "" : "; ") << what;
        ok = false;
    }
};

std::string str(const SkewDiagram& d) { return diagram_str(d); }

void c1(Result& r) {
    for (auto& c : run_example_suite()) r.expect(c.pass, c.name + ": " + c.detail);
}

void c2(Result& r) {
    auto p = S({4, 3, 2, 1}, {2}), q = S({4, 3, 2, 1}, {1, 1});
    // the class also holds the rotations of the pair
    std::set<SkewDiagram> want{p, q, rotate180(p), rotate180(q)};
    int odd = 0;
    for (auto& cls : classify(8)) {
        if (is_rotation_class(cls)) continue;
        ++odd;
        std::set<SkewDiagram> got(cls.members.begin(), cls.members.end());
        r.expect(got == want, "unexpected class containing " + str(cls.members.front()));
    }
    r.expect(odd == 1, std::to_string(odd) + " non-rotation classes");
}

void c3(Result& r) {
    auto D = S({2, 1}), Dp = rotate180(D);
    std::vector<std::pair<SkewDiagram, SkewDiagram>> cfg{
        {S({3, 2, 2}, {1}), S({2})}, {S({4, 2}), S({2})},          {S({4, 3, 2}, {2}), S({2})},
        {S({4, 2, 2}, {1}), S({2})}, {S({4, 4, 2}, {3}), S({1, 1})}, {S({5, 2}), S({2})}};
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        auto [E, W] = cfg[i];
        auto pl = place(E, W);
        auto a = compose(D, pl), b = compose(Dp, pl);
        std::string tag = str(E) + " / W " + str(W);
        r.expect(a.size() <= 18 && b.size() == a.size(), tag + ": more than 18 cells");
        r.expect(a != b && rotate180(a) != b, tag + ": pair related by rotation");
        r.expect(skew_schur(a) == skew_schur(b), tag + ": expansions differ");
        if (i == 0) {
            auto x = diagram_from_rows({"....xx", "..xxx", ".xxxx", ".xx", "xx", "xx"});
            auto y = diagram_from_rows({"....xx", "...xx", "...xx", ".xxx", "xxxx", "xx"});
            r.expect((a == x && b == y) || (a == y && b == x), "first pair differs from the printed one");
        }
    }
}

void c4(Result& r) {
    long checked = 0;
    for (int n = 1; n <= 9; ++n)
        for (auto& d : enumerate_connected(n)) {
            auto s = skew_schur(d);
            for (auto k : {DecompKind::Northwest, DecompKind::Southeast, DecompKind::JacobiTrudi}) {
                r.expect(hamel_goulden(d, decompose(d, k)).det == s, kind_name(k) + " for " + str(d));
                ++checked;
            }
        }
    r.info << checked << " determinants";
}

void identity_check(Result& r, const SkewDiagram& D, const WPlacement& pl, int counts[4]) {
    auto res = verify_main_identity(D, pl);
    std::string tag = str(D) + " o_" + str(pl.W) + " " + str(pl.E) + " case " + case_letter(pl.kase);
    r.expect(res.holds, tag + ": identity fails");
    if (pl.kase == AttachCase::a || pl.kase == AttachCase::b)
        r.expect(res.sign == 1, tag + ": sign " + std::to_string(res.sign));
    else
        r.expect(res.sign == sign_of(D), tag + ": sign " + std::to_string(res.sign) + ", sign_of(D) " +
                                             std::to_string(sign_of(D)));
    if (pl.kase != AttachCase::none) counts[static_cast<int>(pl.kase)]++;
}

void c5(Result& r) {
    int counts[4] = {0, 0, 0, 0};
    // worked examples
    auto probe = place(S({4, 4, 2, 2}, {2, 1}), S({1, 1}));
    std::vector<std::pair<SkewDiagram, WPlacement>> corpus{
        {S({2, 2}), place(S({4, 4, 2}, {3}), S({1, 1}))},
        {S({2, 2}), place(S({3, 3, 3, 2}, {2, 2}), S({1, 1}))},
        {S({2, 2}), empty_placement(S({2, 2}))},
        {S({2, 1}), place(S({2, 1}), S({1}))},
        {S({2, 2}, {1}), place(S({2, 1}), S({1}))},
        {S({4, 2, 2}, {1, 1}), place(S({2, 1}), S({1}))},
        {S({2, 1}), probe},
        {S({2, 2}, {1}), probe},
    };
    for (auto& [D, pl] : corpus) identity_check(r, D, pl, counts);

    // random triples, a quarter per attachment case
    std::vector<SkewDiagram> Ds;
    for (int n = 1; n <= 4; ++n)
        for (auto& d : enumerate_connected(n)) Ds.push_back(d);
    std::vector<WPlacement> by_case[4];
    for (int n = 1; n <= 8; ++n)
        for (auto& E : enumerate_connected(n))
            for (auto& pl : find_w_placements(E))
                if (pl.kase != AttachCase::none && check_hypotheses(pl).overall_I_to_V())
                    by_case[static_cast<int>(pl.kase)].push_back(pl);
    std::mt19937 rng(20240601);
    const int per_case = 50;
    for (int k = 0; k < 4; ++k) {
        r.expect(!by_case[k].empty(), std::string("no placements for case ") + "abcd"[k]);
        if (by_case[k].empty()) continue;
        for (int t = 0; t < per_case; ++t) {
            auto& pl = by_case[k][std::uniform_int_distribution<std::size_t>(0, by_case[k].size() - 1)(rng)];
            auto& D = Ds[std::uniform_int_distribution<std::size_t>(0, Ds.size() - 1)(rng)];
            identity_check(r, D, pl, counts);
        }
    }
    r.info << "a " << counts[0] << ", b " << counts[1] << ", c " << counts[2] << ", d " << counts[3];
}

void c6(Result& r) {
    const int n = 12;
    if (max_cells_cap() < n) {
        r.expect(false, "SKEWKIT_MAX_CELLS is " + std::to_string(max_cells_cap()) + ", need 12");
        return;
    }
    std::size_t classes = 0;
    for (int m = 1; m <= n; ++m)
        for (auto& cls : classify_exact(m)) {
            ++classes;
            std::string members;
            for (auto& d : cls.members) members += " " + str(d);
            r.expect(is_power_of_two(cls.members.size()),
                     "counterexample: class of size " + std::to_string(cls.members.size()) + ":" + members);
        }
    r.info << classes << " classes";
}

void c7(Result& r) {
    // LR symmetry
    std::vector<Partition> small;
    for (int m = 1; m <= 5; ++m)
        for (auto& d : enumerate_connected(m))
            if (d.mu().empty()) small.push_back(d.lambda());
    small.push_back({});
    for (auto& a : small)
        for (auto& b : small) r.expect(lr_product(a, b) == lr_product(b, a), "LR symmetry");

    // adjointness <s_{λ/μ}, s_ν> = <s_λ, s_μ s_ν>
    for (int n = 2; n <= 8; ++n)
        for (auto& d : enumerate_connected(n)) {
            auto lam = d.lambda(), mu = d.mu();
            if (mu.empty() || lam.size() > 4) continue;
            auto f = skew_schur(d);
            for (auto& [nu, c] : f.terms())
                r.expect(lr_product(mu, nu).coeff(lam) == c, "adjointness at " + str(d));
        }

    for (int n = 1; n <= 8; ++n)
        for (auto& d : enumerate_connected(n)) {
            auto f = skew_schur(d);
            r.expect(omega(omega(f)) == f, "omega twice on " + str(d));
            r.expect(omega(f) == skew_schur(transpose(d)), "omega of " + str(d));
        }

    for (int n = 1; n <= 10; ++n)
        for (auto& d : enumerate_connected(n))
            r.expect(skew_schur(d) == skew_schur(rotate180(d)), "rotation of " + str(d));

    for (int n = 1; n <= 8; ++n)
        for (auto& d : enumerate_connected(n))
            r.expect(monomial_oracle(d, n) == schur_to_monomials(skew_schur(d), n), "monomials of " + str(d));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> v(-6, 6), sz(2, 6);
    std::function<bool(const long long&)> is0 = [](const long long& x) { return x == 0; };
    for (int t = 0; t < 100; ++t) {
        int n = sz(rng);
        Matrix<long long> m(n, std::vector<long long>(n));
        for (auto& row : m)
            for (auto& x : row) x = v(rng);
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (rng() % 2) s.push_back(i);
        if (static_cast<int>(s.size()) == n) s.pop_back();
        r.expect(sylvester_check<long long>(m, s, 0LL, 1LL, is0), "Sylvester on matrix " + std::to_string(t));
    }
}

void c8(Result& r) {
    auto pl = place(S({4, 4, 2, 2}, {2, 1}), S({1, 1}));
    r.expect(check_hypotheses(pl).overall_I_to_IV(), "I-IV should hold");
    r.expect(!check_hypotheses(pl).h[4], "V should fail");
    auto D = S({2, 1});
    for (auto& d : {D, rotate180(D)}) {
        auto res = verify_main_identity(d, pl);
        r.expect(res.holds && res.sign == 1, "identity for " + str(d));
    }
    auto x = diagram_from_rows({".......xx", "......xxx", "....xxx", "...xxxx", "..xx", "..xx", ".xxx", "xx", "xx"});
    auto y = diagram_from_rows({".......xx", "......xxx", ".....xx", ".....xx", "....xxx", "..xxx", ".xxxx", "xx", "xx"});
    auto a = compose(D, pl), b = compose(rotate180(D), pl);
    r.expect((a == x && b == y) || (a == y && b == x), "composites differ from the printed pair");
    r.expect(x != y && rotate180(x) != y, "printed pair related by rotation");
    r.expect(skew_schur(x) == skew_schur(y), "printed pair not equivalent");
    r.info << x.size() << " cells";
}

}  // namespace

int main() {
    struct Crit {
        int id;
        const char* name;
        double limit;
        std::function<void(Result&)> run;
    };
    std::vector<Crit> all{
        {1, "worked examples corpus", 10, c1},
        {2, "unique 8-cell non-rotation class", 30, c2},
        {3, "six equivalences of at most 18 cells", 300, c3},
        {4, "Hamel-Goulden determinants up to 9 cells", 600, c4},
        {5, "main identity and signs", 900, c5},
        {6, "class sizes are powers of two up to 12 cells", 0, c6},
        {7, "property suites", 600, c7},
        {8, "identity without hypothesis V", 60, c8},
    };
    int failed = 0;
    for (auto& c : all) {
        Result r;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(r);
        } catch (const std::exception& e) {
            r.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit > 0 && secs > c.limit) r.expect(false, "took " + std::to_string(secs) + " s");
        failed += !r.ok;
        std::printf("%s %d %s (%.2f s)", r.ok ? "PASS" : "FAIL", c.id, c.name, secs);
        if (!r.info.str().empty()) std::printf(" [%s]", r.info.str().c_str());
        if (!r.ok) std::printf(": %s", r.why.str().c_str());
        if (r.failures > 5) std::printf(" (+%d more)", r.failures - 5);
        std::printf("\n");
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
