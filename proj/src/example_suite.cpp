#include "skewkit/example_suite.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "skewkit/composition.hpp"
#include "skewkit/equivalence.hpp"
#include "skewkit/ribbon.hpp"
#include "skewkit/schur.hpp"

namespace skewkit {

SkewDiagram diagram_from_rows(const std::vector<std::string>& rows) {
    CellList cells;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] == 'x') cells.push_back({static_cast<int>(i), static_cast<int>(j)});
    return SkewDiagram::from_cells(std::move(cells));
}

namespace {

SkewDiagram S(const Partition& lam, const Partition& mu = {}) { return make_skew(lam, mu); }

WPlacement place(const SkewDiagram& E, const SkewDiagram& W) {
    auto pl = make_placement(E, W);
    if (!pl) throw InvalidInput(diagram_str(W) + " does not lie in top and bottom of " + diagram_str(E));
    return *pl;
}

// Collects mismatches; a case passes when nothing was recorded.
struct Check {
    std::ostringstream msg;
    bool ok = true;
    void expect(bool cond, const std::string& what) {
        if (cond) return;
        if (!ok) msg << "; ";
        msg << what;
        ok = false;
    }
    void same(const SkewDiagram& got, const SkewDiagram& want, const std::string& what) {
        expect(got == want, what + ": got " + diagram_str(got) + ", want " + diagram_str(want));
    }
};

using Body = std::function<void(Check&)>;

// The amalgamation example E and its two candidate W's.
SkewDiagram amalg_E() { return S({8, 8, 5, 4}, {6, 3, 1}); }
// The vertical-W example that fails the last hypothesis.
SkewDiagram probe_E() { return S({4, 4, 2, 2}, {2, 1}); }

struct EighteenCase {
    SkewDiagram E;
    SkewDiagram W;
};
std::vector<EighteenCase> eighteen_cases() {
    return {{S({3, 2, 2}, {1}), S({2})},     {S({4, 2}), S({2})},
            {S({4, 3, 2}, {2}), S({2})},     {S({4, 2, 2}, {1}), S({2})},
            {S({4, 4, 2}, {3}), S({1, 1})},  {S({5, 2}), S({2})}};
}

std::vector<std::pair<std::string, Body>> cases() {
    std::vector<std::pair<std::string, Body>> out;
    auto add = [&](std::string name, Body b) { out.emplace_back(std::move(name), std::move(b)); };

    add("diagram (3,2,2,1)/(2,1)", [](Check& c) {
        auto d = S({3, 2, 2, 1}, {2, 1});
        c.same(d, diagram_from_rows({"..x", ".x", "xx", "x"}), "shape");
        c.expect(d.size() == 5, "size");
    });
    add("staircase pair are transposes", [](Check& c) {
        c.same(transpose(S({4, 3, 2, 1}, {2})), S({4, 3, 2, 1}, {1, 1}), "transpose");
    });
    add("up-body and se-ribbon counts", [](Check& c) {
        for (int n = 1; n <= 8; ++n)
            for (auto& d : enumerate_connected(n)) {
                c.expect(up_body_size(d) == static_cast<int>(nw_body(d).size()) + d.rows() - 1,
                         "up-body size of " + diagram_str(d));
                c.expect(static_cast<int>(se_ribbon(d).size()) + 1 == d.rows() + d.cols(),
                         "se ribbon size of " + diagram_str(d));
            }
    });
    add("(2,2) is not a ribbon", [](Check& c) { c.expect(!is_ribbon(S({2, 2})), "is_ribbon"); });
    add("staircase pair equivalent", [](Check& c) {
        c.expect(skew_schur(S({4, 3, 2, 1}, {2})) == skew_schur(S({4, 3, 2, 1}, {1, 1})), "s_D differ");
    });
    add("omega of s_D is s of transpose", [](Check& c) {
        for (int n = 1; n <= 8; ++n)
            for (auto& d : enumerate_connected(n))
                c.expect(omega(skew_schur(d)) == skew_schur(transpose(d)), diagram_str(d));
    });
    add("Hamel-Goulden example (3,3,3,1)/(1)", [](Check& c) {
        auto D = S({3, 3, 3, 1}, {1});
        auto dec = northwest_decomposition(D);
        c.expect(dec.ribbons.size() == 2, "ribbon count");
        c.expect(dec.intervals.size() == 2 && dec.intervals[0] == std::pair{-3, 2} &&
                     dec.intervals[1] == std::pair{-1, 1},
                 "intervals");
        c.expect(SkewDiagram::from_cells(dec.strip) == nw_ribbon(D), "cutting strip is nw(D)");
        auto hg = hamel_goulden(D, dec);
        const char* want[2][2][4] = {{{".xx", "xx", "x", "x"}, {".xx", "xx", "", ""}},
                                     {{".x", "xx", "x", "x"}, {".x", "xx", "", ""}}};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                std::vector<std::string> rows;
                for (auto* r : want[i][j])
                    if (*r) rows.push_back(r);
                auto& e = hg.entries[i][j];
                c.expect(e.kind == StripInterval::Kind::Ribbon &&
                             SkewDiagram::from_cells(e.cells) == diagram_from_rows(rows),
                         "matrix entry " + std::to_string(i) + "," + std::to_string(j));
            }
        auto h01 = hash_op(dec, 0, 1);
        c.expect(h01.p == -1 && h01.q == 2 && h01.cells.size() == 4, "hash_op(1,2) = θ[-1,2]");
        c.expect(hg.det == skew_schur(D), "det = s_D");
        auto se = southeast_decomposition(D);
        c.expect(SkewDiagram::from_cells(se.strip) == se_ribbon(D), "se cutting strip is se(D)");
        auto empty = strip_interval(dec, 1, 0);
        c.expect(empty.kind == StripInterval::Kind::Empty && strip_schur(empty) == SchurPoly::one(),
                 "θ[q+1,q] is empty with value 1");
    });
    add("Desnanot-Jacobi on a 3x3 matrix", [](Check& c) {
        Matrix<long long> m{{2, -1, 3}, {4, 5, -2}, {1, 0, 7}};
        auto is0 = std::function<bool(const long long&)>([](const long long& x) { return x == 0; });
        c.expect(sylvester_check<long long>(m, {1}, 0LL, 1LL, is0), "identity fails");
        // spelled out: det M * M[1,1] = det of the 2x2 minors matrix
        long long lhs = det_int(m) * m[1][1];
        long long a = m[0][0] * m[1][1] - m[0][1] * m[1][0], b = m[0][1] * m[1][2] - m[0][2] * m[1][1];
        long long cc = m[1][0] * m[2][1] - m[1][1] * m[2][0], d = m[1][1] * m[2][2] - m[1][2] * m[2][1];
        c.expect(lhs == a * d - b * cc, "explicit minors");
    });
    add("amalgamation example", [](Check& c) {
        auto E = amalg_E();
        auto W = S({3, 3}, {1}), V = S({3, 2}, {1});
        bool foundW = false, foundV = false;
        for (auto& pl : find_w_placements(E)) {
            foundW |= pl.W == W;
            foundV |= pl.W == V;
        }
        c.expect(foundW && foundV, "W and V both lie in top and bottom");
        auto want = S({13, 13, 10, 9, 5, 4}, {11, 8, 6, 3, 1});
        c.same(amalg_power(place(E, W), 2), want, "E amalg_W E");
        c.same(amalg_power(place(E, V), 2), want, "E amalg_V E");
        c.same(amalgamate(E, W, E), want, "amalgamate");
        auto hw = check_hypotheses(place(E, W));
        c.expect(hw.h[0], "W maximal");
        auto hv = check_hypotheses(place(E, V));
        c.expect(!hv.h[0], "V should fail hypothesis I");
        c.expect(!hv.h[2], "V should fail hypothesis III");
    });
    add("empty W lies in every E", [](Check& c) {
        for (int n = 1; n <= 6; ++n)
            for (auto& E : enumerate_connected(n)) {
                bool found = false;
                for (auto& pl : find_w_placements(E)) found |= pl.W.empty();
                c.expect(found, diagram_str(E));
            }
    });
    add("(3,3,2)/(1) amalg_empty itself", [](Check& c) {
        c.same(amalg_power(empty_placement(S({3, 3, 2}, {1})), 2), S({6, 6, 5, 3, 2}, {4, 3, 1}), "amalgam");
    });
    add("dot construction: one valid candidate per case", [](Check& c) {
        for (int n = 2; n <= 6; ++n)
            for (auto& E : enumerate_connected(n))
                for (auto& pl : find_w_placements(E, {true})) {
                    if (pl.W.empty() || pl.kase == AttachCase::none) continue;
                    if (!check_hypotheses(pl).overall_I_to_IV()) continue;
                    auto dc = dot_candidates(pl);
                    int valid = 0;
                    for (bool v : dc.valid) valid += v;
                    c.expect(valid == 1 && dc.valid[static_cast<int>(pl.kase)],
                             diagram_str(E) + " with W " + diagram_str(pl.W));
                }
    });
    add("dot of case-a E sits inside D o E", [](Check& c) {
        auto pl = place(S({4, 4, 2}, {3}), S({1, 1}));
        c.expect(pl.kase == AttachCase::a, "case a");
        auto F = compose(S({2, 2}), pl);
        auto dot = dot_compose(pl).cells();
        bool inside = false;
        for (int dr = -12; dr <= 12 && !inside; ++dr)
            for (int dc = -12; dc <= 12 && !inside; ++dc) inside = cells_subset(translate(dot, {dr, dc}), F.cells());
        c.expect(inside, "no translate of E.E inside D o E");
    });
    add("composition displays", [](Check& c) {
        auto D = S({2, 2});
        auto p1 = place(S({4, 4, 2}, {3}), S({1, 1}));
        c.expect(p1.kase == AttachCase::a, "first E is case a");
        c.same(compose(D, p1), S({9, 9, 7, 7, 5, 2}, {8, 5, 2, 2}), "first display");
        auto p2 = place(S({3, 3, 3, 2}, {2, 2}), S({1, 1}));
        c.expect(p2.kase == AttachCase::c, "second E is case c");
        c.same(compose(D, p2), S({7, 7, 7, 6, 6, 6, 5, 2}, {6, 6, 4, 4, 2, 2}), "second display");
        c.same(compose_star(D, p2), compose(D, p2), "star form");
        c.same(compose(D, empty_placement(S({2, 2}))), S({5, 5, 4, 4, 2}, {3, 1, 1}), "W empty");
    });
    add("staircase compositions", [](Check& c) {
        auto E = S({2, 1});
        auto pl = place(E, S({1}));
        c.same(compose(E, pl), S({4, 3, 2, 1}, {2}), "E o E");
        c.same(compose(rotate180(E), pl), S({4, 3, 2, 1}, {1, 1}), "E* o E");
    });
    add("overlap shapes", [](Check& c) {
        auto ov = overlap_shapes(place(amalg_E(), S({3, 3}, {1})));
        c.expect(ov.barW.size() == 2, "|W bar| = " + std::to_string(ov.barW.size()));
        c.expect(ov.barO.size() == 1, "|O bar| = " + std::to_string(ov.barO.size()));
        auto W = S({1, 1});
        auto ov2 = overlap_shapes(place(S({3, 3, 2}, {1}), W));
        c.same(ov2.barW, S({2}), "second W bar");
        c.expect(!contains(W.lambda(), ov2.barW.lambda()), "W bar should not fit in W");
    });
    add("hypothesis V fails for the vertical-W E", [](Check& c) {
        auto pl = place(probe_E(), S({1, 1}));
        c.expect(pl.ne == CellList{{0, 3}, {1, 3}} && pl.sw == CellList{{2, 0}, {3, 0}}, "placement");
        auto h = check_hypotheses(pl);
        c.expect(h.overall_I_to_IV(), "I-IV hold");
        c.expect(!h.h[4], "V holds");
    });
    add("map expansion for (4,2,2)/(1,1)", [](Check& c) {
        std::map<std::vector<int>, Coeff> want{{{1, 2, 3}, 1}, {{0, 3, 3}, -1}, {{0, 2, 4}, -1}, {{0, 0, 6}, 1}};
        auto D = S({4, 2, 2}, {1, 1});
        c.expect(jacobi_trudi_terms(D) == want, "4-term expression");
        // evaluated with a small E so the products stay cheap
        auto pl = place(S({2, 1}), S({1}));
        auto e = [&](int k) { return skew_schur(amalg_power(pl, k)); };
        auto w = skew_schur(pl.W);
        SchurPoly value = e(1) * e(2) * e(3) - e(3) * e(3) * w - e(2) * e(4) * w + e(6) * w * w;
        c.expect(schur_compose(D, pl) == value, "evaluated expression");
        auto big = place(S({4, 4, 2}, {3}), S({1, 1}));
        c.expect(schur_compose(SkewDiagram{}, big) == skew_schur(big.W), "empty D gives s_W");
        c.same(compose(SkewDiagram{}, big), big.W, "empty D composes to W");
    });
    add("enhanced northwest decomposition", [](Check& c) {
        auto D = S({2, 2, 2, 1}, {1});
        auto rib = enhanced_nw_decomposition(D);
        c.expect(rib.size() == 4, "4 ribbons");
        std::vector<int> q, pe;
        for (auto& r : rib) {
            q.push_back(r.q);
            if (r.cells.empty()) pe.push_back(r.p);
        }
        c.expect(q == std::vector<int>{1, 0, -1, -3}, "q values");
        std::sort(pe.begin(), pe.end());
        c.expect(pe == std::vector<int>{-2, 1}, "empty ribbons");
        c.expect(SkewDiagram::from_cells(rib[0].cells) == nw_ribbon(D), "first is nw(D)");
        for (int n = 1; n <= 8; ++n)
            for (auto& d : enumerate_connected(n)) {
                auto rs = enhanced_nw_decomposition(d);
                Partition lam = d.lambda(), mu = d.mu();
                mu.resize(lam.size(), 0);
                if (rs.size() != lam.size()) {
                    c.expect(false, "ribbon count of " + diagram_str(d));
                    continue;
                }
                std::vector<int> ps, want_p;
                for (std::size_t i = 0; i < rs.size(); ++i) {
                    c.expect(rs[i].q == lam[i] - static_cast<int>(i) - 1, "q of " + diagram_str(d));
                    ps.push_back(rs[i].p);
                    want_p.push_back(mu[i] - static_cast<int>(i));
                }
                std::sort(ps.begin(), ps.end());
                std::sort(want_p.begin(), want_p.end());
                c.expect(ps == want_p, "p values of " + diagram_str(d));
            }
    });
    add("main identity on the worked examples", [](Check& c) {
        auto D = S({2, 2});
        std::vector<std::pair<SkewDiagram, WPlacement>> ex{
            {D, place(S({4, 4, 2}, {3}), S({1, 1}))},
            {D, place(S({3, 3, 3, 2}, {2, 2}), S({1, 1}))},
            {D, empty_placement(S({2, 2}))},
            {S({2, 1}), place(S({2, 1}), S({1}))},
            {S({2, 2}, {1}), place(S({2, 1}), S({1}))},
            {S({4, 2, 2}, {1, 1}), place(S({2, 1}), S({1}))},
        };
        for (auto& [d, pl] : ex) {
            auto r = verify_main_identity(d, pl);
            std::string tag = diagram_str(d) + " o " + diagram_str(pl.E);
            c.expect(r.holds, tag + " fails");
            c.expect(r.sign_matches, tag + " sign " + std::to_string(r.sign));
        }
    });
    add("empty W with ribbon E", [](Check& c) {
        for (auto& E : {S({2, 1}), S({3, 1}), S({2, 2}, {1}), S({3, 3}, {2})})
            for (auto& D : {S({2, 1}), S({2, 2}), S({3, 2}, {1})}) {
                auto pl = empty_placement(E);
                auto ov = overlap_shapes(pl);
                c.expect(ov.barW.empty() && ov.barO.empty(), "overlaps for " + diagram_str(E));
                c.expect(skew_schur(compose(D, pl)) == schur_compose(D, pl),
                         diagram_str(D) + " o " + diagram_str(E));
            }
    });
    add("identity without hypothesis V", [](Check& c) {
        auto pl = place(probe_E(), S({1, 1}));
        auto D = S({2, 1});
        for (auto& d : {D, rotate180(D)}) {
            auto r = verify_main_identity(d, pl);
            c.expect(r.holds && r.sign == 1, "identity for " + diagram_str(d));
        }
        auto left = diagram_from_rows({".......xx", "......xxx", "....xxx", "...xxxx", "..xx", "..xx",
                                       ".xxx", "xx", "xx"});
        auto right = diagram_from_rows({".......xx", "......xxx", ".....xx", ".....xx", "....xxx",
                                        "..xxx", ".xxxx", "xx", "xx"});
        auto a = compose(D, pl), b = compose(rotate180(D), pl);
        c.expect((a == left && b == right) || (a == right && b == left), "printed pair");
        c.expect(skew_schur(left) == skew_schur(right), "pair not equivalent");
    });
    add("factorizations", [](Check& c) {
        auto F = S({4, 3, 2, 1}, {2});
        auto rep = factorizations(F);
        bool found = false;
        for (auto& f : rep.minimal) found |= f.D == S({2, 1}) && f.W == S({1}) && f.E == S({2, 1});
        c.expect(found, "(2,1) o_(1) (2,1) missing from minimal factorizations");
        auto left = diagram_from_rows({".......xx", "......xxx", "....xxx", "...xxxx", "..xx", "..xx",
                                       ".xxx", "xx", "xx"});
        c.same(transpose(left), left, "F = F^t");
        auto E = probe_E();
        c.same(compose(S({2, 1}), place(E, S({1, 1}))), left, "first factorization");
        c.same(compose(S({2, 2}, {1}), place(E, S({2}))), left, "second factorization");
    });
    add("classes up to 8 cells", [](Check& c) {
        for (auto& cls : classify(7))
            c.expect(is_rotation_class(cls), "non-rotation class below 8 cells");
        int odd = 0;
        for (auto& cls : classify_exact(8)) {
            if (is_rotation_class(cls)) continue;
            ++odd;
            auto& m = cls.members;
            auto has = [&](const SkewDiagram& d) { return std::find(m.begin(), m.end(), d) != m.end(); };
            c.expect(has(S({4, 3, 2, 1}, {2})) && has(S({4, 3, 2, 1}, {1, 1})), "unexpected 8-cell class");
        }
        c.expect(odd == 1, std::to_string(odd) + " non-rotation classes at 8 cells");
        c.expect(skew_schur(compose(S({2, 1}), place(S({2, 1}), S({1})))) ==
                     skew_schur(compose(S({2, 2}, {1}), place(S({2, 1}), S({1})))),
                 "staircase");
    });
    add("six 18-cell equivalences", [](Check& c) {
        auto D = S({2, 1}), Dp = rotate180(D);
        std::vector<SkewDiagram> pairs;
        for (auto& [E, W] : eighteen_cases()) {
            auto pl = place(E, W);
            auto res = verify_rotation_equivalence(D, Dp, pl);
            std::string tag = diagram_str(E) + " with W " + diagram_str(W);
            c.expect(res.precondition_ok, tag + ": " + res.precondition_detail);
            c.expect(res.equivalent, tag + " not equivalent");
            c.expect(res.left.size() <= 18, tag + " too large");
            c.expect(res.left != res.right && rotate180(res.left) != res.right, tag + " trivial");
            pairs.push_back(res.left);
            pairs.push_back(res.right);
        }
        auto check_pair = [&](std::size_t k, const SkewDiagram& a, const SkewDiagram& b, const std::string& what) {
            c.expect(k + 1 < pairs.size() && ((pairs[k] == a && pairs[k + 1] == b) ||
                                              (pairs[k] == b && pairs[k + 1] == a)),
                     what);
        };
        check_pair(0, diagram_from_rows({"....xx", "..xxx", ".xxxx", ".xx", "xx", "xx"}),
                   diagram_from_rows({"....xx", "...xx", "...xx", ".xxx", "xxxx", "xx"}), "first printed pair");
        check_pair(2, diagram_from_rows({"...xxxxx", "..xxxx", "xxxx", "xx"}),
                   diagram_from_rows({"....xxxx", ".xxxxx", "xxxx", "xx"}), "second printed pair");
    });
    add("class sizes are powers of two", [](Check& c) {
        const int n = std::min(12, max_cells_cap());
        for (int m = 1; m <= n; ++m)
            for (auto& cls : classify_exact(m))
                c.expect(is_power_of_two(cls.members.size()),
                         "class of size " + std::to_string(cls.members.size()) + " containing " +
                             diagram_str(cls.members.front()));
    });
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (auto& [n, b] : cases()) names.push_back(n);
    return names;
}

std::vector<SuiteCase> run_example_suite() {
    std::vector<SuiteCase> out;
    for (auto& [name, body] : cases()) {
        SuiteCase sc;
        sc.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            Check c;
            body(c);
            sc.pass = c.ok;
            sc.detail = c.msg.str();
        } catch (const std::exception& e) {
            sc.pass = false;
            sc.detail = std::string("exception: ") + e.what();
        }
        sc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(sc));
    }
    return out;
}

}  // namespace skewkit
