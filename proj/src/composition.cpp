#include "skewkit/composition.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <set>

#include "skewkit/equivalence.hpp"
#include "skewkit/ribbon.hpp"

namespace skewkit {

char case_letter(AttachCase c) {
    switch (c) {
        case AttachCase::a: return 'a';
        case AttachCase::b: return 'b';
        case AttachCase::c: return 'c';
        case AttachCase::d: return 'd';
        default: return '-';
    }
}

int diagonal_count(const CellList& cells) {
    std::set<int> cs;
    for (auto x : cells) cs.insert(x.content());
    return static_cast<int>(cs.size());
}

namespace {

Cell scale(Cell x, int k) { return {x.r * k, x.c * k}; }

int min_content(const CellList& cells) {
    int m = INT_MAX;
    for (auto x : cells) m = std::min(m, x.content());
    return m;
}

int max_content(const CellList& cells) {
    int m = INT_MIN;
    for (auto x : cells) m = std::max(m, x.content());
    return m;
}

AttachCase attachment(const CellList& O, const CellList& sw, const CellList& ne) {
    if (O.empty() || sw.empty()) return AttachCase::none;
    Cell lo = sw_cell(O), hi = ne_cell(O);
    int lower = 0, upper = 0;  // 1 horizontal, 2 vertical
    if (cells_contain(sw, lo + Cell{0, -1})) lower = 1;
    else if (cells_contain(sw, lo + Cell{1, 0})) lower = 2;
    if (cells_contain(ne, hi + Cell{0, 1})) upper = 1;
    else if (cells_contain(ne, hi + Cell{-1, 0})) upper = 2;
    if (lower == 1 && upper == 1) return AttachCase::a;
    if (lower == 2 && upper == 2) return AttachCase::b;
    if (lower == 1 && upper == 2) return AttachCase::c;
    if (lower == 2 && upper == 1) return AttachCase::d;
    return AttachCase::none;
}

// Connected skew subshapes of `cells` (a skew shape) that contain its
// northeasternmost cell. `max_span` bounds max content - min content.
void ne_subshapes(const CellList& cells, int max_span,
                  const std::function<void(const CellList&)>& emit) {
    if (cells.empty()) return;
    std::map<int, std::pair<int, int>> span;  // row -> [left, right]
    for (auto x : cells) {
        auto it = span.find(x.r);
        if (it == span.end()) span[x.r] = {x.c, x.c};
        else {
            it->second.first = std::min(it->second.first, x.c);
            it->second.second = std::max(it->second.second, x.c);
        }
    }
    const Cell ne = ne_cell(cells);
    const int top_content = ne.content();
    CellList cur;
    std::function<void(int, int, int)> rec = [&](int row, int l, int r) {
        emit(cur);
        auto it = span.find(row + 1);
        if (it == span.end()) return;
        auto [fl, fr] = it->second;
        for (int nr = std::min(fr, r); nr >= std::max(l, fl); --nr) {
            for (int nl = std::min(l, nr); nl >= fl; --nl) {
                if (max_span >= 0 && top_content - (nl - (row + 1)) > max_span) break;
                std::size_t mark = cur.size();
                for (int c = nl; c <= nr; ++c) cur.push_back({row + 1, c});
                rec(row + 1, nl, nr);
                cur.resize(mark);
            }
        }
    };
    auto [fl0, fr0] = span[ne.r];
    (void)fr0;
    for (int l = ne.c; l >= fl0; --l) {
        if (max_span >= 0 && top_content - (l - ne.r) > max_span) break;
        cur.clear();
        for (int c = l; c <= ne.c; ++c) cur.push_back({ne.r, c});
        rec(ne.r, l, ne.c);
    }
}

}  // namespace

WPlacement empty_placement(const SkewDiagram& E) {
    WPlacement pl;
    pl.E = E;
    if (E.empty()) throw InvalidInput("E must be nonempty");
    pl.shift = ne_cell(E.cells()) + Cell{0, 1} - sw_cell(E.cells());
    pl.O = E.cells();
    pl.kase = AttachCase::a;
    return pl;
}

std::optional<WPlacement> make_placement(const SkewDiagram& E, const SkewDiagram& W) {
    if (W.empty()) return empty_placement(E);
    if (E.empty() || !cells_connected(W.cells())) return std::nullopt;
    Cell to_ne = ne_cell(E.cells()) - ne_cell(W.cells());
    Cell to_sw = sw_cell(E.cells()) - sw_cell(W.cells());
    WPlacement pl;
    pl.E = E;
    pl.W = W;
    pl.ne = translate(W.cells(), to_ne);
    pl.sw = translate(W.cells(), to_sw);
    if (!cells_subset(pl.ne, E.cells()) || !cells_subset(pl.sw, E.cells())) return std::nullopt;
    pl.shift = to_ne - to_sw;
    pl.O = cells_minus(cells_minus(E.cells(), pl.ne), pl.sw);
    pl.kase = attachment(pl.O, pl.sw, pl.ne);
    return pl;
}

WPlacement placement_from_cells(const SkewDiagram& E, const CellList& ne_in, const CellList& sw_in) {
    CellList ne = sorted_unique(ne_in), sw = sorted_unique(sw_in);
    if (ne.empty() != sw.empty()) throw InvalidInput("both copies of W must be given");
    if (ne.empty()) return empty_placement(E);
    if (!cells_subset(ne, E.cells()) || !cells_subset(sw, E.cells()))
        throw InvalidInput("copies of W must lie inside E");
    if (!is_skew_shape(ne) || !cells_connected(ne))
        throw InvalidInput("W must be a connected skew diagram");
    if (SkewDiagram::from_cells(ne) != SkewDiagram::from_cells(sw))
        throw InvalidInput("the two copies of W differ in shape");
    if (!cells_contain(ne, ne_cell(E.cells())))
        throw InvalidInput("top copy of W must contain the northeasternmost cell of E");
    if (!cells_contain(sw, sw_cell(E.cells())))
        throw InvalidInput("bottom copy of W must contain the southwesternmost cell of E");
    auto pl = make_placement(E, SkewDiagram::from_cells(ne));
    if (!pl || pl->ne != ne || pl->sw != sw) throw InvalidInput("inconsistent W anchors");
    return *pl;
}

namespace {

// Canonical translate of a transformed cell set, plus the translation used.
std::pair<CellList, Cell> canon(const CellList& cells) {
    int r0 = INT_MAX, c0 = INT_MAX;
    for (auto x : cells) {
        r0 = std::min(r0, x.r);
        c0 = std::min(c0, x.c);
    }
    Cell t{-r0, -c0};
    return {translate(cells, t), t};
}

}  // namespace

WPlacement rotated_placement(const WPlacement& pl) {
    auto [cells, t] = canon(rotate_cells(pl.E.cells()));
    SkewDiagram E = SkewDiagram::from_cells(cells);
    if (pl.W.empty()) return empty_placement(E);
    CellList ne = translate(rotate_cells(pl.sw), t);
    CellList sw = translate(rotate_cells(pl.ne), t);
    return placement_from_cells(E, ne, sw);
}

WPlacement transposed_placement(const WPlacement& pl) {
    auto [cells, t] = canon(transpose_cells(pl.E.cells()));
    SkewDiagram E = SkewDiagram::from_cells(cells);
    if (pl.W.empty()) return empty_placement(E);
    CellList ne = translate(transpose_cells(pl.sw), t);
    CellList sw = translate(transpose_cells(pl.ne), t);
    return placement_from_cells(E, ne, sw);
}

std::vector<WPlacement> find_w_placements(const SkewDiagram& E, PlacementSearch opts) {
    std::vector<WPlacement> out;
    if (E.empty()) return out;
    out.push_back(empty_placement(E));
    int span = max_content(E.cells()) - min_content(E.cells());
    int max_span = opts.require_separation ? (span - 2) / 2 : -1;
    if (opts.require_separation && max_span < 0) return out;
    std::set<SkewDiagram> seen;
    ne_subshapes(E.cells(), max_span, [&](const CellList& sub) {
        SkewDiagram W = SkewDiagram::from_cells(sub);
        if (!seen.insert(W).second) return;
        if (auto pl = make_placement(E, W)) out.push_back(std::move(*pl));
    });
    return out;
}

SkewDiagram amalgamate(const SkewDiagram& E1, const SkewDiagram& W, const SkewDiagram& E2) {
    if (E1.empty() || E2.empty()) throw InvalidInput("amalgamation needs nonempty diagrams");
    Cell t;
    if (W.empty()) {
        t = ne_cell(E1.cells()) + Cell{0, 1} - sw_cell(E2.cells());
    } else {
        auto top = make_placement(E1, W);
        auto bottom = make_placement(E2, W);
        if (!top || !bottom)
            throw InvalidInput("W must lie in the top of E1 and the bottom of E2");
        t = top->ne.front() - bottom->sw.front();
    }
    return SkewDiagram::from_cells(cells_union(E1.cells(), translate(E2.cells(), t)));
}

CellList amalg_power_cells(const WPlacement& pl, int m) {
    if (m < 0) throw InvalidInput("negative amalgamation power");
    if (m == 0) return pl.W.cells();
    CellList out;
    for (int k = 0; k < m; ++k) {
        auto part = translate(pl.E.cells(), scale(pl.shift, k));
        out.insert(out.end(), part.begin(), part.end());
    }
    return sorted_unique(std::move(out));
}

SkewDiagram amalg_power(const WPlacement& pl, int m) {
    return SkewDiagram::from_cells(amalg_power_cells(pl, m));
}

DotCandidates dot_candidates(const WPlacement& pl) {
    DotCandidates dc;
    const CellList& E = pl.E.cells();
    CellList glued = cells_union(E, translate(E, pl.shift));
    dc.cand[0] = cells_union(E, translate(E, pl.shift + Cell{-1, -1}));
    dc.cand[1] = cells_union(E, translate(E, pl.shift + Cell{1, 1}));
    dc.cand[2] = cells_union(glued, translate(pl.ne, {1, 1}));
    dc.cand[3] = cells_union(glued, translate(pl.ne, {-1, -1}));
    for (int i = 0; i < 4; ++i) dc.valid[i] = is_skew_shape(dc.cand[i]) && cells_connected(dc.cand[i]);
    return dc;
}

SkewDiagram dot_compose(const WPlacement& pl) {
    if (pl.kase == AttachCase::none) throw HypothesisFailure("placement has no attachment case");
    auto dc = dot_candidates(pl);
    int k = static_cast<int>(pl.kase);
    if (!dc.valid[k]) throw HypothesisFailure("dot composition is not a skew diagram");
    return SkewDiagram::from_cells(dc.cand[k]);
}

namespace {

struct OverlapCells {
    CellList barW, barO;
};

OverlapCells overlap_cells(const WPlacement& pl) {
    OverlapCells oc;
    for (auto x : pl.O)
        if (cells_contain(pl.O, x + Cell{1, 1})) oc.barO.push_back(x);
    if (pl.W.empty()) return oc;
    const int K = 4;
    CellList big;
    for (int k = -K; k <= K; ++k) {
        auto part = translate(pl.E.cells(), scale(pl.shift, k));
        big.insert(big.end(), part.begin(), part.end());
    }
    big = sorted_unique(std::move(big));
    CellList w;
    for (auto x : big)
        if (cells_contain(pl.ne, x + Cell{1, 1})) w.push_back(x);
    for (auto x : pl.ne)
        if (cells_contain(big, x + Cell{1, 1})) w.push_back(x);
    oc.barW = sorted_unique(std::move(w));
    return oc;
}

}  // namespace

OverlapShapes overlap_shapes(const WPlacement& pl) {
    auto oc = overlap_cells(pl);
    OverlapShapes os;
    try {
        os.barW = SkewDiagram::from_cells(oc.barW);
        os.barO = SkewDiagram::from_cells(oc.barO);
    } catch (const InvalidInput&) {
        throw HypothesisFailure("overlap shapes are not skew diagrams");
    }
    return os;
}

HypothesisReport check_hypotheses(const WPlacement& pl) {
    HypothesisReport rep;
    const CellList& E = pl.E.cells();
    rep.h5_required = pl.kase == AttachCase::a || pl.kase == AttachCase::b;
    if (pl.W.empty()) {
        rep.h[0] = true;
        rep.why[0] = "W is empty";
        rep.h[1] = true;
        rep.why[1] = "vacuous for empty W";
        rep.h[2] = cells_connected(E) && !E.empty();
        rep.why[2] = rep.h[2] ? "E is connected" : "E is not connected";
        auto oc = overlap_cells(pl);
        rep.h[3] = true;
        rep.why[3] = "vacuous: the W overlap is empty";
        rep.h[4] = true;
        rep.why[4] = "vacuous for empty W";
        return rep;
    }

    // I: a strictly larger W' on the same diagonals lying in top and bottom
    {
        std::set<int> diag;
        for (auto x : pl.ne) diag.insert(x.content());
        CellList restricted;
        for (auto x : E)
            if (diag.count(x.content())) restricted.push_back(x);
        rep.h[0] = true;
        rep.why[0] = "no larger W' on the same diagonals";
        int nsz = static_cast<int>(pl.ne.size());
        ne_subshapes(restricted, -1, [&](const CellList& sub) {
            if (!rep.h[0] || static_cast<int>(sub.size()) <= nsz) return;
            std::set<int> d2;
            for (auto x : sub) d2.insert(x.content());
            if (d2 != diag) return;
            bool contains_w = false;
            for (int k = -nsz; k <= nsz && !contains_w; ++k)
                contains_w = cells_subset(translate(pl.ne, {k, k}), sub);
            if (!contains_w) return;
            auto W2 = SkewDiagram::from_cells(sub);
            if (make_placement(pl.E, W2)) {
                rep.h[0] = false;
                rep.why[0] = "W' = " + diagram_str(W2) + " also lies in top and bottom";
            }
        });
    }

    // II
    {
        int gap = min_content(pl.ne) - max_content(pl.sw);
        rep.h[1] = gap >= 2;
        rep.why[1] = "content gap between copies is " + std::to_string(gap);
    }

    // III
    {
        auto ok = [&](const CellList& rest) {
            return !rest.empty() && cells_connected(rest) && is_skew_shape(rest);
        };
        bool a = ok(cells_minus(E, pl.ne)), b = ok(cells_minus(E, pl.sw));
        rep.h[2] = a && b;
        rep.why[2] = rep.h[2] ? "both complements are connected skew diagrams"
                              : std::string("complement of the ") + (a ? "bottom" : "top") +
                                    " copy is not a connected skew diagram";
    }

    // IV
    {
        auto oc = overlap_cells(pl);
        rep.h[3] = true;
        rep.why[3] = "no copy of the O overlap touches a copy of the W overlap";
        for (int k = -3; k <= 3 && rep.h[3]; ++k)
            if (cells_adjacent(oc.barO, translate(oc.barW, scale(pl.shift, k)))) {
                rep.h[3] = false;
                rep.why[3] = "O overlap is adjacent to a W overlap copy shifted " +
                             std::to_string(k) + " times";
            }
    }

    // V
    {
        auto touching = [&](const CellList& w) {
            int n = 0;
            for (auto x : w)
                if (cells_adjacent({x}, pl.O)) ++n;
            return n;
        };
        int lo = touching(pl.sw), hi = touching(pl.ne);
        rep.h[4] = lo == 1 || hi == 1;
        rep.why[4] = "cells adjacent to O: bottom copy " + std::to_string(lo) + ", top copy " +
                     std::to_string(hi);
    }
    return rep;
}

namespace {

// Number of consecutive cells of D to the northwest (dir = -1) or southeast (dir = +1).
int layer(const SkewDiagram& D, Cell d, int dir) {
    int k = 0;
    while (D.contains(d + Cell{dir * (k + 1), dir * (k + 1)})) ++k;
    return k;
}

SkewDiagram finish_compose(CellList cells) {
    cells = sorted_unique(std::move(cells));
    if (!is_skew_shape(cells)) throw HypothesisFailure("composition is not a skew diagram");
    return SkewDiagram::from_cells(std::move(cells));
}

}  // namespace

SkewDiagram compose(const SkewDiagram& D, const WPlacement& pl) {
    if (D.empty()) return pl.W;
    const CellList& E = pl.E.cells();
    CellList out;
    auto put = [&](const CellList& part, Cell off) {
        for (auto x : part) out.push_back(x + off);
    };
    switch (pl.kase) {
        case AttachCase::a:
        case AttachCase::b: {
            Cell dot = pl.shift + (pl.kase == AttachCase::a ? Cell{-1, -1} : Cell{1, 1});
            for (auto d : D.cells()) put(E, scale(pl.shift, d.c) - scale(dot, d.r));
            break;
        }
        case AttachCase::c: {
            // E_d sits at content(d) amalgamation steps plus one diagonal step
            // per northwest-decomposition layer
            auto off = [&](Cell d) { return scale(pl.shift, d.content()) + scale({1, 1}, layer(D, d, -1)); };
            for (auto d : D.cells()) {
                put(E, off(d));
                Cell up = d + Cell{-1, 0};
                if (D.contains(up) && layer(D, up, -1) == layer(D, d, -1))
                    put(pl.ne, off(d) + Cell{1, 1});
            }
            break;
        }
        case AttachCase::d: {
            auto rotated = compose(rotate180(D), rotated_placement(pl));
            return rotate180(rotated);
        }
        default:
            throw HypothesisFailure("placement has no attachment case");
    }
    return finish_compose(std::move(out));
}

SkewDiagram compose_star(const SkewDiagram& D, const WPlacement& pl) {
    if (pl.kase != AttachCase::c) throw HypothesisFailure("star form is defined for case c");
    if (D.empty()) return pl.W;
    CellList out;
    auto off = [&](Cell d) { return scale(pl.shift, d.content()) + scale({1, 1}, layer(D, d, 1)); };
    for (auto d : D.cells()) {
        for (auto x : pl.E.cells()) out.push_back(x + off(d));
        Cell up = d + Cell{-1, 0};
        if (D.contains(up) && layer(D, up, 1) == layer(D, d, 1))
            for (auto x : pl.ne) out.push_back(x + off(d) + Cell{1, 1});
    }
    return finish_compose(std::move(out));
}

std::map<std::vector<int>, Coeff> jacobi_trudi_terms(const SkewDiagram& D) {
    std::map<std::vector<int>, Coeff> terms;
    if (D.empty()) {
        terms[{0}] = 1;
        return terms;
    }
    Partition lam = D.lambda(), mu = D.mu();
    mu.resize(lam.size(), 0);
    const int r = static_cast<int>(lam.size());
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    do {
        std::vector<int> ks;
        bool zero = false;
        for (int i = 0; i < r && !zero; ++i) {
            int k = lam[i] - mu[perm[i]] - i + perm[i];
            if (k < 0) zero = true;
            ks.push_back(k);
        }
        if (zero) continue;
        int inv = 0;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) ++inv;
        std::sort(ks.begin(), ks.end());
        terms[ks] += inv % 2 ? -1 : 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::erase_if(terms, [](const auto& t) { return t.second == 0; });
    return terms;
}

SchurPoly schur_compose(const SkewDiagram& D, const WPlacement& pl) {
    if (D.empty()) return skew_schur(pl.W);
    std::map<int, SkewDiagram> powers;
    auto power_shape = [&](int k) -> const SkewDiagram& {
        auto it = powers.find(k);
        if (it == powers.end()) it = powers.emplace(k, amalg_power(pl, k)).first;
        return it->second;
    };
    Partition lam = D.lambda(), mu = D.mu();
    mu.resize(lam.size(), 0);
    const int r = static_cast<int>(lam.size());
    if (r > 7) {
        std::vector<std::vector<SchurPoly>> m(r, std::vector<SchurPoly>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                int k = lam[i] - mu[j] - i + j;
                if (k >= 0) m[i][j] = skew_schur(power_shape(k));
            }
        return det_schur(m);
    }
    // A product of skew Schur functions is the skew Schur function of the
    // disjoint sum, so each term of the expansion is one LR count.
    SchurPoly out;
    for (auto& [ks, c] : jacobi_trudi_terms(D)) {
        std::vector<SkewDiagram> parts;
        for (int k : ks)
            if (!power_shape(k).empty()) parts.push_back(power_shape(k));
        out += skew_schur(disjoint_sum(parts)).scaled(c);
    }
    return out;
}

std::vector<EnhancedRibbon> enhanced_nw_decomposition(const SkewDiagram& D) {
    auto dec = northwest_decomposition(D);
    std::vector<EnhancedRibbon> out;
    std::map<Cell, std::size_t> which;
    for (std::size_t i = 0; i < dec.ribbons.size(); ++i) {
        out.push_back({dec.ribbons[i], dec.intervals[i].first, dec.intervals[i].second});
        for (auto x : dec.ribbons[i]) which[x] = i;
    }
    CellList se = se_ribbon_cells(D.cells());
    for (auto d : D.cells()) {
        Cell up = d + Cell{-1, 0};
        if (!D.contains(up) || which[up] != which[d]) continue;
        if (cells_contain(se, d) && cells_contain(se, up))
            out.push_back({{}, d.content() + 1, d.content()});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const EnhancedRibbon& a, const EnhancedRibbon& b) { return a.q > b.q; });
    return out;
}

int sign_of(const SkewDiagram& D) {
    auto rib = enhanced_nw_decomposition(D);
    int inv = 0;
    for (std::size_t i = 0; i < rib.size(); ++i)
        for (std::size_t j = i + 1; j < rib.size(); ++j)
            if (rib[i].p < rib[j].p) ++inv;
    return inv % 2 ? -1 : 1;
}

IdentityResult verify_main_identity(const SkewDiagram& D, const WPlacement& pl) {
    IdentityResult res;
    res.composed = compose(D, pl);
    auto ov = overlap_shapes(pl);
    std::vector<SkewDiagram> parts{res.composed};
    if (!ov.barW.empty()) parts.insert(parts.end(), up_body_size(D), ov.barW);
    if (!ov.barO.empty()) parts.insert(parts.end(), nw_body(D).size(), ov.barO);
    SchurPoly lhs = skew_schur(disjoint_sum(parts));
    res.lhs = lhs;
    res.rhs = schur_compose(D, pl);
    if (lhs == res.rhs) {
        res.holds = true;
        res.sign = 1;
    } else if (lhs == -res.rhs) {
        res.holds = true;
        res.sign = -1;
    }
    if (pl.kase == AttachCase::a || pl.kase == AttachCase::b) {
        res.expected_sign = 1;
    } else if (D.empty() || !is_connected(D)) {
        res.expected_sign = 0;
    } else {
        res.expected_sign = sign_of(D);
    }
    res.sign_matches = res.holds && (res.expected_sign == 0 || res.sign == res.expected_sign);
    return res;
}

FactorizationReport factorizations(const SkewDiagram& F, int max_cells) {
    if (static_cast<int>(F.size()) > max_cells)
        throw InvalidInput("factorisation search is capped at " + std::to_string(max_cells) +
                           " cells");
    FactorizationReport rep;
    if (F.empty() || !is_connected(F)) throw InvalidInput("factorisation needs a connected diagram");
    const CellList& cells = F.cells();
    const int f_span = max_content(cells) - min_content(cells);
    const Cell f_sw = sw_cell(cells);

    std::set<SkewDiagram> candidates;
    ne_subshapes(cells, -1, [&](const CellList& sub) {
        Cell t = f_sw - sw_cell(sub);
        if (cells_subset(translate(sub, t), cells)) candidates.insert(SkewDiagram::from_cells(sub));
    });

    std::set<std::tuple<SkewDiagram, SkewDiagram, SkewDiagram>> found;
    for (const auto& E : candidates) {
        const int e_span = max_content(E.cells()) - min_content(E.cells());
        const int max_d = static_cast<int>(F.size() - E.size()) + 1;
        for (auto& pl : find_w_placements(E, {true})) {
            if (pl.kase == AttachCase::none) continue;
            if (!check_hypotheses(pl).overall_I_to_IV()) continue;
            const int a = pl.shift.content();
            if (a <= 0 || (f_span - e_span) % a != 0) continue;
            const int want_diagonals = (f_span - e_span) / a + 1;
            for (int k = 1; k <= max_d; ++k) {
                if (k < want_diagonals) continue;
                for (const auto& D : enumerate_connected(k)) {
                    if (diagonal_count(D.cells()) != want_diagonals) continue;
                    SkewDiagram G;
                    try {
                        G = compose(D, pl);
                    } catch (const InvalidInput&) {
                        continue;
                    }
                    if (G == F) found.insert({D, pl.W, E});
                }
            }
        }
    }
    const SkewDiagram one = make_skew({1}, {});
    for (auto& [D, W, E] : found) {
        Factorization f{D, W, E, false, diagonal_count(W.cells()), diagonal_count(E.cells())};
        f.trivial = D == one || D.empty() || (E == one && W.empty());
        rep.all.push_back(f);
    }
    std::pair<int, int> best{INT_MAX, INT_MAX};
    for (auto& f : rep.all)
        if (!f.trivial) best = std::min(best, {f.w_diagonals, f.e_diagonals});
    for (auto& f : rep.all)
        if (!f.trivial && std::make_pair(f.w_diagonals, f.e_diagonals) == best)
            rep.minimal.push_back(f);
    return rep;
}

}  // namespace skewkit
