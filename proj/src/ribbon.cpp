#include "skewkit/ribbon.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace skewkit {

std::string kind_name(DecompKind k) {
    switch (k) {
        case DecompKind::Southeast: return "se";
        case DecompKind::Northwest: return "nw";
        case DecompKind::JacobiTrudi: return "jt";
    }
    return "?";
}

DecompKind parse_kind(const std::string& s) {
    if (s == "se") return DecompKind::Southeast;
    if (s == "nw") return DecompKind::Northwest;
    if (s == "jt") return DecompKind::JacobiTrudi;
    throw InvalidInput("unknown decomposition kind '" + s + "' (expected nw, se or jt)");
}

namespace {

enum Dir : signed char { Unset = 0, North = 1, East = 2 };

void content_range(const CellList& cells, int& lo, int& hi) {
    lo = INT_MAX;
    hi = INT_MIN;
    for (auto x : cells) {
        lo = std::min(lo, x.content());
        hi = std::max(hi, x.content());
    }
}

// Builds intervals, directions and the cutting strip from the ribbons.
void finish(const CellList& d, OutsideDecomposition& dec) {
    content_range(d, dec.min_content, dec.max_content);
    const int lo = dec.min_content;
    std::vector<Dir> dir(dec.max_content - lo + 1, Unset);
    dec.directions_consistent = true;
    if (dec.kind != DecompKind::JacobiTrudi) dec.intervals.clear();
    for (auto& rib : dec.ribbons) {
        if (dec.kind != DecompKind::JacobiTrudi) {
            int p, q;
            content_range(rib, p, q);
            dec.intervals.push_back({p, q});
        }
        for (auto x : rib) {
            Dir here;
            if (cells_contain(rib, x + Cell{-1, 0})) here = North;
            else if (cells_contain(rib, x + Cell{0, 1})) here = East;
            else if (!cells_contain(d, x + Cell{0, 1})) here = East;
            else here = North;
            if (x.content() == dec.max_content) continue;  // last diagonal has no successor
            auto& slot = dir[x.content() - lo];
            if (slot == Unset) slot = here;
            else if (slot != here) dec.directions_consistent = false;
        }
    }
    dec.strip.clear();
    Cell at{0, lo};
    for (int c = lo; c <= dec.max_content; ++c) {
        dec.strip.push_back(at);
        if (dir[c - lo] == North) at = at + Cell{-1, 0};
        else at = at + Cell{0, 1};
    }
    dec.strip = sorted_unique(dec.strip);
}

void require_connected(const SkewDiagram& d) {
    if (!is_connected(d)) throw InvalidInput("decomposition requires a connected diagram");
}

void peel(const CellList& comp, bool northwest, std::vector<CellList>& out) {
    if (comp.empty()) return;
    CellList rib = northwest ? nw_ribbon_cells(comp) : se_ribbon_cells(comp);
    out.push_back(rib);
    auto rest = cells_components(cells_minus(comp, rib));
    // southwest to northeast
    std::sort(rest.begin(), rest.end(), [](const CellList& a, const CellList& b) {
        return sw_cell(a).content() < sw_cell(b).content();
    });
    for (auto& c : rest) peel(c, northwest, out);
}

}  // namespace

OutsideDecomposition southeast_decomposition(const SkewDiagram& d) {
    require_connected(d);
    OutsideDecomposition dec;
    dec.kind = DecompKind::Southeast;
    peel(d.cells(), false, dec.ribbons);
    finish(d.cells(), dec);
    return dec;
}

OutsideDecomposition northwest_decomposition(const SkewDiagram& d) {
    require_connected(d);
    OutsideDecomposition dec;
    dec.kind = DecompKind::Northwest;
    peel(d.cells(), true, dec.ribbons);
    finish(d.cells(), dec);
    return dec;
}

OutsideDecomposition jacobi_trudi_decomposition(const SkewDiagram& d) {
    OutsideDecomposition dec;
    dec.kind = DecompKind::JacobiTrudi;
    if (d.empty()) return dec;
    Partition lam = d.lambda(), mu = d.mu();
    mu.resize(lam.size(), 0);
    for (std::size_t i = 0; i < lam.size(); ++i) {
        CellList row;
        for (int j = mu[i]; j < lam[i]; ++j) row.push_back({static_cast<int>(i), j});
        dec.ribbons.push_back(row);
        int r = static_cast<int>(i);
        dec.intervals.push_back({mu[i] - r, lam[i] - 1 - r});
    }
    finish(d.cells(), dec);
    // rows only ever go east
    dec.strip.clear();
    for (int c = dec.min_content; c <= dec.max_content; ++c) dec.strip.push_back({0, c});
    dec.directions_consistent = true;
    return dec;
}

OutsideDecomposition decompose(const SkewDiagram& d, DecompKind kind) {
    switch (kind) {
        case DecompKind::Southeast: return southeast_decomposition(d);
        case DecompKind::Northwest: return northwest_decomposition(d);
        case DecompKind::JacobiTrudi: return jacobi_trudi_decomposition(d);
    }
    throw InvalidInput("unknown decomposition kind");
}

StripInterval strip_interval(const OutsideDecomposition& dec, int p, int q) {
    StripInterval s;
    s.p = p;
    s.q = q;
    if (p == q + 1) {
        s.kind = StripInterval::Kind::Empty;
    } else if (p > q + 1) {
        s.kind = StripInterval::Kind::Undefined;
    } else {
        s.kind = StripInterval::Kind::Ribbon;
        for (auto x : dec.strip)
            if (x.content() >= p && x.content() <= q) s.cells.push_back(x);
        if (static_cast<int>(s.cells.size()) != q - p + 1)
            throw InvalidInput("strip interval outside the cutting strip");
    }
    return s;
}

StripInterval hash_op(const OutsideDecomposition& dec, std::size_t i, std::size_t j) {
    return strip_interval(dec, dec.intervals.at(j).first, dec.intervals.at(i).second);
}

SchurPoly strip_schur(const StripInterval& s) {
    switch (s.kind) {
        case StripInterval::Kind::Empty: return SchurPoly::one();
        case StripInterval::Kind::Undefined: return SchurPoly::zero();
        case StripInterval::Kind::Ribbon: return skew_schur(SkewDiagram::from_cells(s.cells));
    }
    return {};
}

HamelGoulden hamel_goulden(const SkewDiagram&, const OutsideDecomposition& dec) {
    HamelGoulden hg;
    const std::size_t m = dec.intervals.size();
    std::map<std::pair<int, int>, SchurPoly> memo;
    hg.entries.assign(m, {});
    hg.matrix.assign(m, {});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto s = hash_op(dec, i, j);
            auto key = std::make_pair(s.p, s.q);
            auto it = memo.find(key);
            if (it == memo.end()) it = memo.emplace(key, strip_schur(s)).first;
            hg.entries[i].push_back(std::move(s));
            hg.matrix[i].push_back(it->second);
        }
    hg.det = det_schur(hg.matrix);
    return hg;
}

}  // namespace skewkit
