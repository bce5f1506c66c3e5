#include "skewkit/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

#include "skewkit/json_io.hpp"

namespace skewkit {

int max_cells_cap() {
    if (const char* env = std::getenv("SKEWKIT_MAX_CELLS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
    }
    return 12;
}

namespace {

std::mutex g_enum_mutex;
std::map<int, std::vector<SkewDiagram>> g_enum_cache;

// Rows listed bottom to top as [left, right]; the bottom row starts at column 0.
void grow(int remaining, int l, int r, std::vector<std::pair<int, int>>& rows,
          std::vector<SkewDiagram>& out) {
    if (remaining == 0) {
        CellList cells;
        int h = static_cast<int>(rows.size());
        for (int k = 0; k < h; ++k)
            for (int c = rows[k].first; c <= rows[k].second; ++c) cells.push_back({h - 1 - k, c});
        out.push_back(SkewDiagram::from_cells(std::move(cells)));
        return;
    }
    // next row up: left in [l, r], right >= r, length <= remaining
    for (int nl = l; nl <= r; ++nl)
        for (int nr = std::max(r, nl); nr - nl + 1 <= remaining; ++nr) {
            rows.push_back({nl, nr});
            grow(remaining - (nr - nl + 1), nl, nr, rows, out);
            rows.pop_back();
        }
}

}  // namespace

const std::vector<SkewDiagram>& enumerate_connected(int n) {
    if (n < 1) throw InvalidInput("cell count must be positive");
    std::lock_guard lock(g_enum_mutex);
    auto it = g_enum_cache.find(n);
    if (it != g_enum_cache.end()) return it->second;
    std::vector<SkewDiagram> out;
    std::vector<std::pair<int, int>> rows;
    for (int len = 1; len <= n; ++len) {
        rows.push_back({0, len - 1});
        grow(n - len, 0, len - 1, rows, out);
        rows.pop_back();
    }
    std::sort(out.begin(), out.end());
    return g_enum_cache.emplace(n, std::move(out)).first->second;
}

ClassInvariants invariants_of(const SkewDiagram& d) {
    ClassInvariants inv;
    inv.cells = static_cast<int>(d.size());
    inv.rows = d.rows();
    inv.row_lengths = d.row_lengths();
    inv.nw_body = static_cast<int>(nw_body(d).size());
    return inv;
}

namespace {

std::vector<EquivalenceClass> group(const std::vector<SkewDiagram>& diagrams, int workers) {
    std::vector<SchurPoly> polys(diagrams.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < diagrams.size();) polys[i] = skew_schur(diagrams[i]);
    };
    workers = std::max(1, workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    std::map<std::string, EquivalenceClass> by_key;
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        std::string key = schur_to_json(polys[i]).dump();
        auto [it, inserted] = by_key.try_emplace(key);
        if (inserted) {
            it->second.fingerprint = polys[i];
            it->second.fingerprint_key = key;
            it->second.invariants = invariants_of(diagrams[i]);
        }
        it->second.members.push_back(diagrams[i]);
    }
    std::vector<EquivalenceClass> out;
    for (auto& [k, cls] : by_key) {
        std::sort(cls.members.begin(), cls.members.end());
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace

std::vector<EquivalenceClass> classify_exact(int n, int workers) {
    if (n > max_cells_cap())
        throw InvalidInput("cell count " + std::to_string(n) + " exceeds the cap " +
                           std::to_string(max_cells_cap()) + " (set SKEWKIT_MAX_CELLS)");
    return group(enumerate_connected(n), workers);
}

std::vector<EquivalenceClass> classify(int n, int workers) {
    if (n > max_cells_cap())
        throw InvalidInput("cell count " + std::to_string(n) + " exceeds the cap " +
                           std::to_string(max_cells_cap()) + " (set SKEWKIT_MAX_CELLS)");
    std::vector<SkewDiagram> all;
    for (int m = 1; m <= n; ++m) {
        auto& part = enumerate_connected(m);
        all.insert(all.end(), part.begin(), part.end());
    }
    return group(all, workers);
}

ClassCheck check_class_invariants(const EquivalenceClass& cls) {
    ClassCheck chk;
    if (cls.members.empty()) return chk;
    auto ref = invariants_of(cls.members.front());
    for (auto& m : cls.members) {
        auto inv = invariants_of(m);
        if (inv == ref) continue;
        chk.ok = false;
        chk.detail = diagram_str(m) + " differs from " + diagram_str(cls.members.front()) + " in";
        if (inv.cells != ref.cells) chk.detail += " cell count";
        if (inv.rows != ref.rows) chk.detail += " row count";
        if (inv.row_lengths != ref.row_lengths) chk.detail += " row lengths";
        if (inv.nw_body != ref.nw_body) chk.detail += " nw-body size";
        return chk;
    }
    return chk;
}

bool is_power_of_two(std::size_t n) { return n && !(n & (n - 1)); }

bool is_rotation_class(const EquivalenceClass& cls) {
    if (cls.members.size() > 2) return false;
    if (cls.members.size() == 1) return true;
    return rotate180(cls.members[0]) == cls.members[1];
}

RotationEquivalenceResult verify_rotation_equivalence(const SkewDiagram& D, const SkewDiagram& Dp,
                                                      const WPlacement& pl) {
    RotationEquivalenceResult res;
    if (skew_schur(D) != skew_schur(Dp)) {
        res.precondition_detail = "D and D' are not skew-equivalent";
        return res;
    }
    auto rep = check_hypotheses(pl);
    if (!rep.overall_I_to_V()) {
        res.precondition_detail = "E does not satisfy Hypotheses I-V";
        for (int i = 0; i < 5; ++i)
            if (!rep.h[i]) res.precondition_detail += "; " + rep.why[i];
        return res;
    }
    res.precondition_ok = true;
    res.left = compose(D, pl);
    res.right = compose(Dp, pl);
    res.rotated = compose(D, rotated_placement(pl));
    auto s = skew_schur(res.left);
    res.equivalent = s == skew_schur(res.right) && s == skew_schur(res.rotated);
    return res;
}

std::vector<SkewDiagram> transpose_equivalences(int n) {
    std::vector<SkewDiagram> out;
    for (int m = 1; m <= n; ++m)
        for (auto& F : enumerate_connected(m)) {
            auto Ft = transpose(F);
            if (Ft == F) continue;
            auto s = skew_schur(F);
            if (s == skew_schur(Ft)) out.push_back(F);
        }
    return out;
}

bool verify_transpose_prop(const SkewDiagram& D, const WPlacement& pl) {
    if (pl.W.empty()) throw InvalidInput("W must be nonempty");
    if (transpose(pl.E) != pl.E || transpose(pl.W) != pl.W)
        throw InvalidInput("E and W must be self-transpose");
    if (!check_hypotheses(pl).overall_I_to_IV()) throw HypothesisFailure("Hypotheses I-IV fail");
    auto F = compose(D, pl);
    return skew_schur(F) == skew_schur(transpose(F));
}

}  // namespace skewkit
