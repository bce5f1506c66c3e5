#include "skewkit/diagram.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>

namespace skewkit {

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

int partition_size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

Partition conjugate(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    out.assign(p[0], 0);
    for (int x : p)
        for (int j = 0; j < x; ++j) ++out[j];
    return out;
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.size() > lambda.size()) return false;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

std::string partition_str(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

CellList sorted_unique(CellList cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

CellList translate(const CellList& cells, Cell by) {
    CellList out;
    out.reserve(cells.size());
    for (auto x : cells) out.push_back(x + by);
    return out;
}

bool cells_contain(const CellList& sorted, Cell x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

CellList cells_union(const CellList& a, const CellList& b) {
    CellList out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

CellList cells_minus(const CellList& a, const CellList& b) {
    CellList out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

CellList cells_intersect(const CellList& a, const CellList& b) {
    CellList out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool cells_subset(const CellList& a, const CellList& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

static const Cell kSteps[4] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};

std::vector<CellList> cells_components(const CellList& cells) {
    std::vector<CellList> comps;
    std::vector<char> seen(cells.size(), 0);
    auto index_of = [&](Cell x) -> long {
        auto it = std::lower_bound(cells.begin(), cells.end(), x);
        if (it == cells.end() || *it != x) return -1;
        return it - cells.begin();
    };
    for (std::size_t s = 0; s < cells.size(); ++s) {
        if (seen[s]) continue;
        CellList comp;
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            auto k = stack.back();
            stack.pop_back();
            comp.push_back(cells[k]);
            for (auto st : kSteps) {
                long n = index_of(cells[k] + st);
                if (n >= 0 && !seen[n]) {
                    seen[n] = 1;
                    stack.push_back(static_cast<std::size_t>(n));
                }
            }
        }
        comps.push_back(sorted_unique(std::move(comp)));
    }
    return comps;
}

bool cells_connected(const CellList& cells) {
    if (cells.empty()) return true;
    return cells_components(cells).size() == 1;
}

bool cells_adjacent(const CellList& a, const CellList& b) {
    for (auto x : a)
        for (auto st : kSteps)
            if (cells_contain(b, x + st)) return true;
    return false;
}

namespace {

// Per occupied row: [left, right] inclusive. Requires sorted cells.
struct RowSpan {
    int row, left, right;
    bool contiguous;
};

std::vector<RowSpan> row_spans(const CellList& cells) {
    std::vector<RowSpan> spans;
    for (std::size_t i = 0; i < cells.size();) {
        std::size_t j = i;
        bool contig = true;
        while (j + 1 < cells.size() && cells[j + 1].r == cells[i].r) {
            if (cells[j + 1].c != cells[j].c + 1) contig = false;
            ++j;
        }
        spans.push_back({cells[i].r, cells[i].c, cells[j].c, contig});
        i = j + 1;
    }
    return spans;
}

}  // namespace

bool is_skew_shape(const CellList& cells) {
    auto spans = row_spans(cells);
    for (std::size_t i = 0; i < spans.size(); ++i) {
        if (!spans[i].contiguous) return false;
        if (i == 0) continue;
        const auto& a = spans[i - 1];
        const auto& b = spans[i];
        if (b.row == a.row + 1) {
            if (b.left > a.left || b.right > a.right) return false;
        } else {
            // empty rows in between: b must sit weakly west of a's left end
            if (b.right + 1 > a.left) return false;
        }
    }
    return true;
}

Cell ne_cell(const CellList& cells) {
    // first row, last cell of it
    Cell best = cells.front();
    for (auto x : cells)
        if (x.r == best.r) best = x;
        else break;
    return best;
}

Cell sw_cell(const CellList& cells) {
    Cell last = cells.back();
    for (auto it = cells.rbegin(); it != cells.rend(); ++it)
        if (it->r == last.r) last = *it;
        else break;
    return last;
}

SkewDiagram SkewDiagram::from_cells(CellList cells) {
    cells = sorted_unique(std::move(cells));
    if (!is_skew_shape(cells)) throw InvalidInput("cell set is not a skew shape");
    SkewDiagram d;
    if (cells.empty()) return d;
    int r0 = INT_MAX, c0 = INT_MAX;
    for (auto x : cells) {
        r0 = std::min(r0, x.r);
        c0 = std::min(c0, x.c);
    }
    d.cells_ = translate(cells, {-r0, -c0});
    return d;
}

SkewDiagram SkewDiagram::from_partitions(const Partition& lambda, const Partition& mu) {
    return make_skew(lambda, mu);
}

int SkewDiagram::rows() const {
    if (cells_.empty()) return 0;
    int n = 1;
    for (std::size_t i = 1; i < cells_.size(); ++i)
        if (cells_[i].r != cells_[i - 1].r) ++n;
    return n;
}

int SkewDiagram::cols() const {
    std::vector<int> cs;
    for (auto x : cells_) cs.push_back(x.c);
    std::sort(cs.begin(), cs.end());
    return static_cast<int>(std::unique(cs.begin(), cs.end()) - cs.begin());
}

namespace {

void lambda_mu(const CellList& cells, std::vector<int>& lam, std::vector<int>& mu) {
    int nrows = cells.back().r + 1;
    lam.assign(nrows, -1);
    mu.assign(nrows, -1);
    for (auto x : cells) {
        lam[x.r] = std::max(lam[x.r], x.c + 1);
        if (mu[x.r] < 0 || x.c < mu[x.r]) mu[x.r] = x.c;
    }
    // an empty row inside the bounding box gets λ_i = μ_i = λ_{i+1}
    for (int i = nrows - 1; i >= 0; --i)
        if (lam[i] < 0) lam[i] = mu[i] = lam[i + 1];
}

}  // namespace

Partition SkewDiagram::lambda() const {
    if (cells_.empty()) return {};
    std::vector<int> lam, mu;
    lambda_mu(cells_, lam, mu);
    return lam;
}

Partition SkewDiagram::mu() const {
    if (cells_.empty()) return {};
    std::vector<int> lam, mu;
    lambda_mu(cells_, lam, mu);
    Partition out;
    for (int m : mu)
        if (m > 0) out.push_back(m);
    return out;
}

std::vector<int> SkewDiagram::row_lengths() const {
    std::vector<int> out;
    for (auto& s : row_spans(cells_)) out.push_back(s.right - s.left + 1);
    std::sort(out.rbegin(), out.rend());
    return out;
}

SkewDiagram make_skew(const Partition& lambda, const Partition& mu) {
    if (!is_partition(lambda) || !is_partition(mu))
        throw InvalidInput("not a partition");
    if (!contains(lambda, mu))
        throw InvalidInput("mu " + partition_str(mu) + " is not contained in lambda " +
                           partition_str(lambda));
    CellList cells;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        int m = i < mu.size() ? mu[i] : 0;
        for (int j = m; j < lambda[i]; ++j) cells.push_back({static_cast<int>(i), j});
    }
    return SkewDiagram::from_cells(std::move(cells));
}

bool is_connected(const SkewDiagram& d) { return cells_connected(d.cells()); }

CellList transpose_cells(const CellList& cells) {
    CellList out;
    for (auto x : cells) out.push_back({x.c, x.r});
    return sorted_unique(std::move(out));
}

CellList rotate_cells(const CellList& cells) {
    CellList out;
    for (auto x : cells) out.push_back({-x.r, -x.c});
    return sorted_unique(std::move(out));
}

SkewDiagram transpose(const SkewDiagram& d) {
    return SkewDiagram::from_cells(transpose_cells(d.cells()));
}

SkewDiagram rotate180(const SkewDiagram& d) {
    return SkewDiagram::from_cells(rotate_cells(d.cells()));
}

CellList nw_ribbon_cells(const CellList& cells) {
    CellList out;
    for (auto x : cells)
        if (!cells_contain(cells, x - Cell{1, 1})) out.push_back(x);
    return out;
}

CellList se_ribbon_cells(const CellList& cells) {
    CellList out;
    for (auto x : cells)
        if (!cells_contain(cells, x + Cell{1, 1})) out.push_back(x);
    return out;
}

static void require_connected(const SkewDiagram& d) {
    if (!is_connected(d)) throw InvalidInput("diagram must be connected");
}

SkewDiagram nw_ribbon(const SkewDiagram& d) {
    require_connected(d);
    return SkewDiagram::from_cells(nw_ribbon_cells(d.cells()));
}

SkewDiagram se_ribbon(const SkewDiagram& d) {
    require_connected(d);
    return SkewDiagram::from_cells(se_ribbon_cells(d.cells()));
}

SkewDiagram nw_body(const SkewDiagram& d) {
    return SkewDiagram::from_cells(cells_minus(d.cells(), se_ribbon_cells(d.cells())));
}

int up_body_size(const SkewDiagram& d) {
    int n = 0;
    for (auto x : d.cells())
        if (d.contains(x + Cell{1, 0})) ++n;
    return n;
}

std::vector<int> contents(const SkewDiagram& d) {
    std::vector<int> out;
    for (auto x : d.cells()) out.push_back(x.content());
    std::sort(out.begin(), out.end());
    return out;
}

bool cells_is_ribbon(const CellList& cells) {
    if (cells.empty() || !cells_connected(cells)) return false;
    for (auto x : cells)
        if (cells_contain(cells, x + Cell{1, 1}) && cells_contain(cells, x + Cell{0, 1}) &&
            cells_contain(cells, x + Cell{1, 0}))
            return false;
    return true;
}

bool is_ribbon(const SkewDiagram& d) { return cells_is_ribbon(d.cells()); }

SkewDiagram disjoint_sum(const std::vector<SkewDiagram>& parts) {
    // later parts go strictly northeast of earlier ones
    CellList out;
    int width = 0;
    int total_rows = 0;
    for (auto& p : parts)
        if (!p.empty()) total_rows += p.cells().back().r + 1;
    int row_base = total_rows;
    for (auto& p : parts) {
        if (p.empty()) continue;
        int h = p.cells().back().r + 1;
        row_base -= h;
        int w = 0;
        for (auto x : p.cells()) {
            out.push_back({x.r + row_base, x.c + width});
            w = std::max(w, x.c + 1);
        }
        width += w;
    }
    return SkewDiagram::from_cells(std::move(out));
}

std::string render(const CellList& cells, const CellList& marked) {
    if (cells.empty()) return "(empty)\n";
    int r0 = INT_MAX, c0 = INT_MAX, r1 = INT_MIN, c1 = INT_MIN;
    for (auto x : cells) {
        r0 = std::min(r0, x.r);
        r1 = std::max(r1, x.r);
        c0 = std::min(c0, x.c);
        c1 = std::max(c1, x.c);
    }
    std::string out;
    for (int r = r0; r <= r1; ++r) {
        std::string line;
        for (int c = c0; c <= c1; ++c) {
            Cell x{r, c};
            if (cells_contain(marked, x)) line += "w";
            else if (cells_contain(cells, x)) line += "×";
            else line += ".";
        }
        // trailing dots carry no information
        while (!line.empty() && line.back() == '.') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string render(const SkewDiagram& d) { return render(d.cells()); }

std::string diagram_str(const SkewDiagram& d) {
    return partition_str(d.lambda()) + "/" + partition_str(d.mu());
}

}  // namespace skewkit
