#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewkit {

class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
bool contains(const Partition& lambda, const Partition& mu);
std::string partition_str(const Partition& p);

struct Cell {
    int r = 0;
    int c = 0;
    auto operator<=>(const Cell&) const = default;
    Cell operator+(const Cell& o) const { return {r + o.r, c + o.c}; }
    Cell operator-(const Cell& o) const { return {r - o.r, c - o.c}; }
    int content() const { return c - r; }
};

using CellList = std::vector<Cell>;  // sorted, unique

CellList sorted_unique(CellList cells);
CellList translate(const CellList& cells, Cell by);
bool cells_contain(const CellList& sorted, Cell x);
CellList cells_union(const CellList& a, const CellList& b);
CellList cells_minus(const CellList& a, const CellList& b);
CellList cells_intersect(const CellList& a, const CellList& b);
bool cells_subset(const CellList& a, const CellList& b);
bool cells_connected(const CellList& cells);
std::vector<CellList> cells_components(const CellList& cells);
bool cells_adjacent(const CellList& a, const CellList& b);
// True when the cell set is λ/μ for some partitions, in some translate.
bool is_skew_shape(const CellList& cells);
// Northeasternmost (first row, last column) and southwesternmost cells.
Cell ne_cell(const CellList& cells);
Cell sw_cell(const CellList& cells);

// A skew diagram in canonical position: min occupied row and column are 0.
class SkewDiagram {
public:
    SkewDiagram() = default;
    // Throws InvalidInput unless the cells form a skew shape.
    static SkewDiagram from_cells(CellList cells);
    static SkewDiagram from_partitions(const Partition& lambda, const Partition& mu);

    const CellList& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    int rows() const;  // occupied rows
    int cols() const;  // occupied columns
    bool contains(Cell x) const { return cells_contain(cells_, x); }

    // λ/μ with λ₁ and ℓ(λ) minimal.
    Partition lambda() const;
    Partition mu() const;
    // Row-length multiset, sorted decreasingly.
    std::vector<int> row_lengths() const;

    auto operator<=>(const SkewDiagram&) const = default;
    bool operator==(const SkewDiagram&) const = default;

private:
    CellList cells_;
};

SkewDiagram make_skew(const Partition& lambda, const Partition& mu);
bool is_connected(const SkewDiagram& d);
SkewDiagram transpose(const SkewDiagram& d);
SkewDiagram rotate180(const SkewDiagram& d);
CellList transpose_cells(const CellList& cells);
CellList rotate_cells(const CellList& cells);

// Border ribbons; cell sets are in the coordinates of d.
CellList nw_ribbon_cells(const CellList& cells);
CellList se_ribbon_cells(const CellList& cells);
SkewDiagram nw_ribbon(const SkewDiagram& d);
SkewDiagram se_ribbon(const SkewDiagram& d);
SkewDiagram nw_body(const SkewDiagram& d);
int up_body_size(const SkewDiagram& d);

std::vector<int> contents(const SkewDiagram& d);  // sorted
bool is_ribbon(const SkewDiagram& d);
bool cells_is_ribbon(const CellList& cells);

// Diagrams with connected components placed far apart diagonally.
SkewDiagram disjoint_sum(const std::vector<SkewDiagram>& parts);

// Text rendering with "×" for cells and "w" for marked cells.
std::string render(const CellList& cells, const CellList& marked = {});
std::string render(const SkewDiagram& d);
std::string diagram_str(const SkewDiagram& d);  // "(λ)/(μ)"

}  // namespace skewkit
