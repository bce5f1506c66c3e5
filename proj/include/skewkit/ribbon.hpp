#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "skewkit/diagram.hpp"
#include "skewkit/schur.hpp"

namespace skewkit {

enum class DecompKind { Southeast, Northwest, JacobiTrudi };

std::string kind_name(DecompKind k);
DecompKind parse_kind(const std::string& s);  // "se" | "nw" | "jt"

struct OutsideDecomposition {
    DecompKind kind = DecompKind::Northwest;
    // Ribbons in the coordinates of the decomposed diagram. Jacobi-Trudi rows
    // that are empty (λ_i = μ_i) appear as empty entries.
    std::vector<CellList> ribbons;
    // Content interval [p, q] per ribbon; an empty ribbon has p = q + 1.
    std::vector<std::pair<int, int>> intervals;
    // Cutting strip, one cell per content in [min_content, max_content].
    CellList strip;
    int min_content = 0;
    int max_content = -1;
    // Every cell on a diagonal agreed on going north or east.
    bool directions_consistent = true;
};

struct StripInterval {
    enum class Kind { Ribbon, Empty, Undefined };
    int p = 0;
    int q = 0;
    Kind kind = Kind::Undefined;
    CellList cells;
};

OutsideDecomposition southeast_decomposition(const SkewDiagram& d);
OutsideDecomposition northwest_decomposition(const SkewDiagram& d);
OutsideDecomposition jacobi_trudi_decomposition(const SkewDiagram& d);
OutsideDecomposition decompose(const SkewDiagram& d, DecompKind kind);

StripInterval strip_interval(const OutsideDecomposition& dec, int p, int q);
// θ_i # θ_j = θ[p(θ_j), q(θ_i)]
StripInterval hash_op(const OutsideDecomposition& dec, std::size_t i, std::size_t j);
SchurPoly strip_schur(const StripInterval& s);

struct HamelGoulden {
    std::vector<std::vector<StripInterval>> entries;
    std::vector<std::vector<SchurPoly>> matrix;
    SchurPoly det;
};

HamelGoulden hamel_goulden(const SkewDiagram& d, const OutsideDecomposition& dec);

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Matrix<T> out(rows.size(), std::vector<T>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = m[rows[i]][cols[j]];
    return out;
}

// syl(M,S)_{ij} = det M[S ∪ {i}, S ∪ {j}] for i, j outside S.
template <class T>
Matrix<T> sylvester_matrix(const Matrix<T>& m, const std::vector<int>& s, const T& zero,
                           const T& one, const std::function<bool(const T&)>& is_zero) {
    const int n = static_cast<int>(m.size());
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (std::find(s.begin(), s.end(), i) == s.end()) rest.push_back(i);
    Matrix<T> out(rest.size(), std::vector<T>(rest.size(), zero));
    for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = 0; b < rest.size(); ++b) {
            std::vector<int> rows = s, cols = s;
            rows.push_back(rest[a]);
            cols.push_back(rest[b]);
            std::sort(rows.begin(), rows.end());
            std::sort(cols.begin(), cols.end());
            out[a][b] = determinant<T>(submatrix(m, rows, cols), zero, one, is_zero);
        }
    return out;
}

// det(M) det(M[S,S])^{n-|S|-1} == det(syl(M,S)); S must leave at least one index out.
template <class T>
bool sylvester_check(const Matrix<T>& m, std::vector<int> s, const T& zero, const T& one,
                     const std::function<bool(const T&)>& is_zero) {
    const int n = static_cast<int>(m.size());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int x : s)
        if (x < 0 || x >= n) throw InvalidInput("subset index out of range");
    if (static_cast<int>(s.size()) >= n) throw InvalidInput("subset must omit an index");
    T lhs = determinant<T>(m, zero, one, is_zero);
    T base = determinant<T>(submatrix(m, s, s), zero, one, is_zero);
    for (int k = 0; k < n - static_cast<int>(s.size()) - 1; ++k) lhs = lhs * base;
    T rhs = determinant<T>(sylvester_matrix(m, s, zero, one, is_zero), zero, one, is_zero);
    return lhs == rhs;
}

}  // namespace skewkit
