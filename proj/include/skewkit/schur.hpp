#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "skewkit/diagram.hpp"

namespace skewkit {

using Coeff = long long;

// Finitely supported map Partition -> nonzero integer, in the Schur basis.
class SchurPoly {
public:
    using Terms = std::map<Partition, Coeff>;

    SchurPoly() = default;
    static SchurPoly zero() { return {}; }
    static SchurPoly one() { return term({}, 1); }
    static SchurPoly term(const Partition& p, Coeff c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(const Partition& p) const;
    void add(const Partition& p, Coeff c);
    // Size of each partition if homogeneous, -1 otherwise (0 for zero).
    int degree() const;

    SchurPoly operator+(const SchurPoly& o) const;
    SchurPoly operator-(const SchurPoly& o) const;
    SchurPoly operator-() const;
    SchurPoly operator*(const SchurPoly& o) const;
    SchurPoly& operator+=(const SchurPoly& o);
    SchurPoly& operator-=(const SchurPoly& o);
    SchurPoly scaled(Coeff k) const;
    bool operator==(const SchurPoly& o) const = default;

    std::string str() const;  // "s(2,1) + 2 s(3)"

private:
    Terms terms_;
};

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

// Counts of LR fillings of λ/μ grouped by content ν.
std::map<Partition, Coeff> lr_fillings(const Partition& lambda, const Partition& mu);
// Same counts by plain tableau backtracking; slow, kept as a cross-check.
std::map<Partition, Coeff> lr_fillings_backtrack(const Partition& lambda, const Partition& mu);
Coeff lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
// s_mu * s_nu, cached.
const SchurPoly& lr_product(const Partition& mu, const Partition& nu);

SchurPoly skew_schur(const SkewDiagram& d);
SchurPoly multiply(const SchurPoly& f, const SchurPoly& g);
SchurPoly power(const SchurPoly& f, int k);
SchurPoly omega(const SchurPoly& f);

// Dense polynomial in nvars variables: exponent vector -> coefficient.
using MonomialPoly = std::map<std::vector<int>, Coeff>;
// Truncation of s_D to nvars variables by enumerating semistandard fillings.
MonomialPoly monomial_oracle(const SkewDiagram& d, int nvars);
// Evaluation of a Schur expansion in nvars variables.
MonomialPoly schur_to_monomials(const SchurPoly& f, int nvars);

// Determinant by Laplace expansion along rows, memoised on column subsets.
// Works over any commutative ring supplying +, -, * and an is_zero test.
template <class T>
T determinant(const std::vector<std::vector<T>>& m, const T& zero, const T& one,
              const std::function<bool(const T&)>& is_zero);

// Entries may be the zero polynomial ("undefined") or one ("empty").
SchurPoly det_schur(const std::vector<std::vector<SchurPoly>>& m);
long long det_int(const std::vector<std::vector<long long>>& m);

}  // namespace skewkit

#include "skewkit/detail/determinant.tpp"
