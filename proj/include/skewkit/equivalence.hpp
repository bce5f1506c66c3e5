#pragma once

#include <string>
#include <vector>

#include "skewkit/composition.hpp"
#include "skewkit/diagram.hpp"
#include "skewkit/schur.hpp"

namespace skewkit {

int max_cells_cap();  // SKEWKIT_MAX_CELLS, default 12

// All connected skew diagrams with n cells, canonical, sorted, cached.
const std::vector<SkewDiagram>& enumerate_connected(int n);

struct ClassInvariants {
    int cells = 0;
    int rows = 0;
    std::vector<int> row_lengths;
    int nw_body = 0;
    bool operator==(const ClassInvariants&) const = default;
};
ClassInvariants invariants_of(const SkewDiagram& d);

struct EquivalenceClass {
    std::vector<SkewDiagram> members;  // sorted
    SchurPoly fingerprint;
    std::string fingerprint_key;  // sorted JSON serialisation
    ClassInvariants invariants;
};

// Classes of connected diagrams with 1..n cells, ordered by fingerprint key.
std::vector<EquivalenceClass> classify(int n, int workers = 1);
// Classes with exactly n cells.
std::vector<EquivalenceClass> classify_exact(int n, int workers = 1);

struct ClassCheck {
    bool ok = true;
    std::string detail;
};
ClassCheck check_class_invariants(const EquivalenceClass& cls);

bool is_power_of_two(std::size_t n);
// Members not related to each other by 180° rotation.
bool is_rotation_class(const EquivalenceClass& cls);

struct RotationEquivalenceResult {
    bool precondition_ok = false;
    std::string precondition_detail;
    bool equivalent = false;
    SkewDiagram left;       // D ∘_W E
    SkewDiagram right;      // D' ∘_W E
    SkewDiagram rotated;    // D ∘_{W*} E*
};
RotationEquivalenceResult verify_rotation_equivalence(const SkewDiagram& D, const SkewDiagram& Dp,
                                                      const WPlacement& pl);

// F with F ~ F^t and F != F^t, for all connected F with at most n cells.
std::vector<SkewDiagram> transpose_equivalences(int n);
bool verify_transpose_prop(const SkewDiagram& D, const WPlacement& pl);

}  // namespace skewkit
