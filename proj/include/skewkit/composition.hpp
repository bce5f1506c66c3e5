#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewkit/diagram.hpp"
#include "skewkit/schur.hpp"

namespace skewkit {

// a: →W→O (both copies horizontally attached), b: ↑↑, c: →↑, d: ↑→.
enum class AttachCase { a, b, c, d, none };
char case_letter(AttachCase c);

struct WPlacement {
    SkewDiagram E;
    SkewDiagram W;
    CellList sw;  // bottom copy of W inside E
    CellList ne;  // top copy of W inside E
    // Translation carrying the bottom copy onto the top copy; E ⊔_W E = E ∪ (E + shift).
    Cell shift{0, 0};
    CellList O;  // E minus both copies
    AttachCase kase = AttachCase::none;
};

// W anchored at the northeast and southwest corners of E; nullopt unless
// both copies lie inside E and W is connected.
std::optional<WPlacement> make_placement(const SkewDiagram& E, const SkewDiagram& W);
// Same, with the copies given explicitly by coordinates in E.
WPlacement placement_from_cells(const SkewDiagram& E, const CellList& ne, const CellList& sw);
WPlacement empty_placement(const SkewDiagram& E);
WPlacement rotated_placement(const WPlacement& pl);
WPlacement transposed_placement(const WPlacement& pl);

struct PlacementSearch {
    // Skip W whose copies cannot be separated by a diagonal.
    bool require_separation = false;
};
std::vector<WPlacement> find_w_placements(const SkewDiagram& E, PlacementSearch opts = {});

SkewDiagram amalgamate(const SkewDiagram& E1, const SkewDiagram& W, const SkewDiagram& E2);
SkewDiagram amalg_power(const WPlacement& pl, int m);
CellList amalg_power_cells(const WPlacement& pl, int m);

// The four candidate gluings (A)-(D) of two copies of E.
struct DotCandidates {
    CellList cand[4];
    bool valid[4];
};
DotCandidates dot_candidates(const WPlacement& pl);
SkewDiagram dot_compose(const WPlacement& pl);

struct OverlapShapes {
    SkewDiagram barW;
    SkewDiagram barO;
};
OverlapShapes overlap_shapes(const WPlacement& pl);

struct HypothesisReport {
    bool h[5] = {false, false, false, false, false};
    std::string why[5];
    bool h5_required = false;
    bool overall_I_to_IV() const { return h[0] && h[1] && h[2] && h[3]; }
    bool overall_I_to_V() const { return overall_I_to_IV() && (h[4] || !h5_required); }
};
HypothesisReport check_hypotheses(const WPlacement& pl);

class HypothesisFailure : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// D ∘_W E. Throws HypothesisFailure when the placement has no attachment case.
SkewDiagram compose(const SkewDiagram& D, const WPlacement& pl);
// Case →↑ built from the southeast decomposition instead (the star form).
SkewDiagram compose_star(const SkewDiagram& D, const WPlacement& pl);

// s_D ∘_W s_E: Jacobi-Trudi determinant with h_k -> s_{E^{⊔k}}, h_0 -> s_W.
SchurPoly schur_compose(const SkewDiagram& D, const WPlacement& pl);
// The same expansion kept symbolic: sorted exponent lists k (0 standing for W)
// mapped to coefficients, one entry per distinct product s_{E^k1} s_{E^k2} ...
std::map<std::vector<int>, Coeff> jacobi_trudi_terms(const SkewDiagram& D);

struct EnhancedRibbon {
    CellList cells;  // empty for the added ribbons
    int p = 0;
    int q = 0;
};
std::vector<EnhancedRibbon> enhanced_nw_decomposition(const SkewDiagram& D);
int sign_of(const SkewDiagram& D);

struct IdentityResult {
    bool holds = false;
    int sign = 0;           // +1 or -1 when holds
    int expected_sign = 1;  // +1 for cases a/b; from the enhanced decomposition otherwise
    bool sign_matches = false;
    SkewDiagram composed;
    SchurPoly lhs;
    SchurPoly rhs;
};
IdentityResult verify_main_identity(const SkewDiagram& D, const WPlacement& pl);

struct Factorization {
    SkewDiagram D;
    SkewDiagram W;
    SkewDiagram E;
    bool trivial = false;
    int w_diagonals = 0;
    int e_diagonals = 0;
};
struct FactorizationReport {
    std::vector<Factorization> all;
    std::vector<Factorization> minimal;  // every nontrivial one attaining the minimum
};
FactorizationReport factorizations(const SkewDiagram& F, int max_cells = 14);

int diagonal_count(const CellList& cells);

}  // namespace skewkit
