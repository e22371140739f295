#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "augcat/homotopy.hpp"

namespace augcat {

// An element of Hom^0(eps1, eps2): coefficients of the per-component minima
// plus coefficients of the degree-(-1) chord duals.
struct Hom0Element {
    std::vector<FieldElem> alpha;    // one per component
    std::vector<FieldElem> kcoeffs;  // aligned with Dga::minus1_chords()

    bool operator==(const Hom0Element&) const = default;
};

// Coefficients of an element of Hom^1: duals of the loop generators (the
// index-1 Morse duals) and duals of the degree-0 chords. Zero entries are
// omitted.
struct Hom1Coeffs {
    std::map<int, FieldElem> loop_part;   // loop generator index -> coefficient
    std::map<int, FieldElem> chord_part;  // degree-0 chord index -> coefficient

    bool is_zero() const { return loop_part.empty() && chord_part.empty(); }
};

// m1 on Hom^0 for one fixed pair of augmentations, with the bilinearized
// coefficients precomputed. Keeps references to its inputs.
class Hom0Pairing {
public:
    Hom0Pairing(const Dga& dga, const Augmentation& eps1, const Augmentation& eps2);

    Hom1Coeffs apply(const Hom0Element& a) const;
    bool is_cocycle(const Hom0Element& a) const { return apply(a).is_zero(); }

private:
    const Dga* dga_;
    const Augmentation* eps1_;
    const Augmentation* eps2_;
    std::vector<FieldElem> loop_factor_;  // per declared loop: 1 + eps1(g) eps2(g)^{-1}
    GfMatrix coeff_;                      // rows: degree-0 chords, cols: degree-(-1) chords
};

// loop part: alpha_i (1 + eps1(g) eps2(g)^{-1}) for the loop g on component i;
// chord part: alpha_{c(e)} eps1(e) + alpha_{r(e)} eps2(e) + sum_b c_{e,b} K_b.
Hom1Coeffs m1_hom0(const Dga& dga, const Augmentation& eps1, const Augmentation& eps2,
                   const Hom0Element& a);
bool cocycle_test(const Dga& dga, const Augmentation& eps1, const Augmentation& eps2,
                  const Hom0Element& a);

enum class ActionSide { left, right };

// Partial m2: the action of a pure-minimum element on a Hom^0 element.
// Minima multiply componentwise; a chord-dual coefficient picks up alpha at
// its r-end under the left action and at its c-end under the right action, so
// alpha = (1,...,1) is a two-sided identity. Products of two chord duals are
// not defined here.
Hom0Element m2_min_action(const Dga& dga, ActionSide side, std::span<const FieldElem> alpha,
                          const Hom0Element& x);

// The chord-only bilinearized complex: basis in Hom degree q is the duals of
// chords of algebra degree q-1; diff[q] maps degree q to q+1.
struct BilinComplex {
    std::map<int, std::vector<int>> basis;
    std::map<int, GfMatrix> diff;
};

// Builds the complex and verifies the chain law M_{q+1} M_q = 0 (a violation
// is a hard error, not a report).
BilinComplex build_bilinearized_complex(const Dga& dga, const Augmentation& eps1,
                                        const Augmentation& eps2);

// Cohomology dimension per Hom degree, Gaussian elimination over the field.
std::map<int, int> bilinearized_cohomology_dims(const Dga& dga, const Augmentation& eps1,
                                                const Augmentation& eps2);

// Text form: an `alpha = (...)` line plus `K <chord> = <elem>` lines.
std::string format_hom0(const Dga& dga, const Hom0Element& a);
Hom0Element parse_hom0(const Dga& dga, std::string_view text);

}  // namespace augcat
