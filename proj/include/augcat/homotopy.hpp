#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "augcat/augmentation.hpp"
#include "augcat/linalg.hpp"

namespace augcat {

// One unit of the ground field per link component.
struct DilationTuple {
    std::vector<FieldElem> d;

    static DilationTuple ones(const Dga& dga)
    {
        return DilationTuple{std::vector<FieldElem>(dga.components(), dga.field().one())};
    }
    static DilationTuple of(const Dga& dga, std::vector<FieldElem> values);

    const FieldElem& at_component(int comp) const { return d[comp - 1]; }
    DilationTuple inverted() const
    {
        DilationTuple out = *this;
        for (FieldElem& x : out.d)
            x = x.inverse();
        return out;
    }
    bool is_ones() const
    {
        for (const FieldElem& x : d)
            if (!(x.bits() == 1))
                return false;
        return true;
    }
    bool operator==(const DilationTuple&) const = default;
};

// A dilation tuple plus the values of the degree-1 map K on the degree-(-1)
// chords (K vanishes on everything else by degree). The plain dga homotopy is
// the d = (1,...,1) case.
struct DilatedHomotopy {
    DilationTuple d;
    std::vector<FieldElem> k;  // aligned with Dga::minus1_chords()

    bool operator==(const DilatedHomotopy&) const = default;
};

// Builds a homotopy from named K values, rejecting keys that are not
// degree-(-1) chords; missing chords default to zero.
DilatedHomotopy make_dilated_homotopy(const Dga& dga, DilationTuple d,
                                      const std::map<std::string, FieldElem>& kvals);

// The twisted Leibniz extension of K:
//   K(w) = sum_t eps1(w_{<t}) K(w_t) eps2(w_{>t}),    K(1) = 0,
// extended linearly over terms. kvals is aligned with minus1_chords().
FieldElem extend_k(const Dga& dga, const Augmentation& eps1, const Augmentation& eps2,
                   std::span<const FieldElem> kvals, const Poly& p);

// Coefficients c_{e,b} of the bilinearized differential in one degree: rows
// are chords of degree `chord_degree`, columns chords of degree
// `chord_degree - 1`, and the entry is
//   sum over occurrences of the column chord in d(row chord) of
//   coeff * eps1(prefix) * eps2(suffix).
GfMatrix bilin_coeff_matrix(const Dga& dga, const Augmentation& eps1, const Augmentation& eps2,
                            int chord_degree);

struct HomotopyCheck {
    bool ok = true;
    int witness = -1;  // offending generator
    std::string message;
};

// The dilated-homotopy conditions in characteristic 2: the augmentations
// agree on every loop generator, and for every degree-0 chord e
//   d_{c(e)} eps1(e) + d_{r(e)} eps2(e) + K(d e) = 0.
// Conditions for generators of other degrees hold for degree reasons and are
// not evaluated.
HomotopyCheck is_dilated_homotopy(const Dga& dga, const Augmentation& eps1,
                                  const Augmentation& eps2, const DilatedHomotopy& h);

enum class SolveMode {
    full,           // dilations and K
    plain_only,     // d locked to (1,...,1)
    dilation_only,  // K locked to zero
};

// Decision procedure: gate on loop agreement, then for each normalized
// dilation tuple in {1} x (units)^(n-1) solve the linear system for K over
// the field. Returns the first witness in deterministic order, free K
// variables zeroed; the witness always passes is_dilated_homotopy.
std::optional<DilatedHomotopy> find_dilated_homotopy(const Dga& dga, const Augmentation& eps1,
                                                     const Augmentation& eps2,
                                                     SolveMode mode = SolveMode::full);

// eps'(x) = d_{r(x)} d_{c(x)}^{-1} eps(x) on chords, unchanged on loops.
// The result is always an augmentation again.
Augmentation apply_dilation(const Dga& dga, const Augmentation& eps, const DilationTuple& d);

// Composition of a plain homotopy eps1 -> eps2 with a dilation: returns the
// third augmentation eps3(x) = d_{r(x)}^{-1} d_{c(x)} eps2(x) and the dilated
// homotopy (d, K(b) = d_{c(b)} kplain(b)) from eps1 to eps3.
std::pair<Augmentation, DilatedHomotopy> compose_homotopy_dilation(const Dga& dga,
                                                                   const Augmentation& eps1,
                                                                   const Augmentation& eps2,
                                                                   const DilatedHomotopy& kplain,
                                                                   const DilationTuple& d);

struct HomotopyDecomposition {
    Augmentation mid;      // eps_mid = the d-dilation of eps2
    DilatedHomotopy plain; // plain homotopy eps1 -> eps_mid
    DilationTuple d;
};

// Splits a dilated homotopy eps1 -> eps2 into a plain homotopy followed by a
// dilation; inverse of compose_homotopy_dilation.
HomotopyDecomposition decompose_dilated_homotopy(const Dga& dga, const Augmentation& eps1,
                                                 const Augmentation& eps2,
                                                 const DilatedHomotopy& h);

// Witness text: a `d = (...)` line plus one `K <chord> = <elem>` line per
// degree-(-1) chord, canonical order.
std::string format_witness(const Dga& dga, const DilatedHomotopy& h);
DilatedHomotopy parse_witness(const Dga& dga, std::string_view text);

}  // namespace augcat
