#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "augcat/dga.hpp"

namespace augcat {

// A unit-preserving degree-0 dg algebra map into the ground field, stored as
// one value per generator: zero on nonzero degrees, a unit on each loop with
// the inverse generator carrying the inverse value.
class Augmentation {
public:
    Augmentation(const Dga& dga, std::vector<FieldElem> values)
        : dga_(&dga), values_(std::move(values))
    {
        if (values_.size() != dga.generators().size())
            throw DomainError("augmentation must assign a value to every generator");
    }

    const Dga& dga() const { return *dga_; }
    std::span<const FieldElem> values() const { return values_; }
    const FieldElem& value(int gen) const { return values_[gen]; }

    FieldElem eval(const Poly& p) const { return dga_->eval(values_, p); }

    // Value equality; callers compare augmentations of one dga.
    bool operator==(const Augmentation& o) const { return values_ == o.values_; }

private:
    const Dga* dga_;
    std::vector<FieldElem> values_;
};

struct AugmentationCheck {
    bool ok = true;
    int witness = -1;      // generator index of the first violation
    FieldElem residual;    // value of eps(d(witness)) when that is the failure
    std::string message;
};

AugmentationCheck is_augmentation(const Dga& dga, std::span<const FieldElem> values);

// All augmentations by backtracking over degree-0 chord values (the whole
// field) and loop values (units), pruning each degree-1 relation as soon as
// its support is assigned. Deterministic: generator file order, ascending bit
// patterns. Throws FeasibilityError when `limit` is exceeded.
std::vector<Augmentation> enumerate_augmentations(const Dga& dga,
                                                  std::optional<std::size_t> limit = {});

// Text form: one `name=elem` pair per degree-0 chord and loop, canonical
// order. The inline form joins pairs with spaces; "-" stands for the empty
// assignment of a dga with nothing to assign.
std::string format_augmentation(const Augmentation& aug, bool multiline = false);
Augmentation parse_augmentation(const Dga& dga, std::string_view text);

}  // namespace augcat
