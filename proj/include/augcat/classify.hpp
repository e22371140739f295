#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "augcat/homcx.hpp"
#include "augcat/homotopy.hpp"

namespace augcat {

using DecideFn =
    std::function<std::optional<DilatedHomotopy>(const Augmentation&, const Augmentation&)>;

struct ClassifyOptions {
    SolveMode mode = SolveMode::full;
    bool full_audit = false;       // all ordered pairs + seeded cocycle spot checks
    std::size_t guard = 20000;     // refuse larger augmentation sets
    std::uint64_t seed = 0;        // drives the audit's randomized spot checks
    DecideFn decide;               // test hook; defaults to find_dilated_homotopy
};

// The partition of the augmentation set into isomorphism classes, together
// with the witnesses that produced it and the consistency audits.
struct IsoClassification {
    std::vector<Augmentation> augmentations;
    std::vector<int> class_of;                // augmentation index -> class id
    std::vector<std::vector<int>> members;    // class id -> ascending member indices
    std::map<std::pair<int, int>, std::optional<DilatedHomotopy>> witnesses;
    std::vector<std::string> audit_violations;
    std::vector<std::map<int, int>> class_bch;  // per class: (eps,eps) dims of the representative
    std::vector<bool> dilation_only;            // class reachable from its rep with K = 0

    int class_count() const { return static_cast<int>(members.size()); }
    int representative(int cls) const { return members[cls].front(); }
};

// Enumerates the augmentations (guarded), partitions them by testing each new
// augmentation against one representative per existing class, then runs the
// symmetry / transitivity / invariance audits. Class ids follow the smallest
// member index. Deterministic throughout.
IsoClassification classify(const Dga& dga, const ClassifyOptions& opts = {});

std::string audit_report(const IsoClassification& c);

}  // namespace augcat
