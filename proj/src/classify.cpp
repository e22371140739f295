#include "augcat/classify.hpp"

#include <random>
#include <sstream>

namespace augcat {

namespace {

struct DisjointSet {
    std::vector<int> parent;

    explicit DisjointSet(std::size_t n) : parent(n)
    {
        for (std::size_t i = 0; i < n; ++i)
            parent[i] = static_cast<int>(i);
    }
    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (b < a)
            std::swap(a, b);
        parent[b] = a;  // keep the smallest index as the root
    }
};

std::string dims_str(const std::map<int, int>& dims)
{
    std::string s = "{";
    bool first = true;
    for (const auto& [q, d] : dims) {
        if (!first)
            s += ", ";
        first = false;
        s += std::to_string(q) + ":" + std::to_string(d);
    }
    return s + "}";
}

}  // namespace

IsoClassification classify(const Dga& dga, const ClassifyOptions& opts)
{
    IsoClassification out;
    out.augmentations = enumerate_augmentations(dga, opts.guard);

    DecideFn decide = opts.decide;
    if (!decide)
        decide = [&dga, &opts](const Augmentation& a, const Augmentation& b) {
            return find_dilated_homotopy(dga, a, b, opts.mode);
        };

    const int count = static_cast<int>(out.augmentations.size());
    DisjointSet ds(count);
    std::vector<int> reps;  // one representative per class, creation order
    for (int i = 0; i < count; ++i) {
        bool merged = false;
        for (int rep : reps) {
            auto w = decide(out.augmentations[rep], out.augmentations[i]);
            bool success = w.has_value();
            out.witnesses.emplace(std::make_pair(rep, i), std::move(w));
            if (success) {
                ds.unite(rep, i);
                merged = true;
                break;
            }
        }
        if (!merged)
            reps.push_back(i);
    }

    // Class ids by smallest member index; with frontier order that is the
    // representative creation order.
    std::map<int, int> root_to_class;
    out.class_of.assign(count, -1);
    for (int i = 0; i < count; ++i) {
        int root = ds.find(i);
        auto [it, inserted] = root_to_class.emplace(root, static_cast<int>(out.members.size()));
        if (inserted)
            out.members.emplace_back();
        out.class_of[i] = it->second;
        out.members[it->second].push_back(i);
    }

    auto violation = [&out](std::string s) { out.audit_violations.push_back(std::move(s)); };
    auto tested = [&out](int a, int b) { return out.witnesses.count(std::make_pair(a, b)) != 0; };
    auto run_pair = [&](int a, int b) -> bool {
        auto key = std::make_pair(a, b);
        auto it = out.witnesses.find(key);
        if (it == out.witnesses.end())
            it = out.witnesses.emplace(key, decide(out.augmentations[a], out.augmentations[b])).first;
        return it->second.has_value();
    };

    // Symmetry: every tested pair, rechecked in reverse.
    std::vector<std::pair<int, int>> base_pairs;
    for (const auto& [key, w] : out.witnesses)
        base_pairs.push_back(key);
    for (auto [a, b] : base_pairs) {
        if (a == b)
            continue;
        bool fwd = out.witnesses.at(std::make_pair(a, b)).has_value();
        bool rev = run_pair(b, a);
        if (fwd != rev)
            violation("symmetry: pair (" + std::to_string(a) + "," + std::to_string(b) +
                      ") decides " + (fwd ? "iso" : "non-iso") + " but the reverse decides " +
                      (rev ? "iso" : "non-iso"));
    }

    // Transitivity: every ordered pair inside a class must decide iso.
    for (const auto& cls : out.members) {
        for (int a : cls) {
            for (int b : cls) {
                if (a == b)
                    continue;
                if (!opts.full_audit && tested(a, b))
                    continue;
                if (!run_pair(a, b))
                    violation("transitivity: members " + std::to_string(a) + " and " +
                              std::to_string(b) + " of class " +
                              std::to_string(out.class_of[a]) + " fail the pairwise decision");
            }
        }
    }

    // Full audit: the whole pairwise matrix; cross-class pairs must fail.
    if (opts.full_audit) {
        for (int a = 0; a < count; ++a)
            for (int b = 0; b < count; ++b) {
                if (a == b || out.class_of[a] == out.class_of[b])
                    continue;
                if (run_pair(a, b))
                    violation("partition: augmentations " + std::to_string(a) + " and " +
                              std::to_string(b) + " decide iso across classes " +
                              std::to_string(out.class_of[a]) + "/" +
                              std::to_string(out.class_of[b]));
            }
    }

    // Invariance: the self-pair cohomology dimensions agree inside a class.
    for (std::size_t c = 0; c < out.members.size(); ++c) {
        const int rep = out.members[c].front();
        std::map<int, int> rep_dims =
            bilinearized_cohomology_dims(dga, out.augmentations[rep], out.augmentations[rep]);
        for (int m : out.members[c]) {
            if (m == rep)
                continue;
            std::map<int, int> dims =
                bilinearized_cohomology_dims(dga, out.augmentations[m], out.augmentations[m]);
            if (dims != rep_dims)
                violation("invariance: member " + std::to_string(m) + " of class " +
                          std::to_string(c) + " has dims " + dims_str(dims) +
                          ", representative has " + dims_str(rep_dims));
        }
        out.class_bch.push_back(std::move(rep_dims));
    }

    // Seeded spot check (full audit): on same-class pairs, random cocycles
    // must agree with the homotopy checker.
    if (opts.full_audit) {
        std::mt19937_64 rng(opts.seed);
        const auto units = dga.field().units();
        const std::size_t nb = dga.minus1_chords().size();
        for (const auto& cls : out.members) {
            for (int a : cls) {
                for (int b : cls) {
                    Hom0Pairing pairing(dga, out.augmentations[a], out.augmentations[b]);
                    for (int trial = 0; trial < 8; ++trial) {
                        Hom0Element elem;
                        for (int i = 0; i < dga.components(); ++i)
                            elem.alpha.push_back(units[rng() % units.size()]);
                        for (std::size_t s = 0; s < nb; ++s)
                            elem.kcoeffs.push_back(
                                dga.field().element(static_cast<std::uint32_t>(rng() % dga.field().order())));
                        DilatedHomotopy h{DilationTuple{elem.alpha}, elem.kcoeffs};
                        bool cocycle = pairing.is_cocycle(elem);
                        bool homotopy =
                            is_dilated_homotopy(dga, out.augmentations[a], out.augmentations[b], h).ok;
                        if (cocycle != homotopy)
                            violation("cocycle law: pair (" + std::to_string(a) + "," +
                                      std::to_string(b) + ") disagrees with the homotopy checker");
                    }
                }
            }
        }
    }

    // Dilation-only flag: every member reachable from the representative by a
    // pure dilation witness.
    for (const auto& cls : out.members) {
        const int rep = cls.front();
        bool pure = true;
        for (int m : cls) {
            if (m == rep)
                continue;
            if (!find_dilated_homotopy(dga, out.augmentations[rep], out.augmentations[m],
                                       SolveMode::dilation_only)) {
                pure = false;
                break;
            }
        }
        out.dilation_only.push_back(pure);
    }

    return out;
}

std::string audit_report(const IsoClassification& c)
{
    std::ostringstream os;
    if (c.audit_violations.empty()) {
        os << "audit: no violations\n";
        return os.str();
    }
    os << "audit: " << c.audit_violations.size() << " violation(s)\n";
    for (const std::string& v : c.audit_violations)
        os << "- " << v << "\n";
    return os.str();
}

}  // namespace augcat
