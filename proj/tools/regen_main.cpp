// augcat-regen: rebuild the corpus golden files from the brute-force oracles
// and fail on any divergence from the fast path.
//
// Modes: --check (default) compares oracle, fast path and the goldens on
// disk; --write additionally rewrites corpus/golden/<id>.json.

#include <cstring>
#include <fstream>
#include <iostream>

#include "augcat/report.hpp"
#include "oracle/corpus.hpp"
#include "oracle/oracle.hpp"

namespace {

bool witness_is_pure_dilation(const augcat::DilatedHomotopy& h)
{
    for (const augcat::FieldElem& x : h.k)
        if (!x.is_zero())
            return false;
    return true;
}

}  // namespace

int main(int argc, char** argv)
{
    std::string corpus_dir = AUGCAT_CORPUS_DIR;
    bool write = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--write") == 0)
            write = true;
        else if (std::strcmp(argv[i], "--check") == 0)
            write = false;
        else if (std::strcmp(argv[i], "--corpus") == 0 && i + 1 < argc)
            corpus_dir = argv[++i];
        else {
            std::cerr << "usage: augcat-regen [--check|--write] [--corpus DIR]\n";
            return 1;
        }
    }

    int failures = 0;
    auto fail = [&failures](const std::string& id, const std::string& why) {
        std::cout << "FAIL " << id << ": " << why << "\n";
        ++failures;
    };

    for (const auto& entry : augcat::oracle::load_corpus(corpus_dir)) {
        augcat::Dga dga = augcat::oracle::load_entry(corpus_dir, entry);
        augcat::ValidationReport rep = dga.validate();
        if (!rep.ok()) {
            fail(entry.id, "invalid dga:\n" + rep.str());
            continue;
        }

        // Fast path.
        augcat::IsoClassification fast = augcat::classify(dga);
        if (!fast.audit_violations.empty()) {
            fail(entry.id, "classification audits reported violations");
            continue;
        }

        // Oracle: exhaustive augmentation scan.
        std::vector<augcat::Augmentation> oracle_augs =
            augcat::oracle::enumerate_augmentations(dga);
        bool same_augs = oracle_augs.size() == fast.augmentations.size();
        for (std::size_t i = 0; same_augs && i < oracle_augs.size(); ++i)
            same_augs = oracle_augs[i] == fast.augmentations[i];
        if (!same_augs) {
            fail(entry.id, "augmentation enumeration differs from the oracle");
            continue;
        }

        // Oracle: exhaustive (d, K) partition.
        std::vector<std::vector<int>> oracle_classes =
            augcat::oracle::classify_partition(dga, oracle_augs);
        if (oracle_classes != fast.members) {
            fail(entry.id, "isomorphism partition differs from the oracle");
            continue;
        }

        // Oracle: naive-rank cohomology per class representative, and the
        // dilation-only flag via the exhaustive witness list.
        bool ok = true;
        for (int cls = 0; cls < fast.class_count() && ok; ++cls) {
            const int rep_idx = fast.representative(cls);
            std::map<int, int> dims = augcat::oracle::cohomology_dims(
                dga, fast.augmentations[rep_idx], fast.augmentations[rep_idx]);
            if (dims != fast.class_bch[cls]) {
                fail(entry.id, "cohomology dims differ from the oracle for class " +
                                   std::to_string(cls));
                ok = false;
                break;
            }
            bool oracle_pure = true;
            for (int m : fast.members[cls]) {
                if (m == rep_idx)
                    continue;
                bool found = false;
                for (const auto& w : augcat::oracle::all_witnesses(
                         dga, fast.augmentations[rep_idx], fast.augmentations[m]))
                    if (witness_is_pure_dilation(w)) {
                        found = true;
                        break;
                    }
                if (!found) {
                    oracle_pure = false;
                    break;
                }
            }
            if (oracle_pure != static_cast<bool>(fast.dilation_only[cls])) {
                fail(entry.id, "dilation-only flag differs from the oracle for class " +
                                   std::to_string(cls));
                ok = false;
            }
        }
        if (!ok)
            continue;

        const std::string golden = augcat::classes_json(dga, fast, false);
        const std::string golden_path = corpus_dir + "/golden/" + entry.id + ".json";
        if (write) {
            std::ofstream out(golden_path, std::ios::binary);
            if (!out) {
                fail(entry.id, "cannot write " + golden_path);
                continue;
            }
            out << golden;
            std::cout << "WROTE " << entry.id << "\n";
        } else {
            std::string on_disk;
            try {
                on_disk = augcat::oracle::read_file(golden_path);
            } catch (const std::exception&) {
                fail(entry.id, "missing golden file " + golden_path);
                continue;
            }
            if (on_disk != golden) {
                fail(entry.id, "golden file differs from the regenerated output");
                continue;
            }
            std::cout << "OK " << entry.id << "\n";
        }
    }

    if (failures > 0) {
        std::cout << failures << " entrie(s) failed\n";
        return 1;
    }
    return 0;
}
