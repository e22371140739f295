// augcat: decide isomorphism of augmentations of link-graded semi-free dgas
// over GF(2^m), via dilated homotopies and the degree-0/1 morphism complex.
//
// Exit codes: 0 ok, 1 usage, 2 unreadable or invalid input file, 3 invalid
// dga, 4 negative mathematical verdict, 5 feasibility guard.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "augcat/classify.hpp"
#include "augcat/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInvalidDga = 3;
constexpr int kExitVerdict = 4;
constexpr int kExitGuard = 5;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDga : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

augcat::Dga load_dga(const std::string& path, const std::string& field_label, bool must_be_valid)
{
    std::optional<augcat::FieldSpec> override_field;
    if (!field_label.empty())
        override_field = augcat::FieldSpec::from_label(field_label);
    augcat::Dga dga = augcat::Dga::parse(read_file(path), override_field);
    if (must_be_valid) {
        augcat::ValidationReport rep = dga.validate();
        if (!rep.ok())
            throw InvalidDga(rep.str());
    }
    return dga;
}

augcat::Augmentation load_aug(const augcat::Dga& dga, const std::string& path)
{
    return augcat::parse_augmentation(dga, read_file(path));
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"augcat: augmentation isomorphism for link-graded dgas over GF(2^m)"};
    app.require_subcommand(1);
    app.fallthrough();  // global --field/--seed may follow the subcommand

    std::string field_label;
    std::uint64_t seed = 0;
    app.add_option("--field", field_label, "override the dga field, e.g. 2^2");
    app.add_option("--seed", seed, "seed for the randomized audit spot checks");

    std::string dga_path, e1_path, e2_path, witness_path, elem_path;
    bool json = false, audit = false;

    CLI::App* validate = app.add_subcommand("validate", "check all dga invariants");
    validate->add_option("dga", dga_path)->required();

    CLI::App* augs = app.add_subcommand("augs", "enumerate augmentations, one per line");
    augs->add_option("dga", dga_path)->required();

    CLI::App* iso = app.add_subcommand("iso", "decide isomorphism of two augmentations");
    iso->add_option("dga", dga_path)->required();
    iso->add_option("--e1", e1_path)->required();
    iso->add_option("--e2", e2_path)->required();

    CLI::App* verify = app.add_subcommand("verify", "check a dilated homotopy witness");
    verify->add_option("dga", dga_path)->required();
    verify->add_option("--e1", e1_path)->required();
    verify->add_option("--e2", e2_path)->required();
    verify->add_option("--witness", witness_path)->required();

    CLI::App* classes = app.add_subcommand("classes", "partition augmentations into iso classes");
    classes->add_option("dga", dga_path)->required();
    classes->add_flag("--json", json);
    classes->add_flag("--audit", audit);

    CLI::App* bch = app.add_subcommand("bch", "bilinearized cohomology dimensions");
    bch->add_option("dga", dga_path)->required();
    bch->add_option("--e1", e1_path)->required();
    bch->add_option("--e2", e2_path)->required();

    CLI::App* cocycle = app.add_subcommand("cocycle", "test a Hom0 element for being a cocycle");
    cocycle->add_option("dga", dga_path)->required();
    cocycle->add_option("--e1", e1_path)->required();
    cocycle->add_option("--e2", e2_path)->required();
    cocycle->add_option("--elem", elem_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate) {
            augcat::Dga dga = load_dga(dga_path, field_label, false);
            augcat::ValidationReport rep = dga.validate();
            if (rep.ok()) {
                std::cout << "VALID\n";
                return kExitOk;
            }
            std::cout << "INVALID\n" << rep.str();
            return kExitInvalidDga;
        }

        if (*augs) {
            augcat::Dga dga = load_dga(dga_path, field_label, true);
            for (const augcat::Augmentation& a : augcat::enumerate_augmentations(dga))
                std::cout << augcat::format_augmentation(a) << "\n";
            return kExitOk;
        }

        if (*iso) {
            augcat::Dga dga = load_dga(dga_path, field_label, true);
            augcat::Augmentation a1 = load_aug(dga, e1_path);
            augcat::Augmentation a2 = load_aug(dga, e2_path);
            auto w = augcat::find_dilated_homotopy(dga, a1, a2);
            if (!w) {
                std::cout << "NOT-ISO\n";
                return kExitVerdict;
            }
            std::cout << "ISO\n" << augcat::format_witness(dga, *w);
            return kExitOk;
        }

        if (*verify) {
            augcat::Dga dga = load_dga(dga_path, field_label, true);
            augcat::Augmentation a1 = load_aug(dga, e1_path);
            augcat::Augmentation a2 = load_aug(dga, e2_path);
            augcat::DilatedHomotopy h = augcat::parse_witness(dga, read_file(witness_path));
            augcat::HomotopyCheck chk = augcat::is_dilated_homotopy(dga, a1, a2, h);
            if (chk.ok) {
                std::cout << "WITNESS-VALID\n";
                return kExitOk;
            }
            std::cout << "WITNESS-INVALID: " << chk.message << "\n";
            return kExitVerdict;
        }

        if (*classes) {
            augcat::Dga dga = load_dga(dga_path, field_label, true);
            augcat::ClassifyOptions opts;
            opts.full_audit = audit;
            opts.seed = seed;
            augcat::IsoClassification c = augcat::classify(dga, opts);
            std::cout << (json ? augcat::classes_json(dga, c, audit)
                               : augcat::classes_text(dga, c, audit));
            return kExitOk;
        }

        if (*bch) {
            augcat::Dga dga = load_dga(dga_path, field_label, true);
            augcat::Augmentation a1 = load_aug(dga, e1_path);
            augcat::Augmentation a2 = load_aug(dga, e2_path);
            std::cout << augcat::bch_text(augcat::bilinearized_cohomology_dims(dga, a1, a2));
            return kExitOk;
        }

        if (*cocycle) {
            augcat::Dga dga = load_dga(dga_path, field_label, true);
            augcat::Augmentation a1 = load_aug(dga, e1_path);
            augcat::Augmentation a2 = load_aug(dga, e2_path);
            augcat::Hom0Element elem = augcat::parse_hom0(dga, read_file(elem_path));
            augcat::Hom1Coeffs image = augcat::m1_hom0(dga, a1, a2, elem);
            if (image.is_zero()) {
                std::cout << "COCYCLE\n";
                return kExitOk;
            }
            std::cout << "NOT-COCYCLE\n";
            for (const auto& [g, v] : image.loop_part)
                std::cout << "m1 loop " << dga.generator(g).name << ": " << v.str() << "\n";
            for (const auto& [g, v] : image.chord_part)
                std::cout << "m1 chord " << dga.generator(g).name << ": " << v.str() << "\n";
            return kExitVerdict;
        }
    } catch (const InvalidDga& e) {
        std::cout << "INVALID\n" << e.what();
        return kExitInvalidDga;
    } catch (const augcat::FeasibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const augcat::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const augcat::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const augcat::FieldError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
