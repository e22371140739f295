#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "augcat/augmentation.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace augcat;

namespace {

Augmentation unknot_aug(const Dga& d, FieldElem tval)
{
    std::vector<FieldElem> values(d.generators().size(), d.field().zero());
    values[d.generator_index("t")] = tval;
    values[d.generator_index("t^-1")] = tval.inverse();
    return Augmentation(d, values);
}

}  // namespace

TEST_CASE("is_augmentation on the unknot")
{
    Dga d2 = testsupport::load_corpus_dga("unknot.dga");
    CHECK(is_augmentation(d2, unknot_aug(d2, d2.field().one()).values()).ok);

    Dga d4 = testsupport::load_corpus_dga("unknot.dga", "2^2");
    FieldElem g = d4.field().element(2);
    AugmentationCheck chk = is_augmentation(d4, unknot_aug(d4, g).values());
    CHECK_FALSE(chk.ok);
    CHECK(chk.witness == d4.generator_index("a"));
    CHECK(chk.residual == d4.field().one() + g);  // eps(1 + t) = 1 + g
}

TEST_CASE("vacuous conditions accept any degree-0 value")
{
    Dga d = testsupport::load_corpus_dga("dga_b.dga", "2^2");
    std::vector<FieldElem> values(d.generators().size(), d.field().zero());
    values[d.generator_index("e")] = d.field().element(2);
    CHECK(is_augmentation(d, values).ok);
}

TEST_CASE("loop and degree constraints are enforced")
{
    Dga d = testsupport::load_corpus_dga("unknot.dga", "2^2");
    std::vector<FieldElem> values(d.generators().size(), d.field().zero());
    // zero loop value
    CHECK_FALSE(is_augmentation(d, values).ok);
    // nonzero value on a degree-1 generator
    values[d.generator_index("t")] = d.field().one();
    values[d.generator_index("t^-1")] = d.field().one();
    values[d.generator_index("a")] = d.field().one();
    AugmentationCheck chk = is_augmentation(d, values);
    CHECK_FALSE(chk.ok);
    CHECK(chk.message.find("degree") != std::string::npos);
    // inconsistent inverse
    Dga d4 = testsupport::load_corpus_dga("unknot.dga", "2^2");
    std::vector<FieldElem> v2(d4.generators().size(), d4.field().zero());
    v2[d4.generator_index("t")] = d4.field().one();
    v2[d4.generator_index("t^-1")] = d4.field().element(2);
    CHECK_FALSE(is_augmentation(d4, v2).ok);
}

TEST_CASE("enumeration counts")
{
    CHECK(enumerate_augmentations(testsupport::load_corpus_dga("unknot.dga", "2^2")).size() == 1);
    CHECK(enumerate_augmentations(testsupport::load_corpus_dga("dga_b.dga", "2^2")).size() == 4);
    CHECK(enumerate_augmentations(testsupport::load_corpus_dga("trefoil.dga")).size() == 5);
    CHECK(enumerate_augmentations(testsupport::load_corpus_dga("hopf.dga")).size() == 3);
    // No augmentations at all: d(a) = 1 is unsolvable.
    Dga none = Dga::parse("field 2^1\ncomponents 1\ngen a 1 1 1 chord\ndiff a = 1\n");
    CHECK(enumerate_augmentations(none).empty());
    // No assignables at all: exactly the trivial augmentation.
    Dga empty = Dga::parse("field 2^2\ncomponents 1\n");
    CHECK(enumerate_augmentations(empty).size() == 1);
}

TEST_CASE("enumeration agrees with the exhaustive oracle on the corpus")
{
    for (const std::string& name :
         {std::string("unknot.dga"), std::string("stab_once.dga"), std::string("trefoil.dga"),
          std::string("hopf.dga"), std::string("dga_a.dga"), std::string("dga_l.dga"),
          std::string("mixed.dga"), std::string("chek_a.dga"), std::string("chek_b.dga")}) {
        for (const std::string& field : {std::string("2^1"), std::string("2^2")}) {
            Dga d = testsupport::load_corpus_dga(name, field);
            auto fast = enumerate_augmentations(d);
            auto slow = oracle::enumerate_augmentations(d);
            INFO(name, " over ", field);
            REQUIRE(fast.size() == slow.size());
            for (std::size_t i = 0; i < fast.size(); ++i)
                CHECK(fast[i] == slow[i]);
            for (const Augmentation& a : fast)
                CHECK(is_augmentation(d, a.values()).ok);
        }
    }
}

TEST_CASE("enumeration count is invariant under generator reordering")
{
    const char* reordered =
        "field 2^1\n"
        "components 1\n"
        "gen a2 1 1 1 chord\n"
        "gen b3 0 1 1 chord\n"
        "gen b1 0 1 1 chord\n"
        "gen a1 1 1 1 chord\n"
        "gen b2 0 1 1 chord\n"
        "diff a1 = 1 + b1 + b3 + b1.b2.b3\n"
        "diff a2 = 1 + b1 + b3 + b3.b2.b1\n"
        "diff b1 = 0\n"
        "diff b2 = 0\n"
        "diff b3 = 0\n";
    Dga d1 = testsupport::load_corpus_dga("trefoil.dga");
    Dga d2 = Dga::parse(reordered);
    auto a1 = enumerate_augmentations(d1);
    auto a2 = enumerate_augmentations(d2);
    REQUIRE(a1.size() == a2.size());

    // Same set of assignments when compared by name.
    auto key = [](const Dga& d, const Augmentation& a) {
        std::vector<std::pair<std::string, std::uint32_t>> kv;
        for (int g : d.assignables())
            kv.emplace_back(d.generator(g).name, a.value(g).bits());
        std::sort(kv.begin(), kv.end());
        return kv;
    };
    std::vector<decltype(key(d1, a1[0]))> k1, k2;
    for (const auto& a : a1)
        k1.push_back(key(d1, a));
    for (const auto& a : a2)
        k2.push_back(key(d2, a));
    std::sort(k1.begin(), k1.end());
    std::sort(k2.begin(), k2.end());
    CHECK(k1 == k2);
}

TEST_CASE("graded-map law: words with a nonzero-degree letter evaluate to zero")
{
    Dga d = testsupport::load_corpus_dga("chek_b.dga", "2^2");
    auto augs = enumerate_augmentations(d);
    REQUIRE_FALSE(augs.empty());
    std::mt19937_64 rng(3);
    std::vector<int> nonzero;
    for (std::size_t i = 0; i < d.generators().size(); ++i)
        if (d.generator(static_cast<int>(i)).degree != 0)
            nonzero.push_back(static_cast<int>(i));
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> letters;
        for (int s = 0; s < 3; ++s)
            letters.push_back(static_cast<int>(rng() % d.generators().size()));
        letters.push_back(nonzero[rng() % nonzero.size()]);
        Word w(letters);  // single component: everything is composable
        const Augmentation& a = augs[rng() % augs.size()];
        CHECK(d.eval_word(a.values(), w, 0, w.size()).is_zero());
    }
}

TEST_CASE("augmentation text round trip")
{
    for (const std::string& name : {std::string("trefoil.dga"), std::string("hopf.dga")}) {
        Dga d = testsupport::load_corpus_dga(name, "2^2");
        for (const Augmentation& a : enumerate_augmentations(d)) {
            CHECK(parse_augmentation(d, format_augmentation(a, false)) == a);
            CHECK(parse_augmentation(d, format_augmentation(a, true)) == a);
        }
    }
    // Empty assignment form.
    Dga empty = Dga::parse("field 2^1\ncomponents 1\n");
    Augmentation triv(empty, {});
    CHECK(format_augmentation(triv) == "-");
    CHECK(parse_augmentation(empty, "-") == triv);
}

TEST_CASE("augmentation parsing rejects bad input")
{
    Dga d = testsupport::load_corpus_dga("unknot.dga", "2^2");
    CHECK_THROWS_AS(parse_augmentation(d, ""), DomainError);            // missing t
    CHECK_THROWS_AS(parse_augmentation(d, "q=1"), ParseError);          // unknown name
    CHECK_THROWS_AS(parse_augmentation(d, "a=1 t=1"), ParseError);      // not assignable
    CHECK_THROWS_AS(parse_augmentation(d, "t=1 t=1"), ParseError);      // duplicate
    CHECK_THROWS_AS(parse_augmentation(d, "t=0"), DomainError);         // loop needs a unit
    CHECK_THROWS_AS(parse_augmentation(d, "t=g"), DomainError);         // fails eps(da)=0
    CHECK(parse_augmentation(d, "t=1").value(d.generator_index("t")) == d.field().one());
}

TEST_CASE("the feasibility guard throws")
{
    // 4^8 = 65536 augmentations over GF(4).
    std::string text = "field 2^1\ncomponents 1\n";
    for (int i = 0; i < 8; ++i)
        text += "gen e" + std::to_string(i) + " 0 1 1 chord\n";
    for (int i = 0; i < 8; ++i)
        text += "diff e" + std::to_string(i) + " = 0\n";
    Dga d = Dga::parse(text, FieldSpec::make(2));
    CHECK_THROWS_AS(enumerate_augmentations(d, 20000), FeasibilityError);
    CHECK(enumerate_augmentations(d).size() == 65536);
}
