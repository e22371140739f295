#include "augcat/augmentation.hpp"

#include <algorithm>
#include <sstream>

namespace augcat {

AugmentationCheck is_augmentation(const Dga& dga, std::span<const FieldElem> values)
{
    const auto& gens = dga.generators();
    if (values.size() != gens.size())
        throw DomainError("missing value: the assignment must cover every generator");

    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Generator& g = gens[i];
        if (g.degree != 0 && !values[i].is_zero())
            return {false, static_cast<int>(i), dga.field().zero(),
                    "nonzero value on generator " + g.name + " of degree " +
                        std::to_string(g.degree)};
        if (g.kind == GenKind::Loop) {
            if (values[i].is_zero())
                return {false, static_cast<int>(i), dga.field().zero(),
                        "loop " + g.name + " must take a unit value"};
            if (!(values[g.partner] == values[i].inverse()))
                return {false, static_cast<int>(i), dga.field().zero(),
                        "value of " + gens[g.partner].name + " is not the inverse of " + g.name};
        }
    }

    // Only degree-1 generators can give a nonzero eps(dx): a word of degree
    // deg(x)-1 evaluates to zero unless every letter has degree 0.
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].degree != 1)
            continue;
        FieldElem r = dga.eval(values, dga.differential(static_cast<int>(i)));
        if (!r.is_zero())
            return {false, static_cast<int>(i), r,
                    "augmentation does not kill the differential of " + gens[i].name +
                        " (value " + r.str() + ")"};
    }
    return {true, -1, dga.field().zero(), ""};
}

namespace {

struct Relation {
    FieldElem constant;
    // Surviving words: all letters of degree 0, stored as generator indices.
    std::vector<std::pair<FieldElem, std::vector<int>>> terms;
    int ready_pos = -1;  // last assignment position referenced
};

std::vector<Relation> build_relations(const Dga& dga, const std::vector<int>& pos_of_gen)
{
    std::vector<Relation> rels;
    const auto& gens = dga.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].degree != 1)
            continue;
        Relation rel;
        rel.constant = dga.field().zero();
        for (const auto& [w, c] : dga.differential(static_cast<int>(i)).terms()) {
            bool survives = true;
            for (int letter : w.letters())
                if (gens[letter].degree != 0) {
                    survives = false;
                    break;
                }
            if (!survives)
                continue;
            if (w.is_unit()) {
                rel.constant += c;
                continue;
            }
            for (int letter : w.letters())
                rel.ready_pos = std::max(rel.ready_pos, pos_of_gen[letter]);
            rel.terms.emplace_back(c, w.letters());
        }
        if (!rel.constant.is_zero() || !rel.terms.empty())
            rels.push_back(std::move(rel));
    }
    return rels;
}

}  // namespace

std::vector<Augmentation> enumerate_augmentations(const Dga& dga, std::optional<std::size_t> limit)
{
    const auto& gens = dga.generators();
    const auto& slots = dga.assignables();

    std::vector<int> pos_of_gen(gens.size(), -1);
    for (std::size_t p = 0; p < slots.size(); ++p) {
        pos_of_gen[slots[p]] = static_cast<int>(p);
        if (gens[slots[p]].kind == GenKind::Loop)
            pos_of_gen[gens[slots[p]].partner] = static_cast<int>(p);
    }

    std::vector<Relation> rels = build_relations(dga, pos_of_gen);
    std::vector<std::vector<int>> ready_at(slots.size());
    std::vector<int> ready_at_root;
    for (std::size_t r = 0; r < rels.size(); ++r) {
        if (rels[r].ready_pos < 0)
            ready_at_root.push_back(static_cast<int>(r));
        else
            ready_at[rels[r].ready_pos].push_back(static_cast<int>(r));
    }

    std::vector<FieldElem> values(gens.size(), dga.field().zero());
    auto holds = [&](const Relation& rel) {
        FieldElem acc = rel.constant;
        for (const auto& [c, letters] : rel.terms) {
            FieldElem prod = c;
            for (int g : letters)
                prod *= values[g];
            acc += prod;
        }
        return acc.is_zero();
    };

    std::vector<Augmentation> out;
    for (int r : ready_at_root)
        if (!holds(rels[r]))
            return out;

    std::vector<FieldElem> chord_domain;
    for (std::uint32_t b = 0; b < dga.field().order(); ++b)
        chord_domain.push_back(dga.field().element(b));
    const std::vector<FieldElem> unit_domain = dga.field().units();

    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == slots.size()) {
            out.emplace_back(dga, values);
            if (limit && out.size() > *limit)
                throw FeasibilityError("more than " + std::to_string(*limit) +
                                       " augmentations; refusing (feasibility guard)");
            return;
        }
        const int g = slots[pos];
        const bool is_loop = gens[g].kind == GenKind::Loop;
        const auto& domain = is_loop ? unit_domain : chord_domain;
        for (const FieldElem& v : domain) {
            values[g] = v;
            if (is_loop)
                values[gens[g].partner] = v.inverse();
            bool ok = true;
            for (int r : ready_at[pos])
                if (!holds(rels[r])) {
                    ok = false;
                    break;
                }
            if (ok)
                self(self, pos + 1);
        }
        values[g] = dga.field().zero();
        if (is_loop)
            values[gens[g].partner] = dga.field().zero();
    };
    rec(rec, 0);
    return out;
}

std::string format_augmentation(const Augmentation& aug, bool multiline)
{
    const Dga& dga = aug.dga();
    if (dga.assignables().empty())
        return "-";
    std::ostringstream os;
    bool first = true;
    for (int g : dga.assignables()) {
        if (!first)
            os << (multiline ? "\n" : " ");
        first = false;
        os << dga.generator(g).name << "=" << aug.value(g).str();
    }
    return os.str();
}

Augmentation parse_augmentation(const Dga& dga, std::string_view text)
{
    std::vector<FieldElem> values(dga.generators().size(), dga.field().zero());
    std::vector<bool> seen(dga.generators().size(), false);

    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        if (tok == "-")
            continue;
        if (tok.size() && tok[0] == '#') {  // comment: skip the rest of the line
            std::string rest;
            std::getline(is, rest);
            continue;
        }
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected name=value, got '" + tok + "'");
        std::string name = tok.substr(0, eq);
        int g = dga.generator_index(name);
        if (g < 0)
            throw ParseError("unknown generator '" + name + "'");
        bool assignable = (dga.generator(g).kind == GenKind::Chord && dga.generator(g).degree == 0) ||
                          dga.generator(g).kind == GenKind::Loop;
        if (!assignable)
            throw ParseError("'" + name + "' is not a degree-0 chord or loop");
        if (seen[g])
            throw ParseError("duplicate value for '" + name + "'");
        seen[g] = true;
        values[g] = dga.field().parse(tok.substr(eq + 1));
        if (dga.generator(g).kind == GenKind::Loop) {
            if (values[g].is_zero())
                throw DomainError("loop '" + name + "' must take a unit value");
            values[dga.generator(g).partner] = values[g].inverse();
        }
    }
    for (int g : dga.assignables())
        if (!seen[g])
            throw DomainError("missing value for '" + dga.generator(g).name + "'");

    AugmentationCheck chk = is_augmentation(dga, values);
    if (!chk.ok)
        throw DomainError("not an augmentation: " + chk.message);
    return Augmentation(dga, std::move(values));
}

}  // namespace augcat
