#include "augcat/homcx.hpp"

#include <set>
#include <sstream>

namespace augcat {

Hom0Pairing::Hom0Pairing(const Dga& dga, const Augmentation& eps1, const Augmentation& eps2)
    : dga_(&dga), eps1_(&eps1), eps2_(&eps2), coeff_(bilin_coeff_matrix(dga, eps1, eps2, 0))
{
    for (int loop : dga.loop_generators())
        loop_factor_.push_back(dga.field().one() +
                               eps1.value(loop) * eps2.value(loop).inverse());
}

Hom1Coeffs Hom0Pairing::apply(const Hom0Element& a) const
{
    const Dga& dga = *dga_;
    if (a.alpha.size() != static_cast<std::size_t>(dga.components()) ||
        a.kcoeffs.size() != dga.minus1_chords().size())
        throw DomainError("Hom0 element shape does not match the dga");

    Hom1Coeffs out;
    const auto& loops = dga.loop_generators();
    for (std::size_t i = 0; i < loops.size(); ++i) {
        const int comp = dga.generator(loops[i]).row;
        FieldElem v = a.alpha[comp - 1] * loop_factor_[i];
        if (!v.is_zero())
            out.loop_part.emplace(loops[i], v);
    }
    const auto& deg0 = dga.degree0_chords();
    for (std::size_t i = 0; i < deg0.size(); ++i) {
        const Generator& g = dga.generator(deg0[i]);
        FieldElem v = a.alpha[g.col - 1] * eps1_->value(deg0[i]) +
                      a.alpha[g.row - 1] * eps2_->value(deg0[i]);
        for (std::size_t j = 0; j < a.kcoeffs.size(); ++j)
            v += coeff_.at(i, j) * a.kcoeffs[j];
        if (!v.is_zero())
            out.chord_part.emplace(deg0[i], v);
    }
    return out;
}

Hom1Coeffs m1_hom0(const Dga& dga, const Augmentation& eps1, const Augmentation& eps2,
                   const Hom0Element& a)
{
    return Hom0Pairing(dga, eps1, eps2).apply(a);
}

bool cocycle_test(const Dga& dga, const Augmentation& eps1, const Augmentation& eps2,
                  const Hom0Element& a)
{
    return m1_hom0(dga, eps1, eps2, a).is_zero();
}

Hom0Element m2_min_action(const Dga& dga, ActionSide side, std::span<const FieldElem> alpha,
                          const Hom0Element& x)
{
    if (alpha.size() != static_cast<std::size_t>(dga.components()))
        throw DomainError("min coefficients need one entry per component");
    if (x.alpha.size() != alpha.size() || x.kcoeffs.size() != dga.minus1_chords().size())
        throw DomainError("Hom0 element shape does not match the dga");

    Hom0Element out = x;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        out.alpha[i] = alpha[i] * x.alpha[i];
    const auto& minus1 = dga.minus1_chords();
    for (std::size_t s = 0; s < minus1.size(); ++s) {
        const Generator& g = dga.generator(minus1[s]);
        const int comp = side == ActionSide::left ? g.row : g.col;
        out.kcoeffs[s] = alpha[comp - 1] * x.kcoeffs[s];
    }
    return out;
}

BilinComplex build_bilinearized_complex(const Dga& dga, const Augmentation& eps1,
                                        const Augmentation& eps2)
{
    BilinComplex cx;
    std::set<int> degrees;
    for (const Generator& g : dga.generators())
        if (g.kind == GenKind::Chord)
            degrees.insert(g.degree + 1);  // Hom degree = algebra degree + 1
    for (int q : degrees)
        cx.basis.emplace(q, dga.chords_of_degree(q - 1));
    for (int q : degrees)
        cx.diff.emplace(q, bilin_coeff_matrix(dga, eps1, eps2, q));

    for (int q : degrees) {
        auto next = cx.diff.find(q + 1);
        if (next == cx.diff.end())
            continue;
        if (!next->second.multiplied_by(cx.diff.at(q)).is_zero())
            throw DomainError("bilinearized chain law fails between Hom degrees " +
                              std::to_string(q) + " and " + std::to_string(q + 2));
    }
    return cx;
}

std::map<int, int> bilinearized_cohomology_dims(const Dga& dga, const Augmentation& eps1,
                                                const Augmentation& eps2)
{
    BilinComplex cx = build_bilinearized_complex(dga, eps1, eps2);
    std::map<int, int> dims;
    for (const auto& [q, basis] : cx.basis) {
        const std::size_t dim = basis.size();
        const std::size_t rank_out = cx.diff.at(q).rank();
        std::size_t rank_in = 0;
        auto prev = cx.diff.find(q - 1);
        if (prev != cx.diff.end())
            rank_in = prev->second.rank();
        dims[q] = static_cast<int>(dim - rank_out - rank_in);
    }
    return dims;
}

std::string format_hom0(const Dga& dga, const Hom0Element& a)
{
    std::ostringstream os;
    os << "alpha = (";
    for (std::size_t i = 0; i < a.alpha.size(); ++i) {
        if (i > 0)
            os << ", ";
        os << a.alpha[i].str();
    }
    os << ")\n";
    const auto& minus1 = dga.minus1_chords();
    for (std::size_t s = 0; s < minus1.size(); ++s)
        os << "K " << dga.generator(minus1[s]).name << " = " << a.kcoeffs[s].str() << "\n";
    return os.str();
}

Hom0Element parse_hom0(const Dga& dga, std::string_view text)
{
    std::optional<std::vector<FieldElem>> alpha;
    std::vector<FieldElem> k(dga.minus1_chords().size(), dga.field().zero());
    std::vector<bool> seen(dga.generators().size(), false);

    std::istringstream is{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head))
            continue;
        if (head == "alpha") {
            if (alpha)
                throw ParseError("duplicate alpha line", lineno);
            std::string rest;
            std::getline(ls, rest);
            auto eq = rest.find('=');
            auto open = rest.find('(');
            auto close = rest.rfind(')');
            if (eq == std::string::npos || open == std::string::npos ||
                close == std::string::npos || close < open)
                throw ParseError("expected 'alpha = (...)'", lineno);
            std::string inner = rest.substr(open + 1, close - open - 1);
            std::vector<FieldElem> vals;
            std::size_t pos = 0;
            while (pos <= inner.size()) {
                std::size_t comma = inner.find(',', pos);
                vals.push_back(dga.field().parse(
                    inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
                if (comma == std::string::npos)
                    break;
                pos = comma + 1;
            }
            if (static_cast<int>(vals.size()) != dga.components())
                throw ParseError("alpha tuple needs one entry per component (" +
                                     std::to_string(dga.components()) + ")",
                                 lineno);
            alpha = std::move(vals);
        } else if (head == "K") {
            std::string name, eq, val;
            if (!(ls >> name >> eq >> val) || eq != "=")
                throw ParseError("expected 'K <chord> = <elem>'", lineno);
            int g = dga.generator_index(name);
            if (g < 0)
                throw ParseError("unknown generator '" + name + "'", lineno);
            int slot = dga.minus1_slot(g);
            if (slot < 0)
                throw ParseError("K keyed by '" + name + "', which is not a degree-(-1) chord",
                                 lineno);
            if (seen[g])
                throw ParseError("duplicate K line for '" + name + "'", lineno);
            seen[g] = true;
            k[slot] = dga.field().parse(val);
        } else {
            throw ParseError("unknown directive '" + head + "'", lineno);
        }
    }
    if (!alpha)
        throw ParseError("Hom0 element is missing its alpha line");
    return Hom0Element{std::move(*alpha), std::move(k)};
}

}  // namespace augcat
