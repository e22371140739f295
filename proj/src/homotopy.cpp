#include "augcat/homotopy.hpp"

#include <sstream>

namespace augcat {

DilationTuple DilationTuple::of(const Dga& dga, std::vector<FieldElem> values)
{
    if (static_cast<int>(values.size()) != dga.components())
        throw DomainError("dilation tuple needs one entry per component");
    for (const FieldElem& x : values)
        if (x.is_zero())
            throw DomainError("dilation entries must be units");
    return DilationTuple{std::move(values)};
}

DilatedHomotopy make_dilated_homotopy(const Dga& dga, DilationTuple d,
                                      const std::map<std::string, FieldElem>& kvals)
{
    if (static_cast<int>(d.d.size()) != dga.components())
        throw DomainError("dilation tuple needs one entry per component");
    std::vector<FieldElem> k(dga.minus1_chords().size(), dga.field().zero());
    for (const auto& [name, v] : kvals) {
        int g = dga.generator_index(name);
        if (g < 0)
            throw DomainError("unknown generator '" + name + "' in K values");
        int slot = dga.minus1_slot(g);
        if (slot < 0)
            throw DomainError("K keyed by '" + name + "', which is not a degree-(-1) chord");
        k[slot] = v;
    }
    return DilatedHomotopy{std::move(d), std::move(k)};
}

FieldElem extend_k(const Dga& dga, const Augmentation& eps1, const Augmentation& eps2,
                   std::span<const FieldElem> kvals, const Poly& p)
{
    if (kvals.size() != dga.minus1_chords().size())
        throw DomainError("K values must cover the degree-(-1) chords exactly");
    FieldElem acc = dga.field().zero();
    for (const auto& [w, c] : p.terms()) {
        FieldElem inner = dga.field().zero();
        for (std::size_t t = 0; t < w.size(); ++t) {
            const int slot = dga.minus1_slot(w.letter(t));
            if (slot < 0)
                continue;  // K vanishes away from degree -1
            inner += dga.eval_word(eps1.values(), w, 0, t) * kvals[slot] *
                     dga.eval_word(eps2.values(), w, t + 1, w.size());
        }
        acc += c * inner;
    }
    return acc;
}

GfMatrix bilin_coeff_matrix(const Dga& dga, const Augmentation& eps1, const Augmentation& eps2,
                            int chord_degree)
{
    const std::vector<int> rows = dga.chords_of_degree(chord_degree);
    const std::vector<int> cols = dga.chords_of_degree(chord_degree - 1);
    std::vector<int> col_of(dga.generators().size(), -1);
    for (std::size_t j = 0; j < cols.size(); ++j)
        col_of[cols[j]] = static_cast<int>(j);

    GfMatrix m(dga.field(), rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (const auto& [w, c] : dga.differential(rows[i]).terms()) {
            for (std::size_t t = 0; t < w.size(); ++t) {
                const int j = col_of[w.letter(t)];
                if (j < 0)
                    continue;
                m.at(i, j) += c * dga.eval_word(eps1.values(), w, 0, t) *
                              dga.eval_word(eps2.values(), w, t + 1, w.size());
            }
        }
    }
    return m;
}

namespace {

void check_homotopy_shape(const Dga& dga, const DilatedHomotopy& h)
{
    if (static_cast<int>(h.d.d.size()) != dga.components())
        throw DomainError("dilation tuple needs one entry per component");
    for (const FieldElem& x : h.d.d)
        if (x.is_zero())
            throw DomainError("dilation entries must be units");
    if (h.k.size() != dga.minus1_chords().size())
        throw DomainError("K values must cover the degree-(-1) chords exactly");
}

}  // namespace

HomotopyCheck is_dilated_homotopy(const Dga& dga, const Augmentation& eps1,
                                  const Augmentation& eps2, const DilatedHomotopy& h)
{
    check_homotopy_shape(dga, h);
    for (int loop : dga.loop_generators()) {
        if (!(eps1.value(loop) == eps2.value(loop)))
            return {false, loop,
                    "augmentations differ on loop generator " + dga.generator(loop).name};
    }
    for (int e : dga.degree0_chords()) {
        const Generator& g = dga.generator(e);
        FieldElem lhs = h.d.at_component(g.col) * eps1.value(e) +
                        h.d.at_component(g.row) * eps2.value(e) +
                        extend_k(dga, eps1, eps2, h.k, dga.differential(e));
        if (!lhs.is_zero())
            return {false, e, "homotopy relation fails at chord " + g.name};
    }
    return {};
}

std::optional<DilatedHomotopy> find_dilated_homotopy(const Dga& dga, const Augmentation& eps1,
                                                     const Augmentation& eps2, SolveMode mode)
{
    for (int loop : dga.loop_generators())
        if (!(eps1.value(loop) == eps2.value(loop)))
            return std::nullopt;

    const std::vector<int>& deg0 = dga.degree0_chords();
    const std::size_t nk = dga.minus1_chords().size();
    const GfMatrix coeff = bilin_coeff_matrix(dga, eps1, eps2, 0);
    const std::vector<FieldElem> units = dga.field().units();
    const int n = dga.components();

    // Normalizing d_1 = 1 is sound: scaling (d, K) by a unit preserves every
    // condition. Remaining components run through the units, last fastest.
    std::vector<FieldElem> d(n, dga.field().one());
    std::vector<std::size_t> idx(n, 0);
    auto advance = [&]() -> bool {
        if (mode == SolveMode::plain_only)
            return false;
        for (int i = n - 1; i >= 1; --i) {
            if (++idx[i] < units.size()) {
                d[i] = units[idx[i]];
                return true;
            }
            idx[i] = 0;
            d[i] = units[0];
        }
        return false;
    };

    do {
        std::vector<FieldElem> rhs;
        rhs.reserve(deg0.size());
        for (int e : deg0) {
            const Generator& g = dga.generator(e);
            rhs.push_back(d[g.col - 1] * eps1.value(e) + d[g.row - 1] * eps2.value(e));
        }
        std::optional<std::vector<FieldElem>> sol;
        if (mode == SolveMode::dilation_only) {
            bool consistent = true;
            for (const FieldElem& r : rhs)
                if (!r.is_zero()) {
                    consistent = false;
                    break;
                }
            if (consistent)
                sol = std::vector<FieldElem>(nk, dga.field().zero());
        } else {
            sol = coeff.solve(rhs);
        }
        if (sol) {
            DilatedHomotopy h{DilationTuple{d}, std::move(*sol)};
            HomotopyCheck chk = is_dilated_homotopy(dga, eps1, eps2, h);
            if (!chk.ok)
                throw std::logic_error("solver produced an invalid witness: " + chk.message);
            return h;
        }
    } while (advance());
    return std::nullopt;
}

Augmentation apply_dilation(const Dga& dga, const Augmentation& eps, const DilationTuple& d)
{
    if (static_cast<int>(d.d.size()) != dga.components())
        throw DomainError("dilation tuple needs one entry per component");
    for (const FieldElem& x : d.d)
        if (x.is_zero())
            throw DomainError("dilation entries must be units");
    std::vector<FieldElem> values(eps.values().begin(), eps.values().end());
    for (std::size_t i = 0; i < dga.generators().size(); ++i) {
        const Generator& g = dga.generator(static_cast<int>(i));
        if (g.kind != GenKind::Chord)
            continue;
        values[i] = d.at_component(g.row) * d.at_component(g.col).inverse() * values[i];
    }
    AugmentationCheck chk = is_augmentation(dga, values);
    if (!chk.ok)
        throw std::logic_error("dilation left the augmentation variety: " + chk.message);
    return Augmentation(dga, std::move(values));
}

std::pair<Augmentation, DilatedHomotopy> compose_homotopy_dilation(const Dga& dga,
                                                                   const Augmentation& eps1,
                                                                   const Augmentation& eps2,
                                                                   const DilatedHomotopy& kplain,
                                                                   const DilationTuple& d)
{
    if (!kplain.d.is_ones())
        throw DomainError("compose expects a plain homotopy (d = 1)");
    HomotopyCheck chk = is_dilated_homotopy(dga, eps1, eps2, kplain);
    if (!chk.ok)
        throw DomainError("kplain fails the plain-homotopy check: " + chk.message);

    Augmentation eps3 = apply_dilation(dga, eps2, d.inverted());
    std::vector<FieldElem> k = kplain.k;
    const auto& minus1 = dga.minus1_chords();
    for (std::size_t s = 0; s < k.size(); ++s)
        k[s] = d.at_component(dga.generator(minus1[s]).col) * k[s];
    DilatedHomotopy h{d, std::move(k)};

    HomotopyCheck out = is_dilated_homotopy(dga, eps1, eps3, h);
    if (!out.ok)
        throw std::logic_error("composed homotopy fails its check: " + out.message);
    return {std::move(eps3), std::move(h)};
}

HomotopyDecomposition decompose_dilated_homotopy(const Dga& dga, const Augmentation& eps1,
                                                 const Augmentation& eps2,
                                                 const DilatedHomotopy& h)
{
    HomotopyCheck chk = is_dilated_homotopy(dga, eps1, eps2, h);
    if (!chk.ok)
        throw DomainError("not a dilated homotopy between the given augmentations: " + chk.message);

    Augmentation mid = apply_dilation(dga, eps2, h.d);
    std::vector<FieldElem> k = h.k;
    const auto& minus1 = dga.minus1_chords();
    for (std::size_t s = 0; s < k.size(); ++s)
        k[s] = h.d.at_component(dga.generator(minus1[s]).col).inverse() * k[s];
    DilatedHomotopy plain{DilationTuple::ones(dga), std::move(k)};

    HomotopyCheck out = is_dilated_homotopy(dga, eps1, mid, plain);
    if (!out.ok)
        throw std::logic_error("decomposition fails the plain-homotopy check: " + out.message);
    return {std::move(mid), std::move(plain), h.d};
}

std::string format_witness(const Dga& dga, const DilatedHomotopy& h)
{
    std::ostringstream os;
    os << "d = (";
    for (std::size_t i = 0; i < h.d.d.size(); ++i) {
        if (i > 0)
            os << ", ";
        os << h.d.d[i].str();
    }
    os << ")\n";
    const auto& minus1 = dga.minus1_chords();
    for (std::size_t s = 0; s < minus1.size(); ++s)
        os << "K " << dga.generator(minus1[s]).name << " = " << h.k[s].str() << "\n";
    return os.str();
}

namespace {

std::vector<FieldElem> parse_tuple(const Dga& dga, std::string_view body, const char* what)
{
    auto open = body.find('(');
    auto close = body.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw ParseError(std::string(what) + " line must carry a parenthesized tuple");
    std::string inner(body.substr(open + 1, close - open - 1));
    std::vector<FieldElem> out;
    std::size_t pos = 0;
    while (pos <= inner.size()) {
        std::size_t comma = inner.find(',', pos);
        std::string piece = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(dga.field().parse(piece));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (static_cast<int>(out.size()) != dga.components())
        throw ParseError(std::string(what) + " tuple needs one entry per component (" +
                         std::to_string(dga.components()) + ")");
    return out;
}

}  // namespace

DilatedHomotopy parse_witness(const Dga& dga, std::string_view text)
{
    std::optional<std::vector<FieldElem>> d;
    std::map<std::string, FieldElem> kvals;

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
        if (head == "d") {
            if (d)
                throw ParseError("duplicate d line", lineno);
            std::string rest;
            std::getline(ls, rest);
            auto eq = rest.find('=');
            if (eq == std::string::npos)
                throw ParseError("expected '=' in d line", lineno);
            d = parse_tuple(dga, std::string_view(rest).substr(eq + 1), "d");
        } else if (head == "K") {
            std::string name, eq, val;
            if (!(ls >> name >> eq >> val) || eq != "=")
                throw ParseError("expected 'K <chord> = <elem>'", lineno);
            if (kvals.count(name))
                throw ParseError("duplicate K line for '" + name + "'", lineno);
            kvals.emplace(name, dga.field().parse(val));
        } else {
            throw ParseError("unknown witness directive '" + head + "'", lineno);
        }
    }
    if (!d)
        throw ParseError("witness is missing its d line");
    return make_dilated_homotopy(dga, DilationTuple::of(dga, std::move(*d)), kvals);
}

}  // namespace augcat
