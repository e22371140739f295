#include "augcat/dga.hpp"

#include <algorithm>
#include <sstream>

namespace augcat {

std::string ValidationReport::str() const
{
    if (issues.empty())
        return "valid";
    std::string s;
    for (const std::string& i : issues) {
        s += "- ";
        s += i;
        s += "\n";
    }
    return s;
}

int Dga::generator_index(std::string_view name) const
{
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int Dga::word_degree(const Word& w) const
{
    int d = 0;
    for (int g : w.letters())
        d += gens_[g].degree;
    return d;
}

std::string Dga::word_str(const Word& w) const
{
    if (w.is_unit())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0)
            s += ".";
        s += gens_[w.letter(i)].name;
    }
    return s;
}

Word Dga::subword(const Word& w, std::size_t begin, std::size_t end) const
{
    if (begin == end) {
        if (begin < w.size())
            return Word::unit(gens_[w.letter(begin)].row);
        if (!w.is_unit())
            return Word::unit(gens_[w.letter(w.size() - 1)].col);
        return Word::unit(w.unit_component());
    }
    return Word(std::vector<int>(w.letters().begin() + begin, w.letters().begin() + end));
}

Word Dga::concat(const Word& a, const Word& b) const
{
    if (a.is_unit() && b.is_unit()) {
        if (a.unit_component() != b.unit_component())
            throw DomainError("non-composable unit words");
        return a;
    }
    if (a.is_unit()) {
        if (a.unit_component() != word_row(b))
            throw DomainError("non-composable concatenation");
        return b;
    }
    if (b.is_unit()) {
        if (word_col(a) != b.unit_component())
            throw DomainError("non-composable concatenation");
        return a;
    }
    if (word_col(a) != word_row(b))
        throw DomainError("non-composable concatenation of " + word_str(a) + " and " + word_str(b));

    std::vector<int> out;
    out.reserve(a.size() + b.size());
    auto push = [&](int g) {
        if (!out.empty()) {
            const Generator& prev = gens_[out.back()];
            if (prev.partner == g) {  // x . x^-1 or x^-1 . x cancels
                out.pop_back();
                return;
            }
        }
        out.push_back(g);
    };
    for (int g : a.letters())
        out.push_back(g);  // a is already reduced
    for (int g : b.letters())
        push(g);
    if (out.empty())
        return Word::unit(word_row(a));
    return Word(std::move(out));
}

Poly Dga::leibniz_boundary(const Poly& p) const
{
    // Characteristic 2: d(w) = sum_t w_{<t} d(w_t) w_{>t}, no signs.
    std::optional<int> deg;
    for (const auto& [w, c] : p.terms()) {
        int d = word_degree(w);
        if (!deg)
            deg = d;
        else if (*deg != d)
            throw DomainError("leibniz_boundary needs a degree-homogeneous polynomial");
    }
    Poly out;
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t t = 0; t < w.size(); ++t) {
            const Poly& dlet = diffs_[w.letter(t)];
            if (dlet.is_zero())
                continue;
            const Word prefix = subword(w, 0, t);
            const Word suffix = subword(w, t + 1, w.size());
            for (const auto& [u, cu] : dlet.terms())
                out.add_term(concat(concat(prefix, u), suffix), c * cu);
        }
    }
    return out;
}

FieldElem Dga::eval_word(std::span<const FieldElem> values, const Word& w, std::size_t begin,
                         std::size_t end) const
{
    FieldElem r = field_.one();
    for (std::size_t i = begin; i < end; ++i)
        r *= values[w.letter(i)];
    return r;
}

FieldElem Dga::eval(std::span<const FieldElem> values, const Poly& p) const
{
    if (values.size() != gens_.size())
        throw DomainError("value assignment must cover every generator");
    FieldElem acc = field_.zero();
    for (const auto& [w, c] : p.terms())
        acc += c * eval_word(values, w, 0, w.size());
    return acc;
}

std::vector<int> Dga::chords_of_degree(int degree) const
{
    if (degree == -1)
        return minus1_;
    std::vector<int> out;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].kind == GenKind::Chord && gens_[i].degree == degree)
            out.push_back(static_cast<int>(i));
    return out;
}

ValidationReport Dga::validate() const
{
    ValidationReport rep;
    auto issue = [&rep](std::string s) { rep.issues.push_back(std::move(s)); };

    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const Generator& g = gens_[i];
        if (g.kind != GenKind::Chord) {
            if (g.degree != 0)
                issue("loop generator " + g.name + " has nonzero degree");
            if (g.row != g.col)
                issue("loop generator " + g.name + " has row != col");
            if (g.partner < 0 || gens_[g.partner].partner != static_cast<int>(i))
                issue("loop generator " + g.name + " has no consistent inverse");
            if (!diffs_[i].is_zero())
                issue("loop generator " + g.name + " has a nonzero differential");
            continue;
        }
        for (const auto& [w, c] : diffs_[i].terms()) {
            if (word_degree(w) != g.degree - 1)
                issue("differential of " + g.name + " has word " + word_str(w) +
                      " of degree " + std::to_string(word_degree(w)) + ", expected " +
                      std::to_string(g.degree - 1));
            if (word_row(w) != g.row || word_col(w) != g.col)
                issue("differential of " + g.name + " has word " + word_str(w) +
                      " with link grading (" + std::to_string(word_row(w)) + "," +
                      std::to_string(word_col(w)) + "), expected (" + std::to_string(g.row) +
                      "," + std::to_string(g.col) + ")");
            for (std::size_t t = 0; t + 1 < w.size(); ++t)
                if (gens_[w.letter(t)].col != gens_[w.letter(t + 1)].row)
                    issue("differential of " + g.name + " has non-composable word " + word_str(w));
        }
    }

    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (diffs_[i].is_zero())
            continue;
        Poly dd = leibniz_boundary(diffs_[i]);
        if (!dd.is_zero()) {
            const auto& [w, c] = *dd.terms().begin();
            issue("d^2 != 0: witness generator " + gens_[i].name + ", surviving word " +
                  word_str(w));
        }
    }

    // Energy filtration: each word of d(x) is strictly below x. Checked only
    // where the needed energies are present.
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const Generator& g = gens_[i];
        if (!g.energy)
            continue;
        for (const auto& [w, c] : diffs_[i].terms()) {
            Rational sum(0, 1);
            bool complete = true;
            for (int letter : w.letters()) {
                const Generator& lg = gens_[letter];
                if (lg.kind != GenKind::Chord)
                    continue;
                if (!lg.energy) {
                    complete = false;
                    break;
                }
                sum = sum + *lg.energy;
            }
            if (complete && !(sum < *g.energy))
                issue("energy violation: word " + word_str(w) + " of the differential of " +
                      g.name + " has energy " + sum.str() + " >= " + g.energy->str());
        }
    }

    return rep;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct LineCursor {
    std::string_view text;
    int line;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    }
    bool done()
    {
        skip_ws();
        return pos >= text.size();
    }
    int col() const { return static_cast<int>(pos) + 1; }
    std::string_view token()
    {
        skip_ws();
        if (pos >= text.size())
            throw ParseError("unexpected end of line", line, col());
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t')
            ++pos;
        return text.substr(start, pos - start);
    }
    std::string_view rest()
    {
        skip_ws();
        return text.substr(pos);
    }
};

bool valid_name(std::string_view s)
{
    if (s.empty())
        return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    std::string_view body = s;
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1")
        body = body.substr(0, body.size() - 3);
    for (char c : body)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

int parse_int(std::string_view tok, int line, int col)
{
    if (tok.empty())
        throw ParseError("expected an integer", line, col);
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size())
        throw ParseError("expected an integer", line, col);
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9')
            throw ParseError("expected an integer, got '" + std::string(tok) + "'", line, col);
    try {
        return std::stoi(std::string(tok));
    } catch (const std::out_of_range&) {
        throw ParseError("integer out of range: '" + std::string(tok) + "'", line, col);
    }
}

struct Parser {
    std::optional<FieldSpec> field;
    std::optional<FieldSpec> override_field;
    int ncomp = 0;
    bool diff_seen = false;
    std::vector<Generator> gens;
    std::vector<std::optional<Poly>> diffs;
    std::map<std::string, int, std::less<>> index;

    const FieldSpec& the_field(int line) const
    {
        if (!field)
            throw ParseError("a 'field 2^m' line must precede this one", line);
        return *field;
    }

    int lookup(std::string_view name, int line, int col) const
    {
        auto it = index.find(name);
        if (it == index.end())
            throw ParseError("unknown generator '" + std::string(name) + "'", line, col);
        return it->second;
    }

    void add_generator(Generator g, int line)
    {
        if (index.count(g.name))
            throw ParseError("duplicate generator name '" + g.name + "'", line);
        index.emplace(g.name, static_cast<int>(gens.size()));
        gens.push_back(std::move(g));
        diffs.emplace_back();
    }

    Word parse_word(std::string_view text, int line, int col, const Generator& target)
    {
        std::string compact;
        for (char c : text)
            if (c != ' ' && c != '\t')
                compact += c;
        if (compact == "1") {
            if (target.row != target.col)
                throw ParseError("unit word in the differential of '" + target.name +
                                     "', whose ends lie on different components",
                                 line, col);
            return Word::unit(target.row);
        }
        std::vector<int> letters;
        std::size_t pos = 0;
        while (true) {
            std::size_t dot = compact.find('.', pos);
            std::string name = compact.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
            if (!valid_name(name))
                throw ParseError("malformed generator name '" + name + "'", line, col);
            letters.push_back(lookup(name, line, col));
            if (dot == std::string::npos)
                break;
            pos = dot + 1;
        }
        for (std::size_t t = 0; t + 1 < letters.size(); ++t)
            if (gens[letters[t]].col != gens[letters[t + 1]].row)
                throw ParseError("non-composable word '" + compact + "': col(" +
                                     gens[letters[t]].name + ") != row(" +
                                     gens[letters[t + 1]].name + ")",
                                 line, col);
        // Canonicalize: cancel adjacent loop/inverse pairs.
        std::vector<int> reduced;
        for (int g : letters) {
            if (!reduced.empty() && gens[reduced.back()].partner == g)
                reduced.pop_back();
            else
                reduced.push_back(g);
        }
        if (reduced.empty())
            return Word::unit(gens[letters.front()].row);
        return Word(std::move(reduced));
    }

    Poly parse_poly(std::string_view text, int line, int basecol, const Generator& target)
    {
        Poly out;
        // Trim.
        std::size_t b = 0, e = text.size();
        while (b < e && (text[b] == ' ' || text[b] == '\t'))
            ++b;
        while (e > b && (text[e - 1] == ' ' || text[e - 1] == '\t'))
            --e;
        std::string_view body = text.substr(b, e - b);
        if (body.empty())
            throw ParseError("empty differential", line, basecol);
        if (body == "0")
            return out;

        // Split on '+' outside parentheses; scalars like (g+1) contain '+'.
        std::size_t start = 0;
        int depth = 0;
        std::vector<std::pair<std::string_view, int>> pieces;
        for (std::size_t i = 0; i <= body.size(); ++i) {
            if (i == body.size() || (body[i] == '+' && depth == 0)) {
                pieces.emplace_back(body.substr(start, i - start), basecol + static_cast<int>(b + start));
                start = i + 1;
            } else if (body[i] == '(') {
                ++depth;
            } else if (body[i] == ')') {
                --depth;
                if (depth < 0)
                    throw ParseError("unbalanced ')'", line, basecol + static_cast<int>(b + i));
            }
        }
        if (depth != 0)
            throw ParseError("unbalanced '('", line, basecol);

        for (auto [piece, col] : pieces) {
            std::size_t pb = 0, pe = piece.size();
            while (pb < pe && (piece[pb] == ' ' || piece[pb] == '\t'))
                ++pb;
            while (pe > pb && (piece[pe - 1] == ' ' || piece[pe - 1] == '\t'))
                --pe;
            std::string_view term = piece.substr(pb, pe - pb);
            if (term.empty())
                throw ParseError("empty term", line, col);
            FieldElem coeff = the_field(line).one();
            if (term[0] == '(') {
                std::size_t close = term.find(')');
                if (close == std::string_view::npos)
                    throw ParseError("unterminated scalar", line, col);
                try {
                    coeff = the_field(line).parse(term.substr(1, close - 1));
                } catch (const ParseError& pe2) {
                    throw ParseError(pe2.what(), line, col);
                }
                std::size_t after = close + 1;
                while (after < term.size() && (term[after] == ' ' || term[after] == '\t'))
                    ++after;
                if (after >= term.size() || term[after] != '*')
                    throw ParseError("expected '*word' after scalar", line, col);
                term = term.substr(after + 1);
            }
            Word w = parse_word(term, line, col, target);
            if (word_degree_of(w) != target.degree - 1)
                throw ParseError("degree mismatch in the differential of '" + target.name +
                                     "': word '" + std::string(term) + "' has degree " +
                                     std::to_string(word_degree_of(w)) + ", expected " +
                                     std::to_string(target.degree - 1),
                                 line, col);
            int wr = w.is_unit() ? w.unit_component() : gens[w.letter(0)].row;
            int wc = w.is_unit() ? w.unit_component() : gens[w.letter(w.size() - 1)].col;
            if (wr != target.row || wc != target.col)
                throw ParseError("link grading mismatch in the differential of '" + target.name +
                                     "': word '" + std::string(term) + "'",
                                 line, col);
            out.add_term(w, coeff);
        }
        return out;
    }

    int word_degree_of(const Word& w) const
    {
        int d = 0;
        for (int g : w.letters())
            d += gens[g].degree;
        return d;
    }
};

}  // namespace

Dga Dga::parse(std::string_view text, const std::optional<FieldSpec>& field_override)
{
    Parser ps;
    ps.override_field = field_override;

    int lineno = 0;
    std::size_t cursorpos = 0;
    while (cursorpos <= text.size()) {
        std::size_t nl = text.find('\n', cursorpos);
        std::string_view raw =
            text.substr(cursorpos, nl == std::string_view::npos ? std::string_view::npos : nl - cursorpos);
        cursorpos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;

        std::size_t hash = raw.find('#');
        std::string_view lv = hash == std::string_view::npos ? raw : raw.substr(0, hash);
        LineCursor cur{lv, lineno};
        if (cur.done())
            continue;
        std::string_view kw = cur.token();

        if (kw == "field") {
            if (ps.field)
                throw ParseError("duplicate field line", lineno);
            int col = cur.col();
            std::string_view label = cur.token();
            try {
                FieldSpec declared = FieldSpec::from_label(label);
                ps.field = ps.override_field ? *ps.override_field : declared;
            } catch (const FieldError& fe) {
                throw ParseError(fe.what(), lineno, col);
            } catch (const ParseError& pe) {
                throw ParseError(pe.what(), lineno, col);
            }
        } else if (kw == "components") {
            if (ps.ncomp != 0)
                throw ParseError("duplicate components line", lineno);
            int col = cur.col();
            int n = parse_int(cur.token(), lineno, col);
            if (n < 1)
                throw ParseError("components must be >= 1", lineno, col);
            ps.ncomp = n;
        } else if (kw == "gen") {
            if (!ps.field || ps.ncomp == 0)
                throw ParseError("field and components must precede generators", lineno);
            if (ps.diff_seen)
                throw ParseError("generators must be declared before differentials", lineno);
            int col = cur.col();
            std::string name(cur.token());
            if (!valid_name(name) || (name.size() > 3 && name.substr(name.size() - 3) == "^-1"))
                throw ParseError("malformed generator name '" + name + "'", lineno, col);
            col = cur.col();
            int degree = parse_int(cur.token(), lineno, col);
            col = cur.col();
            int row = parse_int(cur.token(), lineno, col);
            if (row < 1 || row > ps.ncomp)
                throw ParseError("row component out of range", lineno, col);
            col = cur.col();
            int colcomp = parse_int(cur.token(), lineno, col);
            if (colcomp < 1 || colcomp > ps.ncomp)
                throw ParseError("col component out of range", lineno, col);
            col = cur.col();
            std::string_view kind = cur.token();
            if (!cur.done())
                throw ParseError("trailing tokens after generator declaration", lineno, cur.col());
            if (kind == "chord") {
                ps.add_generator({name, degree, row, colcomp, GenKind::Chord, {}, -1}, lineno);
            } else if (kind == "loop") {
                if (degree != 0)
                    throw ParseError("loop generator '" + name + "' must have degree 0", lineno, col);
                if (row != colcomp)
                    throw ParseError("loop generator '" + name + "' must have row == col", lineno, col);
                int self = static_cast<int>(ps.gens.size());
                ps.add_generator({name, 0, row, colcomp, GenKind::Loop, {}, self + 1}, lineno);
                ps.add_generator({name + "^-1", 0, row, colcomp, GenKind::LoopInverse, {}, self},
                                 lineno);
            } else if (kind == "loop_inverse") {
                throw ParseError("loop inverses are implicit; declare the loop only", lineno, col);
            } else {
                throw ParseError("unknown generator kind '" + std::string(kind) + "'", lineno, col);
            }
        } else if (kw == "energy") {
            int col = cur.col();
            int g = ps.lookup(cur.token(), lineno, col);
            if (ps.gens[g].kind != GenKind::Chord)
                throw ParseError("energy applies to chords only", lineno, col);
            if (ps.gens[g].energy)
                throw ParseError("duplicate energy for '" + ps.gens[g].name + "'", lineno, col);
            col = cur.col();
            Rational r(0, 1);
            try {
                r = Rational::parse(cur.token());
            } catch (const ParseError& pe) {
                throw ParseError(pe.what(), lineno, col);
            }
            if (!r.positive())
                throw ParseError("energy must be positive", lineno, col);
            ps.gens[g].energy = r;
            if (!cur.done())
                throw ParseError("trailing tokens after energy", lineno, cur.col());
        } else if (kw == "diff") {
            ps.diff_seen = true;
            int col = cur.col();
            int g = ps.lookup(cur.token(), lineno, col);
            if (ps.gens[g].kind == GenKind::LoopInverse)
                throw ParseError("the differential of a loop inverse is implicit", lineno, col);
            if (ps.diffs[g])
                throw ParseError("duplicate differential for '" + ps.gens[g].name + "'", lineno, col);
            cur.skip_ws();
            if (cur.pos >= cur.text.size() || cur.text[cur.pos] != '=')
                throw ParseError("expected '=' in differential line", lineno, cur.col());
            ++cur.pos;
            int basecol = cur.col();
            if (ps.gens[g].kind == GenKind::Loop) {
                std::string_view rest = cur.rest();
                std::size_t e = rest.size();
                while (e > 0 && (rest[e - 1] == ' ' || rest[e - 1] == '\t'))
                    --e;
                if (rest.substr(0, e) != "0")
                    throw ParseError("the differential of a loop must be 0", lineno, basecol);
                ps.diffs[g] = Poly();
            } else {
                ps.diffs[g] = ps.parse_poly(cur.rest(), lineno, basecol, ps.gens[g]);
            }
        } else {
            throw ParseError("unknown directive '" + std::string(kw) + "'", lineno, cur.col());
        }
    }

    if (!ps.field)
        throw ParseError("missing field line");
    if (ps.ncomp == 0)
        throw ParseError("missing components line");
    for (std::size_t i = 0; i < ps.gens.size(); ++i)
        if (ps.gens[i].kind == GenKind::Chord && !ps.diffs[i])
            throw ParseError("chord '" + ps.gens[i].name + "' has no diff line");

    Dga dga(*ps.field);
    dga.ncomp_ = ps.ncomp;
    dga.gens_ = std::move(ps.gens);
    dga.index_ = std::move(ps.index);
    dga.diffs_.resize(dga.gens_.size());
    for (std::size_t i = 0; i < dga.gens_.size(); ++i)
        if (ps.diffs[i])
            dga.diffs_[i] = std::move(*ps.diffs[i]);
    dga.build_caches();
    return dga;
}

void Dga::build_caches()
{
    deg0_chords_.clear();
    minus1_.clear();
    loops_.clear();
    assignables_.clear();
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const Generator& g = gens_[i];
        if (g.kind == GenKind::Chord && g.degree == 0)
            deg0_chords_.push_back(static_cast<int>(i));
        if (g.kind == GenKind::Chord && g.degree == -1)
            minus1_.push_back(static_cast<int>(i));
        if (g.kind == GenKind::Loop)
            loops_.push_back(static_cast<int>(i));
        if ((g.kind == GenKind::Chord && g.degree == 0) || g.kind == GenKind::Loop)
            assignables_.push_back(static_cast<int>(i));
    }
    bool all_energies = !minus1_.empty();
    for (int g : minus1_)
        if (!gens_[g].energy)
            all_energies = false;
    if (all_energies) {
        std::stable_sort(minus1_.begin(), minus1_.end(), [this](int a, int b) {
            return *gens_[a].energy < *gens_[b].energy;
        });
    }
    minus1_slot_.assign(gens_.size(), -1);
    for (std::size_t s = 0; s < minus1_.size(); ++s)
        minus1_slot_[minus1_[s]] = static_cast<int>(s);
}

std::string Dga::serialize() const
{
    std::ostringstream os;
    os << "field " << field_.label() << "\n";
    os << "components " << ncomp_ << "\n";
    for (const Generator& g : gens_) {
        if (g.kind == GenKind::LoopInverse)
            continue;
        os << "gen " << g.name << " " << g.degree << " " << g.row << " " << g.col << " "
           << (g.kind == GenKind::Chord ? "chord" : "loop") << "\n";
    }
    for (const Generator& g : gens_)
        if (g.energy)
            os << "energy " << g.name << " " << g.energy->str() << "\n";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].kind != GenKind::Chord)
            continue;
        os << "diff " << gens_[i].name << " = ";
        if (diffs_[i].is_zero()) {
            os << "0";
        } else {
            bool first = true;
            for (const auto& [w, c] : diffs_[i].terms()) {
                if (!first)
                    os << " + ";
                first = false;
                if (!(c == field_.one()))
                    os << "(" << c.str() << ")*";
                os << word_str(w);
            }
        }
        os << "\n";
    }
    return os.str();
}

bool Dga::operator==(const Dga& o) const
{
    if (!(field_ == o.field_) || ncomp_ != o.ncomp_ || gens_.size() != o.gens_.size())
        return false;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const Generator &a = gens_[i], &b = o.gens_[i];
        if (a.name != b.name || a.degree != b.degree || a.row != b.row || a.col != b.col ||
            a.kind != b.kind || a.partner != b.partner)
            return false;
        if (a.energy.has_value() != b.energy.has_value())
            return false;
        if (a.energy && !(*a.energy == *b.energy))
            return false;
    }
    return diffs_ == o.diffs_;
}

}  // namespace augcat
