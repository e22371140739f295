#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "augcat/gf.hpp"
#include "augcat/rational.hpp"

namespace augcat {

enum class GenKind { Chord, Loop, LoopInverse };

// A generator of the algebra. Link grading: a generator goes from component
// `col` (its c-end) to component `row` (its r-end); loops live on a single
// component, so row == col for them.
struct Generator {
    std::string name;
    int degree = 0;
    int row = 1;
    int col = 1;
    GenKind kind = GenKind::Chord;
    std::optional<Rational> energy;
    int partner = -1;  // loop <-> loop_inverse pairing
};

// A reduced monomial: a composable sequence of generator indices. The empty
// word is the unit of one component, tracked explicitly so that link grading
// stays total.
class Word {
public:
    Word() = default;
    static Word unit(int component)
    {
        Word w;
        w.unit_comp_ = component;
        return w;
    }
    explicit Word(std::vector<int> letters, int unit_component = 0)
        : letters_(std::move(letters)), unit_comp_(unit_component)
    {
    }

    bool is_unit() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    int letter(std::size_t i) const { return letters_[i]; }
    const std::vector<int>& letters() const { return letters_; }
    int unit_component() const { return unit_comp_; }

    bool operator==(const Word& o) const
    {
        if (letters_.empty() && o.letters_.empty())
            return unit_comp_ == o.unit_comp_;
        return letters_ == o.letters_;
    }

    // Canonical term order: length first, then letter indices; empty words
    // compare by their component.
    bool operator<(const Word& o) const
    {
        if (letters_.size() != o.letters_.size())
            return letters_.size() < o.letters_.size();
        if (letters_.empty())
            return unit_comp_ < o.unit_comp_;
        return letters_ < o.letters_;
    }

private:
    std::vector<int> letters_;
    int unit_comp_ = 0;
};

// A noncommutative polynomial: words with nonzero coefficients, kept in
// canonical order. Zero coefficients are never stored.
class Poly {
public:
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Word, FieldElem>& terms() const { return terms_; }

    void add_term(const Word& w, const FieldElem& c)
    {
        if (c.is_zero())
            return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }

    bool operator==(const Poly&) const = default;

private:
    std::map<Word, FieldElem> terms_;
};

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
    std::string str() const;
};

// A link-graded semi-free dga over GF(2^m): generators (chords plus loop
// generators with explicit inverses), a differential, optional chord
// energies. Immutable once parsed; all operations are pure.
class Dga {
public:
    // Parses the line-oriented dga file format. When `field_override` is set
    // it replaces the file's field declaration.
    static Dga parse(std::string_view text, const std::optional<FieldSpec>& field_override = {});
    std::string serialize() const;

    const FieldSpec& field() const { return field_; }
    int components() const { return ncomp_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(int i) const { return gens_[i]; }
    int generator_index(std::string_view name) const;  // -1 when unknown
    const Poly& differential(int gen) const { return diffs_[gen]; }

    int word_row(const Word& w) const
    {
        return w.is_unit() ? w.unit_component() : gens_[w.letter(0)].row;
    }
    int word_col(const Word& w) const
    {
        return w.is_unit() ? w.unit_component() : gens_[w.letter(w.size() - 1)].col;
    }
    int word_degree(const Word& w) const;
    std::string word_str(const Word& w) const;

    // Subword [begin, end); an empty result is the unit on the component that
    // splices back composably.
    Word subword(const Word& w, std::size_t begin, std::size_t end) const;
    // Concatenation with loop-inverse cancellation; checks composability.
    Word concat(const Word& a, const Word& b) const;

    Poly leibniz_boundary(const Poly& p) const;

    // Multiplicative-linear extension of a value assignment (one value per
    // generator; the empty word evaluates to 1).
    FieldElem eval(std::span<const FieldElem> values, const Poly& p) const;
    FieldElem eval_word(std::span<const FieldElem> values, const Word& w, std::size_t begin,
                        std::size_t end) const;

    ValidationReport validate() const;

    const std::vector<int>& degree0_chords() const { return deg0_chords_; }
    // Degree -1 chords in canonical order: increasing energy when every one of
    // them carries an energy, file order otherwise.
    const std::vector<int>& minus1_chords() const { return minus1_; }
    int minus1_slot(int gen) const { return minus1_slot_[gen]; }
    const std::vector<int>& loop_generators() const { return loops_; }
    // Generators an augmentation assigns freely: degree-0 chords and loops.
    const std::vector<int>& assignables() const { return assignables_; }
    // Chords of one degree; canonical order (see minus1_chords for -1).
    std::vector<int> chords_of_degree(int degree) const;

    bool operator==(const Dga& o) const;

private:
    Dga(FieldSpec field) : field_(std::move(field)) {}
    void build_caches();

    FieldSpec field_;
    int ncomp_ = 0;
    std::vector<Generator> gens_;
    std::vector<Poly> diffs_;
    std::map<std::string, int, std::less<>> index_;
    std::vector<int> deg0_chords_;
    std::vector<int> minus1_;
    std::vector<int> minus1_slot_;
    std::vector<int> loops_;
    std::vector<int> assignables_;
};

}  // namespace augcat
