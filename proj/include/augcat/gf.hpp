#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "augcat/errors.hpp"

namespace augcat {

class FieldSpec;

// An element of GF(2^m): the bit i of `bits` is the coefficient of g^i in the
// residue polynomial. Elements remember their field through the modulus, so
// cross-field arithmetic is rejected instead of silently reduced.
class FieldElem {
public:
    FieldElem() = default;  // detached element; arithmetic on it throws

    std::uint32_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    FieldElem inverse() const;
    FieldElem pow(std::uint64_t e) const;

    bool operator==(const FieldElem&) const = default;

    // Polynomial notation in g: "0", "1", "g", "g+1", "g^2+g", ...
    std::string str() const;

private:
    friend class FieldSpec;
    FieldElem(std::uint32_t bits, std::uint32_t modulus) : bits_(bits), mod_(modulus) {}

    void require_attached() const
    {
        if (mod_ == 0)
            throw FieldError("arithmetic on a detached field element");
    }

    std::uint32_t bits_ = 0;
    std::uint32_t mod_ = 0;
};

// GF(2^m) for 1 <= m <= 16, represented modulo a fixed irreducible polynomial
// over GF(2) with nonzero constant term. make(m) picks the canonical modulus:
// lowest weight first, then numerically least, so serialized elements are
// portable across runs.
class FieldSpec {
public:
    static FieldSpec make(int m);
    FieldSpec(int m, std::uint32_t modulus);  // verifies irreducibility

    int degree() const { return m_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t order() const { return 1u << m_; }

    FieldElem zero() const { return FieldElem(0, modulus_); }
    FieldElem one() const { return FieldElem(1, modulus_); }
    FieldElem element(std::uint32_t bits) const;

    // All 2^m - 1 nonzero elements, ascending bit patterns.
    std::vector<FieldElem> units() const;

    FieldElem parse(std::string_view text) const;

    // "2^m" labels, as used by dga files and the CLI --field option.
    std::string label() const { return "2^" + std::to_string(m_); }
    static FieldSpec from_label(std::string_view label);

    bool operator==(const FieldSpec& o) const { return modulus_ == o.modulus_; }

private:
    int m_;
    std::uint32_t modulus_;
};

}  // namespace augcat
