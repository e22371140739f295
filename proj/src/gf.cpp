#include "augcat/gf.hpp"

#include <array>
#include <bit>

namespace augcat {

namespace {

int poly_degree(std::uint32_t p)
{
    return p == 0 ? -1 : std::bit_width(p) - 1;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b)
{
    const int db = poly_degree(b);
    int da = poly_degree(a);
    while (da >= db) {
        a ^= b << (da - db);
        da = poly_degree(a);
    }
    return a;
}

// Trial division against every polynomial of degree 1..m/2.
bool is_irreducible(std::uint32_t p, int m)
{
    const std::uint32_t limit = 1u << (m / 2 + 1);
    for (std::uint32_t q = 2; q < limit; ++q) {
        if (poly_mod(p, q) == 0)
            return false;
    }
    return true;
}

std::uint32_t compute_canonical_modulus(int m)
{
    if (m == 1)
        return 0b11u;  // x + 1
    // Candidates have bit m and bit 0 set; scan weights upward, values upward.
    for (int w = 1; w <= m - 1; ++w) {
        for (std::uint32_t mid = 0; mid < (1u << (m - 1)); ++mid) {
            if (std::popcount(mid) != w)
                continue;
            const std::uint32_t p = (1u << m) | (mid << 1) | 1u;
            if (is_irreducible(p, m))
                return p;
        }
    }
    throw FieldError("no irreducible polynomial of degree " + std::to_string(m));
}

std::uint32_t canonical_modulus(int m)
{
    static std::array<std::uint32_t, 17> cache{};
    if (cache[m] == 0)
        cache[m] = compute_canonical_modulus(m);
    return cache[m];
}

std::uint32_t mul_bits(std::uint32_t a, std::uint32_t b, std::uint32_t modulus)
{
    const int m = poly_degree(modulus);
    const std::uint32_t top = 1u << m;
    std::uint32_t acc = 0;
    while (b != 0) {
        if (b & 1u)
            acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top)
            a ^= modulus;
    }
    return acc;
}

}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b)
{
    a.require_attached();
    b.require_attached();
    if (a.mod_ != b.mod_)
        throw FieldError("field mismatch in addition");
    return FieldElem(a.bits_ ^ b.bits_, a.mod_);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b)
{
    a.require_attached();
    b.require_attached();
    if (a.mod_ != b.mod_)
        throw FieldError("field mismatch in multiplication");
    return FieldElem(mul_bits(a.bits_, b.bits_, a.mod_), a.mod_);
}

FieldElem FieldElem::pow(std::uint64_t e) const
{
    require_attached();
    FieldElem base = *this;
    FieldElem acc(1, mod_);
    while (e != 0) {
        if (e & 1u)
            acc = acc * base;
        e >>= 1;
        if (e != 0)
            base = base * base;
    }
    return acc;
}

FieldElem FieldElem::inverse() const
{
    require_attached();
    if (bits_ == 0)
        throw FieldError("inverse of zero");
    const int m = poly_degree(mod_);
    return pow((1ull << m) - 2);
}

std::string FieldElem::str() const
{
    if (bits_ == 0)
        return "0";
    std::string s;
    for (int i = poly_degree(bits_); i >= 0; --i) {
        if (!(bits_ & (1u << i)))
            continue;
        if (!s.empty())
            s += "+";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "g";
        else
            s += "g^" + std::to_string(i);
    }
    return s;
}

FieldSpec FieldSpec::make(int m)
{
    if (m < 1 || m > 16)
        throw FieldError("field exponent m must satisfy 1 <= m <= 16, got " + std::to_string(m));
    return FieldSpec(m, canonical_modulus(m));
}

FieldSpec::FieldSpec(int m, std::uint32_t modulus) : m_(m), modulus_(modulus)
{
    if (m < 1 || m > 16)
        throw FieldError("field exponent m must satisfy 1 <= m <= 16, got " + std::to_string(m));
    if (poly_degree(modulus) != m)
        throw FieldError("modulus degree does not match m");
    if (!(modulus & 1u))
        throw FieldError("modulus must have a nonzero constant term");
    if (!is_irreducible(modulus, m))
        throw FieldError("modulus is reducible over GF(2)");
}

FieldElem FieldSpec::element(std::uint32_t bits) const
{
    if (bits >= order())
        throw FieldError("bit pattern out of range for GF(2^" + std::to_string(m_) + ")");
    return FieldElem(bits, modulus_);
}

std::vector<FieldElem> FieldSpec::units() const
{
    std::vector<FieldElem> out;
    out.reserve(order() - 1);
    for (std::uint32_t b = 1; b < order(); ++b)
        out.push_back(FieldElem(b, modulus_));
    return out;
}

FieldElem FieldSpec::parse(std::string_view text) const
{
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t')
            compact += c;
    if (compact.empty())
        throw ParseError("empty field element");
    if (compact == "0")
        return zero();

    std::uint32_t bits = 0;
    size_t pos = 0;
    while (pos <= compact.size()) {
        size_t plus = compact.find('+', pos);
        std::string term = compact.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        int exponent;
        if (term == "1") {
            exponent = 0;
        } else if (term == "g") {
            exponent = 1;
        } else if (term.size() > 2 && term[0] == 'g' && term[1] == '^') {
            std::string digits = term.substr(2);
            for (char c : digits)
                if (c < '0' || c > '9')
                    throw ParseError("malformed field element term '" + term + "'");
            try {
                exponent = std::stoi(digits);
            } catch (const std::out_of_range&) {
                throw ParseError("exponent out of range in '" + term + "'");
            }
        } else {
            throw ParseError("malformed field element term '" + term + "'");
        }
        if (exponent >= m_)
            throw ParseError("term g^" + std::to_string(exponent) + " is not reduced in GF(2^" +
                             std::to_string(m_) + ")");
        bits ^= 1u << exponent;
        if (plus == std::string::npos)
            break;
        pos = plus + 1;
        if (pos == compact.size())
            throw ParseError("dangling '+' in field element");
    }
    return FieldElem(bits, modulus_);
}

FieldSpec FieldSpec::from_label(std::string_view label)
{
    if (label.size() < 3 || label[0] != '2' || label[1] != '^')
        throw ParseError("field must be written 2^m, got '" + std::string(label) + "'");
    std::string digits(label.substr(2));
    for (char c : digits)
        if (c < '0' || c > '9')
            throw ParseError("field must be written 2^m, got '" + std::string(label) + "'");
    int m = 0;
    try {
        m = std::stoi(digits);
    } catch (const std::out_of_range&) {
        throw FieldError("field exponent out of range");
    }
    return make(m);
}

}  // namespace augcat
