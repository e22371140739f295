#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "augcat/errors.hpp"

namespace augcat {

// Exact rational with small operands; used for Reeb chord energies.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    Rational(long long num, long long den) : num_(num), den_(den)
    {
        if (den_ == 0)
            throw DomainError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    // Accepts "4", "7/2" and decimal notation "3.5".
    static Rational parse(std::string_view text);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool positive() const { return num_ > 0; }

    std::string str() const
    {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return Rational(static_cast<long long>(n), static_cast<long long>(d));
    }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator<(const Rational& a, const Rational& b)
    {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }

private:
    static __int128 gcd128(__int128 a, __int128 b)
    {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    }

    long long num_;
    long long den_;
};

inline Rational Rational::parse(std::string_view text)
{
    if (text.empty())
        throw ParseError("empty rational");
    auto is_digits = [](std::string_view s) {
        if (s.empty() || s.size() > 12)
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::string_view a = text.substr(0, slash), b = text.substr(slash + 1);
        if (!is_digits(a) || !is_digits(b))
            throw ParseError("malformed rational '" + std::string(text) + "'");
        return Rational(std::stoll(std::string(a)), std::stoll(std::string(b)));
    }
    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view a = text.substr(0, dot), b = text.substr(dot + 1);
        if (!is_digits(a) || !is_digits(b))
            throw ParseError("malformed rational '" + std::string(text) + "'");
        long long den = 1;
        for (size_t i = 0; i < b.size(); ++i)
            den *= 10;
        return Rational(std::stoll(std::string(a)) * den + std::stoll(std::string(b)), den);
    }
    if (!is_digits(text))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    return Rational(std::stoll(std::string(text)), 1);
}

}  // namespace augcat
