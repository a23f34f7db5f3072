#ifndef CHROMA_RATIONAL_HPP
#define CHROMA_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>

#include "chroma/bigint.hpp"

namespace chroma {

// Exact rational with arbitrary-precision numerator and positive denominator,
// always stored fully reduced.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(BigInt value) : num_(std::move(value)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    bool operator==(const Rational& rhs) const = default;
    std::strong_ordering operator<=>(const Rational& rhs) const;

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace chroma

#endif
