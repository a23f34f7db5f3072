#ifndef CHROMA_BIGINT_HPP
#define CHROMA_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chroma {

// Arbitrary-precision signed integer. Limbs are base 10^9, little-endian,
// with no leading zero limbs; sign_ == 0 iff the value is zero.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);
    explicit BigInt(std::string_view decimal);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    BigInt abs() const;
    BigInt operator-() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt& operator/=(const BigInt& rhs);
    BigInt& operator%=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }
    friend BigInt operator/(BigInt lhs, const BigInt& rhs) { return lhs /= rhs; }
    friend BigInt operator%(BigInt lhs, const BigInt& rhs) { return lhs %= rhs; }

    // Truncated division: quotient rounds toward zero, remainder keeps the
    // dividend's sign, |remainder| < |divisor|.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(const BigInt& base, unsigned exponent);

    bool operator==(const BigInt& rhs) const = default;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    std::string to_string() const;
    bool fits_long_long() const;
    long long to_long_long() const;  // throws std::overflow_error when out of range

private:
    static constexpr std::uint32_t kBase = 1'000'000'000u;
    static constexpr int kBaseDigits = 9;

    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim();
    static int compare_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag_small(const std::vector<std::uint32_t>& a, std::uint32_t m);
    static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> divmod_mag(
        const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace chroma

#endif
