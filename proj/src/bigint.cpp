#include "chroma/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace chroma {

BigInt::BigInt(long long value) {
    if (value == 0) return;
    sign_ = value < 0 ? -1 : 1;
    // avoid overflow on LLONG_MIN by working in unsigned space
    unsigned long long u = value < 0 ? 0ull - static_cast<unsigned long long>(value)
                                     : static_cast<unsigned long long>(value);
    while (u > 0) {
        mag_.push_back(static_cast<std::uint32_t>(u % kBase));
        u /= kBase;
    }
}

BigInt::BigInt(std::string_view decimal) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < decimal.size() && (decimal[pos] == '-' || decimal[pos] == '+')) {
        sign = decimal[pos] == '-' ? -1 : 1;
        ++pos;
    }
    if (pos == decimal.size()) throw std::invalid_argument("empty integer literal");
    for (std::size_t i = pos; i < decimal.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(decimal[i])))
            throw std::invalid_argument("invalid integer literal");

    for (std::size_t end = decimal.size(); end > pos;) {
        std::size_t start = end >= pos + kBaseDigits ? end - kBaseDigits : pos;
        std::uint32_t limb = 0;
        for (std::size_t i = start; i < end; ++i)
            limb = limb * 10 + static_cast<std::uint32_t>(decimal[i] - '0');
        mag_.push_back(limb);
        end = start;
    }
    sign_ = sign;
    trim();
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint32_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        carry = sum >= kBase ? 1 : 0;
        out.push_back(sum >= kBase ? sum - kBase : sum);
    }
    if (carry) out.push_back(carry);
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (cur < 0) {
            cur += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(cur));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag_small(const std::vector<std::uint32_t>& a, std::uint32_t m) {
    if (a.empty() || m == 0) return {};
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + 1);
    std::uint64_t carry = 0;
    for (std::uint32_t limb : a) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
        out.push_back(static_cast<std::uint32_t>(cur % kBase));
        carry = cur / kBase;
    }
    while (carry) {
        out.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    return out;
}

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> BigInt::divmod_mag(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> quot(a.size(), 0);
    std::vector<std::uint32_t> rem;  // running remainder, little-endian
    for (std::size_t i = a.size(); i-- > 0;) {
        // rem = rem * base + a[i]
        rem.insert(rem.begin(), a[i]);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // binary search the largest digit d with b * d <= rem
        std::uint32_t lo = 0, hi = kBase - 1, d = 0;
        while (lo <= hi) {
            std::uint32_t mid = lo + (hi - lo) / 2;
            if (compare_mag(mul_mag_small(b, mid), rem) <= 0) {
                d = mid;
                lo = mid + 1;
            } else {
                if (mid == 0) break;
                hi = mid - 1;
            }
        }
        quot[i] = d;
        if (d) rem = sub_mag(rem, mul_mag_small(b, d));
    }
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
    return {std::move(quot), std::move(rem)};
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) return *this = rhs;
    if (sign_ == rhs.sign_) {
        mag_ = add_mag(mag_, rhs.mag_);
        return *this;
    }
    int cmp = compare_mag(mag_, rhs.mag_);
    if (cmp == 0) {
        sign_ = 0;
        mag_.clear();
    } else if (cmp > 0) {
        mag_ = sub_mag(mag_, rhs.mag_);
    } else {
        mag_ = sub_mag(rhs.mag_, mag_);
        sign_ = rhs.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (sign_ == 0 || rhs.sign_ == 0) {
        sign_ = 0;
        mag_.clear();
        return *this;
    }
    mag_ = mul_mag(mag_, rhs.mag_);
    sign_ = sign_ * rhs.sign_;
    return *this;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::domain_error("division by zero");
    if (a.sign_ == 0) return {BigInt{}, BigInt{}};
    auto [qm, rm] = divmod_mag(a.mag_, b.mag_);
    BigInt q, r;
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    return {std::move(q), std::move(r)};
}

BigInt& BigInt::operator/=(const BigInt& rhs) { return *this = divmod(*this, rhs).first; }
BigInt& BigInt::operator%=(const BigInt& rhs) { return *this = divmod(*this, rhs).second; }

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::pow(const BigInt& base, unsigned exponent) {
    BigInt result(1), cur = base;
    while (exponent) {
        if (exponent & 1u) result *= cur;
        exponent >>= 1u;
        if (exponent) cur *= cur;
    }
    return result;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
    int cmp = compare_mag(mag_, rhs.mag_) * sign_;
    return cmp <=> 0;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(mag_.back());
    for (std::size_t i = mag_.size() - 1; i-- > 0;) {
        std::string limb = std::to_string(mag_[i]);
        out.append(kBaseDigits - limb.size(), '0');
        out += limb;
    }
    return out;
}

bool BigInt::fits_long_long() const {
    static const BigInt lo(std::numeric_limits<long long>::min());
    static const BigInt hi(std::numeric_limits<long long>::max());
    return *this >= lo && *this <= hi;
}

long long BigInt::to_long_long() const {
    if (!fits_long_long()) throw std::overflow_error("BigInt out of long long range");
    unsigned long long u = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) u = u * kBase + mag_[i];
    if (sign_ < 0) return static_cast<long long>(0ull - u);
    return static_cast<long long>(u);
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace chroma
