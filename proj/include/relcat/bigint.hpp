#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace relcat {

/* Signed arbitrary-precision integer, base 10^9 limbs, little-endian.
 * Smith normal form intermediates overflow 64 bits on adversarial inputs,
 * so every matrix routine in homology.cpp runs on these. */
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(const std::string& s);
    std::string to_string() const;

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    /* Throws if the value does not fit. */
    long long to_int64() const;
    bool fits_int64() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    /* Truncated division (C semantics): quotient rounds toward zero,
     * remainder has the sign of the dividend. o must be nonzero. */
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    friend BigInt gcd(BigInt a, BigInt b);

private:
    static const uint32_t kBase = 1000000000u;

    bool negative_ = false;
    std::vector<uint32_t> limbs_;  // empty means zero

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

BigInt gcd(BigInt a, BigInt b);

/* g = gcd(a, b) >= 0 together with x, y such that x*a + y*b = g. */
struct ExtendedGcd {
    BigInt g, x, y;
};
ExtendedGcd egcd(const BigInt& a, const BigInt& b);

}  // namespace relcat
