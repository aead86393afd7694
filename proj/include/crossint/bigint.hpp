#pragma once

// Arbitrary-precision signed integer, sign-magnitude over base-2^32 limbs.
// Small and dependency-free; the quantities in this project stay tiny
// (binomials, powers of two up to 2^24), so schoolbook algorithms suffice.

#include <cstdint>
#include <string>
#include <vector>

namespace crossint {

class BigInt {
   public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT(google-explicit-constructor) intentional implicit

    static BigInt pow2(unsigned k);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const;  // truncates toward zero
    BigInt operator%(const BigInt& o) const;  // sign follows dividend

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }

    // -1, 0, +1
    int cmp(const BigInt& o) const;

    bool fits_int64() const;
    long long to_int64() const;  // throws std::overflow_error if it does not fit
    std::string to_string() const;

    static BigInt gcd(BigInt a, BigInt b);  // nonnegative

   private:
    int sign_ = 0;                // -1, 0, +1
    std::vector<uint32_t> mag_;   // little-endian, no leading zero limbs; empty iff sign_ == 0

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);  // a >= b
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
    static void trim(std::vector<uint32_t>& v);
    BigInt from_parts(int sign, std::vector<uint32_t> mag) const;
};

// C(n, k) as a BigInt; 0 for k < 0 or k > n.
BigInt binomial(int n, int k);

}  // namespace crossint
