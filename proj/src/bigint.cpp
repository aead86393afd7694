#include "crossint/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace crossint {

namespace {
constexpr uint64_t BASE = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    // careful with LLONG_MIN: go through unsigned
    uint64_t u = v > 0 ? static_cast<uint64_t>(v) : 0ull - static_cast<uint64_t>(v);
    while (u != 0) {
        mag_.push_back(static_cast<uint32_t>(u & 0xffffffffull));
        u >>= 32;
    }
}

BigInt BigInt::pow2(unsigned k) {
    BigInt r;
    r.sign_ = 1;
    r.mag_.assign(k / 32 + 1, 0);
    r.mag_.back() = 1u << (k % 32);
    return r;
}

void BigInt::trim(std::vector<uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

BigInt BigInt::from_parts(int sign, std::vector<uint32_t> mag) const {
    trim(mag);
    BigInt r;
    r.sign_ = mag.empty() ? 0 : sign;
    r.mag_ = std::move(mag);
    return r;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> r(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<uint32_t>(carry);
    trim(r);
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (d < 0) {
            d += static_cast<int64_t>(BASE);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(d);
    }
    trim(r);
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + static_cast<uint64_t>(a[i]) * b[j] + carry;
            r[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry != 0) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    trim(r);
    return r;
}

// Schoolbook long division, one 32-bit quotient limb at a time with a
// 64-bit trial estimate refined by at most two corrections (Knuth D).
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        r = a;
        trim(r);
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0];
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        trim(q);
        if (rem != 0) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    // Normalize so the divisor's top limb has its high bit set.
    int shift = 0;
    for (uint32_t top = b.back(); (top & 0x80000000u) == 0; top <<= 1) ++shift;
    auto shl = [&](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] |= shift == 0 ? v[i] : (v[i] << shift);
            if (shift != 0) out[i + 1] = v[i] >> (32 - shift);
        }
        trim(out);
        return out;
    };
    std::vector<uint32_t> u = shl(a);
    std::vector<uint32_t> d = shl(b);
    size_t n = d.size();
    size_t m = u.size() - n;
    u.resize(u.size() + 1, 0);
    q.assign(m + 1, 0);

    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / d[n - 1];
        uint64_t rhat = num % d[n - 1];
        while (qhat >= BASE ||
               qhat * d[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += d[n - 1];
            if (rhat >= BASE) break;
        }
        // multiply-subtract qhat * d from u[j .. j+n]
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * d[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffull) - borrow;
            if (t < 0) {
                t += static_cast<int64_t>(BASE);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large; add d back
            t += static_cast<int64_t>(BASE);
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + d[i] + c2;
                u[i + j] = static_cast<uint32_t>(s);
                c2 = s >> 32;
            }
            t += static_cast<int64_t>(c2);
            t &= 0xffffffffll;
        }
        u[j + n] = static_cast<uint32_t>(t);
        q[j] = static_cast<uint32_t>(qhat);
    }
    trim(q);
    // denormalize remainder
    u.resize(n);
    r.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        r[i] = u[i] >> shift;
        if (shift != 0 && i + 1 < n) r[i] |= u[i + 1] << (32 - shift);
    }
    trim(r);
}

int BigInt::cmp(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c : -c;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    if (sign_ == o.sign_) return from_parts(sign_, add_mag(mag_, o.mag_));
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) return BigInt();
    if (c > 0) return from_parts(sign_, sub_mag(mag_, o.mag_));
    return from_parts(o.sign_, sub_mag(o.mag_, mag_));
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    return from_parts(sign_ * o.sign_, mul_mag(mag_, o.mag_));
}

BigInt BigInt::operator/(const BigInt& o) const {
    std::vector<uint32_t> q, r;
    divmod_mag(mag_, o.mag_, q, r);
    return from_parts(sign_ * o.sign_, std::move(q));
}

BigInt BigInt::operator%(const BigInt& o) const {
    std::vector<uint32_t> q, r;
    divmod_mag(mag_, o.mag_, q, r);
    return from_parts(sign_, std::move(r));
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    uint64_t u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    if (sign_ >= 0) return u <= 0x7fffffffffffffffull;
    return u <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit in int64");
    uint64_t u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    return sign_ >= 0 ? static_cast<long long>(u) : -static_cast<long long>(u - 1) - 1;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string digits;
    std::vector<uint32_t> cur = mag_;
    const std::vector<uint32_t> ten = {10u};
    while (!cur.empty()) {
        std::vector<uint32_t> q, r;
        divmod_mag(cur, ten, q, r);
        digits.push_back(static_cast<char>('0' + (r.empty() ? 0 : r[0])));
        cur = std::move(q);
    }
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt num(1);
    for (int i = 1; i <= k; ++i) {
        num = num * BigInt(n - k + i);
        num = num / BigInt(i);  // exact at every step: C(n-k+i, i) is integral
    }
    return num;
}

}  // namespace crossint
