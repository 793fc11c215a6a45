#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbfint {

// Arbitrary-precision signed integer, little-endian base-2^32 magnitude.
// Only the operations the exact coefficient algebra needs.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { sign_ = -1; }
        else if (v > 0) { sign_ = 1; }
        unsigned long long m = (v < 0) ? -(unsigned long long)v : (unsigned long long)v;
        while (m) { mag_.push_back((uint32_t)(m & 0xffffffffu)); m >>= 32; }
    }

    static BigInt factorial(long long n) {
        if (n < 0) throw std::invalid_argument("factorial of negative integer");
        BigInt r(1);
        for (long long i = 2; i <= n; ++i) r = r * BigInt(i);
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const { BigInt r = *this; r.sign_ = -r.sign_; return r; }
    BigInt abs() const { BigInt r = *this; if (r.sign_ < 0) r.sign_ = 1; return r; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        if (a.sign_ == b.sign_) { BigInt r; r.sign_ = a.sign_; r.mag_ = add_mag(a.mag_, b.mag_); return r; }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) { r.mag_ = sub_mag(a.mag_, b.mag_); r.sign_ = a.sign_; }
        else       { r.mag_ = sub_mag(b.mag_, a.mag_); r.sign_ = b.sign_; }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = (uint64_t)a.mag_[i] * b.mag_[j] + r.mag_[i + j] + carry;
                r.mag_[i + j] = (uint32_t)(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            size_t k = i + b.mag_.size();
            while (carry) {
                uint64_t cur = (uint64_t)r.mag_[k] + carry;
                r.mag_[k] = (uint32_t)(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    // Truncated quotient (rounds toward zero), remainder has the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) { q = BigInt(); r = a; return; }
        q.mag_.assign(a.mag_.size(), 0);
        BigInt cur;  // running remainder, non-negative magnitude
        for (size_t i = a.mag_.size(); i-- > 0;) {
            cur.mag_.insert(cur.mag_.begin(), a.mag_[i]);
            cur.sign_ = 1;
            cur.trim();
            // binary search the quotient limb
            uint64_t lo = 0, hi = 0xffffffffu, best = 0;
            while (lo <= hi) {
                uint64_t mid = lo + (hi - lo) / 2;
                BigInt t = mul_small(b.abs(), (uint32_t)mid);
                if (cmp_mag(t.mag_, cur.mag_) <= 0) { best = mid; lo = mid + 1; }
                else { if (mid == 0) break; hi = mid - 1; }
            }
            q.mag_[i] = (uint32_t)best;
            cur = cur - mul_small(b.abs(), (uint32_t)best);
        }
        q.sign_ = a.sign_ * b.sign_;
        q.trim();
        if (q.mag_.empty()) q.sign_ = 0;
        r = cur;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) { BigInt q, r; divmod(a, b, q, r); return q; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { BigInt q, r; divmod(a, b, q, r); return r; }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs(); b = b.abs();
        while (!b.is_zero()) { BigInt t = a % b; a = b; b = t; }
        return a.is_zero() ? BigInt(1) : a;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }

    double to_double() const {
        double v = 0;
        for (size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + (double)mag_[i];
        return sign_ < 0 ? -v : v;
    }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long m = 0;
        for (size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
        if (sign_ >= 0) return m <= 0x7fffffffffffffffull;
        return m <= 0x8000000000000000ull;
    }
    long long to_int64() const {
        unsigned long long m = 0;
        for (size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
        return sign_ < 0 ? -(long long)m : (long long)m;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string digits;
        BigInt cur = abs();
        BigInt ten(10);
        while (!cur.is_zero()) {
            BigInt q, r;
            divmod(cur, ten, q, r);
            digits.push_back((char)('0' + (r.mag_.empty() ? 0 : r.mag_[0])));
            cur = q;
        }
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        size_t i = 0;
        int sg = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) { sg = s[i] == '-' ? -1 : 1; ++i; }
        if (i == s.size()) throw std::invalid_argument("BigInt::from_string: empty");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt::from_string: bad digit");
            r = mul_small(r, 10) + BigInt(s[i] - '0');
        }
        if (!r.mag_.empty()) r.sign_ = sg;
        return r;
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r;
        r.reserve(std::max(a.size(), b.size()) + 1);
        uint64_t carry = 0;
        for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
            uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r.push_back((uint32_t)(cur & 0xffffffffu));
            carry = cur >> 32;
        }
        if (carry) r.push_back((uint32_t)carry);
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = (int64_t)r[i] - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) { cur += ((int64_t)1 << 32); borrow = 1; } else borrow = 0;
            r[i] = (uint32_t)cur;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static BigInt mul_small(const BigInt& a, uint32_t m) {
        if (a.sign_ == 0 || m == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_;
        uint64_t carry = 0;
        for (uint32_t limb : a.mag_) {
            uint64_t cur = (uint64_t)limb * m + carry;
            r.mag_.push_back((uint32_t)(cur & 0xffffffffu));
            carry = cur >> 32;
        }
        while (carry) { r.mag_.push_back((uint32_t)(carry & 0xffffffffu)); carry >>= 32; }
        r.trim();
        return r;
    }
};

}  // namespace sbfint
