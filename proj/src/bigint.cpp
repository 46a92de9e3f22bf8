#include "relcat/bigint.hpp"

#include <stdexcept>

namespace relcat {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    unsigned long long m;
    if (v < 0) {
        negative_ = true;
        m = static_cast<unsigned long long>(-(v + 1)) + 1ull;
    } else {
        m = static_cast<unsigned long long>(v);
    }
    while (m > 0) {
        limbs_.push_back(static_cast<uint32_t>(m % kBase));
        m /= kBase;
    }
}

BigInt BigInt::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    size_t pos = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt out;
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9') throw std::invalid_argument("BigInt: bad digit");
        out = out * BigInt(10) + BigInt(s[pos] - '0');
    }
    out.negative_ = neg && !out.is_zero();
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string out = negative_ ? "-" : "";
    out += std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

bool BigInt::fits_int64() const {
    static const BigInt lo(INT64_MIN), hi(INT64_MAX);
    return *this >= lo && *this <= hi;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    long long v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return negative_ ? -v : v;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    uint32_t carry = 0;
    for (size_t i = 0; i < a.size() || i < b.size() || carry; ++i) {
        uint64_t cur = carry;
        if (i < a.size()) cur += a[i];
        if (i < b.size()) cur += b[i];
        out.push_back(static_cast<uint32_t>(cur % kBase));
        carry = static_cast<uint32_t>(cur / kBase);
    }
    return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t cur = static_cast<int64_t>(out[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (cur < 0) {
            cur += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(cur);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size() || carry; ++j) {
            uint64_t cur = out[i + j] + carry;
            if (j < b.size()) cur += static_cast<uint64_t>(a[i]) * b[j];
            out[i + j] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt out;
    if (negative_ == o.negative_) {
        out.limbs_ = add_mag(limbs_, o.limbs_);
        out.negative_ = negative_;
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            out.limbs_ = sub_mag(limbs_, o.limbs_);
            out.negative_ = negative_;
        } else {
            out.limbs_ = sub_mag(o.limbs_, limbs_);
            out.negative_ = o.negative_;
        }
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt out;
    out.limbs_ = mul_mag(limbs_, o.limbs_);
    out.negative_ = !out.limbs_.empty() && (negative_ != o.negative_);
    return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (c < 0) {
        q = BigInt();
        r = a;
        return;
    }
    // long division over base-10^9 limbs with 64-bit trial digits
    std::vector<uint32_t> quot(a.limbs_.size(), 0);
    BigInt rem;
    const BigInt babs = b.abs();
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        rem.limbs_.insert(rem.limbs_.begin(), a.limbs_[i]);
        rem.trim();
        // binary search the digit: largest d with babs*d <= rem
        uint32_t lo = 0, hi = kBase - 1, d = 0;
        while (lo <= hi) {
            uint32_t mid = lo + (hi - lo) / 2;
            if ((babs * BigInt(static_cast<long long>(mid))) <= rem) {
                d = mid;
                lo = mid + 1;
            } else {
                if (mid == 0) break;
                hi = mid - 1;
            }
        }
        if (d) rem = rem - babs * BigInt(static_cast<long long>(d));
        quot[i] = d;
    }
    q.limbs_ = std::move(quot);
    q.negative_ = (a.negative_ != b.negative_);
    q.trim();
    r = rem;
    r.negative_ = a.negative_ && !r.is_zero();
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

bool BigInt::operator==(const BigInt& o) const {
    return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = cmp_mag(limbs_, o.limbs_);
    return negative_ ? c > 0 : c < 0;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

ExtendedGcd egcd(const BigInt& a, const BigInt& b) {
    // iterative extended Euclid on signed inputs
    BigInt old_r = a, r = b;
    BigInt old_x(1), x(0);
    BigInt old_y(0), y(1);
    while (!r.is_zero()) {
        BigInt q, rem;
        BigInt::divmod(old_r, r, q, rem);
        old_r = r;
        r = rem;
        BigInt nx = old_x - q * x;
        old_x = x;
        x = nx;
        BigInt ny = old_y - q * y;
        old_y = y;
        y = ny;
    }
    ExtendedGcd out{old_r, old_x, old_y};
    if (out.g.is_negative()) {
        out.g = -out.g;
        out.x = -out.x;
        out.y = -out.y;
    }
    return out;
}

}  // namespace relcat
