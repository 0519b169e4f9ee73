#include "pieri/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace pieri {

BigInt::BigInt(long long v) {
    if (v < 0) {
        sign_ = -1;
    }
    unsigned long long m = v < 0 ? -(unsigned long long)v : (unsigned long long)v;
    while (m) {
        limbs_.push_back(static_cast<uint32_t>(m % kBase));
        m /= kBase;
    }
}

BigInt::BigInt(const std::string& s) {
    size_t i = 0;
    int sg = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        sg = s[i] == '-' ? -1 : 1;
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty literal");
    BigInt acc;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        acc = acc * BigInt(10) + BigInt(s[i] - '0');
    }
    *this = sg < 0 ? -acc : acc;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 1;
}

bool BigInt::fits_int64() const { return limbs_.size() <= 2; }

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit in int64");
    long long v = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) v = v * kBase + *it;
    return signum() < 0 ? -v : v;
}

std::string BigInt::str() const {
    if (limbs_.empty()) return "0";
    std::string out = signum() < 0 ? "-" : "";
    out += std::to_string(limbs_.back());
    for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
        std::string part = std::to_string(*it);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s % kBase));
        carry = s / kBase;
    }
    return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t v = (int64_t)r[i] - borrow - (i < b.size() ? b[i] : 0);
        if (v < 0) {
            v += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(v);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = acc[i + j] + (uint64_t)a[i] * b[j] + carry;
            acc[i + j] = cur % kBase;
            carry = cur / kBase;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = acc[k] + carry;
            acc[k] = cur % kBase;
            carry = cur / kBase;
            ++k;
        }
    }
    std::vector<uint32_t> r(acc.begin(), acc.end());
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = rem * kBase + a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }
    // schoolbook long division; at every step rem < b so the next digit is < base
    std::vector<uint32_t> rem;
    q.assign(a.size(), 0);
    for (size_t i = a.size(); i-- > 0;) {
        rem.insert(rem.begin(), a[i]);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (cmp_mag(rem, b) < 0) continue;
        uint64_t top = rem.back();
        if (rem.size() > b.size()) top = top * kBase + rem[rem.size() - 2];
        uint64_t est = std::min<uint64_t>(top / b.back(), kBase - 1);
        uint64_t lo = est > 2 ? est - 2 : 0, hi = std::min<uint64_t>(est + 2, kBase - 1);
        auto fits = [&](uint64_t d) { return cmp_mag(mul_mag(b, {static_cast<uint32_t>(d)}), rem) <= 0; };
        while (lo < hi) {
            uint64_t mid = (lo + hi + 1) / 2;
            if (fits(mid)) lo = mid; else hi = mid - 1;
        }
        while (lo > 0 && !fits(lo)) --lo;
        while (lo + 1 < kBase && fits(lo + 1)) ++lo;
        q[i] = static_cast<uint32_t>(lo);
        if (lo) rem = sub_mag(rem, mul_mag(b, {static_cast<uint32_t>(lo)}));
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r = rem;
}

int BigInt::cmp(const BigInt& o) const {
    if (signum() != o.signum()) return signum() < o.signum() ? -1 : 1;
    int m = cmp_mag(limbs_, o.limbs_);
    return signum() >= 0 ? m : -m;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (signum() == 0) return o;
    if (o.signum() == 0) return *this;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.limbs_ = add_mag(limbs_, o.limbs_);
    } else {
        int m = cmp_mag(limbs_, o.limbs_);
        if (m == 0) return BigInt();
        if (m > 0) {
            r.sign_ = sign_;
            r.limbs_ = sub_mag(limbs_, o.limbs_);
        } else {
            r.sign_ = o.sign_;
            r.limbs_ = sub_mag(o.limbs_, limbs_);
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    r.limbs_ = mul_mag(limbs_, o.limbs_);
    r.sign_ = sign_ * o.sign_;
    r.trim();
    return r;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod_mag(limbs_, o.limbs_, q.limbs_, r.limbs_);
    q.sign_ = sign_ * o.sign_;
    q.trim();
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod_mag(limbs_, o.limbs_, q.limbs_, r.limbs_);
    r.sign_ = sign_;
    r.trim();
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    if (a.signum() < 0) a = -a;
    if (b.signum() < 0) b = -b;
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.signum() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

std::string Rational::str() const {
    if (is_integer()) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

bool Rational::operator<(const Rational& o) const { return (num_ * o.den_).cmp(o.num_ * den_) < 0; }

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text), BigInt(1));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

}  // namespace pieri
