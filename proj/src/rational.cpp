/*
 * Copyright 2026 The Orbitlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "orbitlab/rational.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "orbitlab/errors.hpp"

namespace orbitlab {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    unsigned long long m = negative_ ? -static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
    while (m != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    const auto& x = a.limbs_;
    const auto& y = b.limbs_;
    std::size_t n = std::max(x.size(), y.size());
    r.limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = carry;
        if (i < x.size()) s += x[i];
        if (i < y.size()) s += y[i];
        r.limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(a.limbs_.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                         (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = static_cast<std::uint32_t>(d);
    }
    r.trim();
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.negative_ == b.negative_) {
        BigInt r = BigInt::add_mag(a, b);
        r.negative_ = a.negative_;
        r.trim();
        return r;
    }
    int c = BigInt::cmp_mag(a, b);
    if (c == 0) return BigInt();
    BigInt r = c > 0 ? BigInt::sub_mag(a, b) : BigInt::sub_mag(b, a);
    r.negative_ = c > 0 ? a.negative_ : b.negative_;
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a.limbs_[i];
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.negative_ = a.negative_ != b.negative_;
    r.trim();
    return r;
}

// Knuth algorithm D on magnitudes. q and r always non-negative.
void BigInt::divmod_mag(const BigInt& u_in, const BigInt& v_in, BigInt& q, BigInt& r) {
    if (v_in.is_zero()) throw InternalError("BigInt: division by zero");
    if (cmp_mag(u_in, v_in) < 0) {
        q = BigInt();
        r = u_in.abs();
        return;
    }
    if (v_in.limbs_.size() == 1) {
        std::uint64_t d = v_in.limbs_[0];
        q.limbs_.assign(u_in.limbs_.size(), 0);
        q.negative_ = false;
        std::uint64_t rem = 0;
        for (std::size_t i = u_in.limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | u_in.limbs_[i];
            q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        q.trim();
        r = BigInt(static_cast<long long>(rem));
        return;
    }

    const int shift = std::countl_zero(v_in.limbs_.back());
    // Normalized copies: v's top limb gets its high bit set.
    auto shl = [](const std::vector<std::uint32_t>& a, int s) {
        std::vector<std::uint32_t> out(a.size() + 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[i] |= static_cast<std::uint32_t>((static_cast<std::uint64_t>(a[i]) << s) & 0xffffffffu);
            out[i + 1] |= s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[i]) >> (32 - s)) : 0;
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<std::uint32_t> u = shl(u_in.limbs_, shift);
    std::vector<std::uint32_t> v = shl(v_in.limbs_, shift);
    const std::size_t n = v.size();
    const std::size_t m = u.size() >= n ? u.size() - n : 0;
    u.resize(u_in.limbs_.size() + 1, 0); // room for the virtual high limb
    if (u.size() < m + n + 1) u.resize(m + n + 1, 0);

    q.limbs_.assign(m + 1, 0);
    q.negative_ = false;

    const std::uint64_t vtop = v[n - 1];
    const std::uint64_t vsnd = v[n - 2];
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = num / vtop;
        std::uint64_t rhat = num % vtop;
        while (qhat >= kBase || qhat * vsnd > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= kBase) break;
        }
        // u[j .. j+n] -= qhat * v
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t d = static_cast<std::int64_t>(u[i + j]) - borrow -
                             static_cast<std::int64_t>(p & 0xffffffffu);
            if (d < 0) {
                d += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(d);
        }
        std::int64_t d = static_cast<std::int64_t>(u[j + n]) - borrow -
                         static_cast<std::int64_t>(carry);
        if (d < 0) {
            // qhat one too large: add v back once.
            d += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            d += static_cast<std::int64_t>(c2);
            d &= static_cast<std::int64_t>(0xffffffffu);
        }
        u[j + n] = static_cast<std::uint32_t>(d);
        q.limbs_[j] = static_cast<std::uint32_t>(qhat);
    }
    q.trim();

    // Remainder: low n limbs of u, shifted back.
    r.limbs_.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
    r.negative_ = false;
    if (shift) {
        std::uint32_t carry = 0;
        for (std::size_t i = r.limbs_.size(); i-- > 0;) {
            std::uint32_t cur = r.limbs_[i];
            r.limbs_[i] = (cur >> shift) | (static_cast<std::uint64_t>(carry) << (32 - shift));
            carry = cur & ((1u << shift) - 1);
        }
    }
    r.trim();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod_mag(a, b, q, r);
    q.negative_ = !q.is_zero() && (a.negative_ != b.negative_);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod_mag(a, b, q, r);
    r.negative_ = !r.is_zero() && a.negative_;
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_) return a.negative_;
    int c = BigInt::cmp_mag(a, b);
    return a.negative_ ? c > 0 : c < 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw InputError("empty integer literal");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw InputError("malformed integer literal: '" + std::string(s) + "'");
    BigInt r;
    const BigInt chunk_base(1000000000ll);
    std::uint32_t acc = 0;
    int acc_digits = 0;
    auto flush = [&](long long scale) {
        r = r * BigInt(scale) + BigInt(static_cast<long long>(acc));
        acc = 0;
        acc_digits = 0;
    };
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw InputError("malformed integer literal: '" + std::string(s) + "'");
        acc = acc * 10 + static_cast<std::uint32_t>(s[i] - '0');
        if (++acc_digits == 9) flush(1000000000ll);
    }
    if (acc_digits > 0) {
        long long scale = 1;
        for (int k = 0; k < acc_digits; ++k) scale *= 10;
        flush(scale);
    }
    r.negative_ = neg && !r.is_zero();
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt t = abs();
    std::string out;
    const BigInt billion(1000000000ll);
    std::vector<std::uint32_t> groups;
    while (!t.is_zero()) {
        BigInt q, r;
        divmod_mag(t, billion, q, r);
        groups.push_back(r.is_zero() ? 0u : r.limbs_[0]);
        t = q;
    }
    out = std::to_string(groups.back());
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
        std::string g = std::to_string(groups[i]);
        out += std::string(9 - g.size(), '0') + g;
    }
    return (negative_ ? "-" : "") + out;
}

double BigInt::to_double() const {
    double v = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
    return negative_ ? -v : v;
}

// ---------------------------------------------------------------------------

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den == 0) throw InputError("rational with zero denominator");
    reduce();
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InputError("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.is_negative()) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
}

bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::abs() const {
    Rational r = *this;
    r.num_ = r.num_.abs();
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw InputError("reciprocal of zero");
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InputError("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
}

Rational Rational::fractional_part() const {
    BigInt q = num_ / den_;
    BigInt rem = num_ - q * den_;
    if (rem.is_negative()) rem += den_;
    return Rational(rem, den_);
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

} // namespace orbitlab
