#pragma once

// Exact arithmetic: arbitrary-precision rationals and the real quadratic
// field Q(sqrt 21), which is where the strip width x = (-3 + sqrt 21) / 6
// of the scissor cut lives.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace powersum::exact {

using BigInt = mpz_class;

/// Canonical rational number: denominator > 0, gcd(|num|, den) = 1.
class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    Rat(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(const BigInt& num, const BigInt& den);
    Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;
    /// Accepts "p" or "p/q" with an optional leading '-'; throws
    /// std::invalid_argument on anything else.
    static Rat parse(std::string_view text);

    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { Rat r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// a + b * sqrt(21) with a, b rational.
class QuadExt {
public:
    static constexpr long kRadicand = 21;

    QuadExt() = default;
    QuadExt(Rat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(long a) : a_(a) {}            // NOLINT(google-explicit-constructor)
    QuadExt(int a) : a_(a) {}             // NOLINT(google-explicit-constructor)
    QuadExt(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    const Rat& rational_part() const { return a_; }
    const Rat& root_part() const { return b_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Sign of the real number a + b sqrt 21, exact.
    int sign() const;

    QuadExt conj() const { return {a_, -b_}; }
    /// a^2 - 21 b^2; nonzero for every nonzero element.
    Rat norm() const { return a_ * a_ - Rat(kRadicand) * b_ * b_; }

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
    friend QuadExt operator-(const QuadExt& a) { return {-a.a_, -a.b_}; }

    friend bool operator==(const QuadExt& u, const QuadExt& v) {
        return u.a_ == v.a_ && u.b_ == v.b_;
    }
    friend std::strong_ordering operator<=>(const QuadExt& u, const QuadExt& v);

    /// "p/q" when rational, else "p/q+r/s*sqrt21"; the sign of each part is
    /// carried by its numerator and denominators of 1 are omitted.
    std::string to_string() const;
    static QuadExt parse(std::string_view text);

    /// Nearest-double approximation, within a couple of ulps of the real
    /// value. Throws std::overflow_error when the value exceeds the double
    /// range.
    double to_double() const;

private:
    Rat a_;
    Rat b_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

/// Three-way exact comparison of a + b sqrt 21 values.
std::strong_ordering quad_compare(const QuadExt& u, const QuadExt& v);

/// x = (-3 + sqrt 21) / 6, the positive root of t^2 + t - 1/3.
const QuadExt& strip_root();

inline double quad_to_float(const QuadExt& u) { return u.to_double(); }

QuadExt pow(QuadExt base, unsigned exponent);

}  // namespace powersum::exact
