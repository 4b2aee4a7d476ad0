#include "powersum/exact.hpp"

#include <cfloat>
#include <ostream>
#include <stdexcept>

namespace powersum::exact {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

std::strong_ordering from_sign(int s) {
    return s < 0 ? std::strong_ordering::less
         : s > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

}  // namespace

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rat::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num_text = body;
    std::string_view den_text = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num_text = body.substr(0, slash);
        den_text = body.substr(slash + 1);
    }
    if (!all_digits(num_text) || !all_digits(den_text))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    BigInt num(std::string(num_text), 10);
    BigInt den(std::string(den_text), 10);
    if (den == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    if (negative) num = -num;
    return {num, den};
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

int QuadExt::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
    if (sa <= 0 && sb <= 0) return -1;
    // mixed signs: a^2 vs 21 b^2, never equal
    const int c = (a_ * a_ <=> Rat(kRadicand) * b_ * b_) < 0 ? -1 : 1;
    return sa > 0 ? c : -c;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    a_ += o.a_;
    if (!o.b_.is_zero()) b_ += o.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    a_ -= o.a_;
    if (!o.b_.is_zero()) b_ -= o.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    if (b_.is_zero() && o.b_.is_zero()) {
        a_ *= o.a_;
        return *this;
    }
    Rat a = a_ * o.a_ + Rat(kRadicand) * b_ * o.b_;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    if (o.is_zero()) throw std::domain_error("QuadExt: division by zero");
    if (o.b_.is_zero()) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    const Rat n = o.norm();
    *this *= o.conj();
    a_ /= n;
    b_ /= n;
    return *this;
}

std::strong_ordering operator<=>(const QuadExt& u, const QuadExt& v) {
    return quad_compare(u, v);
}

std::strong_ordering quad_compare(const QuadExt& u, const QuadExt& v) {
    if (u.root_part() == v.root_part()) return u.rational_part() <=> v.rational_part();
    return from_sign((u - v).sign());
}

std::string QuadExt::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    return a_.to_string() + "+" + b_.to_string() + "*sqrt21";
}

QuadExt QuadExt::parse(std::string_view text) {
    constexpr std::string_view kSuffix = "*sqrt21";
    if (text.size() > kSuffix.size() && text.ends_with(kSuffix)) {
        std::string_view body = text.substr(0, text.size() - kSuffix.size());
        auto plus = body.find('+', 1);
        if (plus == std::string_view::npos)
            throw std::invalid_argument("malformed quadratic value: '" + std::string(text) + "'");
        Rat a = Rat::parse(body.substr(0, plus));
        Rat b = Rat::parse(body.substr(plus + 1));
        return {std::move(a), std::move(b)};
    }
    return {Rat::parse(text)};
}

double QuadExt::to_double() const {
    static const mpq_class kMax(DBL_MAX);
    mpq_class approx;
    if (b_.is_zero()) {
        approx = a_.raw();
    } else {
        // sqrt 21 is bracketed by r_k = isqrt(21 * 4^k) / 2^k, which is at
        // most 2^-k below it. Refine k until the bracket error is far below
        // the magnitude of the result.
        const mpq_class abs_b = abs(b_.raw());
        for (unsigned long k = 64;; k *= 2) {
            mpz_class scaled = mpz_class(kRadicand) << (2 * k);
            mpz_class root;
            mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
            mpq_class r(root, mpz_class(1) << k);
            r.canonicalize();
            approx = a_.raw() + b_.raw() * r;
            mpq_class err = abs_b / mpq_class(mpz_class(1) << k);
            err.canonicalize();
            mpq_class lower = abs(approx) - err;
            if (lower > 0 && err * mpq_class(mpz_class(1) << 60) <= lower) break;
        }
    }
    if (abs(approx) > kMax)
        throw std::overflow_error("quadratic value exceeds double range: " + to_string());
    return approx.get_d();
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.to_string(); }

const QuadExt& strip_root() {
    static const QuadExt x{Rat(-1, 2), Rat(1, 6)};
    return x;
}

QuadExt pow(QuadExt base, unsigned exponent) {
    QuadExt result(1);
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

}  // namespace powersum::exact
