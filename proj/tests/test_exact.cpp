#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "powersum/exact.hpp"

using namespace powersum::exact;

namespace {

// Small random elements; zero allowed.
QuadExt random_quad(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    return {Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
}

double ulps_between(double a, double b) {
    return std::fabs(a - b) / (std::numeric_limits<double>::epsilon() * std::max(std::fabs(b), 1e-300));
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    const Rat r(3, -6);
    CHECK(r.num() == -1);
    CHECK(r.den() == 2);
    CHECK(r.to_string() == "-1/2");
    CHECK(Rat(6, 3).to_string() == "2");
    CHECK(Rat(0, 5).den() == 1);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("rational text parsing") {
    CHECK(Rat::parse("-691/2730") == Rat(-691, 2730));
    CHECK(Rat::parse("12") == Rat(12));
    CHECK(Rat::parse("4/6").to_string() == "2/3");
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "+3", "1/-2", "a"})
        CHECK_THROWS_AS(Rat::parse(bad), std::invalid_argument);
}

TEST_CASE("quad_compare on the worked examples") {
    CHECK(quad_compare(QuadExt(Rat(0), Rat(1)), QuadExt(4)) == std::strong_ordering::greater);
    CHECK(quad_compare(strip_root(), QuadExt(0)) == std::strong_ordering::greater);
    const QuadExt u(Rat(7, 3), Rat(-2, 5));
    CHECK(quad_compare(u, u) == std::strong_ordering::equal);
    // 5 - sqrt21 > 0 because 25 > 21; 4 - sqrt21 < 0 because 16 < 21.
    CHECK(QuadExt(Rat(5), Rat(-1)).sign() == 1);
    CHECK(QuadExt(Rat(4), Rat(-1)).sign() == -1);
    CHECK(QuadExt(Rat(-5), Rat(1)).sign() == -1);
    CHECK(QuadExt(Rat(-4), Rat(1)).sign() == 1);
}

TEST_CASE("strip root") {
    const QuadExt& x = strip_root();
    CHECK(x.rational_part() == Rat(-1, 2));
    CHECK(x.root_part() == Rat(1, 6));
    // (sqrt21 / 6)^2 = 7/12
    const QuadExt r(Rat(0), Rat(1, 6));
    CHECK(r * r == QuadExt(Rat(7, 12)));
    CHECK(x * x + x == QuadExt(Rat(1, 3)));
    CHECK(x.sign() > 0);
    const QuadExt other = QuadExt(-1) - x;
    CHECK(x * other == QuadExt(Rat(-1, 3)));
    CHECK(x + other == QuadExt(-1));
    CHECK(other * other + other == QuadExt(Rat(1, 3)));
    CHECK(other.sign() < 0);
}

TEST_CASE("float conversion") {
    CHECK(quad_to_float(QuadExt(Rat(1, 3))) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(quad_to_float(strip_root()) == doctest::Approx(0.2637626158).epsilon(1e-10));
    CHECK(quad_to_float(QuadExt()) == 0.0);
    const double exact_x = (-3.0 + std::sqrt(21.0)) / 6.0;
    CHECK(ulps_between(quad_to_float(strip_root()), exact_x) <= 4);
    // Cancellation: 5 - sqrt21 is small but the result keeps its precision.
    CHECK(ulps_between(quad_to_float(QuadExt(Rat(5), Rat(-1))), 5.0 - 4.58257569495584000659) <= 4);
    const QuadExt huge(Rat(BigInt("1" + std::string(400, '0'))));
    CHECK_THROWS_AS(quad_to_float(huge), std::overflow_error);
}

TEST_CASE("text form round-trips exactly") {
    CHECK(strip_root().to_string() == "-1/2+1/6*sqrt21");
    CHECK(QuadExt(Rat(5, 2), Rat(-1, 6)).to_string() == "5/2+-1/6*sqrt21");
    CHECK(QuadExt(Rat(-3, 4)).to_string() == "-3/4");
    CHECK(QuadExt(Rat(0), Rat(2)).to_string() == "0+2*sqrt21");
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const QuadExt u = random_quad(rng);
        CHECK(QuadExt::parse(u.to_string()) == u);
    }
    for (const char* bad : {"", "1+2", "1+2*sqrt7", "x", "1/2+", "+1*sqrt21", "1/0"})
        CHECK_THROWS_AS(QuadExt::parse(bad), std::invalid_argument);
}

TEST_CASE("field laws on random elements") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 300; ++i) {
        const QuadExt a = random_quad(rng), b = random_quad(rng), c = random_quad(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == QuadExt());
        if (!a.is_zero()) {
            CHECK(a * (QuadExt(1) / a) == QuadExt(1));
            CHECK(a.norm() != Rat(0));
        }
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.is_rational() == a.root_part().is_zero());
    }
    CHECK_THROWS_AS(QuadExt(1) / QuadExt(), std::domain_error);
}

TEST_CASE("order is total and agrees with the floats") {
    std::mt19937_64 rng(777);
    std::vector<QuadExt> v;
    for (int i = 0; i < 200; ++i) v.push_back(random_quad(rng));
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
        const auto &a = v[i], &b = v[i + 1], &c = v[i + 2];
        const auto ab = quad_compare(a, b);
        CHECK((ab == std::strong_ordering::equal) == (a == b));
        CHECK((quad_compare(b, a) < 0) == (ab > 0));
        if (a <= b && b <= c) CHECK(a <= c);
        const double d = quad_to_float(a - b);
        if (std::fabs(d) > 1e-6) CHECK((d > 0) == (ab > 0));
    }
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i + 1 < v.size(); ++i) CHECK(quad_to_float(v[i]) <= quad_to_float(v[i + 1]) + 1e-9);
}

TEST_CASE("integer powers") {
    CHECK(pow(QuadExt(Rat(0), Rat(1)), 2) == QuadExt(21));
    CHECK(pow(strip_root(), 0) == QuadExt(1));
    CHECK(pow(QuadExt(2), 10) == QuadExt(1024));
}
