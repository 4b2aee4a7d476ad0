#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <thread>
#include <vector>

#include "powersum/figurate.hpp"

using namespace powersum::figurate;
using powersum::exact::strip_root;

TEST_CASE("brute-force sums") {
    CHECK(sum_powers_bruteforce(3, 3) == 36);
    CHECK(sum_powers_bruteforce(4, 0) == 0);
    CHECK(sum_powers_bruteforce(10, 1000) == BigInt("91409924241424243424241924242500"));
    CHECK(sum_powers_range(1, 3, 5) == 12);
    CHECK(sum_powers_range(2, 5, 4) == 0);
}

TEST_CASE("binomials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("Bernoulli numbers with B_1 = +1/2") {
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(1) == Rat(1, 2));
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(12) == Rat(-691, 2730));
    CHECK(bernoulli(13) == Rat(0));
    CHECK(bernoulli(14) == Rat(7, 6));
    for (unsigned k = 1; k <= 20; ++k) CHECK(bernoulli(2 * k + 1) == Rat(0));
    for (unsigned m = 0; m < 30; ++m) {
        Rat s;
        for (unsigned i = 0; i <= m; ++i) s += Rat(binomial(m + 1, i)) * bernoulli(i);
        CHECK(s == Rat(static_cast<long>(m + 1)));
    }
}

TEST_CASE("Bernoulli memo under concurrent use") {
    std::vector<std::thread> pool;
    std::vector<Rat> got(8);
    for (unsigned i = 0; i < got.size(); ++i)
        pool.emplace_back([&got, i] { got[i] = bernoulli(40 + 2 * i); });
    for (auto& t : pool) t.join();
    for (unsigned i = 0; i < got.size(); ++i) CHECK(got[i] == bernoulli(40 + 2 * i));
    CHECK(bernoulli(40) == Rat(BigInt("-261082718496449122051"), BigInt(13530)));
}

TEST_CASE("Faulhaber formula") {
    CHECK(faulhaber(2, 4) == Rat(30));
    CHECK(faulhaber(4, 3) == Rat(98));
    CHECK(faulhaber(1, 0) == Rat(0));
    CHECK(faulhaber(10, 1000) == Rat(BigInt("91409924241424243424241924242500")));
    for (unsigned p = 0; p <= 8; ++p)
        for (long n = 0; n <= 60; ++n) CHECK(faulhaber(p, n) == Rat(sum_powers_bruteforce(p, n)));
}

TEST_CASE("registry examples") {
    auto r = evaluate_identity(Identity::RowsCols, {{"p", 1}, {"n", 3}});
    CHECK(r.lhs == QuadExt(14));
    CHECK(r.rhs == QuadExt(14));
    CHECK(r.holds);

    r = evaluate_identity(Identity::ArchimedesGen, {{"n", 2}});
    CHECK(r.lhs == QuadExt(85));
    CHECK(r.holds);

    r = evaluate_identity(Identity::AlmostSquare, {{"m", 2}, {"n", 3}});
    CHECK(r.lhs == QuadExt(14));
    CHECK(r.rhs == QuadExt(14));

    r = evaluate_identity(Identity::ScissorFactor, {{"n", 2}});
    CHECK(r.lhs == QuadExt(Rat(17, 3)));
    CHECK(r.rhs == QuadExt(Rat(17, 3)));

    r = evaluate_identity(Identity::Nicomachus, {{"n", 1}});
    CHECK(r.to_string() == "NICOMACHUS(n=1): 1 = 1 holds");

    CHECK(evaluate_identity(Identity::Nicomachus, {{"n", 6}}).to_string() == "NICOMACHUS(n=6): 441 = 441 holds");
    CHECK(evaluate_identity(Identity::TopLayerDouble, {{"n", 2}}).lhs == QuadExt(26));
    CHECK(evaluate_identity(Identity::RBalance, {{"n", 3}}).holds);
}

TEST_CASE("every identity holds on small parameters") {
    for (auto id : all_identities()) {
        const auto& names = identity_parameters(id);
        const bool has_m = std::count(names.begin(), names.end(), "m") > 0;
        const bool has_p = std::count(names.begin(), names.end(), "p") > 0;
        for (long n = has_m ? 1 : 0; n <= 25; ++n)
            for (long p = 0; p <= (has_p ? 4 : 0); ++p)
                for (long m = 1; m <= (has_m ? n : 1); ++m) {
                    Params params{{"n", n}};
                    if (has_p) params["p"] = p;
                    if (has_m) params["m"] = m;
                    const auto r = evaluate_identity(id, params);
                    INFO(r.to_string());
                    CHECK(r.holds);
                    CHECK(r.holds == (r.lhs == r.rhs));
                }
    }
}

TEST_CASE("final assembly goes through irrational factors and comes back rational") {
    const auto& x = strip_root();
    for (long n = 1; n <= 200; ++n) {
        const QuadExt N(n);
        const QuadExt scissor = (N - x) * (N + QuadExt(1) + x);
        CHECK(scissor.is_rational());
        CHECK(!(N - x).is_rational());
        const QuadExt rhs = final_assembly_rhs(n);
        CHECK(rhs.is_rational());
        CHECK(rhs == QuadExt(Rat(5) * Rat(sum_powers_bruteforce(4, n))));
    }
    CHECK(excess_layer_count(2) == 13);
    CHECK(excess_layer_count(3) == 58);
}

TEST_CASE("names round-trip") {
    CHECK(all_identities().size() == 19);
    for (auto id : all_identities()) CHECK(identity_from_name(identity_name(id)) == id);
    CHECK(identity_name(Identity::OddSumSquare) == "ODD_SUM_SQUARE");
    CHECK(identity_name(Identity::FourthAsSqTimesSq) == "FOURTH_AS_SQ_TIMES_SQ");
    CHECK_FALSE(identity_from_name("nicomachus").has_value());
}

TEST_CASE("parameter errors") {
    CHECK_THROWS_AS(evaluate_identity(Identity::AlmostSquare, {{"n", 3}}), MissingParameter);
    CHECK_THROWS_AS(evaluate_identity(Identity::Nicomachus, {}), MissingParameter);
    CHECK_THROWS_AS(evaluate_identity(Identity::AlmostSquare, {{"m", 4}, {"n", 3}}), ConstraintViolated);
    CHECK_THROWS_AS(evaluate_identity(Identity::Truncated, {{"p", 1}, {"m", 0}, {"n", 3}}), ConstraintViolated);
    CHECK_THROWS_AS(evaluate_identity(Identity::Triangular, {{"n", -1}}), ConstraintViolated);
    CHECK_THROWS_AS(evaluate_identity(Identity::RowsCols, {{"p", -1}, {"n", 2}}), ConstraintViolated);
}
