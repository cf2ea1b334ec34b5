#include "jones/laurent.hpp"

#include "jones/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace jones;

namespace {

LaurentInt random_poly(std::mt19937_64& rng, int max_terms = 6) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> expn(-8, 8);
    LaurentInt p;
    const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) p += LaurentInt::monomial(coeff(rng), expn(rng));
    return p;
}

} // namespace

TEST_CASE("ring arithmetic on the loop value") {
    const LaurentInt d = LaurentInt::loop_value();
    CHECK(d.text() == "-A^-2 - A^2");
    const LaurentInt d2 = d * d;
    CHECK(d2.text() == "A^-4 + 2 + A^4");
    CHECK(d2.coefficient(0) == 2);
    CHECK(d2.coefficient(4) == 1);
    CHECK(d2.coefficient(2) == 0);
}

TEST_CASE("additive inverse cancels exactly") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const LaurentInt p = random_poly(rng);
        CHECK((p + (-p)).is_zero());
    }
}

TEST_CASE("monomial_scale composes") {
    const LaurentInt one = LaurentInt::from_int(1);
    const LaurentInt once = monomial_scale(one, -1, 3);
    const LaurentInt twice = monomial_scale(once, -1, 3);
    CHECK(twice == LaurentInt::monomial(1, 6)); // (-A^3)^2 = A^6
}

TEST_CASE("eval_unit reproduces the two loop-value parametrizations") {
    const LaurentInt d = LaurentInt::loop_value();
    for (double theta : {0.1, 0.7, 1.3, 2.9}) {
        // A = e^{i theta}: d = -2 cos(2 theta)
        const auto v1 = d.eval_unit(std::polar(1.0, theta));
        CHECK(std::abs(v1 - std::complex<double>(-2.0 * std::cos(2.0 * theta))) < 1e-12);
        // A = i e^{i theta/2}: d = 2 cos(theta)
        const auto A = std::complex<double>(0, 1) * std::polar(1.0, theta / 2.0);
        const auto v2 = d.eval_unit(A);
        CHECK(std::abs(v2 - std::complex<double>(2.0 * std::cos(theta))) < 1e-12);
    }
    CHECK(LaurentInt::from_int(1).eval_unit(std::polar(1.0, 0.37)) == std::complex<double>(1.0));
}

TEST_CASE("eval_unit rejects non-unit modulus") {
    CHECK_THROWS_AS(LaurentInt::from_int(1).eval_unit({1.5, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(LaurentInt::loop_value().eval_unit({0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("eval_unit is a ring homomorphism") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> angle(0.0, 6.28);
    for (int rep = 0; rep < 60; ++rep) {
        const LaurentInt p = random_poly(rng);
        const LaurentInt q = random_poly(rng);
        const auto A = std::polar(1.0, angle(rng));
        CHECK(std::abs((p * q).eval_unit(A) - p.eval_unit(A) * q.eval_unit(A)) < 1e-12);
        CHECK(std::abs((p + q).eval_unit(A) - (p.eval_unit(A) + q.eval_unit(A))) < 1e-12);
    }
}

TEST_CASE("quarter-power substitution") {
    CHECK(QuarterLaurent::from_f_polynomial(LaurentInt::monomial(1, 4)).text() == "t^-1");
    CHECK(QuarterLaurent::from_f_polynomial(LaurentInt::monomial(1, -12)).text() == "t^3");
    CHECK(QuarterLaurent::from_f_polynomial(LaurentInt::from_int(1)).text() == "1");
    // half-integer powers appear for multi-component links
    const QuarterLaurent h = QuarterLaurent::from_f_polynomial(LaurentInt::monomial(-1, -2));
    CHECK(h.text() == "-t^(1/2)");
}

TEST_CASE("exact division") {
    const LaurentInt d = LaurentInt::loop_value();
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        const LaurentInt p = random_poly(rng);
        CHECK(div_exact(p * d, d) == p);
    }
    CHECK_THROWS_AS(div_exact(LaurentInt::from_int(1), d), internal_error);
}

TEST_CASE("canonical text form") {
    LaurentInt p = LaurentInt::monomial(-1, -12);
    p += LaurentInt::monomial(2, -4);
    p += LaurentInt::monomial(-3, 0);
    p += LaurentInt::monomial(1, 1);
    CHECK(p.text() == "-A^-12 + 2A^-4 - 3 + A");
    CHECK(LaurentInt().text() == "0");
}

TEST_CASE("coefficients are arbitrary precision") {
    // (1 + A)^96 has a central coefficient beyond 2^64
    LaurentInt base = LaurentInt::from_int(1) + LaurentInt::monomial(1, 1);
    const LaurentInt p = base.pow(96);
    CHECK(p.coefficient(48) == BigInt("6435067013866298908421603100"));
    CHECK(p.coefficient(0) == 1);
    CHECK(p.coefficient(96) == 1);
}
