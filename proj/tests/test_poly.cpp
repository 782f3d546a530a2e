#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvpascal/errors.hpp"
#include "mvpascal/numbers.hpp"
#include "mvpascal/poly.hpp"
#include "test_util.hpp"

using namespace mvpascal;
using testutil::mi;

namespace {

Polynomial x(int slot) { return Polynomial::variable(2, slot); }

}  // namespace

TEST_CASE("factories and term access") {
    Polynomial p = Polynomial::monomial(mi({1, 2}), Rat(3));
    CHECK(p.nvars() == 2);
    CHECK(p.coeff(mi({1, 2})) == 3);
    CHECK(p.coeff(mi({2, 1})) == 0);
    CHECK(p.total_degree() == 3);
    CHECK(Polynomial::zero(2).total_degree() == -1);
    CHECK(Polynomial::constant(2, Rat(0)).is_zero());
    CHECK(Polynomial::monomial(mi({1, 1}), Rat(0)).is_zero());
    CHECK(x(0).total_degree() == 1);
    CHECK_THROWS_AS(Polynomial::variable(2, 2), DimensionError);
}

TEST_CASE("ring arithmetic") {
    Polynomial p = x(0) + x(1);
    Polynomial q = x(0) - x(1);
    CHECK(p * q == x(0) * x(0) - x(1) * x(1));
    CHECK(pow(p, 2) == x(0) * x(0) + Rat(2) * x(0) * x(1) + x(1) * x(1));
    CHECK(p - p == Polynomial::zero(2));
    CHECK(-p + p == Polynomial::zero(2));
    CHECK(p * Polynomial::zero(2) == Polynomial::zero(2));
    CHECK(p * Int(3) == Rat(3) * p);
    CHECK(pow(p, 0) == Polynomial::constant(2, Rat(1)));
    CHECK_THROWS_AS(p + Polynomial::variable(3, 0), DimensionError);

    // Cancellation drops stored terms entirely.
    Polynomial r = p * q + x(1) * x(1);
    CHECK(r == x(0) * x(0));
    CHECK(r.terms().size() == 1);
}

TEST_CASE("multiplication against exhaustive convolution") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial a = testutil::random_poly(rng, 2, 3, 5);
        Polynomial b = testutil::random_poly(rng, 2, 3, 5);
        Polynomial prod = a * b;
        Polynomial manual = Polynomial::zero(2);
        for (const auto& [ea, ca] : a.terms())
            for (const auto& [eb, cb] : b.terms())
                manual += Polynomial::monomial(ea.plus(eb), ca * cb);
        CHECK(prod == manual);
        // Evaluation is a ring homomorphism.
        std::vector<Rat> pt = {testutil::random_rat(rng),
                               testutil::random_rat(rng)};
        CHECK(prod.eval(pt) == a.eval(pt) * b.eval(pt));
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    }
}

TEST_CASE("canonical printing") {
    CHECK(Polynomial::zero(2).str() == "0");
    CHECK(Polynomial::constant(2, Rat(-5)).str() == "-5");
    CHECK(x(0).str() == "x0");
    CHECK((x(0) * x(0)).str() == "x0^2");
    CHECK((Rat(2) * x(0) * x(1)).str() == "2*x0*x1");
    CHECK((x(1) * x(1) - x(0)).str() == "x1^2 - x0");
    CHECK((make_rat(1, 2) * x(0) + Polynomial::constant(2, Rat(1))).str() ==
          "1/2*x0 + 1");
    Polynomial p = Rat(12) * pow(x(0), 2) * pow(x(1), 2) +
                   Rat(24) * x(0) * pow(x(1), 3) + Rat(14) * pow(x(1), 4);
    CHECK(p.str() == "12*x0^2*x1^2 + 24*x0*x1^3 + 14*x1^4");
}

TEST_CASE("monomial_power multiplies out component powers") {
    std::vector<Polynomial> base = {x(0) + Polynomial::constant(2, Rat(1)),
                                    x(1)};
    Polynomial p = monomial_power(base, mi({2, 1}));
    CHECK(p == pow(base[0], 2) * x(1));
    CHECK(monomial_power(base, mi({0, 0})) ==
          Polynomial::constant(2, Rat(1)));
    CHECK_THROWS_AS(monomial_power(base, mi({1, 1, 1})), DimensionError);
}

TEST_CASE("hasse derivative matches the classical-derivative oracle") {
    Polynomial p = pow(x(0) + x(1), 3) + Rat(2) * pow(x(0), 2);
    CHECK(hasse_derivative(p, mi({0, 0})) == p);
    CHECK(hasse_derivative(p, mi({4, 0})) == Polynomial::zero(2));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial a = testutil::random_poly(rng, 2, 4, 6);
        for (const auto& k : enumerate_total_degree(2, 3))
            CHECK(hasse_derivative(a, k) == testutil::hasse_oracle(a, k));
    }
    // Divided powers reproduce binomial coefficients on pure powers.
    Polynomial q = pow(x(0), 5);
    CHECK(hasse_derivative(q, mi({2, 0})) == Rat(10) * pow(x(0), 3));
}

TEST_CASE("embed_exponent pads slot zero") {
    CHECK(embed_exponent(mi({1, 2})) == mi({0, 1, 2}));
    CHECK(embed_exponent(mi({3})) == mi({0, 3}));
}
