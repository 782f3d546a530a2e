#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "mvpascal/numbers.hpp"
#include "mvpascal/pascal.hpp"
#include "mvpascal/stirling.hpp"
#include "test_util.hpp"

using namespace mvpascal;
using testutil::mi;
using testutil::ps;

TEST_CASE("partition numbers against direct enumeration") {
    CHECK(stirling_number(0, 0) == 1);
    CHECK(stirling_number(3, 0) == 0);
    CHECK(stirling_number(0, 2) == 0);
    CHECK(stirling_number(4, 2) == 7);
    CHECK(stirling_number(5, 3) == 25);
    CHECK(stirling_number(6, 6) == 1);
    CHECK(stirling_number(3, 5) == 0);
    for (unsigned n = 0; n <= 9; ++n)
        for (unsigned k = 0; k <= 9; ++k)
            CHECK(stirling_number(n, k) ==
                  testutil::count_partitions_oracle(static_cast<int>(n),
                                                    static_cast<int>(k)));
}

TEST_CASE("memoized rows survive concurrent queries") {
    std::vector<std::vector<Int>> got(4);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&got, t] {
            for (unsigned n = 0; n <= 40; ++n)
                got[static_cast<std::size_t>(t)].push_back(
                    stirling_number(n, n / 2));
        });
    for (auto& w : workers) w.join();
    for (int t = 1; t < 4; ++t) CHECK(got[0] == got[static_cast<std::size_t>(t)]);
    CHECK(got[0][40] == stirling_number(40, 20));
}

TEST_CASE("polynomial basics") {
    // Index zero collapses to a pure power of the carrier variable.
    for (unsigned ell = 0; ell <= 4; ++ell)
        CHECK(stirling_poly(mi({0, 0}), ell) ==
              pow(Polynomial::variable(3, 0), ell));
    // Degree shortfall empties the sum.
    CHECK(stirling_poly(mi({2, 1}), 2).is_zero());
    CHECK(stirling_poly(mi({3}), 1).is_zero());
    // Every term is homogeneous of degree ell with integer coefficients.
    for (const auto& k : enumerate_total_degree(2, 3))
        for (unsigned ell = 0; ell <= 5; ++ell) {
            Polynomial s = stirling_poly(k, ell);
            for (const auto& [e, c] : s.terms()) {
                CHECK(e.total() == static_cast<int>(ell));
                CHECK(c.get_den() == 1);
            }
        }
}

TEST_CASE("worked polynomial values") {
    // k = (1): S^(2) over one variable is x0*x1 + binom weighting.
    Polynomial x0 = Polynomial::variable(2, 0);
    Polynomial x1 = Polynomial::variable(2, 1);
    CHECK(stirling_poly(mi({1}), 2) ==
          Rat(2) * x0 * x1 + x1 * x1);
    // k = (2), ell = 4, including the k! = 2 factor used by the matrix.
    Polynomial s = Rat(2) * stirling_poly(mi({2}), 4);
    CHECK(s.str() == "12*x0^2*x1^2 + 24*x0*x1^3 + 14*x1^4");
    // Over two variables: k = (0,1) gives the full binomial fan.
    Polynomial y0 = Polynomial::variable(3, 0);
    Polynomial y2 = Polynomial::variable(3, 2);
    for (unsigned ell = 1; ell <= 4; ++ell)
        CHECK(stirling_poly(mi({0, 1}), ell) == pow(y0 + y2, ell) - pow(y0, ell));
}

TEST_CASE("closed formula agrees with the generating function route") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& k : enumerate_total_degree(n, 3))
            for (unsigned ell = 0; ell <= 5; ++ell)
                CHECK(stirling_poly(k, ell) == stirling_poly_egf(k, ell));
}

TEST_CASE("axis specialization recovers the partition numbers") {
    for (unsigned ell = 0; ell <= 6; ++ell)
        for (int kk = 0; kk <= static_cast<int>(ell); ++kk) {
            // x0 = 0, axis variable = 1, bystander = 7.
            Polynomial s1 = stirling_poly(mi({kk, 0}), ell);
            CHECK(s1.eval({Rat(0), Rat(1), Rat(7)}) ==
                  stirling_number(ell, static_cast<unsigned>(kk)));
            Polynomial s2 = stirling_poly(mi({0, kk}), ell);
            CHECK(s2.eval({Rat(0), Rat(7), Rat(1)}) ==
                  stirling_number(ell, static_cast<unsigned>(kk)));
        }
}

TEST_CASE("linear form") {
    CHECK(linear_form(mi({2, 0})) ==
          Polynomial::variable(3, 0) + Rat(2) * Polynomial::variable(3, 1));
    CHECK(linear_form(mi({0, 0})) == Polynomial::variable(3, 0));
    CHECK(linear_form(mi({1, 3})).str() == "x0 + x1 + 3*x2");
}

TEST_CASE("matrix factories") {
    PointSet r = testutil::example_set_b();
    Matrix<Polynomial> s = build_stirling_matrix(r, 3);
    REQUIRE(s.rows() == 4);
    REQUIRE(s.cols() == 4);
    Polynomial x0 = Polynomial::variable(3, 0);
    Polynomial x1 = Polynomial::variable(3, 1);
    Polynomial x2 = Polynomial::variable(3, 2);
    CHECK(s(0, 0) == Polynomial::constant(3, Rat(1)));
    CHECK(s(0, 3) == pow(x0, 3));
    CHECK(s(1, 2) == Rat(2) * x0 * x2 + x2 * x2);
    // Row (2,0) carries the 2! factor.
    CHECK(s(3, 3) == Rat(6) * x0 * x1 * x1 + Rat(6) * pow(x1, 3));
    CHECK(s(3, 0).is_zero());
    CHECK(s(3, 1).is_zero());

    Matrix<Polynomial> v = build_vandermonde_matrix(r, 3);
    CHECK(v(0, 0) == Polynomial::constant(3, Rat(1)));
    CHECK(v(1, 1) == x0 + x2);
    CHECK(v(3, 2) == pow(x0 + Rat(2) * x1, 2));
    CHECK(v(2, 3) == pow(x0 + x1, 3));
}

TEST_CASE("triangular times Stirling equals Vandermonde") {
    CHECK(verify_decomposition(testutil::example_set_a(), 4));
    CHECK(verify_decomposition(testutil::example_set_b(), 4));
    CHECK(verify_decomposition(testutil::example_set_c(), 3));
    std::mt19937_64 rng(43);
    for (int n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 6; ++trial) {
            PointSet r = random_downward_closed(rng, n, 15);
            for (unsigned ell = 0; ell <= 4; ++ell)
                CHECK(verify_decomposition(r, ell));
        }
    // A gap in the set breaks the identity as soon as ell reaches one.
    PointSet gapped = ps({{0, 0}, {1, 0}, {0, 2}});
    CHECK(verify_decomposition(gapped, 0));
    CHECK(!verify_decomposition(gapped, 1));
    CHECK(!verify_decomposition(gapped, 3));
}

TEST_CASE("classical single-variable splitting of powers") {
    // Sum over m of binom(k, m) * m! * S(j, m) counts maps from a j-set
    // to a k-set, so it equals k^j.
    for (int k = 0; k <= 6; ++k)
        for (unsigned j = 0; j <= 6; ++j) {
            Int sum = 0;
            for (int m = 0; m <= k; ++m)
                sum += binomial(static_cast<unsigned long>(k),
                                static_cast<unsigned long>(m)) *
                       factorial(static_cast<unsigned long>(m)) *
                       stirling_number(j, static_cast<unsigned>(m));
            CHECK(sum == int_pow(k, j));
        }
}
