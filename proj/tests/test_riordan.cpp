#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvpascal/errors.hpp"
#include "mvpascal/expr.hpp"
#include "mvpascal/pascal.hpp"
#include "mvpascal/riordan.hpp"
#include "test_util.hpp"

using namespace mvpascal;
using testutil::mi;
using testutil::ps;

namespace {

// Random basis with a triangular linear part, so the Jacobian determinant
// is a product of nonzero diagonals by construction.
RiordanBasis random_basis(std::mt19937_64& rng, int nvars, int cap) {
    TruncatedSeries g(nvars, cap);
    for (const auto& e : enumerate_total_degree(nvars, cap))
        if (testutil::rand_below(rng, 3) == 0)
            g.set_coeff(e, testutil::random_rat(rng));
    g.set_coeff(MultiIndex::zeros(nvars), Rat(1 + testutil::rand_below(rng, 4)));

    std::vector<TruncatedSeries> x;
    for (int i = 0; i < nvars; ++i) {
        TruncatedSeries s(nvars, cap);
        for (const auto& e : enumerate_total_degree(nvars, cap)) {
            if (e.total() < 2) continue;
            if (testutil::rand_below(rng, 3) == 0)
                s.set_coeff(e, testutil::random_rat(rng));
        }
        s.set_coeff(MultiIndex::unit(nvars, i),
                    Rat(1 + testutil::rand_below(rng, 3)));
        for (int j = 0; j < i; ++j)
            s.set_coeff(MultiIndex::unit(nvars, j),
                        Rat(testutil::rand_below(rng, 3)));
        x.push_back(std::move(s));
    }
    return RiordanBasis(std::move(g), std::move(x));
}

Matrix<Rat> full_window_matrix(const RiordanBasis& b, int degree) {
    return riordan_matrix(b, PointSet::degree_window(b.nvars(), degree));
}

}  // namespace

TEST_CASE("basis validation") {
    int cap = 4;
    TruncatedSeries one = TruncatedSeries::one(2, cap);
    TruncatedSeries z1 = TruncatedSeries::variable(2, cap, 0);
    TruncatedSeries z2 = TruncatedSeries::variable(2, cap, 1);
    CHECK_NOTHROW(RiordanBasis(one, {z1, z2}));
    CHECK_THROWS_AS(RiordanBasis(one, {z1}), DimensionError);
    CHECK_THROWS_AS(RiordanBasis(TruncatedSeries(2, cap), {z1, z2}),
                    NonUnitError);
    CHECK_THROWS_AS(RiordanBasis(one, {z1, one}), NonzeroConstantTermError);
    CHECK_THROWS_AS(RiordanBasis(one, {ts_add(z1, z2), ts_add(z1, z2)}),
                    SingularJacobianError);
    CHECK_THROWS_AS(RiordanBasis(one, {z1, TruncatedSeries::variable(2, 5, 1)}),
                    ShapeError);
}

TEST_CASE("identity element acts as the identity matrix") {
    for (int n = 1; n <= 3; ++n) {
        RiordanBasis id = riordan_identity(n, 4);
        PointSet w = PointSet::degree_window(n, 3);
        CHECK(riordan_matrix(id, w) == make_identity<Rat>(w.size()));
    }
}

TEST_CASE("single-variable Pascal basis reproduces the triangle") {
    RiordanBasis b = pascal_basis(1, 1, 6);
    // g = 1/(1-z), x = z/(1-z).
    for (int k = 0; k <= 6; ++k) CHECK(b.g().coeff(mi({k})) == 1);
    CHECK(b.x()[0].coeff(mi({0})) == 0);
    for (int k = 1; k <= 6; ++k) CHECK(b.x()[0].coeff(mi({k})) == 1);
    PointSet w = PointSet::degree_window(1, 6);
    CHECK(riordan_matrix(b, w) == to_rat(build_L(w)));
}

TEST_CASE("Pascal bases realize the closed-form powers on closed windows") {
    std::mt19937_64 rng(73);
    for (int n = 1; n <= 3; ++n)
        for (long p : {-3L, -1L, 1L, 2L, 3L}) {
            int cap = n == 3 ? 4 : 5;
            RiordanBasis b = pascal_basis(n, p, cap);
            PointSet w = PointSet::degree_window(n, cap);
            CHECK(riordan_matrix(b, w) == to_rat(build_L_power(w, p)));
            // Smaller closed windows inside the cap agree as well.
            for (int trial = 0; trial < 3; ++trial) {
                PointSet r = random_downward_closed(rng, n, 12);
                bool fits = true;
                for (const auto& k : r.points())
                    if (k.total() > cap) fits = false;
                if (!fits) continue;
                CHECK(riordan_matrix(b, r) == to_rat(build_L_power(r, p)));
            }
        }
    CHECK(pascal_basis(2, 0, 3).g() == TruncatedSeries::one(2, 3));
}

TEST_CASE("Pascal entries survive on windows with gaps") {
    // The matrix entry only sees the pair of indices, so windows that are
    // not downward closed still get the closed-form entries.
    PointSet w = ps({{0, 0}, {1, 0}, {0, 2}, {1, 2}});
    for (long p : {-2L, 1L, 3L}) {
        Matrix<Rat> m = riordan_matrix(pascal_basis(2, p, 4), w);
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j < w.size(); ++j) {
                Int b = multi_binom(w[i], w[j]);
                Rat expect =
                    b == 0 ? Rat(0)
                           : Rat(int_pow(p, static_cast<unsigned long>(
                                                w[i].total() - w[j].total())) *
                                 b);
                CHECK(m(i, j) == expect);
            }
    }
}

TEST_CASE("matrices are block lower triangular by degree") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 10; ++trial) {
        RiordanBasis b = random_basis(rng, 2, 4);
        PointSet w = PointSet::degree_window(2, 4);
        Matrix<Rat> m = riordan_matrix(b, w);
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j < w.size(); ++j)
                if (w[i].total() < w[j].total()) CHECK(m(i, j) == 0);
    }
}

TEST_CASE("window guards") {
    RiordanBasis id = riordan_identity(2, 3);
    CHECK_THROWS_AS(riordan_matrix(id, PointSet::degree_window(2, 4)),
                    WindowExceedsCapError);
    CHECK_THROWS_AS(riordan_matrix(id, PointSet::degree_window(3, 2)),
                    DimensionError);
    CHECK_THROWS_AS(riordan_matrix(id, PointSet::of(2, {})), ShapeError);
}

TEST_CASE("group laws on the series themselves") {
    std::mt19937_64 rng(83);
    for (int n = 1; n <= 2; ++n)
        for (int trial = 0; trial < 8; ++trial) {
            int cap = 3 + static_cast<int>(testutil::rand_below(rng, 2));
            RiordanBasis a = random_basis(rng, n, cap);
            RiordanBasis b = random_basis(rng, n, cap);
            RiordanBasis c = random_basis(rng, n, cap);
            RiordanBasis id = riordan_identity(n, cap);

            RiordanBasis ai = riordan_product(a, id);
            CHECK(ai.g() == a.g());
            CHECK(ai.x() == a.x());
            RiordanBasis ia = riordan_product(id, a);
            CHECK(ia.g() == a.g());
            CHECK(ia.x() == a.x());

            RiordanBasis inv = riordan_inverse(a);
            RiordanBasis left = riordan_product(inv, a);
            CHECK(left.g() == id.g());
            CHECK(left.x() == id.x());
            RiordanBasis right = riordan_product(a, inv);
            CHECK(right.g() == id.g());
            CHECK(right.x() == id.x());

            RiordanBasis ab_c = riordan_product(riordan_product(a, b), c);
            RiordanBasis a_bc = riordan_product(a, riordan_product(b, c));
            CHECK(ab_c.g() == a_bc.g());
            CHECK(ab_c.x() == a_bc.x());
        }
}

TEST_CASE("the matrix map is a homomorphism on full windows") {
    std::mt19937_64 rng(89);
    for (int n = 1; n <= 2; ++n)
        for (int trial = 0; trial < 8; ++trial) {
            int cap = n == 1 ? 5 : 4;
            RiordanBasis a = random_basis(rng, n, cap);
            RiordanBasis b = random_basis(rng, n, cap);
            Matrix<Rat> ma = full_window_matrix(a, cap);
            Matrix<Rat> mb = full_window_matrix(b, cap);
            CHECK(full_window_matrix(riordan_product(a, b), cap) ==
                  mat_mul(ma, mb));
            CHECK(mat_mul(ma, full_window_matrix(riordan_inverse(a), cap)) ==
                  make_identity<Rat>(ma.rows()));
        }
    // Pascal powers compose additively through the group product.
    RiordanBasis p2 = pascal_basis(2, 2, 4);
    RiordanBasis p3 = pascal_basis(2, 3, 4);
    RiordanBasis p5 = riordan_product(p2, p3);
    PointSet w = PointSet::degree_window(2, 4);
    CHECK(riordan_matrix(p5, w) == to_rat(build_L_power(w, 5)));
}

TEST_CASE("expression parser builds series") {
    int cap = 6;
    TruncatedSeries geo = parse_rational_expr("1/(1-z1)", 1, cap);
    for (int k = 0; k <= cap; ++k) CHECK(geo.coeff(mi({k})) == 1);

    TruncatedSeries shifted = parse_rational_expr("z1/(1-z1)", 1, cap);
    CHECK(shifted.coeff(mi({0})) == 0);
    for (int k = 1; k <= cap; ++k) CHECK(shifted.coeff(mi({k})) == 1);

    TruncatedSeries cube = parse_rational_expr("(1+z1)^3", 1, cap);
    CHECK(cube.coeff(mi({0})) == 1);
    CHECK(cube.coeff(mi({1})) == 3);
    CHECK(cube.coeff(mi({2})) == 3);
    CHECK(cube.coeff(mi({3})) == 1);
    CHECK(cube.coeff(mi({4})) == 0);

    TruncatedSeries mixed = parse_rational_expr("2*z1 + 3*z2^2 - z1*z2", 2, 3);
    CHECK(mixed.coeff(mi({1, 0})) == 2);
    CHECK(mixed.coeff(mi({0, 2})) == 3);
    CHECK(mixed.coeff(mi({1, 1})) == -1);
    CHECK(mixed.coeff(mi({0, 0})) == 0);

    // Exponent binds to the nearest base.
    TruncatedSeries bound = parse_rational_expr("2*z1^2", 1, 3);
    CHECK(bound.coeff(mi({2})) == 2);
    CHECK(bound.coeff(mi({1})) == 0);

    CHECK(parse_rational_expr("--z1", 1, 3) ==
          TruncatedSeries::variable(1, 3, 0));
    CHECK(parse_rational_expr("1/2", 1, 3) ==
          TruncatedSeries::constant(1, 3, make_rat(1, 2)));
    CHECK(parse_rational_expr(" ( 1 + z1 ) * 2 ", 1, 3).coeff(mi({1})) == 2);

    // The parsed Pascal pair matches the built-in basis.
    RiordanBasis b = pascal_basis(1, 1, cap);
    CHECK(parse_rational_expr("1/(1-z1)", 1, cap) == b.g());
    CHECK(parse_rational_expr("z1/(1-z1)", 1, cap) == b.x()[0]);
}

TEST_CASE("expression parser rejects malformed input") {
    CHECK_THROWS_AS(parse_rational_expr("", 1, 3), ParseError);
    CHECK_THROWS_AS(parse_rational_expr("z0", 1, 3), ParseError);
    CHECK_THROWS_AS(parse_rational_expr("z3", 2, 3), ParseError);
    CHECK_THROWS_AS(parse_rational_expr("1+", 1, 3), ParseError);
    CHECK_THROWS_AS(parse_rational_expr("(1", 1, 3), ParseError);
    CHECK_THROWS_AS(parse_rational_expr(")", 1, 3), ParseError);
    CHECK_THROWS_AS(parse_rational_expr("1 2", 1, 3), ParseError);
    CHECK_THROWS_AS(parse_rational_expr("z1^-1", 1, 3), ParseError);
    CHECK_THROWS_AS(parse_rational_expr("z1^2^3", 1, 3), ParseError);
    CHECK_THROWS_AS(parse_rational_expr("x1", 1, 3), ParseError);
    CHECK_THROWS_AS(parse_rational_expr("1/z1", 1, 3), NonUnitError);
    CHECK_THROWS_AS(parse_rational_expr("1/(z1+z1)", 1, 3), NonUnitError);
    try {
        parse_rational_expr("1+*2", 1, 3);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
}
