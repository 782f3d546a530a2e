#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvpascal/errors.hpp"
#include "mvpascal/matrix.hpp"
#include "test_util.hpp"

using namespace mvpascal;
using testutil::int_matrix;

namespace {

// Cofactor expansion along the first row. Exponential, fine up to 6x6.
Int det_laplace(const Matrix<Int>& m) {
    std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        Matrix<Int> minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        Int term = m(0, j) * det_laplace(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

}  // namespace

TEST_CASE("element access and equality") {
    Matrix<Int> m(2, 3, Int(7));
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m(1, 2) == 7);
    m(0, 1) = 4;
    CHECK(m(0, 1) == 4);
    CHECK(m == m);
    CHECK(!(m == Matrix<Int>(2, 3, Int(7))));
    CHECK(!(m == Matrix<Int>(3, 2, Int(7))));
    CHECK(is_zero_matrix(Matrix<Int>(2, 2)));
    CHECK(!is_zero_matrix(m));
}

TEST_CASE("identity, transpose and multiplication") {
    Matrix<Int> a = int_matrix({{1, 2}, {3, 4}});
    Matrix<Int> b = int_matrix({{5, 6}, {7, 8}});
    CHECK(mat_mul(a, b) == int_matrix({{19, 22}, {43, 50}}));
    CHECK(mat_mul(a, make_identity<Int>(2)) == a);
    CHECK(mat_mul(make_identity<Int>(2), a) == a);
    CHECK(transpose(a) == int_matrix({{1, 3}, {2, 4}}));
    CHECK(transpose(transpose(a)) == a);
    Matrix<Int> rect = int_matrix({{1, 0, 2}, {0, 1, 1}});
    CHECK(mat_mul(rect, transpose(rect)) == int_matrix({{5, 2}, {2, 2}}));
    CHECK_THROWS_AS(mat_mul(a, transpose(rect)), Error);
    CHECK_THROWS_AS(mat_mul(rect, a), ShapeError);

    std::vector<Int> v = {Int(1), Int(-1)};
    auto av = mat_vec(a, v);
    REQUIRE(av.size() == 2);
    CHECK(av[0] == -1);
    CHECK(av[1] == -1);
}

TEST_CASE("matrix powers") {
    Matrix<Int> a = int_matrix({{1, 1}, {0, 1}});
    CHECK(mat_pow(a, 0) == make_identity<Int>(2));
    CHECK(mat_pow(a, 1) == a);
    CHECK(mat_pow(a, 5) == int_matrix({{1, 5}, {0, 1}}));
    Matrix<Int> b = int_matrix({{2, 1}, {1, 1}});
    CHECK(mat_pow(b, 4) == mat_mul(mat_mul(b, b), mat_mul(b, b)));
}

TEST_CASE("triangular determinant") {
    Matrix<Int> t = int_matrix({{2, 0, 0}, {5, 3, 0}, {1, 7, 4}});
    CHECK(det_triangular(t) == 24);
    CHECK(det_triangular(make_identity<Int>(4)) == 1);
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
    CHECK(det_bareiss(int_matrix({{3}})) == 3);
    CHECK(det_bareiss(int_matrix({{1, 2}, {3, 4}})) == -2);
    // Zero pivot forces a row swap.
    CHECK(det_bareiss(int_matrix({{0, 1}, {1, 0}})) == -1);
    CHECK(det_bareiss(int_matrix({{0, 0}, {1, 1}})) == 0);
    CHECK(det_bareiss(int_matrix({{0, 2, 1}, {1, 0, 0}, {0, 0, 3}})) == -6);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 1 + testutil::rand_below(rng, 5);
        Matrix<Int> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = static_cast<long>(testutil::rand_below(rng, 11)) - 5;
        CHECK(det_bareiss(m) == det_laplace(m));
    }
}

TEST_CASE("entry type converters") {
    Matrix<Int> a = int_matrix({{1, -2}, {0, 3}});
    Matrix<Rat> ar = to_rat(a);
    CHECK(ar(0, 1) == -2);
    CHECK(ar(1, 1) == 3);
    Matrix<Polynomial> ap = to_poly(a, 3);
    CHECK(ap(0, 0) == Polynomial::constant(3, Rat(1)));
    CHECK(ap(0, 1) == Polynomial::constant(3, Rat(-2)));
    CHECK(ap(1, 0).is_zero());
}
