#include "mvpascal/pascal.hpp"

#include "mvpascal/errors.hpp"

namespace mvpascal {

namespace {

void require_nonempty(const PointSet& R) {
    if (R.empty()) throw ShapeError("matrix builder needs a nonempty set");
}

}  // namespace

Matrix<Int> build_L(const PointSet& R) {
    require_nonempty(R);
    const std::size_t r = R.size();
    Matrix<Int> m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j <= i; ++j) m(i, j) = multi_binom(R[i], R[j]);
    return m;
}

Matrix<Int> build_U(const PointSet& R) { return transpose(build_L(R)); }

Matrix<Int> build_S(const PointSet& R) {
    require_nonempty(R);
    const std::size_t r = R.size();
    Matrix<Int> m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Int v = multi_binom(R[i].plus(R[j]), R[i]);
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

Matrix<Int> build_A(const PointSet& R) {
    require_nonempty(R);
    const std::size_t r = R.size();
    Matrix<Int> m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (R[i].total() == R[j].total() + 1)
                m(i, j) = multi_binom(R[i], R[j]);
    return m;
}

Matrix<Int> build_D(const PointSet& R) {
    require_nonempty(R);
    const std::size_t r = R.size();
    Matrix<Int> m(r, r);
    for (std::size_t i = 0; i < r; ++i) m(i, i) = R[i].total() % 2 == 0 ? 1 : -1;
    return m;
}

Matrix<Int> build_L_power(const PointSet& R, long p) {
    require_nonempty(R);
    // p = 0 is the identity; the sign-diagonal conjugation behind the
    // closed form breaks down there, so it is special-cased.
    if (p == 0) return make_identity<Int>(R.size());
    if (p != 1 && !R.monomial_condition())
        throw MonomialConditionError(
            "powers of L need a downward closed set for p outside {0, 1}");
    const std::size_t r = R.size();
    Matrix<Int> m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Int b = multi_binom(R[i], R[j]);
            if (b == 0) continue;
            // b nonzero forces R[j] <= R[i], so the degree gap is >= 0.
            unsigned long gap =
                static_cast<unsigned long>(R[i].total() - R[j].total());
            m(i, j) = int_pow(p, gap) * b;
        }
    return m;
}

Matrix<Int> matrix_exponential_nilpotent(const Matrix<Int>& A, long p) {
    if (A.rows() != A.cols() || A.rows() == 0)
        throw ShapeError("matrix exponential needs a nonempty square matrix");
    const std::size_t r = A.rows();
    Matrix<Int> result = make_identity<Int>(r);
    Matrix<Int> power = A;  // A^m
    Int p_pow = 1;          // p^m
    Int m_fact = 1;         // m!
    for (std::size_t m = 1; !is_zero_matrix(power); ++m) {
        if (m > r)
            throw NonNilpotentError("matrix power fails to vanish by the dimension");
        p_pow *= p;
        m_fact *= static_cast<unsigned long>(m);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                if (power(i, j) == 0) continue;
                Int num = p_pow * power(i, j);
                if (!mpz_divisible_p(num.get_mpz_t(), m_fact.get_mpz_t()))
                    throw NonIntegralEntryError(
                        "exponential term is not integral at order " +
                        std::to_string(m));
                result(i, j) += num / m_fact;
            }
        power = mat_mul(power, A);
    }
    return result;
}

std::vector<Polynomial> monomial_vector(const PointSet& R) {
    require_nonempty(R);
    std::vector<Polynomial> v;
    v.reserve(R.size());
    for (const auto& k : R.points())
        v.push_back(Polynomial::monomial(embed_exponent(k), Rat(1)));
    return v;
}

std::vector<Polynomial> shifted_monomial_vector(const PointSet& R, long p) {
    require_nonempty(R);
    const int nv = R.n() + 1;
    std::vector<Polynomial> base;
    base.reserve(static_cast<std::size_t>(R.n()));
    for (int j = 0; j < R.n(); ++j)
        base.push_back(Polynomial::constant(nv, Rat(static_cast<long>(p))) +
                       Polynomial::variable(nv, j + 1));
    std::vector<Polynomial> v;
    v.reserve(R.size());
    for (const auto& k : R.points()) v.push_back(monomial_power(base, k));
    return v;
}

}  // namespace mvpascal
