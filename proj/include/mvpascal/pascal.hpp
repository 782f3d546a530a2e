#pragma once

#include <optional>
#include <vector>

#include "mvpascal/matrix.hpp"
#include "mvpascal/pointset.hpp"
#include "mvpascal/poly.hpp"

namespace mvpascal {

/// Lower-triangular Pascal matrix on R: entry (i, j) is
/// multi_binom(R[i], R[j]). Grevlex refines divisibility, so the matrix is
/// lower triangular with unit diagonal. R must be nonempty.
Matrix<Int> build_L(const PointSet& R);

/// Transpose of build_L.
Matrix<Int> build_U(const PointSet& R);

/// Symmetric Pascal matrix: entry (i, j) is multi_binom(R[i]+R[j], R[i]).
Matrix<Int> build_S(const PointSet& R);

/// Creation matrix: entry (i, j) is multi_binom(R[i], R[j]) when
/// |R[i]| = |R[j]| + 1 and zero otherwise. Strictly block subdiagonal,
/// hence nilpotent.
Matrix<Int> build_A(const PointSet& R);

/// Sign diagonal: (-1)^|R[i]| at position (i, i).
Matrix<Int> build_D(const PointSet& R);

/// The p-th power of build_L(R) in closed form: entry (i, j) is
/// p^(|R[i]|-|R[j]|) * multi_binom(R[i], R[j]). p = 0 yields the identity.
/// For p outside {0, 1} the closed form needs R downward closed; throws
/// MonomialConditionError otherwise.
Matrix<Int> build_L_power(const PointSet& R, long p);

/// exp(p*A) summed exactly: identity + sum of p^m * A^m / m!. Stops when a
/// power vanishes; throws NonNilpotentError when none does within the
/// dimension bound, NonIntegralEntryError when a division fails to come
/// out integral.
Matrix<Int> matrix_exponential_nilpotent(const Matrix<Int>& A, long p);

/// The vector of monomials [x^R[0], ..., x^R[r-1]] in the (n+1)-variable
/// ring, ambient exponents at slots 1..n.
std::vector<Polynomial> monomial_vector(const PointSet& R);

/// The vector [(p*1 + x)^R[0], ..., (p*1 + x)^R[r-1]], same ring.
std::vector<Polynomial> shifted_monomial_vector(const PointSet& R, long p);

/// Binomial transform along R: b_k = sum over i <= k in R of
/// multi_binom(k, i) * a_i; with `inverse` the summand carries the sign
/// (-1)^(|k|-|i|). Throws MonomialConditionError unless R is downward
/// closed, MissingValueError when `a` does not cover R. Forward and
/// inverse compose to the identity.
template <class T>
std::vector<T> binomial_transform(const PointSet& R, const std::vector<T>& a,
                                  bool inverse) {
    if (!R.monomial_condition())
        throw MonomialConditionError(
            "binomial transform needs a downward closed set");
    if (a.size() != R.size())
        throw MissingValueError("sequence covers " + std::to_string(a.size()) +
                                " of " + std::to_string(R.size()) + " points");
    std::vector<T> b;
    b.reserve(R.size());
    for (std::size_t i = 0; i < R.size(); ++i) {
        // Grevlex refines the partial order, so contributors sit at or
        // before position i; the i-th term itself always contributes 1.
        std::optional<T> acc;
        for (std::size_t j = 0; j <= i; ++j) {
            if (!partial_leq(R[j], R[i])) continue;
            Int c = multi_binom(R[i], R[j]);
            if (inverse && (R[i].total() - R[j].total()) % 2 != 0) c = -c;
            T term = a[j] * c;
            if (acc)
                *acc += term;
            else
                acc.emplace(std::move(term));
        }
        b.push_back(std::move(*acc));
    }
    return b;
}

}  // namespace mvpascal
