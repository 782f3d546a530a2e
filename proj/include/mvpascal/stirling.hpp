#pragma once

#include "mvpascal/matrix.hpp"
#include "mvpascal/pointset.hpp"
#include "mvpascal/poly.hpp"

namespace mvpascal {

/// Stirling number of the second kind, S(n, k) = k*S(n-1, k) + S(n-1, k-1)
/// with S(0, 0) = 1. Rows are memoized behind a lock; repeated queries are
/// table lookups.
Int stirling_number(unsigned n, unsigned k);

/// The multivariate Stirling polynomial S_k^(l) in the variables
/// x0, x1, ..., xn (so nvars = k.dim()+1): the sum over i >= k with
/// |i| <= l of l!/(i1!*...*in!*(l-|i|)!) * prod_j S(i_j, k_j)
/// * x0^(l-|i|) * x^i. Memoized. Coefficients are integers.
Polynomial stirling_poly(const MultiIndex& k, unsigned ell);

/// The same polynomial read off a truncated exponential generating
/// function: l! times the t^l coefficient of
/// (1/k!) * e^(x0*t) * prod_j (e^(xj*t) - 1)^(k_j).
/// Computed independently of stirling_poly so the two routes check each
/// other.
Polynomial stirling_poly_egf(const MultiIndex& k, unsigned ell);

/// The linear form x0 + k1*x1 + ... + kn*xn in the (n+1)-variable ring.
Polynomial linear_form(const MultiIndex& k);

/// |R| x (l+1) matrix with entry (k, j) = k! * S_k^(j).
Matrix<Polynomial> build_stirling_matrix(const PointSet& R, unsigned ell);

/// |R| x (l+1) matrix with entry (k, j) = (x0 + k1*x1 + ... + kn*xn)^j.
Matrix<Polynomial> build_vandermonde_matrix(const PointSet& R, unsigned ell);

/// Whether build_L(R) times the Stirling matrix equals the Vandermonde
/// matrix, as an identity of polynomial matrices. Returns false rather
/// than throwing on sets where the identity fails.
bool verify_decomposition(const PointSet& R, unsigned ell);

}  // namespace mvpascal
