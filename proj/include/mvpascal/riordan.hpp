#pragma once

#include <vector>

#include "mvpascal/matrix.hpp"
#include "mvpascal/pointset.hpp"
#include "mvpascal/series.hpp"

namespace mvpascal {

/// A truncated group element: a unit series g together with a substitution
/// family x of n series in n variables, each with zero constant term and
/// invertible linear part. Construction validates all three conditions
/// (NonUnitError, NonzeroConstantTermError, SingularJacobianError).
class RiordanBasis {
  public:
    RiordanBasis(TruncatedSeries g, std::vector<TruncatedSeries> x);

    const TruncatedSeries& g() const { return g_; }
    const std::vector<TruncatedSeries>& x() const { return x_; }
    int nvars() const { return g_.nvars(); }
    int cap() const { return g_.cap(); }

  private:
    TruncatedSeries g_;
    std::vector<TruncatedSeries> x_;
};

/// The identity element (1, z).
RiordanBasis riordan_identity(int n, int cap);

/// The basis (prod_j 1/(1 - p*z_j), z_i/(1 - p*z_i)) whose matrix is the
/// p-th Pascal power on any downward closed window. p = 0 degenerates to
/// the identity element.
RiordanBasis pascal_basis(int n, long p, int cap);

/// The matrix of the group element on a window W: entry (i, j) is the
/// coefficient of z^W[i] in g * x^W[j]. Block lower triangular by total
/// degree. Every window point must satisfy |k| <= cap (throws
/// WindowExceedsCapError), and W.n() must equal the basis dimension.
Matrix<Rat> riordan_matrix(const RiordanBasis& basis, const PointSet& window);

/// Group product: (g, x) * (h, y) = (g * h(x), y(x)). Matrices compose
/// covariantly: the matrix of a product is the product of the matrices.
RiordanBasis riordan_product(const RiordanBasis& a, const RiordanBasis& b);

/// Group inverse: (1/g(xbar), xbar) with xbar the compositional inverse
/// family of x.
RiordanBasis riordan_inverse(const RiordanBasis& a);

}  // namespace mvpascal
