#pragma once

#include <map>
#include <span>
#include <vector>

#include "mvpascal/mindex.hpp"

namespace mvpascal {

/// A multivariate formal power series truncated past total degree `cap`:
/// all arithmetic is exact modulo the ideal of terms of degree > cap.
/// Variables are named z1, ..., zn. Coefficients of total degree above the
/// cap are silently dropped; zero coefficients are never stored. Series
/// combine only when both nvars and cap agree.
class TruncatedSeries {
  public:
    using CoeffMap = std::map<MultiIndex, Rat, GrevlexLess>;

    TruncatedSeries(int nvars, int cap);

    static TruncatedSeries constant(int nvars, int cap, const Rat& c);
    static TruncatedSeries one(int nvars, int cap);
    /// The variable z_(slot+1) (0-based slot).
    static TruncatedSeries variable(int nvars, int cap, int slot);

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    const CoeffMap& coeffs() const { return coeffs_; }

    Rat coeff(const MultiIndex& e) const;
    /// Sets one coefficient; ignores exponents beyond the cap.
    void set_coeff(const MultiIndex& e, const Rat& c);
    /// Adds into one coefficient; ignores exponents beyond the cap.
    void add_coeff(const MultiIndex& e, const Rat& c);

    Rat constant_term() const;
    bool is_zero() const { return coeffs_.empty(); }

    /// The same series with every term of total degree > new_cap dropped.
    TruncatedSeries restricted(int new_cap) const;

    /// Terms of one total degree, as a series.
    TruncatedSeries graded_part(int degree) const;

    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

  private:
    int nvars_;
    int cap_;
    CoeffMap coeffs_;
};

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_scale(const TruncatedSeries& a, const Rat& c);
TruncatedSeries ts_pow(const TruncatedSeries& a, unsigned e);

/// Multiplicative inverse; the constant term must be nonzero (throws
/// NonUnitError otherwise). Newton iteration, doubling precision per step.
TruncatedSeries ts_recip(const TruncatedSeries& a);

/// g(x[0], ..., x[n-1]) where g has n variables and every substituted
/// series has zero constant term (throws NonzeroConstantTermError
/// otherwise). All series share one cap; the substituted family shares one
/// target ring.
TruncatedSeries ts_compose(const TruncatedSeries& g,
                           std::span<const TruncatedSeries> x);

/// The compositional inverse family: xbar with xbar(x) = z componentwise
/// up to the cap. Each x[i] must have zero constant term and the matrix of
/// linear coefficients must be invertible (throws SingularJacobianError
/// otherwise). Solved degree by degree.
std::vector<TruncatedSeries> ts_comp_inverse(std::span<const TruncatedSeries> x);

/// The n x n matrix of linear coefficients: entry (i, j) is the z_(j+1)
/// coefficient of x[i].
std::vector<std::vector<Rat>> jacobian_at_zero(std::span<const TruncatedSeries> x);

/// Exact determinant of a small rational matrix by Gaussian elimination.
Rat rat_det(std::vector<std::vector<Rat>> m);

/// Exact inverse of a small rational matrix; throws SingularJacobianError
/// when singular.
std::vector<std::vector<Rat>> rat_inverse(std::vector<std::vector<Rat>> m);

}  // namespace mvpascal
