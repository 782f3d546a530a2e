#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mvpascal/mindex.hpp"

namespace mvpascal {

/// A sparse multivariate polynomial with exact rational coefficients.
/// Variables are named x0, x1, ... by slot. Matrix-related work uses
/// nvars = n+1 rings with the ambient exponents occupying slots 1..n and
/// slot 0 reserved for x0.
///
/// Zero coefficients are never stored; two polynomials are equal exactly
/// when their term maps are equal. A default-constructed Polynomial is a
/// zero-variable placeholder usable only as container filler.
class Polynomial {
  public:
    using TermMap = std::map<MultiIndex, Rat, GrevlexLess>;

    Polynomial() : nvars_(0) {}

    static Polynomial zero(int nvars);
    static Polynomial constant(int nvars, const Rat& c);
    /// The variable x_slot.
    static Polynomial variable(int nvars, int slot);
    static Polynomial monomial(const MultiIndex& exps, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the given exponent; zero when absent.
    Rat coeff(const MultiIndex& exps) const;

    /// Largest total degree of a term, or -1 for the zero polynomial.
    int total_degree() const;

    /// Exact evaluation; point.size() must equal nvars().
    Rat eval(const std::vector<Rat>& point) const;

    /// Canonical text: terms in descending grevlex order, each as
    /// c*x0^a0*x1^a1*..., with unit coefficients and unit exponents
    /// elided, joined by " + " or " - ". The zero polynomial prints "0".
    std::string str() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b);
    friend Polynomial operator-(Polynomial a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Rat& c);
    friend Polynomial operator*(const Rat& c, const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Int& c);
    friend Polynomial operator*(const Int& c, const Polynomial& a);
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

  private:
    void add_term(const MultiIndex& exps, const Rat& c);
    void require_same_ring(const Polynomial& o) const;

    int nvars_;
    TermMap terms_;
};

/// p^e by repeated squaring; e >= 0. pow(p, 0) is the constant 1.
Polynomial pow(const Polynomial& p, unsigned e);

/// base[0]^k1 * base[1]^k2 * ... * base[n-1]^kn. All base polynomials must
/// share one ring and base.size() must equal k.dim().
Polynomial monomial_power(std::span<const Polynomial> base, const MultiIndex& k);

/// The divided-power derivative: on a monomial x^e it yields
/// multi_binom(e, k) * x^(e-k), dropping terms with e not above k.
/// k.dim() must equal p.nvars().
Polynomial hasse_derivative(const Polynomial& p, const MultiIndex& k);

/// Embeds an ambient index k into an (n+1)-variable exponent, order 0 in
/// x0 and k occupying slots 1..n.
MultiIndex embed_exponent(const MultiIndex& k);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace mvpascal
