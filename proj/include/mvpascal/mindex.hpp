#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "mvpascal/numbers.hpp"

namespace mvpascal {

/// A multi-index: a fixed-length vector of non-negative integer exponents.
/// The length is the ambient dimension and never changes after construction.
class MultiIndex {
  public:
    /// Throws DimensionError on an empty vector, ParseError on a negative
    /// component.
    explicit MultiIndex(std::vector<int> exps);

    static MultiIndex zeros(int n);

    /// The unit index e_slot (0-based slot).
    static MultiIndex unit(int n, int slot);

    /// Parses "k1,k2,...,kn", e.g. "1,0,2".
    static MultiIndex parse(const std::string& text);

    int dim() const { return static_cast<int>(e_.size()); }
    int operator[](int slot) const { return e_[static_cast<std::size_t>(slot)]; }
    const std::vector<int>& exps() const { return e_; }

    /// Total degree |k| = k1 + ... + kn.
    int total() const;

    /// k! = k1! * ... * kn!.
    Int factorial() const;

    bool is_zero() const;

    /// Componentwise sum; dimensions must agree.
    MultiIndex plus(const MultiIndex& o) const;

    /// Componentwise difference; requires o <= *this componentwise.
    MultiIndex minus(const MultiIndex& o) const;

    /// This index with component `slot` raised by one.
    MultiIndex incremented(int slot) const;

    /// This index with component `slot` lowered by one; requires it positive.
    MultiIndex decremented(int slot) const;

    /// "k1,k2,...,kn".
    std::string str() const;

    bool operator==(const MultiIndex& o) const;
    bool operator!=(const MultiIndex& o) const { return !(*this == o); }

  private:
    std::vector<int> e_;
};

/// Graded reverse lexicographic comparison. Lower total degree comes first;
/// on equal degree, a precedes b exactly when the right-most nonzero entry
/// of a-b is positive. In dimension 2 this enumerates
/// (0,0),(0,1),(1,0),(0,2),(1,1),(2,0),(0,3),(1,2),(2,1),...
/// Throws DimensionError when dimensions differ.
std::strong_ordering grevlex_cmp(const MultiIndex& a, const MultiIndex& b);

/// Componentwise partial order a <= b. Throws DimensionError on mismatch.
bool partial_leq(const MultiIndex& a, const MultiIndex& b);

/// Product of componentwise binomials, C(k1,i1)*...*C(kn,in); zero unless
/// i <= k componentwise. Throws DimensionError on mismatch.
Int multi_binom(const MultiIndex& k, const MultiIndex& i);

/// Strict-weak-order adapter for ordered containers keyed by multi-index.
struct GrevlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return std::is_lt(grevlex_cmp(a, b));
    }
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& k);

}  // namespace mvpascal
