#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "mvpascal/mindex.hpp"

namespace mvpascal {

/// A finite set of multi-indices of one common dimension, kept sorted in
/// grevlex order with duplicates removed. Rows and columns of every matrix
/// in this library are indexed by such a set.
class PointSet {
  public:
    /// Sorts and deduplicates silently. All points must have dimension n.
    static PointSet of(int n, std::vector<MultiIndex> pts);

    /// All k with |k| <= degree, grevlex sorted. Has C(n+degree, n) points.
    static PointSet degree_window(int n, int degree);

    int n() const { return n_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const MultiIndex& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<MultiIndex>& points() const { return pts_; }

    /// True when the set is downward closed: together with any point it
    /// contains every componentwise-smaller point. Cached at construction.
    bool monomial_condition() const { return monomial_condition_; }

    bool contains(const MultiIndex& k) const;

    /// Position of k in grevlex order, or nullopt when absent.
    std::optional<std::size_t> index_of(const MultiIndex& k) const;

    bool operator==(const PointSet& o) const;

  private:
    PointSet(int n, std::vector<MultiIndex> sorted_pts);

    int n_;
    std::vector<MultiIndex> pts_;
    bool monomial_condition_ = false;
};

/// Downward closure test on a raw list. Only the n immediate predecessors
/// k - e_j of each point are consulted; closure under single decrements
/// implies closure under the full componentwise order.
bool check_monomial_condition(const std::vector<MultiIndex>& pts);

/// A monomial ideal, stored by its generators. Construction drops
/// generators divisible by another generator, so the stored family is an
/// antichain; it also sorts and deduplicates.
struct MonomialIdeal {
    int n;
    std::vector<MultiIndex> generators;

    static MonomialIdeal of(int n, std::vector<MultiIndex> gens);

    /// True when some generator divides k, i.e. the monomial k lies in the
    /// ideal.
    bool contains(const MultiIndex& k) const;

    /// True when every variable has a pure-power generator, which is
    /// exactly when the set of standard monomials is finite.
    bool zero_dimensional() const;
};

/// The monomials outside the ideal, grevlex sorted. Without a degree bound
/// the ideal must be zero-dimensional (throws InfiniteSetError otherwise);
/// with a bound, returns the standard monomials of total degree <= bound.
/// The result always satisfies the monomial condition.
PointSet standard_monomials(const MonomialIdeal& ideal,
                            std::optional<int> degree_bound = std::nullopt);

/// The unique minimal generating family of the ideal whose standard
/// monomials are exactly R. Inverse of standard_monomials on downward
/// closed sets. Throws MonomialConditionError when R is not closed.
MonomialIdeal minimal_generators(const PointSet& R);

/// All multi-indices of dimension n with total degree <= degree, grevlex
/// sorted.
std::vector<MultiIndex> enumerate_total_degree(int n, int degree);

/// A random downward-closed set with 1 <= size <= max_size, built by
/// sampling a random generator antichain (pure powers plus a few mixed
/// cuts) and enumerating its standard monomials. Deterministic for a given
/// generator state.
PointSet random_downward_closed(std::mt19937_64& rng, int n,
                                std::size_t max_size);

}  // namespace mvpascal
