#include "mvpascal/pointset.hpp"

#include <algorithm>
#include <cassert>

#include "mvpascal/errors.hpp"

namespace mvpascal {

namespace {

void require_dim(int n, const std::vector<MultiIndex>& pts) {
    for (const auto& k : pts)
        if (k.dim() != n)
            throw DimensionError("point of dimension " + std::to_string(k.dim()) +
                                 " in a set of dimension " + std::to_string(n));
}

std::vector<MultiIndex> sort_unique(std::vector<MultiIndex> pts) {
    std::sort(pts.begin(), pts.end(), GrevlexLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Walks all exponent vectors in the box [0,hi_1) x ... x [0,hi_n).
template <class Fn>
void for_each_in_box(const std::vector<int>& hi, Fn&& fn) {
    std::vector<int> cur(hi.size(), 0);
    while (true) {
        fn(cur);
        std::size_t j = 0;
        for (; j < hi.size(); ++j) {
            if (++cur[j] < hi[j]) break;
            cur[j] = 0;
        }
        if (j == hi.size()) return;
    }
}

}  // namespace

PointSet::PointSet(int n, std::vector<MultiIndex> sorted_pts)
    : n_(n), pts_(std::move(sorted_pts)) {
    monomial_condition_ = pts_.empty() || check_monomial_condition(pts_);
}

PointSet PointSet::of(int n, std::vector<MultiIndex> pts) {
    if (n <= 0) throw DimensionError("point set needs positive dimension");
    require_dim(n, pts);
    return PointSet(n, sort_unique(std::move(pts)));
}

PointSet PointSet::degree_window(int n, int degree) {
    if (n <= 0) throw DimensionError("point set needs positive dimension");
    if (degree < 0) throw Error("negative degree bound");
    return PointSet(n, enumerate_total_degree(n, degree));
}

bool PointSet::contains(const MultiIndex& k) const {
    return std::binary_search(pts_.begin(), pts_.end(), k, GrevlexLess{});
}

std::optional<std::size_t> PointSet::index_of(const MultiIndex& k) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), k, GrevlexLess{});
    if (it == pts_.end() || !(*it == k)) return std::nullopt;
    return static_cast<std::size_t>(it - pts_.begin());
}

bool PointSet::operator==(const PointSet& o) const {
    return n_ == o.n_ && pts_ == o.pts_;
}

bool check_monomial_condition(const std::vector<MultiIndex>& pts) {
    if (pts.empty()) return true;
    int n = pts[0].dim();
    require_dim(n, pts);
    std::vector<MultiIndex> sorted = sort_unique(pts);
    for (const auto& k : sorted) {
        for (int j = 0; j < n; ++j) {
            if (k[j] == 0) continue;
            if (!std::binary_search(sorted.begin(), sorted.end(),
                                    k.decremented(j), GrevlexLess{}))
                return false;
        }
    }
    return true;
}

MonomialIdeal MonomialIdeal::of(int n, std::vector<MultiIndex> gens) {
    if (n <= 0) throw DimensionError("ideal needs positive dimension");
    require_dim(n, gens);
    gens = sort_unique(std::move(gens));
    // Keep only generators not divisible by an earlier one. Grevlex order
    // refines divisibility, so a divisor always precedes its multiples.
    std::vector<MultiIndex> minimal;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& m : minimal)
            if (partial_leq(m, g)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }
    return MonomialIdeal{n, std::move(minimal)};
}

bool MonomialIdeal::contains(const MultiIndex& k) const {
    for (const auto& g : generators)
        if (partial_leq(g, k)) return true;
    return false;
}

bool MonomialIdeal::zero_dimensional() const {
    // The unit ideal leaves no standard monomials at all.
    if (generators.size() == 1 && generators[0].is_zero()) return true;
    for (int j = 0; j < n; ++j) {
        bool found = false;
        for (const auto& g : generators) {
            bool pure = g[j] > 0;
            for (int l = 0; pure && l < n; ++l)
                if (l != j && g[l] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

PointSet standard_monomials(const MonomialIdeal& ideal,
                            std::optional<int> degree_bound) {
    std::vector<MultiIndex> std_monos;
    if (degree_bound) {
        if (*degree_bound < 0) throw Error("negative degree bound");
        for (const auto& k : enumerate_total_degree(ideal.n, *degree_bound))
            if (!ideal.contains(k)) std_monos.push_back(k);
        return PointSet::of(ideal.n, std::move(std_monos));
    }
    if (!ideal.zero_dimensional())
        throw InfiniteSetError(
            "standard monomials form an infinite set; pass a degree bound");
    if (ideal.generators.size() == 1 && ideal.generators[0].is_zero())
        return PointSet::of(ideal.n, {});
    // Every standard monomial lies below the minimal pure power in each
    // variable, so the box spanned by those powers is exhaustive.
    std::vector<int> box(static_cast<std::size_t>(ideal.n), 0);
    for (int j = 0; j < ideal.n; ++j) {
        int d = 0;
        for (const auto& g : ideal.generators) {
            bool pure = g[j] > 0;
            for (int l = 0; pure && l < ideal.n; ++l)
                if (l != j && g[l] != 0) pure = false;
            if (pure && (d == 0 || g[j] < d)) d = g[j];
        }
        box[static_cast<std::size_t>(j)] = d;
    }
    for_each_in_box(box, [&](const std::vector<int>& cur) {
        MultiIndex k{std::vector<int>(cur)};
        if (!ideal.contains(k)) std_monos.push_back(k);
    });
    return PointSet::of(ideal.n, std::move(std_monos));
}

MonomialIdeal minimal_generators(const PointSet& R) {
    if (!R.monomial_condition())
        throw MonomialConditionError(
            "minimal generators need a downward closed set");
    int n = R.n();
    if (R.empty())
        return MonomialIdeal::of(n, {MultiIndex::zeros(n)});
    // A minimal generator has every immediate predecessor inside R, and
    // each of its components exceeds the componentwise maximum of R by at
    // most one. Scan that box.
    std::vector<int> box(static_cast<std::size_t>(n), 0);
    for (const auto& k : R.points())
        for (int j = 0; j < n; ++j)
            box[static_cast<std::size_t>(j)] =
                std::max(box[static_cast<std::size_t>(j)], k[j] + 2);
    std::vector<MultiIndex> gens;
    for_each_in_box(box, [&](const std::vector<int>& cur) {
        MultiIndex g{std::vector<int>(cur)};
        if (R.contains(g)) return;
        for (int j = 0; j < n; ++j)
            if (g[j] > 0 && !R.contains(g.decremented(j))) return;
        gens.push_back(g);
    });
    return MonomialIdeal::of(n, std::move(gens));
}

std::vector<MultiIndex> enumerate_total_degree(int n, int degree) {
    if (n <= 0) throw DimensionError("positive dimension required");
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    // Depth-first over components, tracking the remaining degree budget.
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == n - 1) {
            for (int v = 0; v <= remaining; ++v) {
                cur[static_cast<std::size_t>(slot)] = v;
                out.push_back(MultiIndex{std::vector<int>(cur)});
            }
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<std::size_t>(slot)] = v;
            self(self, slot + 1, remaining - v);
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), GrevlexLess{});
    return out;
}

PointSet random_downward_closed(std::mt19937_64& rng, int n,
                                std::size_t max_size) {
    assert(n >= 1 && max_size >= 1);
    auto below = [&](unsigned long m) {
        return static_cast<int>(rng() % m);
    };
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<MultiIndex> gens;
        std::vector<int> box(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            int d = 1 + below(5);
            box[static_cast<std::size_t>(j)] = d;
            std::vector<int> g(static_cast<std::size_t>(n), 0);
            g[static_cast<std::size_t>(j)] = d;
            gens.push_back(MultiIndex{std::move(g)});
        }
        int extra = below(4);
        for (int t = 0; t < extra; ++t) {
            std::vector<int> g(static_cast<std::size_t>(n), 0);
            bool zero = true;
            for (int j = 0; j < n; ++j) {
                g[static_cast<std::size_t>(j)] =
                    below(static_cast<unsigned long>(box[static_cast<std::size_t>(j)]));
                zero = zero && g[static_cast<std::size_t>(j)] == 0;
            }
            if (!zero) gens.push_back(MultiIndex{std::move(g)});
        }
        PointSet R = standard_monomials(MonomialIdeal::of(n, std::move(gens)));
        if (!R.empty() && R.size() <= max_size) return R;
    }
    return PointSet::of(n, {MultiIndex::zeros(n)});
}

}  // namespace mvpascal
