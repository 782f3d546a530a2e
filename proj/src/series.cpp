#include "mvpascal/series.hpp"

#include <cassert>

#include "mvpascal/errors.hpp"

namespace mvpascal {

namespace {

void require_same_ring(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.nvars() != b.nvars())
        throw DimensionError("series live in different rings");
    if (a.cap() != b.cap())
        throw ShapeError("series have different truncation caps");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int nvars, int cap) : nvars_(nvars), cap_(cap) {
    if (nvars <= 0) throw DimensionError("series needs positive nvars");
    if (cap < 0) throw ShapeError("series needs a non-negative cap");
}

TruncatedSeries TruncatedSeries::constant(int nvars, int cap, const Rat& c) {
    TruncatedSeries s(nvars, cap);
    if (c != 0) s.coeffs_.emplace(MultiIndex::zeros(nvars), c);
    return s;
}

TruncatedSeries TruncatedSeries::one(int nvars, int cap) {
    return constant(nvars, cap, Rat(1));
}

TruncatedSeries TruncatedSeries::variable(int nvars, int cap, int slot) {
    TruncatedSeries s(nvars, cap);
    if (slot < 0 || slot >= nvars)
        throw DimensionError("variable slot out of range");
    if (cap >= 1) s.coeffs_.emplace(MultiIndex::unit(nvars, slot), Rat(1));
    return s;
}

Rat TruncatedSeries::coeff(const MultiIndex& e) const {
    if (e.dim() != nvars_) throw DimensionError("exponent has wrong dimension");
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void TruncatedSeries::set_coeff(const MultiIndex& e, const Rat& c) {
    if (e.dim() != nvars_) throw DimensionError("exponent has wrong dimension");
    if (e.total() > cap_) return;
    if (c == 0)
        coeffs_.erase(e);
    else
        coeffs_[e] = c;
}

void TruncatedSeries::add_coeff(const MultiIndex& e, const Rat& c) {
    if (e.dim() != nvars_) throw DimensionError("exponent has wrong dimension");
    if (e.total() > cap_ || c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Rat TruncatedSeries::constant_term() const {
    return coeff(MultiIndex::zeros(nvars_));
}

TruncatedSeries TruncatedSeries::restricted(int new_cap) const {
    if (new_cap > cap_) throw ShapeError("cannot widen a truncation cap");
    TruncatedSeries s(nvars_, new_cap);
    for (const auto& [e, c] : coeffs_) {
        if (e.total() > new_cap) break;  // grevlex groups by total degree
        s.coeffs_.emplace(e, c);
    }
    return s;
}

TruncatedSeries TruncatedSeries::graded_part(int degree) const {
    TruncatedSeries s(nvars_, cap_);
    for (const auto& [e, c] : coeffs_) {
        if (e.total() > degree) break;
        if (e.total() == degree) s.coeffs_.emplace(e, c);
    }
    return s;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    require_same_ring(*this, o);
    return coeffs_ == o.coeffs_;
}

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
    TruncatedSeries r = a;
    for (const auto& [e, c] : b.coeffs()) r.add_coeff(e, c);
    return r;
}

TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
    TruncatedSeries r = a;
    for (const auto& [e, c] : b.coeffs()) r.add_coeff(e, Rat(-c));
    return r;
}

TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
    TruncatedSeries r(a.nvars(), a.cap());
    for (const auto& [ea, ca] : a.coeffs()) {
        if (ea.total() > a.cap()) break;
        for (const auto& [eb, cb] : b.coeffs()) {
            if (ea.total() + eb.total() > a.cap()) break;  // grevlex is graded
            r.add_coeff(ea.plus(eb), Rat(ca * cb));
        }
    }
    return r;
}

TruncatedSeries ts_scale(const TruncatedSeries& a, const Rat& c) {
    TruncatedSeries r(a.nvars(), a.cap());
    if (c == 0) return r;
    for (const auto& [e, k] : a.coeffs()) r.add_coeff(e, Rat(k * c));
    return r;
}

TruncatedSeries ts_pow(const TruncatedSeries& a, unsigned e) {
    TruncatedSeries r = TruncatedSeries::one(a.nvars(), a.cap());
    TruncatedSeries base = a;
    while (e > 0) {
        if (e & 1u) r = ts_mul(r, base);
        e >>= 1u;
        if (e) base = ts_mul(base, base);
    }
    return r;
}

TruncatedSeries ts_recip(const TruncatedSeries& a) {
    Rat c0 = a.constant_term();
    if (c0 == 0) throw NonUnitError("reciprocal of a series with zero constant term");
    TruncatedSeries b =
        TruncatedSeries::constant(a.nvars(), a.cap(), Rat(1 / c0));
    TruncatedSeries two = TruncatedSeries::constant(a.nvars(), a.cap(), Rat(2));
    // After each step a*b = 1 modulo twice the previous order.
    for (int have = 1; have <= a.cap(); have *= 2)
        b = ts_mul(b, ts_sub(two, ts_mul(a, b)));
    return b;
}

TruncatedSeries ts_compose(const TruncatedSeries& g,
                           std::span<const TruncatedSeries> x) {
    if (static_cast<int>(x.size()) != g.nvars())
        throw DimensionError("substitution family length must match g");
    for (const auto& xi : x) {
        require_same_ring(x[0], xi);
        if (xi.cap() != g.cap())
            throw ShapeError("series have different truncation caps");
        if (xi.constant_term() != 0)
            throw NonzeroConstantTermError(
                "substituted series must have zero constant term");
    }
    const int target_vars = x[0].nvars();
    const int cap = g.cap();
    TruncatedSeries r(target_vars, cap);
    // Powers of each substituted series, grown on demand. Dropped terms of
    // g beyond the cap cannot contribute: each x_i has positive valuation.
    std::vector<std::vector<TruncatedSeries>> pows(
        x.size(), {TruncatedSeries::one(target_vars, cap)});
    auto power = [&](std::size_t i, int e) -> const TruncatedSeries& {
        auto& ladder = pows[i];
        while (static_cast<int>(ladder.size()) <= e)
            ladder.push_back(ts_mul(ladder.back(), x[i]));
        return ladder[static_cast<std::size_t>(e)];
    };
    for (const auto& [e, c] : g.coeffs()) {
        TruncatedSeries term =
            TruncatedSeries::constant(target_vars, cap, c);
        for (int i = 0; i < g.nvars() && !term.is_zero(); ++i)
            if (e[i] > 0) term = ts_mul(term, power(static_cast<std::size_t>(i), e[i]));
        r = ts_add(r, term);
    }
    return r;
}

std::vector<std::vector<Rat>> jacobian_at_zero(
    std::span<const TruncatedSeries> x) {
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<Rat>> j(static_cast<std::size_t>(n),
                                    std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        if (x[static_cast<std::size_t>(i)].nvars() != n)
            throw DimensionError("substitution family must be square");
        for (int l = 0; l < n; ++l)
            j[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] =
                x[static_cast<std::size_t>(i)].coeff(MultiIndex::unit(n, l));
    }
    return j;
}

Rat rat_det(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

std::vector<std::vector<Rat>> rat_inverse(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n)
            throw SingularJacobianError("linear coefficient matrix is singular");
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            std::swap(inv[pivot], inv[k]);
        }
        Rat d = m[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            m[k][j] /= d;
            inv[k][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            Rat f = m[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

std::vector<TruncatedSeries> ts_comp_inverse(
    std::span<const TruncatedSeries> x) {
    const int n = static_cast<int>(x.size());
    if (n == 0) throw DimensionError("empty substitution family");
    for (const auto& xi : x) {
        require_same_ring(x[0], xi);
        if (xi.nvars() != n)
            throw DimensionError("substitution family must be square");
        if (xi.constant_term() != 0)
            throw NonzeroConstantTermError(
                "invertible family needs zero constant terms");
    }
    const int cap = x[0].cap();
    auto inv = rat_inverse(jacobian_at_zero(x));
    // The inverse of the linear part, as a substitution family.
    std::vector<TruncatedSeries> lin_inv;
    lin_inv.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        TruncatedSeries s(n, cap);
        for (int j = 0; j < n; ++j)
            s.set_coeff(MultiIndex::unit(n, j),
                        inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        lin_inv.push_back(std::move(s));
    }
    std::vector<TruncatedSeries> xbar = lin_inv;
    // Fix one total degree per pass: the degree-m defect of z - xbar(x),
    // pulled back through the inverse linear part, is exactly the missing
    // homogeneous correction.
    for (int m = 2; m <= cap; ++m) {
        for (int i = 0; i < n; ++i) {
            TruncatedSeries composed = ts_compose(xbar[static_cast<std::size_t>(i)], x);
            TruncatedSeries defect =
                ts_sub(TruncatedSeries::variable(n, cap, i), composed)
                    .graded_part(m);
            if (defect.is_zero()) continue;
            xbar[static_cast<std::size_t>(i)] =
                ts_add(xbar[static_cast<std::size_t>(i)],
                       ts_compose(defect, lin_inv));
        }
    }
    return xbar;
}

}  // namespace mvpascal
