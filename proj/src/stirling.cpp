#include "mvpascal/stirling.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "mvpascal/errors.hpp"
#include "mvpascal/pascal.hpp"

namespace mvpascal {

namespace {

// Memo tables are the only mutable state in the library. Fills are
// idempotent and guarded, so concurrent readers are safe.
std::mutex number_mutex;
std::vector<std::vector<Int>> number_rows;  // row n holds S(n, 0..n)

std::mutex poly_mutex;
std::map<std::pair<std::vector<int>, unsigned>, Polynomial> poly_memo;

// l! / (i1! * ... * in! * (l-|i|)!), requires |i| <= l. Exact.
Int multinomial(unsigned ell, const MultiIndex& i) {
    Int r = factorial(ell);
    for (int j = 0; j < i.dim(); ++j)
        r /= factorial(static_cast<unsigned long>(i[j]));
    r /= factorial(static_cast<unsigned long>(ell) -
                   static_cast<unsigned long>(i.total()));
    return r;
}

Polynomial stirling_poly_uncached(const MultiIndex& k, unsigned ell) {
    const int n = k.dim();
    Polynomial out = Polynomial::zero(n + 1);
    if (static_cast<unsigned>(k.total()) > ell) return out;
    // Offsets t = i - k with |i| <= ell cover exactly the summation range.
    for (const auto& t :
         enumerate_total_degree(n, static_cast<int>(ell) - k.total())) {
        MultiIndex i = k.plus(t);
        Int coeff = multinomial(ell, i);
        for (int j = 0; j < n && coeff != 0; ++j)
            coeff *= stirling_number(static_cast<unsigned>(i[j]),
                                     static_cast<unsigned>(k[j]));
        if (coeff == 0) continue;
        std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
        e[0] = static_cast<int>(ell) - i.total();
        for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j) + 1] = i[j];
        out += Polynomial::monomial(MultiIndex(std::move(e)), Rat(coeff));
    }
    return out;
}

}  // namespace

Int stirling_number(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::lock_guard<std::mutex> lock(number_mutex);
    if (number_rows.empty()) number_rows.push_back({Int(1)});
    while (number_rows.size() <= n) {
        const auto& prev = number_rows.back();
        std::size_t m = number_rows.size();
        std::vector<Int> row(m + 1);
        row[0] = 0;
        for (std::size_t j = 1; j < m; ++j)
            row[j] = Int(static_cast<unsigned long>(j)) * prev[j] + prev[j - 1];
        row[m] = 1;
        number_rows.push_back(std::move(row));
    }
    return number_rows[n][k];
}

Polynomial stirling_poly(const MultiIndex& k, unsigned ell) {
    {
        std::lock_guard<std::mutex> lock(poly_mutex);
        auto it = poly_memo.find({k.exps(), ell});
        if (it != poly_memo.end()) return it->second;
    }
    Polynomial p = stirling_poly_uncached(k, ell);
    std::lock_guard<std::mutex> lock(poly_mutex);
    return poly_memo.emplace(std::make_pair(k.exps(), ell), std::move(p))
        .first->second;
}

Polynomial stirling_poly_egf(const MultiIndex& k, unsigned ell) {
    const int n = k.dim();
    const int nv = n + 1;
    // Series in t with polynomial coefficients, truncated past t^ell.
    std::vector<Polynomial> acc(ell + 1, Polynomial::zero(nv));
    Polynomial x0_pow = Polynomial::constant(nv, 1);
    for (unsigned m = 0; m <= ell; ++m) {
        acc[m] = x0_pow * make_rat(1, factorial(m));
        x0_pow = x0_pow * Polynomial::variable(nv, 0);
    }
    for (int j = 0; j < n; ++j) {
        for (int rep = 0; rep < k[j]; ++rep) {
            // Multiply by (e^(xj*t) - 1): coefficient m is xj^m / m!.
            std::vector<Polynomial> factor(ell + 1, Polynomial::zero(nv));
            Polynomial xj_pow = Polynomial::variable(nv, j + 1);
            for (unsigned m = 1; m <= ell; ++m) {
                factor[m] = xj_pow * make_rat(1, factorial(m));
                xj_pow = xj_pow * Polynomial::variable(nv, j + 1);
            }
            std::vector<Polynomial> next(ell + 1, Polynomial::zero(nv));
            for (unsigned a = 0; a <= ell; ++a) {
                if (acc[a].is_zero()) continue;
                for (unsigned b = 1; a + b <= ell; ++b)
                    next[a + b] += acc[a] * factor[b];
            }
            acc = std::move(next);
        }
    }
    return acc[ell] * make_rat(factorial(ell), k.factorial());
}

Polynomial linear_form(const MultiIndex& k) {
    const int nv = k.dim() + 1;
    Polynomial p = Polynomial::variable(nv, 0);
    for (int j = 0; j < k.dim(); ++j)
        if (k[j] != 0)
            p += Polynomial::monomial(MultiIndex::unit(nv, j + 1), Rat(k[j]));
    return p;
}

Matrix<Polynomial> build_stirling_matrix(const PointSet& R, unsigned ell) {
    if (R.empty()) throw ShapeError("matrix builder needs a nonempty set");
    Matrix<Polynomial> m(R.size(), ell + 1, Polynomial::zero(R.n() + 1));
    for (std::size_t i = 0; i < R.size(); ++i) {
        Int kfact = R[i].factorial();
        for (unsigned j = 0; j <= ell; ++j)
            m(i, j) = stirling_poly(R[i], j) * kfact;
    }
    return m;
}

Matrix<Polynomial> build_vandermonde_matrix(const PointSet& R, unsigned ell) {
    if (R.empty()) throw ShapeError("matrix builder needs a nonempty set");
    Matrix<Polynomial> m(R.size(), ell + 1, Polynomial::zero(R.n() + 1));
    for (std::size_t i = 0; i < R.size(); ++i) {
        Polynomial a = linear_form(R[i]);
        Polynomial pw = Polynomial::constant(R.n() + 1, 1);
        for (unsigned j = 0; j <= ell; ++j) {
            m(i, j) = pw;
            if (j < ell) pw = pw * a;
        }
    }
    return m;
}

bool verify_decomposition(const PointSet& R, unsigned ell) {
    if (R.empty()) return false;
    Matrix<Polynomial> left =
        mat_mul(to_poly(build_L(R), R.n() + 1), build_stirling_matrix(R, ell));
    return left == build_vandermonde_matrix(R, ell);
}

}  // namespace mvpascal
