#include "mvpascal/riordan.hpp"

#include "mvpascal/errors.hpp"

namespace mvpascal {

RiordanBasis::RiordanBasis(TruncatedSeries g, std::vector<TruncatedSeries> x)
    : g_(std::move(g)), x_(std::move(x)) {
    const int n = g_.nvars();
    if (static_cast<int>(x_.size()) != n)
        throw DimensionError("basis needs one substituted series per variable");
    if (g_.constant_term() == 0)
        throw NonUnitError("basis series g must be a unit");
    for (const auto& xi : x_) {
        if (xi.nvars() != n || xi.cap() != g_.cap())
            throw ShapeError("basis series must share ring and cap");
        if (xi.constant_term() != 0)
            throw NonzeroConstantTermError(
                "substituted series must have zero constant term");
    }
    if (rat_det(jacobian_at_zero(x_)) == 0)
        throw SingularJacobianError("linear coefficient matrix is singular");
}

RiordanBasis riordan_identity(int n, int cap) {
    std::vector<TruncatedSeries> x;
    x.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        x.push_back(TruncatedSeries::variable(n, cap, i));
    return RiordanBasis(TruncatedSeries::one(n, cap), std::move(x));
}

RiordanBasis pascal_basis(int n, long p, int cap) {
    TruncatedSeries g = TruncatedSeries::one(n, cap);
    std::vector<TruncatedSeries> x;
    x.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // 1 - p*z_i and its reciprocal.
        TruncatedSeries lin = TruncatedSeries::one(n, cap);
        lin.add_coeff(MultiIndex::unit(n, i), Rat(-p));
        TruncatedSeries rec = ts_recip(lin);
        g = ts_mul(g, rec);
        x.push_back(ts_mul(TruncatedSeries::variable(n, cap, i), rec));
    }
    return RiordanBasis(std::move(g), std::move(x));
}

Matrix<Rat> riordan_matrix(const RiordanBasis& basis, const PointSet& window) {
    if (window.empty()) throw ShapeError("empty window");
    if (window.n() != basis.nvars())
        throw DimensionError("window dimension must match the basis");
    const int cap = basis.cap();
    for (const auto& k : window.points())
        if (k.total() > cap)
            throw WindowExceedsCapError("window point |" + k.str() +
                                        "| exceeds the cap " +
                                        std::to_string(cap));
    const std::size_t r = window.size();
    Matrix<Rat> m(r, r);
    // Column j is the expansion of g * x^W[j]; powers of each substituted
    // series are shared across columns.
    std::vector<std::vector<TruncatedSeries>> pows;
    for (const auto& xi : basis.x())
        pows.push_back({TruncatedSeries::one(basis.nvars(), cap), xi});
    auto power = [&](std::size_t i, int e) -> const TruncatedSeries& {
        auto& ladder = pows[i];
        while (static_cast<int>(ladder.size()) <= e)
            ladder.push_back(ts_mul(ladder.back(), basis.x()[i]));
        return ladder[static_cast<std::size_t>(e)];
    };
    for (std::size_t j = 0; j < r; ++j) {
        TruncatedSeries col = basis.g();
        for (int i = 0; i < window.n(); ++i)
            if (window[j][i] > 0)
                col = ts_mul(col, power(static_cast<std::size_t>(i), window[j][i]));
        for (std::size_t i = 0; i < r; ++i) m(i, j) = col.coeff(window[i]);
    }
    return m;
}

RiordanBasis riordan_product(const RiordanBasis& a, const RiordanBasis& b) {
    if (a.nvars() != b.nvars())
        throw DimensionError("group elements live in different rings");
    if (a.cap() != b.cap())
        throw ShapeError("group elements have different caps");
    TruncatedSeries g = ts_mul(a.g(), ts_compose(b.g(), a.x()));
    std::vector<TruncatedSeries> x;
    x.reserve(b.x().size());
    for (const auto& yi : b.x()) x.push_back(ts_compose(yi, a.x()));
    return RiordanBasis(std::move(g), std::move(x));
}

RiordanBasis riordan_inverse(const RiordanBasis& a) {
    std::vector<TruncatedSeries> xbar = ts_comp_inverse(a.x());
    TruncatedSeries g = ts_recip(ts_compose(a.g(), xbar));
    return RiordanBasis(std::move(g), std::move(xbar));
}

}  // namespace mvpascal
