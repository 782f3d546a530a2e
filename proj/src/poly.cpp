#include "mvpascal/poly.hpp"

#include <cassert>
#include <ostream>

#include "mvpascal/errors.hpp"

namespace mvpascal {

Polynomial Polynomial::zero(int nvars) {
    if (nvars <= 0) throw DimensionError("polynomial needs positive nvars");
    Polynomial p;
    p.nvars_ = nvars;
    return p;
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
    Polynomial p = zero(nvars);
    if (c != 0) p.terms_.emplace(MultiIndex::zeros(nvars), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int slot) {
    Polynomial p = zero(nvars);
    if (slot < 0 || slot >= nvars)
        throw DimensionError("variable slot out of range");
    p.terms_.emplace(MultiIndex::unit(nvars, slot), Rat(1));
    return p;
}

Polynomial Polynomial::monomial(const MultiIndex& exps, const Rat& c) {
    Polynomial p = zero(exps.dim());
    if (c != 0) p.terms_.emplace(exps, c);
    return p;
}

Rat Polynomial::coeff(const MultiIndex& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    // Grevlex sorts by total degree first, so the last term is maximal.
    return terms_.rbegin()->first.total();
}

Rat Polynomial::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionError("evaluation point has wrong length");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int j = 0; j < nvars_; ++j)
            for (int v = 0; v < e[j]; ++v) term *= point[static_cast<std::size_t>(j)];
        total += term;
    }
    return total;
}

void Polynomial::add_term(const MultiIndex& exps, const Rat& c) {
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else if (c == 0) {
        terms_.erase(it);
    }
}

void Polynomial::require_same_ring(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionError("polynomials live in different rings: " +
                             std::to_string(nvars_) + " vs " +
                             std::to_string(o.nvars_) + " variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
    return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    Polynomial r = Polynomial::zero(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea.plus(eb), Rat(ca * cb));
    return r;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r = Polynomial::zero(a.nvars_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, Rat(-c));
    return r;
}

Polynomial operator*(const Polynomial& a, const Rat& c) {
    Polynomial r = Polynomial::zero(a.nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : a.terms_) r.terms_.emplace(e, Rat(k * c));
    return r;
}

Polynomial operator*(const Rat& c, const Polynomial& a) { return a * c; }

Polynomial operator*(const Polynomial& a, const Int& c) { return a * Rat(c); }

Polynomial operator*(const Int& c, const Polynomial& a) { return a * Rat(c); }

bool Polynomial::operator==(const Polynomial& o) const {
    require_same_ring(o);
    return terms_ == o.terms_;
}

namespace {

// One term without its sign, e.g. "2*x0*x2" or "x2^2" or "5".
std::string term_str(const Rat& abs_coeff, const MultiIndex& e) {
    std::string vars;
    for (int j = 0; j < e.dim(); ++j) {
        if (e[j] == 0) continue;
        if (!vars.empty()) vars += '*';
        vars += "x" + std::to_string(j);
        if (e[j] > 1) vars += "^" + std::to_string(e[j]);
    }
    if (vars.empty()) return to_string(abs_coeff);
    if (abs_coeff == 1) return vars;
    return to_string(abs_coeff) + "*" + vars;
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative = c < 0;
        Rat mag = negative ? Rat(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += term_str(mag, e);
    }
    return out;
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial result = Polynomial::constant(p.nvars(), 1);
    Polynomial base = p;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

Polynomial monomial_power(std::span<const Polynomial> base, const MultiIndex& k) {
    if (static_cast<int>(base.size()) != k.dim())
        throw DimensionError("base list length must match index dimension");
    int nvars = base[0].nvars();
    for (const auto& b : base)
        if (b.nvars() != nvars)
            throw DimensionError("base polynomials live in different rings");
    Polynomial r = Polynomial::constant(nvars, 1);
    for (int j = 0; j < k.dim(); ++j)
        if (k[j] > 0) r = r * pow(base[static_cast<std::size_t>(j)],
                                  static_cast<unsigned>(k[j]));
    return r;
}

Polynomial hasse_derivative(const Polynomial& p, const MultiIndex& k) {
    if (k.dim() != p.nvars())
        throw DimensionError("derivative index must match the variable list");
    Polynomial r = Polynomial::zero(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (!partial_leq(k, e)) continue;
        r += Polynomial::monomial(e.minus(k), Rat(multi_binom(e, k)) * c);
    }
    return r;
}

MultiIndex embed_exponent(const MultiIndex& k) {
    std::vector<int> e(static_cast<std::size_t>(k.dim()) + 1, 0);
    for (int j = 0; j < k.dim(); ++j) e[static_cast<std::size_t>(j) + 1] = k[j];
    return MultiIndex(std::move(e));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
}

}  // namespace mvpascal
