#include "mvpascal/mindex.hpp"

#include <cassert>
#include <cctype>
#include <numeric>
#include <ostream>

#include "mvpascal/errors.hpp"

namespace mvpascal {

namespace {

void require_same_dim(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim() != b.dim())
        throw DimensionError("multi-index dimensions differ: " +
                             std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> exps) : e_(std::move(exps)) {
    if (e_.empty()) throw DimensionError("multi-index needs positive dimension");
    for (int v : e_)
        if (v < 0)
            throw ParseError("negative multi-index component " + std::to_string(v));
}

MultiIndex MultiIndex::zeros(int n) {
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0));
}

MultiIndex MultiIndex::unit(int n, int slot) {
    assert(0 <= slot && slot < n);
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(slot)] = 1;
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::parse(const std::string& text) {
    std::vector<int> comps;
    std::size_t pos = 0;
    while (true) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw ParseError("expected non-negative integer in multi-index", start);
        comps.push_back(std::stoi(text.substr(start, pos - start)));
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw ParseError("expected ',' in multi-index", pos);
        ++pos;
    }
    return MultiIndex(std::move(comps));
}

int MultiIndex::total() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
}

Int MultiIndex::factorial() const {
    Int r = 1;
    for (int v : e_) r *= mvpascal::factorial(static_cast<unsigned long>(v));
    return r;
}

bool MultiIndex::is_zero() const {
    for (int v : e_)
        if (v != 0) return false;
    return true;
}

MultiIndex MultiIndex::plus(const MultiIndex& o) const {
    require_same_dim(*this, o);
    std::vector<int> r(e_);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += o.e_[j];
    return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::minus(const MultiIndex& o) const {
    require_same_dim(*this, o);
    std::vector<int> r(e_);
    for (std::size_t j = 0; j < r.size(); ++j) {
        r[j] -= o.e_[j];
        if (r[j] < 0) throw Error("multi-index difference has negative component");
    }
    return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::incremented(int slot) const {
    assert(0 <= slot && slot < dim());
    std::vector<int> r(e_);
    ++r[static_cast<std::size_t>(slot)];
    return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::decremented(int slot) const {
    assert(0 <= slot && slot < dim() && e_[static_cast<std::size_t>(slot)] > 0);
    std::vector<int> r(e_);
    --r[static_cast<std::size_t>(slot)];
    return MultiIndex(std::move(r));
}

std::string MultiIndex::str() const {
    std::string s;
    for (std::size_t j = 0; j < e_.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(e_[j]);
    }
    return s;
}

bool MultiIndex::operator==(const MultiIndex& o) const {
    require_same_dim(*this, o);
    return e_ == o.e_;
}

std::strong_ordering grevlex_cmp(const MultiIndex& a, const MultiIndex& b) {
    require_same_dim(a, b);
    if (int cmp = a.total() - b.total(); cmp != 0)
        return cmp < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    // Equal total degree: a precedes b when the right-most nonzero entry of
    // a-b is positive.
    for (int j = a.dim() - 1; j >= 0; --j) {
        int d = a[j] - b[j];
        if (d != 0)
            return d > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool partial_leq(const MultiIndex& a, const MultiIndex& b) {
    require_same_dim(a, b);
    for (int j = 0; j < a.dim(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

Int multi_binom(const MultiIndex& k, const MultiIndex& i) {
    require_same_dim(k, i);
    Int r = 1;
    for (int j = 0; j < k.dim(); ++j) {
        if (i[j] > k[j]) return 0;
        r *= binomial(static_cast<unsigned long>(k[j]),
                      static_cast<unsigned long>(i[j]));
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& k) {
    return os << "(" << k.str() << ")";
}

}  // namespace mvpascal
