#include "mvpascal/numbers.hpp"

#include <cctype>

#include "mvpascal/errors.hpp"

namespace mvpascal {

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int int_pow(long base, unsigned long exp) {
    Int b(base);
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_string(const std::string& s) {
    std::string num = s;
    std::string den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("malformed rational '" + s + "'");
    Int n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace mvpascal
