#include "mvpascal/expr.hpp"

#include <cctype>

#include "mvpascal/errors.hpp"

namespace mvpascal {

namespace {

// Recursive descent over the raw text; whitespace is skipped between
// tokens. Positions in errors are 0-based offsets.
class Parser {
  public:
    Parser(const std::string& text, int nvars, int cap)
        : text_(text), nvars_(nvars), cap_(cap) {}

    TruncatedSeries run() {
        TruncatedSeries value = parse_expr();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) +
                                 "' at position " + std::to_string(pos_),
                             pos_);
        return value;
    }

  private:
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    unsigned long parse_nat() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError(
                "expected integer at position " + std::to_string(start), start);
        return std::stoul(text_.substr(start, pos_ - start));
    }

    TruncatedSeries parse_expr() {
        TruncatedSeries value = parse_term();
        while (true) {
            if (eat('+'))
                value = ts_add(value, parse_term());
            else if (eat('-'))
                value = ts_sub(value, parse_term());
            else
                return value;
        }
    }

    TruncatedSeries parse_term() {
        TruncatedSeries value = parse_factor();
        while (true) {
            if (eat('*')) {
                value = ts_mul(value, parse_factor());
            } else if (eat('/')) {
                std::size_t at = pos_;
                TruncatedSeries den = parse_factor();
                if (den.constant_term() == 0)
                    throw NonUnitError(
                        "division by a non-unit series at position " +
                        std::to_string(at));
                value = ts_mul(value, ts_recip(den));
            } else {
                return value;
            }
        }
    }

    TruncatedSeries parse_factor() {
        TruncatedSeries base = parse_base();
        if (eat('^')) {
            unsigned long e = parse_nat();
            return ts_pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    TruncatedSeries parse_base() {
        skip_space();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of expression", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            TruncatedSeries value = parse_expr();
            if (!eat(')'))
                throw ParseError("expected ')' at position " + std::to_string(pos_),
                                 pos_);
            return value;
        }
        if (c == '-') {
            ++pos_;
            return ts_scale(parse_base(), Rat(-1));
        }
        if (c == 'z') {
            std::size_t at = pos_;
            ++pos_;
            unsigned long idx = parse_nat();
            if (idx < 1 || idx > static_cast<unsigned long>(nvars_))
                throw ParseError("variable z" + std::to_string(idx) +
                                     " out of range at position " +
                                     std::to_string(at),
                                 at);
            return TruncatedSeries::variable(nvars_, cap_,
                                             static_cast<int>(idx) - 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long v = parse_nat();
            return TruncatedSeries::constant(nvars_, cap_, Rat(static_cast<unsigned long>(v)));
        }
        throw ParseError("unexpected character '" + std::string(1, c) +
                             "' at position " + std::to_string(pos_),
                         pos_);
    }

    const std::string& text_;
    int nvars_;
    int cap_;
    std::size_t pos_ = 0;
};

}  // namespace

TruncatedSeries parse_rational_expr(const std::string& text, int nvars, int cap) {
    return Parser(text, nvars, cap).run();
}

}  // namespace mvpascal
