#include "turanc/formula.hpp"

#include <cctype>
#include <numeric>
#include <vector>

#include "turanc/error.hpp"

namespace turanc {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error("division by zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = g ? num / g : 0;
    den_ = g ? den / g : 1;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const { return -Rational(-num_, den_).floor(); }

std::string Rational::to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(Rational a, Rational b) { return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_}; }
Rational operator-(Rational a, Rational b) { return a + (-b); }
Rational operator*(Rational a, Rational b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
Rational operator/(Rational a, Rational b) {
    if (b.num_ == 0) throw Error("division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

namespace {

class FormulaParser {
public:
    FormulaParser(std::string_view text, const std::map<std::string, std::int64_t>& vars)
        : text_(text), vars_(vars) {}

    Rational parse() {
        Rational v = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_primary(char c) const {
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    Rational expr() {
        Rational v = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            v = c == '+' ? v + term() : v - term();
        }
        return v;
    }

    Rational term() {
        Rational v = unary();
        for (char c = peek();; c = peek()) {
            if (c == '*' || c == '/') {
                ++pos_;
                v = c == '*' ? v * unary() : v / unary();
            } else if (starts_primary(c)) {
                v = v * unary();
            } else {
                return v;
            }
        }
    }

    Rational unary() {
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        return primary();
    }

    Rational primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Rational v = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_++] - '0');
                if (v > (std::int64_t{1} << 40)) fail("number too large");
            }
            return Rational(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            if (peek() == '(') return call(name, start);
            const auto it = vars_.find(name);
            if (it == vars_.end()) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Rational(it->second);
        }
        fail(c == '\0' ? "unexpected end of formula" : "unexpected '" + std::string(1, c) + "'");
    }

    Rational call(const std::string& name, std::size_t start) {
        ++pos_;  // '('
        std::vector<Rational> args{expr()};
        while (peek() == ',') {
            ++pos_;
            args.push_back(expr());
        }
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        auto arity = [&](std::size_t k) {
            if (args.size() != k) {
                pos_ = start;
                fail(name + " takes " + std::to_string(k) + " argument(s)");
            }
        };
        if (name == "floor") {
            arity(1);
            return Rational(args[0].floor());
        }
        if (name == "ceil") {
            arity(1);
            return Rational(args[0].ceil());
        }
        if (name == "min" || name == "max") {
            arity(2);
            return (name == "min") == (args[0] < args[1]) ? args[0] : args[1];
        }
        if (name == "binom") {
            arity(2);
            if (!args[0].is_integer() || !args[1].is_integer()) throw Error("binom needs integer arguments");
            const std::int64_t a = args[0].num();
            const std::int64_t b = args[1].num();
            if (b < 0 || a < b) return Rational(0);
            std::int64_t r = 1;
            for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
            return Rational(r);
        }
        pos_ = start;
        fail("unknown function '" + name + "'");
    }

    std::string_view text_;
    const std::map<std::string, std::int64_t>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Rational evaluate_formula(std::string_view formula, const std::map<std::string, std::int64_t>& vars) {
    return FormulaParser(formula, vars).parse();
}

}  // namespace turanc
