#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace turanc {

/// Exact fraction with a positive denominator, always reduced.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    std::int64_t floor() const;
    std::int64_t ceil() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    /// "a" or "a/b".
    std::string to_string() const;

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend Rational operator/(Rational a, Rational b);
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Evaluates an arithmetic formula over rationals. Supports + - * /, parentheses,
/// implicit multiplication ("2n", "3(n-1)"), integer literals, variables from
/// `vars`, and floor(x), ceil(x), binom(a,b), min(a,b), max(a,b).
/// Throws ParseError for malformed input and Error for bad values.
Rational evaluate_formula(std::string_view formula, const std::map<std::string, std::int64_t>& vars);

}  // namespace turanc
