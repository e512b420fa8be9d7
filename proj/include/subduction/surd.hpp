#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subduction {

// Reduced fraction over 64-bit integers. Every operation checks for
// overflow and throws std::overflow_error rather than wrapping.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return (num_ > 0) - (num_ < 0); }
    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational reciprocal() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;
    static Rational parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Finite sum of rational multiples of square roots of square-free
// positive integers. Terms are kept sorted by radicand with no zero
// coefficients, so equality of values is equality of representations.
class SurdSum {
public:
    struct Term {
        std::int64_t radicand;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    SurdSum() = default;
    SurdSum(const Rational& r);  // NOLINT(google-explicit-constructor)
    SurdSum(std::int64_t n) : SurdSum(Rational(n)) {}  // NOLINT(google-explicit-constructor)

    // c * sqrt(radicand); radicand may be any non-negative integer.
    static SurdSum term(const Rational& c, std::int64_t radicand);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1); }
    // Throws std::domain_error when irrational terms are present.
    Rational as_rational() const;
    Rational rational_part() const;

    SurdSum operator-() const;
    SurdSum& operator+=(const SurdSum& o);
    SurdSum& operator-=(const SurdSum& o);
    SurdSum& operator*=(const SurdSum& o);
    SurdSum& operator/=(const Rational& r);
    // Only single-term divisors are supported.
    SurdSum& operator/=(const SurdSum& o);
    friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
    friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
    friend SurdSum operator*(const SurdSum& a, const SurdSum& b);
    friend SurdSum operator/(SurdSum a, const Rational& b) { return a /= b; }
    friend SurdSum operator/(SurdSum a, const SurdSum& b) { return a /= b; }

    friend bool operator==(const SurdSum&, const SurdSum&) = default;

    // Adds c*x to *this without a temporary.
    void add_scaled(const SurdSum& x, const SurdSum& c);

    double to_double() const;
    std::string to_string() const;
    static SurdSum parse(std::string_view text);

private:
    std::vector<Term> terms_;
    void add_term(std::int64_t radicand, const Rational& c);
};

SurdSum surd_sqrt(const Rational& x);
inline SurdSum surd_add(const SurdSum& a, const SurdSum& b) { return a + b; }
inline SurdSum surd_mul(const SurdSum& a, const SurdSum& b) { return a * b; }
inline SurdSum surd_neg(const SurdSum& a) { return -a; }
inline double surd_to_float(const SurdSum& a) { return a.to_double(); }

// n = k^2 * s with s square-free; returns s and sets k.
std::int64_t square_free_part(std::int64_t n, std::int64_t& k);

}  // namespace subduction
