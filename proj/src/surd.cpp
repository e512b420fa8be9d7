#include "subduction/surd.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace subduction {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < -static_cast<i128>(INT64_MAX)) {
        throw std::overflow_error("rational arithmetic exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make_reduced(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return {narrow(n), narrow(d)};
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (n == INT64_MIN || d == INT64_MIN) throw std::overflow_error("rational component out of range");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw std::domain_error("reciprocal of zero");
    return {den_, num_};
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == o.den_) return *this = make_reduced(static_cast<i128>(num_) + o.num_, den_);
    i128 g = std::gcd(den_, o.den_);
    i128 n = static_cast<i128>(num_) * (o.den_ / g) + static_cast<i128>(o.num_) * (den_ / g);
    i128 d = static_cast<i128>(den_ / g) * o.den_;
    return *this = make_reduced(n, d);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    // Cross-cancel first so the intermediate stays small.
    std::int64_t g1 = std::gcd(num_, o.den_);
    std::int64_t g2 = std::gcd(o.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    return *this = make_reduced(n, d);
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.reciprocal(); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    try {
        std::size_t used = 0;
        std::int64_t n = std::stoll(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash)) throw std::invalid_argument(s);
        if (slash == std::string::npos) return {n};
        std::string rest = s.substr(slash + 1);
        std::int64_t d = std::stoll(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(s);
        return {n, d};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
}

std::int64_t square_free_part(std::int64_t n, std::int64_t& k) {
    if (n < 0) throw std::domain_error("square root of a negative number");
    k = 1;
    if (n == 0) return 0;
    std::int64_t s = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) k *= p;
        if (e % 2 == 1) s *= p;
    }
    return s * n;
}

SurdSum::SurdSum(const Rational& r) {
    if (!r.is_zero()) terms_.push_back({1, r});
}

SurdSum SurdSum::term(const Rational& c, std::int64_t radicand) {
    std::int64_t k = 1;
    std::int64_t s = square_free_part(radicand, k);
    SurdSum out;
    if (s == 0 || c.is_zero()) return out;
    out.terms_.push_back({s, c * Rational(k)});
    return out;
}

Rational SurdSum::as_rational() const {
    if (!is_rational()) throw std::domain_error("value is irrational: " + to_string());
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Rational SurdSum::rational_part() const {
    if (!terms_.empty() && terms_[0].radicand == 1) return terms_[0].coeff;
    return {0};
}

void SurdSum::add_term(std::int64_t radicand, const Rational& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                               [](const Term& t, std::int64_t r) { return t.radicand < r; });
    if (it != terms_.end() && it->radicand == radicand) {
        it->coeff += c;
        if (it->coeff.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, Term{radicand, c});
    }
}

SurdSum SurdSum::operator-() const {
    SurdSum out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
    for (const auto& t : o.terms_) add_term(t.radicand, t.coeff);
    return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
    for (const auto& t : o.terms_) add_term(t.radicand, -t.coeff);
    return *this;
}

namespace {

// sqrt(a) * sqrt(b) = g * sqrt(a b / g^2) for square-free a, b with g = gcd(a, b).
void radical_product(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& r) {
    g = std::gcd(a, b);
    i128 prod = static_cast<i128>(a / g) * (b / g);
    r = narrow(prod);
}

}  // namespace

void SurdSum::add_scaled(const SurdSum& x, const SurdSum& c) {
    for (const auto& tx : x.terms_) {
        for (const auto& tc : c.terms_) {
            std::int64_t g = 1;
            std::int64_t r = 1;
            radical_product(tx.radicand, tc.radicand, g, r);
            add_term(r, tx.coeff * tc.coeff * Rational(g));
        }
    }
}

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
    SurdSum out;
    out.add_scaled(a, b);
    return out;
}

SurdSum& SurdSum::operator*=(const SurdSum& o) { return *this = *this * o; }

SurdSum& SurdSum::operator/=(const Rational& r) {
    if (r.is_zero()) throw std::domain_error("division by zero");
    for (auto& t : terms_) t.coeff /= r;
    return *this;
}

SurdSum& SurdSum::operator/=(const SurdSum& o) {
    if (o.terms_.size() != 1) {
        throw std::domain_error("division only by a single-term surd is supported");
    }
    // 1 / (c sqrt(r)) = sqrt(r) / (c r)
    const Term& t = o.terms_[0];
    SurdSum inv = SurdSum::term(Rational(1) / (t.coeff * Rational(t.radicand)), t.radicand);
    return *this = *this * inv;
}

double SurdSum::to_double() const {
    double v = 0.0;
    for (const auto& t : terms_) v += t.coeff.to_double() * std::sqrt(static_cast<double>(t.radicand));
    return v;
}

std::string SurdSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        std::string c = t.coeff.to_string();
        if (i > 0) {
            if (t.coeff.sign() < 0) {
                out += " - ";
                c = (-t.coeff).to_string();
            } else {
                out += " + ";
            }
        }
        out += c;
        if (t.radicand != 1) out += "*sqrt(" + std::to_string(t.radicand) + ")";
    }
    return out;
}

SurdSum SurdSum::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("empty surd");
    SurdSum out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string tok = s.substr(pos, end - pos);
        pos = end;
        Rational c(1);
        std::int64_t rad = 1;
        auto star = tok.find("sqrt(");
        if (star != std::string::npos) {
            std::string coeff = tok.substr(0, star);
            if (!coeff.empty()) {
                if (coeff.back() != '*') throw std::invalid_argument("malformed surd term: " + tok);
                coeff.pop_back();
                c = Rational::parse(coeff);
            }
            auto close = tok.find(')', star);
            if (close == std::string::npos || close + 1 != tok.size()) {
                throw std::invalid_argument("malformed surd term: " + tok);
            }
            rad = Rational::parse(tok.substr(star + 5, close - star - 5)).num();
        } else {
            c = Rational::parse(tok);
        }
        out += SurdSum::term(c * Rational(sign), rad);
    }
    return out;
}

SurdSum surd_sqrt(const Rational& x) {
    if (x.sign() < 0) throw std::domain_error("square root of a negative rational");
    if (x.is_zero()) return {};
    // sqrt(p/q) = sqrt(p q) / q
    i128 pq = static_cast<i128>(x.num()) * x.den();
    std::int64_t k = 1;
    std::int64_t s = square_free_part(narrow(pq), k);
    return SurdSum::term(Rational(k, x.den()), s);
}

}  // namespace subduction
