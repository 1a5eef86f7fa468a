#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <sstream>
#include <stdexcept>
#include <string>

#include "linecong/rng.hpp"

namespace linecong {

using Int = boost::multiprecision::cpp_int;

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

// Exact rational scalar. Always in lowest terms with positive denominator
// (boost::multiprecision::cpp_rational canonicalizes on every operation).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}  // NOLINT: implicit from integers is intended
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(0) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0)
            v_ = boost::multiprecision::cpp_rational(-num, -den);
        else
            v_ = boost::multiprecision::cpp_rational(num, den);
    }

    bool is_zero() const { return v_ == 0; }
    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    // Exact integer value; throws if not integral.
    Int as_integer() const {
        if (denominator() != 1) throw std::domain_error("rational is not an integer");
        return numerator();
    }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(denominator(), numerator());
    }

    std::string str() const {
        std::ostringstream os;
        os << v_;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

  private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }

// Random integer-valued rational in [-9, 9]; enough spread for genericity.
inline Rational random_element(const Rational&, Rng& rng) {
    return Rational(rng.signed_band(9));
}

// Parses "num" or "num/den". Requires canonical form: den > 1 and
// gcd(|num|, den) = 1; plain integers have no "/1" suffix.
inline Rational parse_rational(const std::string& text) {
    auto parse_int = [](const std::string& s) -> Int {
        if (s.empty()) throw std::invalid_argument("empty integer literal");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("bad integer literal: " + s);
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("bad integer literal: " + s);
        return Int(s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("denominator must be positive: " + text);
    if (den == 1) throw std::invalid_argument("non-canonical rational (use plain integer): " + text);
    if (boost::multiprecision::gcd(boost::multiprecision::abs(num), den) != 1)
        throw std::invalid_argument("non-reduced rational: " + text);
    return Rational(num, den);
}

}  // namespace linecong
