#pragma once

#include <stdexcept>
#include <vector>

#include "linecong/rational.hpp"

namespace linecong {

// One term of a bivariate polynomial: coeff * x^i * y^j.
struct BivarTerm {
    unsigned i;
    unsigned j;
    Rational coeff;
};

// Truncated bivariate power series over Q: all monomials x^i y^j with
// i + j <= bound. Arithmetic is closed under the truncation; nothing beyond
// the bound is ever stored.
class BivariateSeries {
  public:
    explicit BivariateSeries(unsigned bound)
        : bound_(bound), c_((bound + 1) * (bound + 2) / 2, Rational(0)) {}

    static BivariateSeries from_terms(const std::vector<BivarTerm>& terms, unsigned bound) {
        BivariateSeries s(bound);
        for (const auto& t : terms)
            if (t.i + t.j <= bound) s.at(t.i, t.j) += t.coeff;
        return s;
    }

    unsigned bound() const { return bound_; }

    const Rational& coeff(unsigned i, unsigned j) const {
        if (i + j > bound_) throw std::out_of_range("coefficient beyond truncation degree");
        return c_[index(i, j)];
    }
    Rational& at(unsigned i, unsigned j) { return c_[index(i, j)]; }

    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
        return a.bound_ == b.bound_ && a.c_ == b.c_;
    }

    BivariateSeries operator+(const BivariateSeries& o) const {
        check(o);
        BivariateSeries r = *this;
        for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
        return r;
    }

    BivariateSeries operator-(const BivariateSeries& o) const {
        check(o);
        BivariateSeries r = *this;
        for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] -= o.c_[k];
        return r;
    }

    BivariateSeries operator*(const BivariateSeries& o) const {
        check(o);
        BivariateSeries r(bound_);
        for (unsigned d1 = 0; d1 <= bound_; ++d1)
            for (unsigned i1 = 0; i1 <= d1; ++i1) {
                const Rational& a = coeff(i1, d1 - i1);
                if (a.is_zero()) continue;
                for (unsigned d2 = 0; d1 + d2 <= bound_; ++d2)
                    for (unsigned i2 = 0; i2 <= d2; ++i2) {
                        const Rational& b = o.coeff(i2, d2 - i2);
                        if (b.is_zero()) continue;
                        r.at(i1 + i2, d1 + d2 - i1 - i2) += a * b;
                    }
            }
        return r;
    }

    // Multiplicative inverse; requires a nonzero constant term.
    BivariateSeries inverse() const {
        const Rational& c0 = coeff(0, 0);
        if (c0.is_zero())
            throw std::domain_error("series with zero constant term is not invertible");
        BivariateSeries inv(bound_);
        inv.at(0, 0) = c0.inverse();
        // Solve inv * this = 1 degree by degree.
        for (unsigned d = 1; d <= bound_; ++d)
            for (unsigned i = 0; i <= d; ++i) {
                unsigned j = d - i;
                Rational acc(0);
                // sum over proper sub-monomials (a,b) < (i,j) of inv(a,b)*this(i-a,j-b)
                for (unsigned a = 0; a <= i; ++a)
                    for (unsigned b = 0; b <= j; ++b) {
                        if (a == i && b == j) continue;
                        const Rational& u = inv.coeff(a, b);
                        if (u.is_zero()) continue;
                        acc += u * coeff(i - a, j - b);
                    }
                inv.at(i, j) = -acc / c0;
            }
        return inv;
    }

  private:
    // Row-major over total degree d = i + j, offset by i.
    std::size_t index(unsigned i, unsigned j) const {
        unsigned d = i + j;
        return static_cast<std::size_t>(d) * (d + 1) / 2 + i;
    }
    void check(const BivariateSeries& o) const {
        if (bound_ != o.bound_) throw std::invalid_argument("mismatched truncation bounds");
    }
    unsigned bound_;
    std::vector<Rational> c_;
};

// Taylor expansion of num/den at the origin up to total degree bound. The
// denominator must have a nonzero constant term.
inline BivariateSeries series_expand(const std::vector<BivarTerm>& num,
                                     const std::vector<BivarTerm>& den, unsigned bound) {
    BivariateSeries n = BivariateSeries::from_terms(num, bound);
    BivariateSeries d = BivariateSeries::from_terms(den, bound);
    return n * d.inverse();
}

}  // namespace linecong
