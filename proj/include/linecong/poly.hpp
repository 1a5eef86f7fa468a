#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linecong/fp.hpp"
#include "linecong/matrix.hpp"

namespace linecong {

// Dense univariate polynomial over an exact field. Coefficients ascending;
// the zero polynomial has an empty coefficient vector and degree "minus
// infinity", reported as std::nullopt.
template <class K>
class Polynomial {
  public:
    explicit Polynomial(const K& exemplar) : zero_(zero_like(exemplar)) {}
    Polynomial(std::vector<K> coeffs, const K& exemplar)
        : zero_(zero_like(exemplar)), c_(std::move(coeffs)) {
        trim();
    }

    static Polynomial x(const K& exemplar) {
        return Polynomial({zero_like(exemplar), one_like(exemplar)}, exemplar);
    }
    static Polynomial constant(const K& value) { return Polynomial({value}, value); }

    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }

    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
    K leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    K operator()(const K& x) const {
        K r = zero_;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (K& a : r.c_) a = -a;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial(a.zero_);
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r), a.zero_);
    }

    Polynomial scaled(const K& s) const {
        Polynomial r = *this;
        for (K& a : r.c_) a = a * s;
        r.trim();
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Euclidean division; divisor must be nonzero.
    friend std::pair<Polynomial, Polynomial> divmod(Polynomial a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        Polynomial q(a.zero_);
        K lead_inv = one_like(b.leading()) / b.leading();
        while (!a.is_zero() && a.c_.size() >= b.c_.size()) {
            std::size_t shift = a.c_.size() - b.c_.size();
            K f = a.leading() * lead_inv;
            if (q.c_.size() < shift + 1) q.c_.resize(shift + 1, a.zero_);
            q.c_[shift] += f;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                a.c_[shift + i] -= f * b.c_[i];
            a.trim();
        }
        q.trim();
        return {q, a};
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial(zero_);
        std::vector<K> r(c_.size() - 1, zero_);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            K scale = zero_;
            for (std::size_t k = 0; k < i; ++k) scale += one_like(zero_);
            r[i - 1] = c_[i] * scale;
        }
        return Polynomial(std::move(r), zero_);
    }

    Polynomial monic() const {
        if (is_zero()) throw std::domain_error("monic form of zero polynomial");
        return scaled(one_like(leading()) / leading());
    }

    std::string str() const {
        std::ostringstream os;
        if (is_zero()) return "0";
        for (std::size_t i = c_.size(); i-- > 0;) {
            os << c_[i];
            if (i > 0) os << "*t^" << i << " + ";
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
    }
    K zero_;
    std::vector<K> c_;
};

template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.monic();
}

template <class K>
bool is_squarefree(const Polynomial<K>& f) {
    if (f.is_zero()) return false;
    Polynomial<K> d = f.derivative();
    if (d.is_zero()) return f.degree() == 0;
    Polynomial<K> g = gcd(f, d);
    return g.degree() == 0;
}

// Monic char poly det(tI - M) as a univariate polynomial.
template <class K>
Polynomial<K> char_poly(const Matrix<K>& m) {
    return Polynomial<K>(char_poly_coeffs(m), m.exemplar());
}

namespace detail {

// x^e mod f by square-and-multiply on polynomials.
inline Polynomial<Fp> pow_mod(const Polynomial<Fp>& base, std::uint64_t e,
                              const Polynomial<Fp>& f) {
    Fp one(1, base.coeff(0).modulus());
    Polynomial<Fp> r = Polynomial<Fp>::constant(one);
    Polynomial<Fp> b = divmod(base, f).second;
    while (e) {
        if (e & 1) r = divmod(r * b, f).second;
        b = divmod(b * b, f).second;
        e >>= 1;
    }
    return r;
}

}  // namespace detail

// All roots of f in F_p, ascending, without multiplicity. Deterministic:
// the splitting offsets a = 0, 1, 2, ... are tried in order, and for small p
// the residues are simply scanned.
inline std::vector<Fp> roots_in_fp(const Polynomial<Fp>& f) {
    if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
    const std::uint64_t p = f.leading().modulus();
    std::vector<Fp> out;
    if (f.degree() == 0) return out;
    if (p <= 4096) {
        for (std::uint64_t v = 0; v < p; ++v) {
            Fp x(v, p);
            if (f(x).is_zero()) out.push_back(x);
        }
        return out;
    }
    const Fp one(1, p);
    Polynomial<Fp> x = Polynomial<Fp>::x(one);
    Polynomial<Fp> g = f.monic();
    // Split off the distinct F_p-rational linear factors: gcd(f, x^p - x).
    Polynomial<Fp> xp = detail::pow_mod(x, p, g);
    Polynomial<Fp> lin = gcd(g, xp - x);
    // Recursively split lin with (x+a)^((p-1)/2) - 1 for a = 0, 1, 2, ...
    std::vector<Polynomial<Fp>> stack = {lin};
    std::uint64_t offset = 0;
    while (!stack.empty()) {
        Polynomial<Fp> h = stack.back();
        stack.pop_back();
        if (!h.degree() || *h.degree() == 0) continue;
        if (*h.degree() == 1) {
            out.push_back(-(h.coeff(0) / h.coeff(1)));
            continue;
        }
        Polynomial<Fp> shifted = Polynomial<Fp>({Fp(offset % p, p), one}, one);
        ++offset;
        Polynomial<Fp> w = detail::pow_mod(shifted, (p - 1) / 2, h) -
                           Polynomial<Fp>::constant(one);
        Polynomial<Fp> d = gcd(h, w);
        if (d.is_zero() || *d.degree() == 0 || d.degree() == h.degree()) {
            stack.push_back(h);  // unlucky offset, try the next one
            continue;
        }
        stack.push_back(d);
        stack.push_back(divmod(h, d).first);
    }
    std::sort(out.begin(), out.end(),
              [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
    return out;
}

// Eigenvalue/eigenvector report for a square matrix over F_p: one entry per
// eigenvalue found in the field, with a basis of its eigenspace.
struct EigenLines {
    std::vector<std::pair<Fp, std::vector<std::vector<Fp>>>> lines;
    std::size_t total_degree_with_multiplicity = 0;
    bool squarefree = false;
};

inline EigenLines eigen_lines(const Matrix<Fp>& m) {
    if (!m.square()) throw dimension_error("eigen decomposition of non-square matrix");
    EigenLines result;
    Polynomial<Fp> cp = char_poly(m);
    result.total_degree_with_multiplicity = m.rows();
    result.squarefree = is_squarefree(cp);
    for (const Fp& lam : roots_in_fp(cp)) {
        Matrix<Fp> shifted =
            m - Matrix<Fp>::identity(m.rows(), one_like(m.exemplar())).scaled(lam);
        result.lines.emplace_back(lam, kernel_basis(shifted));
    }
    return result;
}

}  // namespace linecong
