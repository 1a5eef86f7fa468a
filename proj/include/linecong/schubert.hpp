#pragma once

// Chow ring of the Grassmannian G(2,m) in the Schubert basis.
//
// Model: symmetric polynomials in the two Chern roots x1, x2 of the dual
// tautological bundle, modulo the ideal generated by the complete homogeneous
// symmetric polynomials h_{m-1} and h_m. The Schubert class sigma_{a,b}
// corresponds to the two-row Schur polynomial s_{a,b}; the quotient has basis
// {sigma_{a,b} : m-2 >= a >= b >= 0}, and s_{a,b} with a > m-2 lies in the
// ideal (Jacobi-Trudi: s_{a,b} = h_a h_b - h_{a+1} h_{b-1}), so reduction
// simply drops such terms.
//
// Products are computed with the Pieri rule via the factorization
// sigma_{c,d} = sigma_{1,1}^d * sigma_{c-d}; Chern classes of tangent and
// twisted quotient bundles come from the splitting principle with the
// quotient-bundle roots eliminated through c(Q) = 1/c(U).

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linecong/rational.hpp"
#include "linecong/series.hpp"

namespace linecong {

inline Int catalan(long k) {
    if (k < 0) throw std::invalid_argument("catalan index must be non-negative");
    return binomial(2 * k, k) / (k + 1);
}

class ChowClass {
  public:
    explicit ChowClass(int ambient_m) : m_(ambient_m) {
        if (m_ < 3) throw std::invalid_argument("ambient G(2,m) needs m >= 3");
    }

    static ChowClass sigma(int m, int a, int b, Int coeff = 1) {
        ChowClass c(m);
        c.add_term(a, b, coeff);
        return c;
    }
    static ChowClass unit(int m) { return sigma(m, 0, 0); }
    static ChowClass hyperplane(int m) { return sigma(m, 1, 0); }

    int ambient() const { return m_; }
    const std::map<std::pair<int, int>, Int>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(int a, int b, const Int& coeff) {
        if (b < 0 || a < b || a > m_ - 2)
            throw std::invalid_argument("partition out of range for G(2,m)");
        if (coeff == 0) return;
        auto [it, inserted] = t_.emplace(std::make_pair(a, b), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) t_.erase(it);
        }
    }

    Int coeff(int a, int b) const {
        auto it = t_.find({a, b});
        return it == t_.end() ? Int(0) : it->second;
    }

    ChowClass graded_piece(int degree) const {
        ChowClass r(m_);
        for (const auto& [ab, c] : t_)
            if (ab.first + ab.second == degree) r.add_term(ab.first, ab.second, c);
        return r;
    }

    ChowClass& operator+=(const ChowClass& o) {
        check(o);
        for (const auto& [ab, c] : o.t_) add_term(ab.first, ab.second, c);
        return *this;
    }
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }

    ChowClass scaled(const Int& s) const {
        ChowClass r(m_);
        if (s == 0) return r;
        for (const auto& [ab, c] : t_) r.add_term(ab.first, ab.second, c * s);
        return r;
    }

    friend bool operator==(const ChowClass& a, const ChowClass& b) {
        return a.m_ == b.m_ && a.t_ == b.t_;
    }
    friend bool operator!=(const ChowClass& a, const ChowClass& b) { return !(a == b); }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [ab, c] : t_) {
            if (!first) os << " + ";
            first = false;
            os << c << "*s(" << ab.first << "," << ab.second << ")";
        }
        return os.str();
    }

    void check(const ChowClass& o) const {
        if (m_ != o.m_) throw std::invalid_argument("classes live on different Grassmannians");
    }

  private:
    int m_;
    std::map<std::pair<int, int>, Int> t_;
};

namespace detail {

// alpha * sigma_k (Pieri: add a horizontal k-strip inside the 2 x (m-2) box).
inline ChowClass pieri_h(const ChowClass& alpha, int k) {
    if (k < 0) throw std::invalid_argument("negative Pieri index");
    ChowClass out(alpha.ambient());
    const int amax = alpha.ambient() - 2;
    for (const auto& [ab, c] : alpha.terms()) {
        const auto [a, b] = ab;
        for (int l2 = b; l2 <= std::min(a, b + k); ++l2) {
            int l1 = a + b + k - l2;
            if (l1 <= amax) out.add_term(l1, l2, c);
        }
    }
    return out;
}

// alpha * sigma_{1,1}.
inline ChowClass pieri_e2(const ChowClass& alpha) {
    ChowClass out(alpha.ambient());
    const int amax = alpha.ambient() - 2;
    for (const auto& [ab, c] : alpha.terms())
        if (ab.first + 1 <= amax) out.add_term(ab.first + 1, ab.second + 1, c);
    return out;
}

}  // namespace detail

inline ChowClass multiply(const ChowClass& alpha, const ChowClass& beta) {
    alpha.check(beta);
    ChowClass out(alpha.ambient());
    for (const auto& [cd, coeff] : beta.terms()) {
        ChowClass g = alpha;
        for (int i = 0; i < cd.second; ++i) g = detail::pieri_e2(g);
        g = detail::pieri_h(g, cd.first - cd.second);
        out += g.scaled(coeff);
    }
    return out;
}

inline ChowClass power(const ChowClass& alpha, int e) {
    ChowClass r = ChowClass::unit(alpha.ambient());
    for (int i = 0; i < e; ++i) r = multiply(r, alpha);
    return r;
}

// Degree functional: coefficient of the point class sigma_{m-2,m-2}.
inline Int integrate(const ChowClass& alpha) {
    return alpha.coeff(alpha.ambient() - 2, alpha.ambient() - 2);
}

// ---------------------------------------------------------------------------
// Dense symmetric polynomials in the two Chern roots, and their expansion in
// the Schur basis. This is the reduction backend for the Chern classes (and
// the brute-force oracle route in the tests).

class SymPoly2 {
  public:
    explicit SymPoly2(unsigned max_deg)
        : d_(max_deg), c_((max_deg + 1) * (max_deg + 1), Int(0)) {}

    unsigned max_deg() const { return d_; }
    Int& at(unsigned i, unsigned j) { return c_[i * (d_ + 1) + j]; }
    const Int& at(unsigned i, unsigned j) const { return c_[i * (d_ + 1) + j]; }
    bool is_zero() const {
        for (const Int& x : c_)
            if (x != 0) return false;
        return true;
    }

    SymPoly2& operator+=(const SymPoly2& o) {
        check(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    SymPoly2& operator-=(const SymPoly2& o) {
        check(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }

    friend SymPoly2 operator*(const SymPoly2& a, const SymPoly2& b) {
        SymPoly2 r(a.d_);
        for (unsigned i1 = 0; i1 <= a.d_; ++i1)
            for (unsigned j1 = 0; j1 <= a.d_; ++j1) {
                const Int& x = a.at(i1, j1);
                if (x == 0) continue;
                for (unsigned i2 = 0; i1 + i2 <= a.d_; ++i2)
                    for (unsigned j2 = 0; j1 + j2 <= a.d_; ++j2) {
                        const Int& y = b.at(i2, j2);
                        if (y == 0) continue;
                        r.at(i1 + i2, j1 + j2) += x * y;
                    }
            }
        return r;
    }

    bool is_symmetric() const {
        for (unsigned i = 0; i <= d_; ++i)
            for (unsigned j = 0; j < i; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    // Two-row Schur polynomial s_{a,b} = x1^a x2^b + x1^{a-1} x2^{b+1} + ...
    static SymPoly2 schur(unsigned a, unsigned b, unsigned max_deg) {
        SymPoly2 r(max_deg);
        for (unsigned l = b; l <= a; ++l) r.at(a + b - l, l) += 1;
        return r;
    }

    // Complete homogeneous h_k = s_{k,0}.
    static SymPoly2 complete_h(unsigned k, unsigned max_deg) { return schur(k, 0, max_deg); }

    // (1 + x1)^e or (1 + x2)^e.
    static SymPoly2 one_plus_var_pow(int var, unsigned e, unsigned max_deg) {
        SymPoly2 r(max_deg);
        for (unsigned k = 0; k <= e && k <= max_deg; ++k) {
            if (var == 0)
                r.at(k, 0) += binomial(e, k);
            else
                r.at(0, k) += binomial(e, k);
        }
        return r;
    }

    // (1 + x1 + x2)^e by the trinomial expansion.
    static SymPoly2 one_plus_sum_pow(unsigned e, unsigned max_deg) {
        SymPoly2 r(max_deg);
        for (unsigned i = 0; i <= e && i <= max_deg; ++i)
            for (unsigned j = 0; i + j <= e && j <= max_deg; ++j)
                r.at(i, j) += binomial(e, i) * binomial(e - i, j);
        return r;
    }

  private:
    void check(const SymPoly2& o) const {
        if (d_ != o.d_) throw std::invalid_argument("mismatched degree bounds");
    }
    unsigned d_;
    std::vector<Int> c_;
};

// Expansion of a symmetric polynomial in the two-row Schur basis, by peeling
// the lex-leading monomial. Exact and unique; throws on asymmetric input.
inline std::map<std::pair<int, int>, Int> schur_expand(SymPoly2 f) {
    if (!f.is_symmetric())
        throw std::invalid_argument("Schur expansion of an asymmetric polynomial");
    std::map<std::pair<int, int>, Int> out;
    const unsigned d = f.max_deg();
    for (;;) {
        bool found = false;
        unsigned li = 0, lj = 0;
        for (unsigned i = d + 1; i-- > 0 && !found;)
            for (unsigned j = d + 1; j-- > 0;)
                if (f.at(i, j) != 0) {
                    li = i;
                    lj = j;
                    found = true;
                    break;
                }
        if (!found) break;
        if (li < lj) throw std::logic_error("peeling reached a non-dominant monomial");
        Int c = f.at(li, lj);
        out[{static_cast<int>(li), static_cast<int>(lj)}] += c;
        SymPoly2 s = SymPoly2::schur(li, lj, d);
        for (unsigned i = 0; i <= d; ++i)
            for (unsigned j = 0; j <= d; ++j)
                if (s.at(i, j) != 0) f.at(i, j) -= c * s.at(i, j);
    }
    return out;
}

// Reduce a polynomial-ring Schur expansion to the quotient ring: terms with
// a > m-2 lie in the ideal and are dropped.
inline ChowClass to_chow(const std::map<std::pair<int, int>, Int>& expansion, int m) {
    ChowClass out(m);
    for (const auto& [ab, c] : expansion)
        if (ab.first <= m - 2) out.add_term(ab.first, ab.second, c);
    return out;
}

// Total Chern class of the tangent bundle TG(2,m) = Hom(U,Q), as one class
// holding every graded piece. In the quotient ring,
//   c(TG) = prod_{i=1,2} sum_{k=0}^{m-2} h_k * (1 + x_i)^{m-2-k}.
inline ChowClass chern_tangent(int m) {
    if (m < 4) throw std::invalid_argument("chern_tangent needs m >= 4");
    const unsigned box = 2 * static_cast<unsigned>(m - 2);
    SymPoly2 f1(box), f2(box);
    for (int k = 0; k <= m - 2; ++k) {
        SymPoly2 hk = SymPoly2::complete_h(k, box);
        f1 += hk * SymPoly2::one_plus_var_pow(0, m - 2 - k, box);
        f2 += hk * SymPoly2::one_plus_var_pow(1, m - 2 - k, box);
    }
    return to_chow(schur_expand(f1 * f2), m);
}

// Total Chern class of Q tensor det(U*) on G(2,m):
//   c = sum_{k=0}^{m-2} h_k * (1 + x1 + x2)^{m-2-k}.
inline ChowClass chern_quotient_twisted(int m) {
    if (m < 4) throw std::invalid_argument("chern_quotient_twisted needs m >= 4");
    const unsigned box = 2 * static_cast<unsigned>(m - 2);
    SymPoly2 f(box);
    for (int k = 0; k <= m - 2; ++k)
        f += SymPoly2::complete_h(k, box) * SymPoly2::one_plus_sum_pow(m - 2 - k, box);
    return to_chow(schur_expand(f), m);
}

// ---------------------------------------------------------------------------
// Enumerative invariants of the n-dimensional linear section of G(2,n+3).

// Euler characteristic via Gauss-Bonnet on the ambient Grassmannian:
//   e = integral over G(2,n+3) of [c(TG) * (1+h)^{-(n+2)}]_n * h^{n+2}.
inline Int euler_schubert(int n) {
    if (n < 2) throw std::invalid_argument("euler_schubert needs n >= 2");
    const int m = n + 3;
    ChowClass tg = chern_tangent(m);
    ChowClass h = ChowClass::hyperplane(m);
    std::vector<ChowClass> h_pow;
    h_pow.push_back(ChowClass::unit(m));
    for (int j = 1; j <= n + 2; ++j) h_pow.push_back(multiply(h_pow.back(), h));
    ChowClass cn(m);
    for (int d = 0; d <= n; ++d) {
        int j = n - d;  // take h^j from the truncated expansion of (1+h)^{-(n+2)}
        Int coef = binomial(n + 1 + j, j);
        if (j % 2 == 1) coef = -coef;
        cn += multiply(tg.graded_piece(d), h_pow[j]).scaled(coef);
    }
    return integrate(multiply(cn, h_pow[n + 2]));
}

// Coefficients p_{n,0..n+1} of the even part of the generating function
//   x^{n+2} (1+x)^{-(n+2)} (1+x+y^2)^{n+3} / (1 - x^2 + 4y^2)
// in total degree 2n+2. Any monomial of that degree outside the pattern
// x^{2k} y^{2n+2-2k} must vanish; a nonzero one signals a transcription bug.
inline std::vector<Int> pn_coefficients(int n) {
    if (n < 2) throw std::invalid_argument("pn_coefficients needs n >= 2");
    const unsigned bound = 2 * static_cast<unsigned>(n) + 2;
    BivariateSeries base = BivariateSeries::from_terms(
        {{0, 0, 1}, {1, 0, 1}, {0, 2, 1}}, bound);  // 1 + x + y^2
    BivariateSeries num = BivariateSeries::from_terms({{static_cast<unsigned>(n) + 2, 0, 1}},
                                                      bound);
    for (int i = 0; i < n + 3; ++i) num = num * base;
    BivariateSeries den = BivariateSeries::from_terms({{0, 0, 1}, {1, 0, 1}}, bound);  // 1 + x
    BivariateSeries den_pow = BivariateSeries::from_terms({{0, 0, 1}}, bound);
    for (int i = 0; i < n + 2; ++i) den_pow = den_pow * den;
    den_pow = den_pow * BivariateSeries::from_terms({{0, 0, 1}, {2, 0, -1}, {0, 2, 4}}, bound);
    BivariateSeries q = num * den_pow.inverse();

    for (unsigned i = 0; i <= bound; ++i) {
        if (i % 2 == 0) continue;
        if (!q.coeff(i, bound - i).is_zero())
            throw std::logic_error("off-pattern coefficient in the Euler generating function");
    }
    std::vector<Int> p;
    for (int k = 0; k <= n + 1; ++k)
        p.push_back(q.coeff(2 * k, bound - 2 * k).as_integer());
    return p;
}

inline Int euler_series(int n) {
    std::vector<Int> p = pn_coefficients(n);
    Int e = 0;
    for (int k = 0; k <= n + 1; ++k) e += p[k] * catalan(k);
    return e;
}

// Hodge numbers below the middle degree, forced by Lefschetz:
// h^{p,q} = delta_{p,q} * ceil((p+1)/2) for p+q < n.
inline Int hodge_low(int n, int p, int q) {
    if (p < 0 || q < 0 || p + q >= n)
        throw std::out_of_range("hodge_low is only defined below the middle degree");
    if (p != q) return 0;
    return (p + 2) / 2;
}

// Middle Betti number from the Euler characteristic and the low-degree Hodge
// table (odd Betti numbers below the middle vanish; duality mirrors above).
inline Int middle_betti(int n) {
    if (n < 2) throw std::invalid_argument("middle_betti needs n >= 2");
    Int low = 0;
    for (int p = 0; 2 * p < n; ++p) low += Int((p + 2) / 2);
    Int e = euler_schubert(n);
    Int b = e - 2 * low;
    return n % 2 == 0 ? b : -b;
}

inline Int moduli_dimension(int n) {
    if (n < 2) throw std::invalid_argument("moduli_dimension needs n >= 2");
    return Int(n + 3) * (Int(n) * n - 4) / 2;
}

// Plucker degree of the zero locus of a section of the twisted quotient
// bundle on G(2,n+2): integral of c_n(Q(1)) * sigma_1^n.
inline Int degree_congruence_variety(int n) {
    if (n < 2) throw std::invalid_argument("degree_congruence_variety needs n >= 2");
    const int m = n + 2;
    ChowClass top = chern_quotient_twisted(m).graded_piece(n);
    return integrate(multiply(top, power(ChowClass::hyperplane(m), n)));
}

struct EnumerativeReport {
    int n = 0;
    std::vector<Int> pn_coeffs;
    Int euler_from_series;
    Int euler_from_schubert;
    Int middle_betti_value;
    std::map<std::pair<int, int>, Int> low_hodge;
};

inline EnumerativeReport enumerative_report(int n) {
    EnumerativeReport r;
    r.n = n;
    r.pn_coeffs = pn_coefficients(n);
    r.euler_from_series = 0;
    for (int k = 0; k <= n + 1; ++k) r.euler_from_series += r.pn_coeffs[k] * catalan(k);
    r.euler_from_schubert = euler_schubert(n);
    r.middle_betti_value = middle_betti(n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; p + q < n; ++q) r.low_hodge[{p, q}] = hodge_low(n, p, q);
    return r;
}

}  // namespace linecong
