#pragma once

// Shared generators and independent oracle routes for the test suites. The
// oracles here deliberately avoid the code paths they check: Schur-basis
// products are reduced from raw polynomial multiplication, characteristic
// polynomials are rebuilt by evaluation and Lagrange interpolation, and tiny
// fields are swept exhaustively.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linecong/bracket.hpp"
#include "linecong/coincidence.hpp"
#include "linecong/congruence.hpp"
#include "linecong/matrix.hpp"
#include "linecong/poly.hpp"
#include "linecong/rational.hpp"
#include "linecong/rng.hpp"
#include "linecong/schubert.hpp"

namespace testutil {

using namespace linecong;

inline Matrix<Fp> random_fp_matrix(std::size_t rows, std::size_t cols, std::uint64_t p,
                                   Rng& rng) {
    Matrix<Fp> m(rows, cols, Fp(0, p));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Fp(rng.below(p), p);
    return m;
}

inline Matrix<Rational> random_rational_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix<Rational> m(rows, cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(rng.signed_band(9));
    return m;
}

// Monic polynomial through deg+1 sample points by Lagrange interpolation.
inline Polynomial<Fp> lagrange_interpolate(const std::vector<std::pair<Fp, Fp>>& points) {
    const Fp zero = zero_like(points[0].first);
    Polynomial<Fp> acc(zero);
    for (std::size_t i = 0; i < points.size(); ++i) {
        Polynomial<Fp> basis = Polynomial<Fp>::constant(one_like(zero));
        Fp denom = one_like(zero);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            basis = basis * Polynomial<Fp>({-points[j].first, one_like(zero)}, zero);
            denom *= points[i].first - points[j].first;
        }
        acc += basis.scaled(points[i].second / denom);
    }
    return acc;
}

// Independent product route for Chow classes: expand both factors as dense
// symmetric polynomials in the Chern roots, multiply the polynomials, peel
// the Schur expansion, and drop everything outside the 2 x (m-2) box.
inline ChowClass oracle_multiply(const ChowClass& x, const ChowClass& y) {
    const int m = x.ambient();
    unsigned box = 0;
    for (const auto& [ab, c] : x.terms()) box = std::max(box, static_cast<unsigned>(ab.first));
    for (const auto& [ab, c] : y.terms()) box = std::max(box, static_cast<unsigned>(ab.first));
    box = 2 * box + 2;
    SymPoly2 px(box), py(box);
    for (const auto& [ab, c] : x.terms()) {
        SymPoly2 s = SymPoly2::schur(ab.first, ab.second, box);
        for (unsigned i = 0; i <= box; ++i)
            for (unsigned j = 0; j <= box; ++j) px.at(i, j) += c * s.at(i, j);
    }
    for (const auto& [ab, c] : y.terms()) {
        SymPoly2 s = SymPoly2::schur(ab.first, ab.second, box);
        for (unsigned i = 0; i <= box; ++i)
            for (unsigned j = 0; j <= box; ++j) py.at(i, j) += c * s.at(i, j);
    }
    return to_chow(schur_expand(px * py), m);
}

inline ChowClass random_chow(int m, Rng& rng, int terms = 3) {
    ChowClass c(m);
    for (int t = 0; t < terms; ++t) {
        int a = static_cast<int>(rng.below(m - 1));
        int b = static_cast<int>(rng.below(a + 1));
        long long coeff = rng.signed_band(5);
        if (coeff != 0) c.add_term(a, b, coeff);
    }
    return c;
}

// All nonzero vectors of F_q^dim (q a small prime).
inline std::vector<Vec<Fp>> all_nonzero_vectors(std::uint64_t q, std::size_t dim) {
    std::vector<Vec<Fp>> out;
    std::vector<std::uint64_t> digits(dim, 0);
    for (;;) {
        std::size_t pos = 0;
        while (pos < dim && ++digits[pos] == q) digits[pos++] = 0;
        if (pos == dim) break;
        Vec<Fp> v;
        for (std::uint64_t d : digits) v.push_back(Fp(d, q));
        out.push_back(std::move(v));
    }
    return out;
}

// All 2-planes of F_q^dim, one canonical representative each.
inline std::map<std::string, Plane<Fp>> all_planes(std::uint64_t q, std::size_t dim) {
    std::map<std::string, Plane<Fp>> planes;
    auto vecs = all_nonzero_vectors(q, dim);
    for (const auto& a : vecs)
        for (const auto& b : vecs) {
            Matrix<Fp> m(2, dim, Fp(0, q));
            for (std::size_t i = 0; i < dim; ++i) {
                m.at(0, i) = a[i];
                m.at(1, i) = b[i];
            }
            if (rank(m) != 2) continue;
            Plane<Fp> pl(a, b);
            planes.emplace(coords_string(pl.canonical()), pl);
        }
    return planes;
}

inline std::string plane_key(const Plane<Fp>& pl) { return coords_string(pl.canonical()); }

}  // namespace testutil
