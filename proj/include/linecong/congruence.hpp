#pragma once

// Line-congruence geometry of a bracket w on V = V_{n+2}.
//
// A plane <c,d> is stable under w iff w(c,d) lies in <c,d> iff the class of d
// in V/<c> is an eigenvector of the endomorphism phi_c : x |-> w(c,x) mod <c>.
// That eigenvalue reduction is pure linear algebra and is validated against
// exhaustive enumeration over tiny fields before anything relies on it.
//
// The image of the stable-plane family under <a,b> |-> [w(a,b)] is a
// determinantal hypersurface: c lies on it iff ad_w(c) = w(c,.) is singular
// on V/<c>. Since ad_w(c)c = 0, char_poly(ad_w(c)) = t * char_poly(phi_c),
// and the hypersurface equation is the t^1 coefficient of char_poly(ad_w(c))
// with c symbolic: homogeneous of degree n+1.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "linecong/bracket.hpp"
#include "linecong/errors.hpp"
#include "linecong/matrix.hpp"
#include "linecong/multipoly.hpp"
#include "linecong/poly.hpp"
#include "linecong/rng.hpp"
#include "linecong/wedge.hpp"

namespace linecong {

// Matrix of x |-> w(c, x) in the standard basis; column k is w(c, e_k).
template <class K>
Matrix<K> ad_matrix(const Bracket<K>& w, const Vec<K>& c) {
    const std::size_t d = w.dim();
    if (c.size() != d) throw dimension_error("center length mismatch");
    Matrix<K> m(d, d, zero_like(w.field_exemplar()));
    for (std::size_t k = 0; k < d; ++k) {
        Vec<K> e(d, zero_like(w.field_exemplar()));
        e[k] = one_like(w.field_exemplar());
        Vec<K> col = w(c, e);
        for (std::size_t j = 0; j < d; ++j) m.at(j, k) = col[j];
    }
    return m;
}

// The induced endomorphism phi_c of V/<c> in the complement basis
// {e_i : i != pivot(c)}. The center is normalized so its pivot coordinate is
// 1, making the construction depend only on the projective point [c].
template <class K>
struct CenterEndo {
    Vec<K> center;       // normalized representative
    std::size_t pivot;   // first index with nonzero coordinate
    Matrix<K> matrix;    // (n+1) x (n+1)

    // Lifts quotient coordinates back to V (pivot coordinate zero).
    Vec<K> embed(const Vec<K>& qcoords) const {
        Vec<K> v(center.size(), zero_like(center[0]));
        std::size_t q = 0;
        for (std::size_t i = 0; i < center.size(); ++i) {
            if (i == pivot) continue;
            v[i] = qcoords[q++];
        }
        return v;
    }
};

template <class K>
CenterEndo<K> center_endomorphism(const Bracket<K>& w, const Vec<K>& c_in) {
    const std::size_t d = w.dim();
    if (c_in.size() != d) throw dimension_error("center length mismatch");
    std::size_t pivot = d;
    for (std::size_t i = 0; i < d; ++i)
        if (!is_zero(c_in[i])) {
            pivot = i;
            break;
        }
    if (pivot == d) throw std::invalid_argument("center must be nonzero");
    Vec<K> c = vec_scale(c_in, one_like(c_in[pivot]) / c_in[pivot]);

    Matrix<K> m(d - 1, d - 1, zero_like(w.field_exemplar()));
    std::size_t col = 0;
    for (std::size_t k = 0; k < d; ++k) {
        if (k == pivot) continue;
        Vec<K> e(d, zero_like(w.field_exemplar()));
        e[k] = one_like(w.field_exemplar());
        Vec<K> img = w(c, e);
        // reduce modulo <c>: subtract img[pivot] * c (c has pivot coord 1)
        img = vec_sub(img, vec_scale(c, img[pivot]));
        std::size_t row = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (j == pivot) continue;
            m.at(row++, col) = img[j];
        }
        ++col;
    }
    return CenterEndo<K>{std::move(c), pivot, std::move(m)};
}

template <class K>
bool is_stable_plane(const Bracket<K>& w, const Plane<K>& p) {
    return p.contains(w(p.a, p.b));
}

template <class K>
bool is_abelian_plane(const Bracket<K>& w, const Plane<K>& p) {
    return vec_is_zero(w(p.a, p.b));
}

// The rational map <a,b> |-> [w(a,b)]: a normalized projective point, or
// nullopt exactly on abelian planes where the value vanishes.
template <class K>
std::optional<Vec<K>> image_point(const Bracket<K>& w, const Plane<K>& p) {
    Vec<K> v = w(p.a, p.b);
    if (vec_is_zero(v)) return std::nullopt;
    return normalize_projective(v);
}

// Stable planes through a fixed projective center [c], via the eigenlines of
// phi_c that are rational over the field.
struct StablePlanesThrough {
    std::vector<Plane<Fp>> planes;
    std::size_t algebraic_count = 0;  // char poly degree: always n+1
    bool squarefree = false;
};

inline StablePlanesThrough stable_planes_through(const Bracket<Fp>& w, const Vec<Fp>& c) {
    StablePlanesThrough out;
    CenterEndo<Fp> endo = center_endomorphism(w, c);
    Polynomial<Fp> cp = char_poly(endo.matrix);
    out.algebraic_count = *cp.degree();
    out.squarefree = is_squarefree(cp);
    for (const Fp& lam : roots_in_fp(cp)) {
        Matrix<Fp> shifted = endo.matrix -
            Matrix<Fp>::identity(endo.matrix.rows(), one_like(w.field_exemplar())).scaled(lam);
        for (const Vec<Fp>& q : kernel_basis(shifted))
            out.planes.emplace_back(endo.center, endo.embed(q));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Determinantal hypersurface.

template <class K>
struct Hypersurface {
    int n = 0;
    MultiPoly<K> equation;  // homogeneous of degree n+1 in n+2 variables
};

// Value of the hypersurface equation at a concrete point: the t^1 coefficient
// of char_poly(ad_w(point)).
template <class K>
K hypersurface_value_at(const Bracket<K>& w, const Vec<K>& point) {
    return char_poly_coeffs(ad_matrix(w, point))[1];
}

// Symbolic construction: char_poly of ad_w(c) with the coordinates of c as
// polynomial variables, coefficient of t^1.
template <class K>
Hypersurface<K> determinantal_hypersurface(const Bracket<K>& w) {
    const std::size_t d = w.dim();
    using P = MultiPoly<K>;
    Matrix<P> sym(d, d, P(d, w.field_exemplar()));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            P entry(d, w.field_exemplar());
            // coefficient of e_j in w(c, e_k) = sum_i c_i * w(e_i, e_k)_j
            for (std::size_t i = 0; i < d; ++i) {
                if (i == k) continue;
                K coef = i < k ? w.coeff(i, k, j) : -w.coeff(k, i, j);
                if (is_zero(coef)) continue;
                Exponents e(d, 0);
                e[i] = 1;
                entry.add_term(e, coef);
            }
            sym.at(j, k) = std::move(entry);
        }
    std::vector<P> coeffs = char_poly_coeffs(sym);
    Hypersurface<K> z{w.n(), coeffs[1]};
    if (z.equation.is_zero())
        throw genericity_error("degenerate bracket: hypersurface equation vanishes identically");
    if (!z.equation.is_homogeneous() || *z.equation.degree() != static_cast<unsigned>(w.n() + 1))
        throw std::logic_error("hypersurface equation is not homogeneous of degree n+1");
    return z;
}

namespace detail {

// Exponent vectors of all monomials of total degree deg in nvars variables,
// in graded-lex order (leading first).
inline std::vector<Exponents> homogeneous_exponents(std::size_t nvars, unsigned deg) {
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
        if (var + 1 == nvars) {
            cur[var] = static_cast<std::uint8_t>(left);
            out.push_back(cur);
            return;
        }
        for (int e = static_cast<int>(left); e >= 0; --e) {
            cur[var] = static_cast<std::uint8_t>(e);
            self(self, var + 1, left - e);
        }
    };
    rec(rec, 0, deg);
    return out;
}

}  // namespace detail

namespace detail {

// Solves the square augmented system in place; nullopt if singular.
inline std::optional<Vec<Fp>> solve_augmented(Matrix<Fp>& sys, std::size_t ncols) {
    auto pivots = rref(sys);
    if (pivots.size() != ncols) return std::nullopt;
    Vec<Fp> x(ncols, zero_like(sys.exemplar()));
    for (std::size_t r = 0; r < ncols; ++r) x[pivots[r]] = sys.at(r, ncols);
    return x;
}

}  // namespace detail

// Interpolation route: reconstruct the degree-(n+1) equation from evaluations
// of hypersurface_value_at at random points, by solving the monomial-value
// linear system. Cross-checked against the symbolic route in the tests.
inline Hypersurface<Fp> determinantal_hypersurface_interpolated(const Bracket<Fp>& w,
                                                                std::uint64_t seed) {
    const std::size_t d = w.dim();
    const unsigned deg = static_cast<unsigned>(w.n()) + 1;
    const Fp zero = zero_like(w.field_exemplar());
    const std::uint64_t p = w.field_exemplar().modulus();
    std::vector<Exponents> monos = detail::homogeneous_exponents(d, deg);
    const std::size_t mcount = monos.size();

    for (int attempt = 0; attempt < 8; ++attempt) {
        Rng rng(mix_seed(seed, attempt));
        // Build [monomial values | evaluation] and eliminate.
        Matrix<Fp> sys(mcount, mcount + 1, zero);
        for (std::size_t r = 0; r < mcount; ++r) {
            Vec<Fp> pt(d, zero);
            for (Fp& x : pt) x = Fp(rng.below(p), p);
            for (std::size_t cidx = 0; cidx < mcount; ++cidx) {
                Fp v(1, p);
                for (std::size_t var = 0; var < d; ++var)
                    for (unsigned e = 0; e < monos[cidx][var]; ++e) v *= pt[var];
                sys.at(r, cidx) = v;
            }
            sys.at(r, mcount) = hypersurface_value_at(w, pt);
        }
        auto solution = detail::solve_augmented(sys, mcount);
        if (!solution) continue;  // singular sample; redraw
        Hypersurface<Fp> z{w.n(), MultiPoly<Fp>(d, zero)};
        for (std::size_t cidx = 0; cidx < mcount; ++cidx)
            z.equation.add_term(monos[cidx], (*solution)[cidx]);
        if (z.equation.is_zero())
            throw genericity_error("degenerate bracket: interpolated equation is zero");
        return z;
    }
    throw genericity_error("interpolation points stayed degenerate after 8 attempts");
}

// ---------------------------------------------------------------------------
// Seeded experiments.

struct OrderTrial {
    std::size_t rational_lines = 0;
    std::size_t algebraic_count = 0;
    bool squarefree = false;
};

struct OrderReport {
    int n = 0;
    std::size_t trials = 0;
    std::vector<OrderTrial> per_trial;
    std::map<std::size_t, std::size_t> rational_histogram;
    std::size_t squarefree_count = 0;
    bool all_algebraic_counts_correct = false;
};

inline OrderReport order_statistic(const Bracket<Fp>& w, std::size_t trials,
                                   std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("order_statistic needs trials >= 1");
    OrderReport rep;
    rep.n = w.n();
    rep.trials = trials;
    rep.all_algebraic_counts_correct = true;
    const std::uint64_t p = w.field_exemplar().modulus();
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(mix_seed(seed, t));
        Vec<Fp> c = random_nonzero_vector(w.dim(), Fp(0, p), rng);
        StablePlanesThrough lines = stable_planes_through(w, c);
        OrderTrial trial;
        trial.rational_lines = lines.planes.size();
        trial.algebraic_count = lines.algebraic_count;
        trial.squarefree = lines.squarefree;
        if (trial.algebraic_count != static_cast<std::size_t>(w.n()) + 1)
            rep.all_algebraic_counts_correct = false;
        if (trial.squarefree) ++rep.squarefree_count;
        ++rep.rational_histogram[trial.rational_lines];
        rep.per_trial.push_back(trial);
    }
    return rep;
}

struct SampledPlanes {
    std::vector<Plane<Fp>> planes;
    std::size_t draws = 0;
    std::size_t rootless_draws = 0;    // char poly without roots in F_p (normal)
    std::size_t degenerate_draws = 0;  // non-squarefree char poly (resampled)
};

// Exact point sampler for the stable-plane family: draw random centers and
// keep the planes from their rational eigenlines. Deterministic in the seed.
// Degenerate draws are counted, never silently skipped; 32*count consecutive
// failures abort with a genericity error.
inline SampledPlanes sample_stable_planes(const Bracket<Fp>& w, std::size_t count,
                                          std::uint64_t seed) {
    SampledPlanes out;
    const std::uint64_t p = w.field_exemplar().modulus();
    std::size_t consecutive_failures = 0;
    const std::size_t budget = 32 * (count > 0 ? count : 1);
    std::size_t draw_index = 0;
    while (out.planes.size() < count) {
        if (consecutive_failures >= budget)
            throw genericity_error(
                "sampler exhausted: " + std::to_string(consecutive_failures) +
                " consecutive degenerate centers (bracket is likely non-generic)");
        Rng rng(mix_seed(seed, draw_index++));
        ++out.draws;
        Vec<Fp> c = random_nonzero_vector(w.dim(), Fp(0, p), rng);
        StablePlanesThrough lines = stable_planes_through(w, c);
        if (!lines.squarefree) {
            ++out.degenerate_draws;
            ++consecutive_failures;
            continue;
        }
        if (lines.planes.empty()) {
            ++out.rootless_draws;
            ++consecutive_failures;
            continue;
        }
        bool added = false;
        for (const Plane<Fp>& pl : lines.planes) {
            if (out.planes.size() >= count) break;
            if (!is_stable_plane(w, pl))
                throw std::logic_error("eigenline reduction produced a non-stable plane");
            out.planes.push_back(pl);
            added = true;
        }
        if (added)
            consecutive_failures = 0;
        else
            ++consecutive_failures;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hypersurface serialization:
//   hypersurface n=<n> p=<p> degree=<n+1>
//   e_0 ... e_{n+1} coeff      (graded-lex order, nonzero terms only)

inline void write_hypersurface(std::ostream& out, const Hypersurface<Fp>& z,
                               std::uint64_t p) {
    out << "hypersurface n=" << z.n << " p=" << p << " degree=" << (z.n + 1) << "\n";
    for (const auto& [e, c] : z.equation.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << static_cast<int>(e[i]) << " ";
        out << c << "\n";
    }
}

}  // namespace linecong
