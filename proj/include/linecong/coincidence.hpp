#pragma once

// The coincidence construction. A bracket w on V = V_{n+2} determines an
// (n+2)-dimensional space of linear forms on Lambda^2(V + <v>), v the added
// basis vector e_{n+2}: for each dual basis covector u = e_i^*, the form
//
//   (x, y) |-> u(w(xbar, ybar)) + v*(x)u(y) - v*(y)u(x),
//
// and the common zero locus of these forms inside the Plucker quadrics is a
// linear section of the bigger Grassmannian. The mutually inverse linear
// maps between that section and the stable-plane family are
//
//   lift:    T |-> T + w(T) ^ v      (Lambda^2 V -> Lambda^2 (V + <v>))
//   project: drop all coordinates involving v,
//
// and every form annihilates lift(T) for every bivector T, decomposable or
// not. lift(a^b) is decomposable iff w(a,b) lies in <a,b>, which is the
// stable-plane condition.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linecong/bracket.hpp"
#include "linecong/congruence.hpp"
#include "linecong/errors.hpp"
#include "linecong/matrix.hpp"
#include "linecong/wedge.hpp"

namespace linecong {

template <class K>
struct LinearSystem {
    int n = 0;
    std::vector<Vec<K>> forms;  // n+2 covectors on Lambda^2 V_{n+3}
};

template <class K>
LinearSystem<K> linear_section_forms(const Bracket<K>& w) {
    const std::size_t d = w.dim();       // n+2
    const std::size_t dd = d + 1;        // n+3
    const K zero = zero_like(w.field_exemplar());
    LinearSystem<K> sys;
    sys.n = w.n();
    for (std::size_t i = 0; i < d; ++i) {
        Vec<K> form(pair_count(dd), zero);
        for (std::size_t j = 0; j + 1 < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k)
                form[pair_index(dd, j, k)] = w.coeff(j, k, i);
        form[pair_index(dd, i, d)] = -one_like(zero);  // the v* ^ e_i^* part
        sys.forms.push_back(std::move(form));
    }
    return sys;
}

template <class K>
K evaluate_form(const Vec<K>& form, const Bivector<K>& t) {
    if (form.size() != t.coords.size()) throw dimension_error("form/bivector mismatch");
    K acc = zero_like(form[0]);
    for (std::size_t idx = 0; idx < form.size(); ++idx) acc += form[idx] * t.coords[idx];
    return acc;
}

template <class K>
Bivector<K> lift(const Bracket<K>& w, const Bivector<K>& t) {
    if (t.dim_v != w.dim()) throw dimension_error("lift dimension mismatch");
    const std::size_t d = w.dim();
    Bivector<K> up(d + 1, zero_like(w.field_exemplar()));
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) up.at(i, j) = t.at(i, j);
    Vec<K> img = w.image_of(t);
    for (std::size_t i = 0; i < d; ++i) up.at(i, d) = img[i];
    return up;
}

// The linear projection forgetting the added direction; its center is the
// set of bivectors supported on coordinates (i, n+2).
template <class K>
Bivector<K> project_down(const Bivector<K>& t3) {
    if (t3.dim_v < 3) throw dimension_error("project_down needs dimension >= 3");
    const std::size_t d = t3.dim_v - 1;
    Bivector<K> down(d, zero_like(t3.coords[0]));
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) down.at(i, j) = t3.at(i, j);
    return down;
}

// Membership in the linear section: nonzero, decomposable, and annihilated
// by every form of the linear system.
template <class K>
bool in_linear_section(const Bracket<K>& w, const Bivector<K>& t3) {
    if (t3.dim_v != w.dim() + 1) throw dimension_error("section membership dimension mismatch");
    if (t3.is_zero()) throw std::invalid_argument("zero bivector is not a projective point");
    if (!is_decomposable(t3)) return false;
    for (const Vec<K>& form : linear_section_forms(w).forms)
        if (!is_zero(evaluate_form(form, t3))) return false;
    return true;
}

// Splitting-hyperplane change: the new tensor for the hyperplane whose dual
// coordinate differs by the covector u. At tensor level
// w'(a,b) = w(a,b) + u(a)b - u(b)a; the trace-free class is unchanged.
template <class K>
Bracket<K> change_hyperplane(const Bracket<K>& w, const Vec<K>& u) {
    return w - covector_bracket(w.n(), u);
}

template <class K>
std::string coords_string(const Vec<K>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

struct EquivalenceReport {
    int n = 0;
    std::size_t samples = 0;
    std::size_t passes = 0;
    std::size_t failures = 0;
    std::size_t draws = 0;
    std::size_t rootless_draws = 0;
    std::size_t degenerate_draws = 0;
    std::optional<std::string> first_failure;  // Plucker coordinates of the offending point
};

// Samples stable planes, lifts them, and checks section membership plus both
// round-trip identities exactly.
inline EquivalenceReport verify_equivalence(const Bracket<Fp>& w, std::size_t samples,
                                            std::uint64_t seed) {
    EquivalenceReport rep;
    rep.n = w.n();
    rep.samples = samples;
    SampledPlanes sampled = sample_stable_planes(w, samples, seed);
    rep.draws = sampled.draws;
    rep.rootless_draws = sampled.rootless_draws;
    rep.degenerate_draws = sampled.degenerate_draws;
    LinearSystem<Fp> sys = linear_section_forms(w);
    for (const Plane<Fp>& pl : sampled.planes) {
        Bivector<Fp> t = pl.plucker();
        Bivector<Fp> up = lift(w, t);
        bool ok = is_decomposable(up);
        for (const Vec<Fp>& form : sys.forms)
            if (ok && !is_zero(evaluate_form(form, up))) ok = false;
        if (ok && project_down(up) != t) ok = false;
        if (ok && lift(w, project_down(up)) != up) ok = false;
        if (ok) {
            ++rep.passes;
        } else {
            ++rep.failures;
            if (!rep.first_failure) rep.first_failure = coords_string(up.coords);
        }
    }
    return rep;
}

struct ChangeLineReport {
    int n = 0;
    bool classes_differ = false;
    std::size_t samples = 0;
    std::size_t passes = 0;
    std::size_t failures = 0;
    std::optional<std::string> first_failure;
};

// Re-splits V_{n+3} with a new center line spanned by new_last (length n+3,
// last coordinate nonzero; the hyperplane is kept, which does not affect the
// trace-free class). With w_new = e + v normalized, the re-read tensor is
// w' = (id + ad_w(e))^{-1} o w, and points of the stable-plane family map to
// the new family through lift followed by the new projection,
// T |-> T - w(T)^e.
inline ChangeLineReport change_line(const Bracket<Fp>& w, const Vec<Fp>& new_last,
                                    std::size_t samples, std::uint64_t seed) {
    const std::size_t d = w.dim();
    if (new_last.size() != d + 1) throw dimension_error("center needs n+3 coordinates");
    if (new_last[d].is_zero())
        throw center_error("projection center must be transverse to the hyperplane");
    Fp inv_last = new_last[d].inverse();
    Vec<Fp> e(d, zero_like(w.field_exemplar()));
    for (std::size_t i = 0; i < d; ++i) e[i] = new_last[i] * inv_last;

    Matrix<Fp> a = Matrix<Fp>::identity(d, one_like(w.field_exemplar())) + ad_matrix(w, e);
    if (det(a).is_zero())
        throw center_error("projection center lies on the linear section");
    Matrix<Fp> a_inv = inverse(a);

    Bracket<Fp> w2(w.n(), w.field_exemplar());
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vec<Fp> col(d, zero_like(w.field_exemplar()));
            for (std::size_t k = 0; k < d; ++k) col[k] = w.coeff(i, j, k);
            Vec<Fp> img = a_inv.apply(col);
            for (std::size_t k = 0; k < d; ++k) w2.coeff(i, j, k) = img[k];
        }

    ChangeLineReport rep;
    rep.n = w.n();
    rep.samples = samples;
    rep.classes_differ = trace_free_part(w2) != trace_free_part(w);

    Vec<Fp> normalized_center = e;
    normalized_center.push_back(one_like(w.field_exemplar()));
    for (const Plane<Fp>& pl : sample_stable_planes(w, samples, seed).planes) {
        Bivector<Fp> t = pl.plucker();
        Bivector<Fp> up = lift(w, t);
        // sampled center check: no section plane may pass through the center
        auto [sa, sb] = spanning_pair(up);
        if (Plane<Fp>(sa, sb).contains(normalized_center))
            throw center_error("projection center lies on a sampled section plane");
        Vec<Fp> c(d, zero_like(w.field_exemplar()));
        for (std::size_t i = 0; i < d; ++i) c[i] = up.at(i, d);
        Bivector<Fp> t2 = project_down(up) - wedge(c, e);
        bool ok = !t2.is_zero() && is_decomposable(t2);
        if (ok) {
            auto [qa, qb] = spanning_pair(t2);
            ok = is_stable_plane(w2, Plane<Fp>(qa, qb));
        }
        if (ok) {
            ++rep.passes;
        } else {
            ++rep.failures;
            if (!rep.first_failure) rep.first_failure = coords_string(t2.coords);
        }
    }
    return rep;
}

}  // namespace linecong
