#pragma once

// Alternating bilinear maps w : Lambda^2 V -> V on V of dimension n+2
// ("brackets", not necessarily Lie). Basis conventions: V has standard basis
// e_0..e_{n+1}; only entries with i < j are stored, and evaluation at (j,i)
// negates. The space of such maps splits (away from characteristic dividing
// n+1) into the trace-free part and the pure-covector part
// u |-> (a,b) -> u(b)a - u(a)b; the contraction below is the trace whose
// kernel is the trace-free part.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "linecong/errors.hpp"
#include "linecong/fp.hpp"
#include "linecong/matrix.hpp"
#include "linecong/rational.hpp"
#include "linecong/rng.hpp"
#include "linecong/wedge.hpp"

namespace linecong {

template <class K>
class Bracket {
  public:
    Bracket(int n, const K& exemplar)
        : n_(n), zero_(zero_like(exemplar)),
          a_(pair_count(static_cast<std::size_t>(n) + 2) * (n + 2), zero_) {
        if (n < 2) throw std::invalid_argument("bracket needs n >= 2");
    }

    int n() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(n_) + 2; }
    const K& field_exemplar() const { return zero_; }

    // Coefficient of e_k in the value on (e_i, e_j); requires i < j.
    K& coeff(std::size_t i, std::size_t j, std::size_t k) {
        return a_[pair_index(dim(), i, j) * dim() + k];
    }
    const K& coeff(std::size_t i, std::size_t j, std::size_t k) const {
        return a_[pair_index(dim(), i, j) * dim() + k];
    }

    bool is_zero() const { return vec_is_zero(a_); }

    friend bool operator==(const Bracket& x, const Bracket& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Bracket& x, const Bracket& y) { return !(x == y); }

    Bracket operator+(const Bracket& o) const {
        if (n_ != o.n_) throw dimension_error("bracket sum dimension mismatch");
        Bracket r = *this;
        r.a_ = vec_add(a_, o.a_);
        return r;
    }
    Bracket operator-(const Bracket& o) const {
        if (n_ != o.n_) throw dimension_error("bracket diff dimension mismatch");
        Bracket r = *this;
        r.a_ = vec_sub(a_, o.a_);
        return r;
    }
    Bracket scaled(const K& s) const {
        Bracket r = *this;
        r.a_ = vec_scale(a_, s);
        return r;
    }

    // Linear extension to bivectors: sum_{i<j} T_{ij} w(e_i, e_j).
    Vec<K> image_of(const Bivector<K>& t) const {
        if (t.dim_v != dim()) throw dimension_error("bivector dimension mismatch");
        Vec<K> out(dim(), zero_);
        for (std::size_t i = 0; i + 1 < dim(); ++i)
            for (std::size_t j = i + 1; j < dim(); ++j) {
                const K& c = t.at(i, j);
                if (scalar_is_zero(c)) continue;
                for (std::size_t k = 0; k < dim(); ++k) out[k] += c * coeff(i, j, k);
            }
        return out;
    }

    // Alternating bilinear evaluation on a pair of vectors.
    Vec<K> operator()(const Vec<K>& a, const Vec<K>& b) const {
        if (a.size() != dim() || b.size() != dim())
            throw dimension_error("bracket argument length mismatch");
        return image_of(wedge(a, b));
    }

  private:
    int n_;
    K zero_;
    Vec<K> a_;
};

// Trace covector theta: theta_j = trace of u |-> w(u, e_j), i.e. the
// coefficient of e_i in w(e_i, e_j) summed over i.
template <class K>
Vec<K> contraction(const Bracket<K>& w) {
    const std::size_t d = w.dim();
    Vec<K> theta(d, zero_like(w.field_exemplar()));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < j; ++i) theta[j] += w.coeff(i, j, i);
        for (std::size_t i = j + 1; i < d; ++i) theta[j] -= w.coeff(j, i, i);
    }
    return theta;
}

// Embedding of a covector u as the bracket (a,b) |-> u(b)a - u(a)b.
template <class K>
Bracket<K> covector_bracket(int n, const Vec<K>& u) {
    if (u.size() != static_cast<std::size_t>(n) + 2)
        throw dimension_error("covector length mismatch");
    Bracket<K> w(n, u[0]);
    for (std::size_t i = 0; i + 1 < w.dim(); ++i)
        for (std::size_t j = i + 1; j < w.dim(); ++j) {
            w.coeff(i, j, i) += u[j];
            w.coeff(i, j, j) -= u[i];
        }
    return w;
}

// Projection onto the kernel of the contraction: w - ι(theta)/(n+1), where
// ι is covector_bracket. The constant n+1 is contraction∘ι acting on
// covectors, re-derived in the tests before being trusted here. Requires the
// characteristic not to divide n+1.
template <class K>
Bracket<K> trace_free_part(const Bracket<K>& w) {
    const int n = w.n();
    K scale = zero_like(w.field_exemplar());
    for (int i = 0; i < n + 1; ++i) scale += one_like(w.field_exemplar());
    if (is_zero(scale))
        throw field_error("field characteristic divides n+1; no trace-free projection");
    Vec<K> theta = contraction(w);
    return w - covector_bracket(n, theta).scaled(one_like(scale) / scale);
}

// Dimension of the trace-free subspace, computed as the kernel dimension of
// the contraction map written as a matrix on all (i<j, k) basis tensors.
template <class K>
std::size_t trace_free_dimension(int n, const K& exemplar) {
    const std::size_t d = static_cast<std::size_t>(n) + 2;
    const std::size_t cols = pair_count(d) * d;
    Matrix<K> m(d, cols, zero_like(exemplar));
    const K one = one_like(exemplar);
    std::size_t col = 0;
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k, ++col) {
                // contraction of the basis tensor e_k (x) (e_i ^ e_j)^*
                if (k == i) m.at(j, col) += one;
                if (k == j) m.at(i, col) -= one;
            }
    return cols - rank(m);
}

template <class K>
Bracket<K> random_bracket(int n, const K& exemplar, std::uint64_t seed) {
    Bracket<K> w(n, exemplar);
    Rng rng(seed);
    for (std::size_t i = 0; i + 1 < w.dim(); ++i)
        for (std::size_t j = i + 1; j < w.dim(); ++j)
            for (std::size_t k = 0; k < w.dim(); ++k)
                w.coeff(i, j, k) = random_element(exemplar, rng);
    return w;
}

// Deterministic-in-seed generic trace-free bracket: uniform entries followed
// by the trace-free projection.
template <class K>
Bracket<K> random_trace_free(int n, const K& exemplar, std::uint64_t seed) {
    return trace_free_part(random_bracket(n, exemplar, seed));
}

template <class K>
Vec<K> random_vector(std::size_t len, const K& exemplar, Rng& rng) {
    Vec<K> v(len, zero_like(exemplar));
    for (K& x : v) x = random_element(exemplar, rng);
    return v;
}

template <class K>
Vec<K> random_nonzero_vector(std::size_t len, const K& exemplar, Rng& rng) {
    for (int tries = 0; tries < 64; ++tries) {
        Vec<K> v = random_vector(len, exemplar, rng);
        if (!vec_is_zero(v)) return v;
    }
    throw genericity_error("could not draw a nonzero vector");
}

// ---------------------------------------------------------------------------
// Tensor file format. One document per tensor:
//   omega n=<n> field=<q|p:PRIME> seed=<optional>
//   i j k coeff        (one line per nonzero entry, 0 <= i < j <= n+1)
// Coefficients are decimal residues for F_p and canonical num[/den] over Q.

struct OmegaHeader {
    int n = 0;
    bool rational = false;
    std::uint64_t p = 0;
    std::optional<std::uint64_t> seed;
};

inline OmegaHeader parse_omega_header(const std::string& line) {
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag != "omega") throw parse_error("omega file must start with 'omega'");
    OmegaHeader h;
    bool saw_n = false, saw_field = false;
    std::string item;
    while (in >> item) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw parse_error("bad header item: " + item);
        std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "n") {
            h.n = std::stoi(value);
            saw_n = true;
        } else if (key == "field") {
            saw_field = true;
            if (value == "q") {
                h.rational = true;
            } else if (value.rfind("p:", 0) == 0) {
                h.p = checked_prime(std::stoull(value.substr(2)));
            } else {
                throw parse_error("field must be q or p:PRIME, got " + value);
            }
        } else if (key == "seed") {
            h.seed = std::stoull(value);
        } else {
            throw parse_error("unknown header key: " + key);
        }
    }
    if (!saw_n || !saw_field) throw parse_error("omega header needs n= and field=");
    if (h.n < 2 || h.n > 60) throw parse_error("n out of range in omega header");
    return h;
}

namespace detail {

template <class K>
K parse_omega_coeff(const std::string& text, const K& exemplar);

inline Fp parse_omega_coeff_fp(const std::string& text, const Fp& exemplar) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-')))
            throw parse_error("bad F_p coefficient: " + text);
    }
    long long v = std::stoll(text);
    return Fp::from_signed(v, exemplar.modulus());
}

template <>
inline Fp parse_omega_coeff<Fp>(const std::string& text, const Fp& exemplar) {
    return parse_omega_coeff_fp(text, exemplar);
}

template <>
inline Rational parse_omega_coeff<Rational>(const std::string& text, const Rational&) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

}  // namespace detail

template <class K>
Bracket<K> read_omega_entries(std::istream& in, int n, const K& exemplar) {
    Bracket<K> w(n, exemplar);
    std::vector<bool> seen(pair_count(w.dim()) * w.dim(), false);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long i, j, k;
        std::string coeff_text, extra;
        if (!(ls >> i >> j >> k >> coeff_text)) throw parse_error("bad entry line: " + line);
        if (ls >> extra) throw parse_error("trailing tokens on entry line: " + line);
        if (i < 0 || j < 0 || k < 0 || j >= static_cast<long long>(w.dim()) ||
            i >= static_cast<long long>(w.dim()) || k >= static_cast<long long>(w.dim()))
            throw parse_error("index out of range: " + line);
        if (i >= j) throw parse_error("entries require i < j: " + line);
        std::size_t slot = pair_index(w.dim(), i, j) * w.dim() + k;
        if (seen[slot]) throw parse_error("duplicate entry for (i,j,k): " + line);
        seen[slot] = true;
        w.coeff(i, j, k) = detail::parse_omega_coeff<K>(coeff_text, exemplar);
    }
    return w;
}

template <class K>
void write_omega_entries(std::ostream& out, const Bracket<K>& w) {
    for (std::size_t i = 0; i + 1 < w.dim(); ++i)
        for (std::size_t j = i + 1; j < w.dim(); ++j)
            for (std::size_t k = 0; k < w.dim(); ++k) {
                const K& c = w.coeff(i, j, k);
                if (is_zero(c)) continue;
                out << i << " " << j << " " << k << " " << c << "\n";
            }
}

inline void write_omega_header(std::ostream& out, int n, bool rational, std::uint64_t p,
                               std::optional<std::uint64_t> seed) {
    out << "omega n=" << n << " field=";
    if (rational)
        out << "q";
    else
        out << "p:" << p;
    if (seed) out << " seed=" << *seed;
    out << "\n";
}

}  // namespace linecong
