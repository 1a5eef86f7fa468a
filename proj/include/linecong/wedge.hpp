#pragma once

// Bivectors in lexicographic Plucker coordinates.
//
// Conventions (used by every wedge formula in the project):
//   * coordinate (i,j), i < j, of a^b is a_i b_j - a_j b_i;
//   * a bivector is decomposable iff all 4x4 Pfaffian minors vanish:
//     p_ij p_kl - p_ik p_jl + p_il p_jk = 0 for i < j < k < l;
//   * projective representatives are normalized so the first nonzero
//     coordinate is 1.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linecong/matrix.hpp"

namespace linecong {

template <class K>
using Vec = std::vector<K>;

inline std::size_t pair_count(std::size_t dim) { return dim * (dim - 1) / 2; }

// Lexicographic position of (i,j), i < j, among all pairs in [0, dim).
inline std::size_t pair_index(std::size_t dim, std::size_t i, std::size_t j) {
    return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

template <class K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) throw dimension_error("vector sum length mismatch");
    Vec<K> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

template <class K>
Vec<K> vec_sub(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) throw dimension_error("vector diff length mismatch");
    Vec<K> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

template <class K>
Vec<K> vec_scale(const Vec<K>& a, const K& s) {
    Vec<K> r = a;
    for (K& x : r) x = x * s;
    return r;
}

template <class K>
bool vec_is_zero(const Vec<K>& a) {
    for (const K& x : a)
        if (!is_zero(x)) return false;
    return true;
}

// Antisymmetric 2-tensor on a dim_v-dimensional space, stored as the
// lexicographic coordinate vector (i < j).
template <class K>
struct Bivector {
    std::size_t dim_v;
    Vec<K> coords;

    Bivector(std::size_t d, const K& zero) : dim_v(d), coords(pair_count(d), zero) {}

    K& at(std::size_t i, std::size_t j) { return coords[pair_index(dim_v, i, j)]; }
    const K& at(std::size_t i, std::size_t j) const {
        return coords[pair_index(dim_v, i, j)];
    }

    bool is_zero() const { return vec_is_zero(coords); }

    friend bool operator==(const Bivector& a, const Bivector& b) {
        return a.dim_v == b.dim_v && a.coords == b.coords;
    }
    friend bool operator!=(const Bivector& a, const Bivector& b) { return !(a == b); }

    Bivector operator+(const Bivector& o) const {
        if (dim_v != o.dim_v) throw dimension_error("bivector sum dimension mismatch");
        Bivector r = *this;
        r.coords = vec_add(coords, o.coords);
        return r;
    }
    Bivector operator-(const Bivector& o) const {
        if (dim_v != o.dim_v) throw dimension_error("bivector diff dimension mismatch");
        Bivector r = *this;
        r.coords = vec_sub(coords, o.coords);
        return r;
    }
    Bivector scaled(const K& s) const {
        Bivector r = *this;
        r.coords = vec_scale(coords, s);
        return r;
    }
};

template <class K>
Bivector<K> wedge(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) throw dimension_error("wedge of unequal-length vectors");
    if (a.empty()) throw dimension_error("wedge in dimension zero");
    Bivector<K> t(a.size(), zero_like(a[0]));
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            t.at(i, j) = a[i] * b[j] - a[j] * b[i];
    return t;
}

// Decomposability (rank <= 2): all 4x4 Pfaffian minors vanish.
template <class K>
bool is_decomposable(const Bivector<K>& t) {
    const std::size_t d = t.dim_v;
    for (std::size_t i = 0; i + 3 < d; ++i)
        for (std::size_t j = i + 1; j + 2 < d; ++j)
            for (std::size_t k = j + 1; k + 1 < d; ++k)
                for (std::size_t l = k + 1; l < d; ++l) {
                    K pf = t.at(i, j) * t.at(k, l) - t.at(i, k) * t.at(j, l) +
                           t.at(i, l) * t.at(j, k);
                    if (!is_zero(pf)) return false;
                }
    return true;
}

// Scales a nonzero coordinate vector so its first nonzero entry is 1.
template <class K>
Vec<K> normalize_projective(const Vec<K>& v) {
    for (const K& x : v)
        if (!is_zero(x)) {
            K inv = one_like(x) / x;
            return vec_scale(v, inv);
        }
    throw std::invalid_argument("cannot normalize the zero vector");
}

// A 2-plane given by two spanning vectors.
template <class K>
struct Plane {
    Vec<K> a, b;

    Plane(Vec<K> a_, Vec<K> b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a.size() != b.size() || a.empty())
            throw dimension_error("plane spanned by vectors of unequal length");
        Matrix<K> m(2, a.size(), zero_like(a[0]));
        for (std::size_t i = 0; i < a.size(); ++i) {
            m.at(0, i) = a[i];
            m.at(1, i) = b[i];
        }
        if (rank(m) != 2)
            throw std::invalid_argument("plane requires two independent vectors");
    }

    Bivector<K> plucker() const { return wedge(a, b); }

    bool contains(const Vec<K>& v) const {
        Matrix<K> m(3, a.size(), zero_like(a[0]));
        for (std::size_t i = 0; i < a.size(); ++i) {
            m.at(0, i) = a[i];
            m.at(1, i) = b[i];
            m.at(2, i) = v[i];
        }
        return rank(m) <= 2;
    }

    // Canonical representative (normalized Plucker coordinates); equal planes
    // compare equal through this.
    Vec<K> canonical() const { return normalize_projective(plucker().coords); }
};

// Two spanning vectors of the plane of a nonzero decomposable bivector:
// independent columns of the associated antisymmetric matrix.
template <class K>
std::pair<Vec<K>, Vec<K>> spanning_pair(const Bivector<K>& t) {
    const std::size_t d = t.dim_v;
    const K zero = zero_like(t.coords[0]);
    auto column = [&](std::size_t s) {
        Vec<K> col(d, zero);
        for (std::size_t i = 0; i < d; ++i) {
            if (i < s)
                col[i] = t.at(i, s);
            else if (i > s)
                col[i] = -t.at(s, i);
        }
        return col;
    };
    std::size_t first = d;
    for (std::size_t s = 0; s < d; ++s)
        if (!vec_is_zero(column(s))) {
            first = s;
            break;
        }
    if (first == d) throw std::invalid_argument("zero bivector spans no plane");
    Vec<K> a = column(first);
    for (std::size_t s = first + 1; s < d; ++s) {
        Vec<K> b = column(s);
        if (vec_is_zero(b)) continue;
        Matrix<K> m(2, d, zero);
        for (std::size_t i = 0; i < d; ++i) {
            m.at(0, i) = a[i];
            m.at(1, i) = b[i];
        }
        if (rank(m) == 2) return {a, b};
    }
    throw std::invalid_argument("bivector has rank < 2");
}

}  // namespace linecong
