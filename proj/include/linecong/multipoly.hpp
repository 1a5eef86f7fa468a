#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linecong/matrix.hpp"

namespace linecong {

using Exponents = std::vector<std::uint8_t>;

// Graded lexicographic, leading term first: higher total degree wins, ties
// broken lexicographically on the exponent vector.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial over an exact field. Stored coefficients are
// never zero; the zero polynomial is the empty term map and its degree is the
// "minus infinity" marker std::nullopt. Terms iterate in graded-lex order,
// which is also the canonical serialization order.
template <class K>
class MultiPoly {
  public:
    using TermMap = std::map<Exponents, K, GradedLexGreater>;

    MultiPoly(std::size_t num_vars, const K& exemplar)
        : nvars_(num_vars), zero_(zero_like(exemplar)) {}

    static MultiPoly constant(std::size_t num_vars, const K& value) {
        MultiPoly p(num_vars, value);
        p.add_term(Exponents(num_vars, 0), value);
        return p;
    }

    static MultiPoly variable(std::size_t num_vars, std::size_t index, const K& one) {
        MultiPoly p(num_vars, one);
        Exponents e(num_vars, 0);
        e.at(index) = 1;
        p.add_term(e, one);
        return p;
    }

    std::size_t num_vars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    const K& field_exemplar() const { return zero_; }

    std::optional<unsigned> degree() const {
        if (terms_.empty()) return std::nullopt;
        unsigned d = 0;
        for (auto e : terms_.begin()->first) d += e;  // leading term has max degree
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = *degree();
        for (const auto& [e, c] : terms_) {
            unsigned t = 0;
            for (auto x : e) t += x;
            if (t != d) return false;
        }
        return true;
    }

    K coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? zero_ : it->second;
    }

    void add_term(const Exponents& e, const K& c) {
        if (e.size() != nvars_) throw dimension_error("exponent vector length mismatch");
        if (scalar_is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.nvars_, a.zero_);
        Exponents e(a.nvars_, 0);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < a.nvars_; ++i)
                    e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
                r.add_term(e, ca * cb);
            }
        return r;
    }

    MultiPoly scaled(const K& s) const {
        MultiPoly r(nvars_, zero_);
        for (const auto& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    K operator()(const std::vector<K>& point) const {
        if (point.size() != nvars_) throw dimension_error("evaluation point length mismatch");
        K total = zero_;
        for (const auto& [e, c] : terms_) {
            K term = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) term = term * point[i];
            total += term;
        }
        return total;
    }

    std::string str(const std::string& var_prefix = "x") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i] > 0) {
                    os << "*" << var_prefix << i;
                    if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
                }
        }
        return os.str();
    }

  private:
    std::size_t nvars_;
    K zero_;
    TermMap terms_;
};

template <class K>
MultiPoly<K> zero_like(const MultiPoly<K>& p) {
    return MultiPoly<K>(p.num_vars(), p.field_exemplar());
}
template <class K>
MultiPoly<K> one_like(const MultiPoly<K>& p) {
    return MultiPoly<K>::constant(p.num_vars(), one_like(p.field_exemplar()));
}
template <class K>
bool is_zero(const MultiPoly<K>& p) {
    return p.is_zero();
}

}  // namespace linecong
