#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "linecong/rng.hpp"

namespace linecong {

class field_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Moduli are restricted to odd primes below 2^31 so that products of two
// residues fit in 64 bits without overflow.
inline bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || p >= (1ull << 31)) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Element of the prime field F_p. Each element carries its modulus; mixing
// moduli in one expression is a logic error and throws.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    static Fp from_signed(long long value, std::uint64_t p) {
        long long r = value % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp& operator+=(const Fp& o) {
        check(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        check(o);
        v_ += p_ - o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        check(o);
        v_ = (v_ * o.v_) % p_;
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) {
        return a.v_ == b.v_ && a.p_ == b.p_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp pow(std::uint64_t e) const {
        Fp r(1, p_), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    Fp inverse() const {
        if (v_ == 0) throw field_error("inverse of zero in F_p");
        return pow(p_ - 2);
    }

    std::string str() const { return std::to_string(v_); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) {
        return os << x.v_;
    }

  private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw field_error("mixed moduli in F_p arithmetic");
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline Fp random_element(const Fp& like, Rng& rng) {
    return Fp(rng.below(like.modulus()), like.modulus());
}

// Session modulus: validated once, then used to mint elements.
inline std::uint64_t checked_prime(std::uint64_t p) {
    if (!is_odd_prime(p))
        throw field_error("modulus must be an odd prime below 2^31: " + std::to_string(p));
    return p;
}

}  // namespace linecong
