#pragma once

// Arbitrary-precision integer/rational layer. All exact arithmetic in the
// project sits on GMP; no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace enr {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0^negative");
        return rat_pow(1 / base, -e);
    }
    Rat r = 1, b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

// Exact k-th root of an integer, if it exists.
inline std::optional<Int> int_kth_root(const Int& a, unsigned k) {
    if (k == 0) throw std::domain_error("int_kth_root: k = 0");
    if (a < 0 && k % 2 == 0) return std::nullopt;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return r;
}

// Exact k-th root of a rational, if it exists (numerator and denominator
// must both be perfect k-th powers).
inline std::optional<Rat> rat_kth_root(const Rat& a, unsigned k) {
    Rat c = a;
    c.canonicalize();
    auto num = int_kth_root(Int(c.get_num()), k);
    if (!num) return std::nullopt;
    auto den = int_kth_root(Int(c.get_den()), k);
    if (!den) return std::nullopt;
    return Rat(*num, *den);
}

// Representative of x in Q/2Z, reduced into [0, 2).
inline Rat mod_2z(const Rat& x) {
    Int num = x.get_num(), den = x.get_den();
    Int two_den = 2 * den;
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), two_den.get_mpz_t());
    Rat out(r, den);
    out.canonicalize();
    return out;
}

// Representative of x in Q/Z, reduced into [0, 1).
inline Rat mod_1z(const Rat& x) {
    Int num = x.get_num(), den = x.get_den();
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rat out(r, den);
    out.canonicalize();
    return out;
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

}  // namespace enr
