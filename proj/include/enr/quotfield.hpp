#pragma once

// Residue fields F[t]/(pi) for finite base fields F and irreducible pi.
// Used when fiber classification has to evaluate data at a place of
// higher degree. Satisfies the same field interface as the base fields.

#include <optional>

#include "enr/poly.hpp"

namespace enr {

template <class F>
struct QuotField {
    F base;
    Poly<F> modulus;  // monic irreducible over base

    QuotField(F base_, Poly<F> modulus_) : base(std::move(base_)), modulus(std::move(modulus_)) {
        if (poly_deg(modulus) < 1)
            throw std::domain_error("QuotField: modulus must have degree >= 1");
        modulus = poly_monic(base, modulus);
    }

    using Elem = Poly<F>;  // representative of degree < deg(modulus)

    std::uint64_t characteristic() const { return base.characteristic(); }
    int ext_deg() const { return poly_deg(modulus); }

    Elem reduce(const Elem& a) const { return poly_divrem(base, a, modulus).second; }
    Elem zero() const { return poly_zero(base); }
    Elem one() const { return poly_const(base, base.one()); }
    Elem from_int(long v) const { return poly_const(base, base.from_int(v)); }
    Elem embed(const typename F::Elem& v) const { return poly_const(base, v); }
    Elem gen() const { return reduce(poly_monomial(base, 1, base.one())); }
    Elem neg(const Elem& a) const { return poly_neg(base, a); }
    Elem add(const Elem& a, const Elem& b) const { return poly_add(base, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return poly_sub(base, a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(poly_mul(base, a, b)); }
    bool is_zero(const Elem& a) const { return poly_is_zero(a); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem inv(const Elem& a) const {
        if (poly_is_zero(a)) throw std::domain_error("QuotField: inverse of zero");
        // extended Euclid: s*a + t*modulus = gcd
        Poly<F> r0 = modulus, r1 = a;
        Poly<F> s0 = poly_zero(base), s1 = poly_const(base, base.one());
        while (!poly_is_zero(r1)) {
            auto [q, r] = poly_divrem(base, r0, r1);
            Poly<F> s2 = poly_sub(base, s0, poly_mul(base, q, s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        if (poly_deg(r0) != 0)
            throw std::domain_error("QuotField: modulus not irreducible (gcd nontrivial)");
        return reduce(poly_scale(base, base.inv(r0.c[0]), s0));
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, unsigned __int128 e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    unsigned __int128 order() const {
        unsigned __int128 q = 1;
        std::uint64_t bq = field_order(base);
        for (int i = 0; i < ext_deg(); ++i) q *= bq;
        return q;
    }

    // Inverse Frobenius in the residue field of order p^e: x -> x^(p^(e-1)).
    Elem pth_root(const Elem& a) const {
        std::uint64_t p = characteristic();
        unsigned __int128 e = order() / p;
        (void)e;
        unsigned __int128 exp = 1;
        // exponent p^(e_total - 1) where order = p^(e_total)
        unsigned __int128 q = order();
        while (q > p) {
            exp *= p;
            q /= p;
        }
        return pow(a, exp);
    }

    std::optional<Elem> zeta(int) const { return std::nullopt; }
    std::optional<Elem> kth_root(const Elem&, unsigned) const { return std::nullopt; }

    Elem random(Rng& rng) const { return reduce(poly_random(base, rng, ext_deg() - 1)); }
    std::string str(const Elem& a) const { return poly_str(base, a, "x"); }

    bool operator==(const QuotField& o) const {
        return base == o.base && modulus == o.modulus;
    }

  private:
    static std::uint64_t field_order(const PrimeField& k) { return k.p; }
    static std::uint64_t field_order(const PrimeFieldExt& k) { return k.order(); }
};

}  // namespace enr
