#pragma once

// Dense univariate polynomials over an exact field, ascending coefficients.
// The zero polynomial is the empty vector; its degree is the sentinel -1.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "enr/fields.hpp"

namespace enr {

constexpr int kZeroPolyDeg = -1;

template <class F>
struct Poly {
    std::vector<typename F::Elem> c;
    bool operator==(const Poly& o) const { return c == o.c; }
};

template <class F>
int poly_deg(const Poly<F>& f) {
    return static_cast<int>(f.c.size()) - 1;
}

template <class F>
bool poly_is_zero(const Poly<F>& f) {
    return f.c.empty();
}

template <class F>
void poly_trim(const F& K, Poly<F>& f) {
    while (!f.c.empty() && K.is_zero(f.c.back())) f.c.pop_back();
}

template <class F>
Poly<F> poly_make(const F& K, std::vector<typename F::Elem> coeffs) {
    Poly<F> f{std::move(coeffs)};
    poly_trim(K, f);
    return f;
}

template <class F>
Poly<F> poly_zero(const F&) {
    return Poly<F>{};
}

template <class F>
Poly<F> poly_const(const F& K, typename F::Elem v) {
    Poly<F> f;
    if (!K.is_zero(v)) f.c.push_back(std::move(v));
    return f;
}

template <class F>
Poly<F> poly_from_ints(const F& K, const std::vector<long>& v) {
    Poly<F> f;
    f.c.reserve(v.size());
    for (long x : v) f.c.push_back(K.from_int(x));
    poly_trim(K, f);
    return f;
}

// x^k
template <class F>
Poly<F> poly_monomial(const F& K, int k, typename F::Elem coeff) {
    Poly<F> f;
    if (K.is_zero(coeff)) return f;
    f.c.assign(k + 1, K.zero());
    f.c[k] = std::move(coeff);
    return f;
}

template <class F>
typename F::Elem poly_coeff(const F& K, const Poly<F>& f, int k) {
    if (k < 0 || k >= static_cast<int>(f.c.size())) return K.zero();
    return f.c[k];
}

template <class F>
Poly<F> poly_neg(const F& K, const Poly<F>& f) {
    Poly<F> r = f;
    for (auto& x : r.c) x = K.neg(x);
    return r;
}

template <class F>
Poly<F> poly_add(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.assign(n, K.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = K.add(r.c[i], b.c[i]);
    poly_trim(K, r);
    return r;
}

template <class F>
Poly<F> poly_sub(const F& K, const Poly<F>& a, const Poly<F>& b) {
    return poly_add(K, a, poly_neg(K, b));
}

template <class F>
Poly<F> poly_mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return Poly<F>{};
    Poly<F> r;
    r.c.assign(a.c.size() + b.c.size() - 1, K.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (K.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
    }
    poly_trim(K, r);
    return r;
}

template <class F>
Poly<F> poly_scale(const F& K, const typename F::Elem& s, const Poly<F>& f) {
    Poly<F> r = f;
    for (auto& x : r.c) x = K.mul(s, x);
    poly_trim(K, r);
    return r;
}

template <class F>
std::pair<Poly<F>, Poly<F>> poly_divrem(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (poly_is_zero(b)) throw std::domain_error("poly_divrem: division by zero polynomial");
    Poly<F> q, r = a;
    if (poly_deg(a) < poly_deg(b)) return {q, r};
    q.c.assign(a.c.size() - b.c.size() + 1, K.zero());
    auto lead_inv = K.inv(b.c.back());
    for (int d = poly_deg(r); d >= poly_deg(b); --d) {
        if (static_cast<size_t>(d) >= r.c.size() || K.is_zero(r.c[d])) continue;
        auto coef = K.mul(r.c[d], lead_inv);
        int shift = d - poly_deg(b);
        q.c[shift] = coef;
        for (size_t i = 0; i < b.c.size(); ++i)
            r.c[shift + i] = K.sub(r.c[shift + i], K.mul(coef, b.c[i]));
    }
    poly_trim(K, q);
    poly_trim(K, r);
    return {q, r};
}

template <class F>
Poly<F> poly_div_exact(const F& K, const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = poly_divrem(K, a, b);
    if (!poly_is_zero(r)) throw std::domain_error("poly_div_exact: division not exact");
    return q;
}

template <class F>
Poly<F> poly_monic(const F& K, const Poly<F>& f) {
    if (poly_is_zero(f)) return f;
    return poly_scale(K, K.inv(f.c.back()), f);
}

template <class F>
Poly<F> poly_gcd(const F& K, Poly<F> a, Poly<F> b) {
    while (!poly_is_zero(b)) {
        auto r = poly_divrem(K, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(K, a);
}

template <class F>
Poly<F> poly_derivative(const F& K, const Poly<F>& f) {
    Poly<F> r;
    for (size_t i = 1; i < f.c.size(); ++i)
        r.c.push_back(K.mul(K.from_int(static_cast<long>(i)), f.c[i]));
    poly_trim(K, r);
    return r;
}

template <class F>
typename F::Elem poly_eval(const F& K, const Poly<F>& f, const typename F::Elem& x) {
    auto acc = K.zero();
    for (size_t i = f.c.size(); i-- > 0;) acc = K.add(K.mul(acc, x), f.c[i]);
    return acc;
}

// f(s * t)
template <class F>
Poly<F> poly_scale_arg(const F& K, const Poly<F>& f, const typename F::Elem& s) {
    Poly<F> r = f;
    auto pw = K.one();
    for (size_t i = 0; i < r.c.size(); ++i) {
        r.c[i] = K.mul(r.c[i], pw);
        pw = K.mul(pw, s);
    }
    poly_trim(K, r);
    return r;
}

// s^weight * f(1/s): coefficient reversal within the weight window.
template <class F>
Poly<F> reciprocal_twist(const F& K, const Poly<F>& f, int weight) {
    if (poly_deg(f) > weight)
        throw std::domain_error("reciprocal_twist: degree exceeds weight");
    Poly<F> r;
    r.c.assign(weight + 1, K.zero());
    for (size_t i = 0; i < f.c.size(); ++i) r.c[weight - i] = f.c[i];
    poly_trim(K, r);
    return r;
}

template <class F>
Poly<F> poly_pow_mod(const F& K, Poly<F> base, unsigned __int128 e, const Poly<F>& mod) {
    Poly<F> r = poly_const(K, K.one());
    base = poly_divrem(K, base, mod).second;
    while (e) {
        if (e & 1) r = poly_divrem(K, poly_mul(K, r, base), mod).second;
        base = poly_divrem(K, poly_mul(K, base, base), mod).second;
        e >>= 1;
    }
    return r;
}

// ord_g(f): largest k with g^k | f. Requires deg g >= 1 and f != 0.
template <class F>
int poly_ord_at(const F& K, Poly<F> f, const Poly<F>& g) {
    if (poly_is_zero(f)) throw std::domain_error("poly_ord_at: zero polynomial");
    if (poly_deg(g) < 1) throw std::domain_error("poly_ord_at: trivial place");
    int k = 0;
    while (true) {
        auto [q, r] = poly_divrem(K, f, g);
        if (!poly_is_zero(r)) return k;
        f = q;
        ++k;
        if (poly_is_zero(f)) throw std::domain_error("poly_ord_at: unreachable");
    }
}

template <class F>
Poly<F> poly_random(const F& K, Rng& rng, int max_deg) {
    Poly<F> f;
    std::uniform_int_distribution<int> dd(0, max_deg);
    int d = dd(rng);
    f.c.reserve(d + 1);
    for (int i = 0; i <= d; ++i) f.c.push_back(K.random(rng));
    poly_trim(K, f);
    return f;
}

template <class F>
std::string poly_str(const F& K, const Poly<F>& f, const std::string& var = "t") {
    if (poly_is_zero(f)) return "0";
    std::string out;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (K.is_zero(f.c[i])) continue;
        if (!out.empty()) out += " + ";
        out += K.str(f.c[i]);
        if (i >= 1) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Squarefree decomposition, characteristic 0 and the char-p variant with
// p-th-power extraction.
// ---------------------------------------------------------------------------

template <class F>
typename F::Elem field_pth_root(const F& K, const typename F::Elem& a) {
    if constexpr (std::is_same_v<F, PrimeField>) {
        return a;  // Frobenius is the identity on F_p
    } else if constexpr (std::is_same_v<F, PrimeFieldExt>) {
        return K.pth_root(a);
    } else {
        (void)K;
        (void)a;
        throw std::domain_error("pth_root: characteristic 0");
    }
}

// f with zero derivative in char p is g(t^p); returns the p-th root poly.
template <class F>
Poly<F> poly_pth_root(const F& K, const Poly<F>& f) {
    auto p = K.characteristic();
    if (p == 0) throw std::domain_error("poly_pth_root: characteristic 0");
    Poly<F> h;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (i % p == 0) {
            h.c.push_back(field_pth_root(K, f.c[i]));
        } else if (!K.is_zero(f.c[i])) {
            throw std::domain_error("poly_pth_root: not a p-th power");
        }
    }
    poly_trim(K, h);
    return h;
}

template <class F>
struct SquarefreePart {
    Poly<F> factor;  // squarefree, monic
    int multiplicity;
};

namespace detail {

template <class F>
void sqf_monic(const F& K, const Poly<F>& f, int mult_scale,
               std::vector<SquarefreePart<F>>& out) {
    if (poly_deg(f) <= 0) return;
    auto p = K.characteristic();
    Poly<F> fd = poly_derivative(K, f);
    if (poly_is_zero(fd)) {
        sqf_monic(K, poly_pth_root(K, f), mult_scale * static_cast<int>(p), out);
        return;
    }
    Poly<F> c = poly_gcd(K, f, fd);
    Poly<F> w = poly_div_exact(K, f, c);
    int i = 1;
    while (poly_deg(w) > 0) {
        Poly<F> y = poly_gcd(K, w, c);
        Poly<F> z = poly_div_exact(K, w, y);
        if (poly_deg(z) > 0) out.push_back({z, i * mult_scale});
        w = y;
        c = poly_div_exact(K, c, y);
        ++i;
    }
    if (poly_deg(c) > 0) {
        // leftover is a p-th power (char p only)
        sqf_monic(K, poly_pth_root(K, c), mult_scale * static_cast<int>(p), out);
    }
}

}  // namespace detail

// f = lc * prod factor^multiplicity with the factors squarefree, monic, and
// pairwise coprime. Multiplicities reported in increasing order.
template <class F>
std::vector<SquarefreePart<F>> squarefree_decomposition(const F& K, const Poly<F>& f) {
    if (poly_is_zero(f)) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<SquarefreePart<F>> out;
    detail::sqf_monic(K, poly_monic(K, f), 1, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

}  // namespace enr
