#pragma once

// Exact coefficient fields: Q, the cyclotomic extensions Q(zeta_4) and
// Q(zeta_8), prime fields F_p (p odd), and extensions F_p[x]/(m) for
// residue-field work. Cyclotomic elements are power-basis coordinate
// vectors reduced modulo x^d + 1 with d = phi(n) = n/2.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "enr/rational.hpp"

namespace enr {

using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

struct Rationals {
    using Elem = Rat;

    static constexpr std::uint64_t characteristic() { return 0; }
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(long v) const { return Rat(v); }
    Elem neg(const Elem& a) const { return -a; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("Q: inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::optional<Elem> zeta(int) const { return std::nullopt; }
    std::optional<Elem> kth_root(const Elem& a, unsigned k) const {
        return rat_kth_root(a, k);
    }
    Elem random(Rng& rng) const {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
        return Rat(num(rng), den(rng));
    }
    std::string str(const Elem& a) const { return a.get_str(); }

    bool operator==(const Rationals&) const { return true; }
};

// ---------------------------------------------------------------------------
// Cyclotomic(n), n in {4, 8}
// ---------------------------------------------------------------------------

struct CycElem {
    std::vector<Rat> c;  // power-basis coordinates, length phi(n)
    bool operator==(const CycElem& o) const { return c == o.c; }
};

struct Cyclotomic {
    int n;

    explicit Cyclotomic(int n_) : n(n_) {
        if (n != 4 && n != 8) throw std::domain_error("Cyclotomic: n must be 4 or 8");
    }

    using Elem = CycElem;
    int deg() const { return n / 2; }

    static constexpr std::uint64_t characteristic() { return 0; }
    Elem zero() const { return Elem{std::vector<Rat>(deg(), Rat(0))}; }
    Elem one() const {
        Elem e = zero();
        e.c[0] = 1;
        return e;
    }
    Elem from_int(long v) const {
        Elem e = zero();
        e.c[0] = v;
        return e;
    }
    Elem from_rat(const Rat& v) const {
        Elem e = zero();
        e.c[0] = v;
        return e;
    }
    Elem gen() const {  // zeta_n itself
        Elem e = zero();
        e.c[1] = 1;
        return e;
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (int i = 0; i < deg(); ++i) r.c[i] += b.c[i];
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (int i = 0; i < deg(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    // Negacyclic convolution: x^d = -1.
    Elem mul(const Elem& a, const Elem& b) const {
        int d = deg();
        Elem r = zero();
        for (int i = 0; i < d; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; j < d; ++j) {
                if (b.c[j] == 0) continue;
                Rat t = a.c[i] * b.c[j];
                int k = i + j;
                if (k >= d) r.c[k - d] -= t;
                else r.c[k] += t;
            }
        }
        return r;
    }
    bool is_zero(const Elem& a) const {
        return std::all_of(a.c.begin(), a.c.end(), [](const Rat& x) { return x == 0; });
    }
    bool eq(const Elem& a, const Elem& b) const { return a.c == b.c; }

    // Inverse via extended Euclid against x^d + 1 over Q.
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    std::optional<Elem> zeta(int m) const {
        if (m == 4) {
            if (n == 4) return gen();
            // zeta_8^2 is a primitive 4th root of unity
            Elem e = zero();
            e.c[2] = 1;
            return e;
        }
        if (m == 8) {
            if (n == 8) return gen();
            return std::nullopt;
        }
        return std::nullopt;
    }

    // Tries c = r^k with r rational, or r * zeta^j. Enough for the
    // normalization arithmetic exercised here; returns nullopt otherwise.
    std::optional<Elem> kth_root(const Elem& a, unsigned k) const {
        int d = deg();
        for (int j = 0; j < 2 * n; ++j) {
            // candidate root r * zeta^j with r rational requires
            // a * zeta^{-jk} rational
            Elem zpow = one();
            Elem z = gen();
            for (unsigned t = 0; t < (static_cast<unsigned>(j) * k) % static_cast<unsigned>(n); ++t)
                zpow = mul(zpow, z);
            Elem cand = div(a, zpow);
            bool rational = true;
            for (int i = 1; i < d; ++i)
                if (cand.c[i] != 0) rational = false;
            if (!rational) continue;
            auto r = rat_kth_root(cand.c[0], k);
            if (!r) continue;
            Elem root = from_rat(*r);
            Elem zj = one();
            for (int t = 0; t < j % n; ++t) zj = mul(zj, z);
            root = mul(root, zj);
            // verify
            Elem p = one();
            for (unsigned t = 0; t < k; ++t) p = mul(p, root);
            if (eq(p, a)) return root;
        }
        return std::nullopt;
    }

    Elem random(Rng& rng) const {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
        Elem e = zero();
        for (int i = 0; i < deg(); ++i) e.c[i] = Rat(num(rng), den(rng));
        return e;
    }

    std::string str(const Elem& a) const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < deg(); ++i) {
            if (i) os << ",";
            os << a.c[i].get_str();
        }
        os << "]";
        return os.str();
    }

    bool operator==(const Cyclotomic& o) const { return n == o.n; }
};

// ---------------------------------------------------------------------------
// PrimeField(p), p odd prime
// ---------------------------------------------------------------------------

struct PrimeField {
    std::uint64_t p;

    explicit PrimeField(std::uint64_t p_) : p(p_) {
        if (p < 3) throw std::domain_error("PrimeField: p must be an odd prime >= 3");
        if (p % 2 == 0) throw std::domain_error("PrimeField: p = 2 rejected");
        for (std::uint64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) throw std::domain_error("PrimeField: p not prime");
    }

    using Elem = std::uint64_t;

    std::uint64_t characteristic() const { return p; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const {
        long long m = static_cast<long long>(p);
        long long r = static_cast<long long>(v % m);
        if (r < 0) r += m;
        return static_cast<Elem>(r);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
    }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("F_p: inverse of zero");
        return pow(a, p - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::optional<Elem> zeta(int m) const {
        if ((p - 1) % static_cast<std::uint64_t>(m) != 0) return std::nullopt;
        // deterministic scan for an element of exact order m
        for (Elem g = 2; g < p; ++g) {
            Elem c = pow(g, (p - 1) / static_cast<std::uint64_t>(m));
            bool primitive = true;
            Elem acc = c;
            for (int i = 1; i < m; ++i) {
                if (acc == 1) { primitive = false; break; }
                acc = mul(acc, c);
            }
            if (primitive && acc == 1) return c;
        }
        return std::nullopt;
    }
    std::optional<Elem> kth_root(Elem a, unsigned k) const {
        for (Elem x = 0; x < p; ++x)
            if (pow(x, k) == a) return x;
        return std::nullopt;
    }
    Elem random(Rng& rng) const {
        std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
        return d(rng);
    }
    std::string str(Elem a) const { return std::to_string(a); }

    bool operator==(const PrimeField& o) const { return p == o.p; }
};

// ---------------------------------------------------------------------------
// PrimeFieldExt(p, m): F_p[x]/(modulus), modulus monic irreducible
// ---------------------------------------------------------------------------

struct PrimeFieldExt {
    PrimeField base;
    std::vector<std::uint64_t> modulus;  // ascending, monic, degree m >= 1

    PrimeFieldExt(std::uint64_t p_, std::vector<std::uint64_t> mod)
        : base(p_), modulus(std::move(mod)) {
        if (modulus.size() < 2 || modulus.back() != 1)
            throw std::domain_error("PrimeFieldExt: modulus must be monic of degree >= 1");
        if (!irreducible()) throw std::domain_error("PrimeFieldExt: modulus not irreducible");
    }

    using Elem = std::vector<std::uint64_t>;  // length m, ascending

    int ext_deg() const { return static_cast<int>(modulus.size()) - 1; }
    std::uint64_t characteristic() const { return base.p; }
    std::uint64_t order() const {
        std::uint64_t q = 1;
        for (int i = 0; i < ext_deg(); ++i) q *= base.p;
        return q;
    }

    Elem zero() const { return Elem(ext_deg(), 0); }
    Elem one() const {
        Elem e = zero();
        e[0] = 1;
        return e;
    }
    Elem gen() const {
        Elem e = zero();
        if (ext_deg() > 1) e[1] = 1;
        else e[0] = base.sub(0, modulus[0]);  // degree-1 modulus: x = -c0
        return e;
    }
    Elem from_int(long v) const {
        Elem e = zero();
        e[0] = base.from_int(v);
        return e;
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& x : r) x = base.neg(x);
        return r;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (int i = 0; i < ext_deg(); ++i) r[i] = base.add(r[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (int i = 0; i < ext_deg(); ++i) r[i] = base.sub(r[i], b[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        int m = ext_deg();
        std::vector<std::uint64_t> prod(2 * m - 1, 0);
        for (int i = 0; i < m; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < m; ++j)
                prod[i + j] = base.add(prod[i + j], base.mul(a[i], b[j]));
        }
        // reduce modulo the monic modulus
        for (int d = 2 * m - 2; d >= m; --d) {
            std::uint64_t c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int j = 0; j < m; ++j)
                prod[d - m + j] = base.sub(prod[d - m + j], base.mul(c, modulus[j]));
        }
        prod.resize(m);
        return prod;
    }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("F_q: inverse of zero");
        return pow(a, order() - 2);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const {
        return std::all_of(a.begin(), a.end(), [](std::uint64_t x) { return x == 0; });
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    // Inverse Frobenius: p-th root, x -> x^(p^(m-1)).
    Elem pth_root(const Elem& a) const {
        std::uint64_t e = 1;
        for (int i = 0; i < ext_deg() - 1; ++i) e *= base.p;
        return pow(a, e);
    }

    std::optional<Elem> zeta(int m) const {
        std::uint64_t q = order();
        if ((q - 1) % static_cast<std::uint64_t>(m) != 0) return std::nullopt;
        for (std::uint64_t seed = 1; seed < q; ++seed) {
            Elem g = nth_elem(seed);
            Elem c = pow(g, (q - 1) / static_cast<std::uint64_t>(m));
            bool primitive = true;
            Elem acc = c;
            for (int i = 1; i < m; ++i) {
                if (eq(acc, one())) { primitive = false; break; }
                acc = mul(acc, c);
            }
            if (primitive && eq(acc, one())) return c;
        }
        return std::nullopt;
    }
    std::optional<Elem> kth_root(const Elem& a, unsigned k) const {
        std::uint64_t q = order();
        for (std::uint64_t i = 0; i < q; ++i) {
            Elem x = nth_elem(i);
            if (eq(pow(x, k), a)) return x;
        }
        return std::nullopt;
    }
    Elem nth_elem(std::uint64_t idx) const {  // enumeration of all q elements
        Elem e = zero();
        for (int i = 0; i < ext_deg(); ++i) {
            e[i] = idx % base.p;
            idx /= base.p;
        }
        return e;
    }
    Elem random(Rng& rng) const {
        Elem e = zero();
        for (auto& x : e) x = base.random(rng);
        return e;
    }
    std::string str(const Elem& a) const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < ext_deg(); ++i) {
            if (i) os << ",";
            os << a[i];
        }
        os << "]";
        return os.str();
    }

    bool operator==(const PrimeFieldExt& o) const {
        return base.p == o.base.p && modulus == o.modulus;
    }

  private:
    bool irreducible() const {
        // exhaustive root/divisor certification; fine at the small degrees used
        int m = ext_deg();
        if (m == 1) return true;
        for (std::uint64_t r = 0; r < base.p; ++r) {
            std::uint64_t v = 0, t = 1;
            for (auto c : modulus) {
                v = base.add(v, base.mul(c, t));
                t = base.mul(t, r);
            }
            if (v == 0) return false;
        }
        if (m <= 3) return true;  // no roots certifies deg <= 3
        // trial division by all monic divisors of degree 2..m/2
        for (int d = 2; d <= m / 2; ++d) {
            std::uint64_t count = 1;
            for (int i = 0; i < d; ++i) count *= base.p;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::vector<std::uint64_t> div(d + 1, 0);
                std::uint64_t k = idx;
                for (int i = 0; i < d; ++i) { div[i] = k % base.p; k /= base.p; }
                div[d] = 1;
                // long division remainder check
                std::vector<std::uint64_t> rem = modulus;
                for (int dd = m; dd >= d; --dd) {
                    std::uint64_t c = rem[dd];
                    if (c == 0) continue;
                    for (int j = 0; j <= d; ++j)
                        rem[dd - d + j] = base.sub(rem[dd - d + j], base.mul(c, div[j]));
                }
                bool zero = true;
                for (int i = 0; i < d; ++i)
                    if (rem[i] != 0) zero = false;
                if (zero) return false;
            }
        }
        return true;
    }
};

inline Cyclotomic::Elem Cyclotomic::inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("Q(zeta): inverse of zero");
    // extended Euclid of a(x) against x^d + 1 over Q
    int d = deg();
    std::vector<Rat> r0(d + 1, Rat(0)), r1(a.c);
    r0[0] = 1;
    r0[d] = 1;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // Bezout coefficients of a
    auto trim = [](std::vector<Rat>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    // maintain r0 = s*_0 * (x^d+1) + s0 * a; invariant not tracked for x^d+1 part
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<Rat> q(std::max<size_t>(r0.size(), 1), Rat(0));
        std::vector<Rat> rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rat c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            trim(rem);
            if (rem.size() >= r0.size()) break;
        }
        // s_next = s0 - q * s1
        std::vector<Rat> snew(std::max(s0.size(), q.size() + s1.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) snew[i] += s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        trim(snew);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = snew;
    }
    // r0 is the gcd (a nonzero constant since x^d+1 has no rational roots and
    // a is a unit in the quotient)
    if (r0.size() != 1) throw std::domain_error("Q(zeta): inverse failed (zero divisor?)");
    Rat lead = r0[0];
    Elem out = zero();
    for (size_t i = 0; i < s0.size() && i < static_cast<size_t>(d); ++i) out.c[i] = s0[i] / lead;
    // reduce any overflow coefficients (s0 may have degree >= d)
    for (size_t i = d; i < s0.size(); ++i) {
        // x^i = -x^{i-d} modulo x^d + 1
        out.c[i - d] -= s0[i] / lead;
    }
    return out;
}

}  // namespace enr
