#pragma once

#include <string>
#include <vector>

#include "lamrep/field.hpp"

namespace lamrep {

// Element of k[T]/(T^e): coefficient list of length e, index i = coeff of T^i.
template <class F>
struct TruncPoly {
    using Elem = typename F::Elem;

    F field{};
    int modulus = 1;
    std::vector<Elem> c;

    TruncPoly() = default;
    TruncPoly(F f, int e) : field(f), modulus(e), c(static_cast<std::size_t>(e), f.zero()) {
        if (e < 1) throw Error("truncation exponent must be >= 1");
    }

    static TruncPoly monomial(F f, int e, int deg, Elem coeff) {
        TruncPoly t(f, e);
        if (deg < e) t.c[deg] = std::move(coeff);
        return t;
    }
    static TruncPoly constant(F f, int e, Elem coeff) { return monomial(f, e, 0, std::move(coeff)); }

    bool is_zero() const {
        for (const Elem& x : c)
            if (!field.is_zero(x)) return false;
        return true;
    }

    // T-adic order; returns modulus for the zero element.
    int order() const {
        for (int i = 0; i < modulus; ++i)
            if (!field.is_zero(c[i])) return i;
        return modulus;
    }

    bool is_unit() const { return !field.is_zero(c[0]); }

    bool operator==(const TruncPoly& o) const {
        if (modulus != o.modulus) return false;
        for (int i = 0; i < modulus; ++i)
            if (!field.eq(c[i], o.c[i])) return false;
        return true;
    }

    TruncPoly operator+(const TruncPoly& o) const {
        require_same_modulus(o);
        TruncPoly r(field, modulus);
        for (int i = 0; i < modulus; ++i) r.c[i] = field.add(c[i], o.c[i]);
        return r;
    }

    TruncPoly operator-(const TruncPoly& o) const {
        require_same_modulus(o);
        TruncPoly r(field, modulus);
        for (int i = 0; i < modulus; ++i) r.c[i] = field.sub(c[i], o.c[i]);
        return r;
    }

    TruncPoly operator-() const {
        TruncPoly r(field, modulus);
        for (int i = 0; i < modulus; ++i) r.c[i] = field.neg(c[i]);
        return r;
    }

    TruncPoly scaled(const Elem& s) const {
        TruncPoly r(field, modulus);
        for (int i = 0; i < modulus; ++i) r.c[i] = field.mul(c[i], s);
        return r;
    }

    // Product reduced into k[T]/(T^e_out).
    TruncPoly mul_mod(const TruncPoly& o, int e_out) const {
        TruncPoly r(field, e_out);
        for (int i = 0; i < modulus && i < e_out; ++i) {
            if (field.is_zero(c[i])) continue;
            for (int j = 0; j < o.modulus && i + j < e_out; ++j) {
                if (field.is_zero(o.c[j])) continue;
                r.c[i + j] = field.add(r.c[i + j], field.mul(c[i], o.c[j]));
            }
        }
        return r;
    }

    // Reinterpret modulo T^e_out (truncating or zero-extending).
    TruncPoly reduced(int e_out) const {
        TruncPoly r(field, e_out);
        for (int i = 0; i < modulus && i < e_out; ++i) r.c[i] = c[i];
        return r;
    }

    // Exact division by T^s; requires order() >= s.
    TruncPoly shifted_down(int s) const {
        if (order() < s) throw Error("shifted_down: order too small");
        TruncPoly r(field, modulus);
        for (int i = s; i < modulus; ++i) r.c[i - s] = c[i];
        return r;
    }

    TruncPoly shifted_up(int s) const {
        TruncPoly r(field, modulus);
        for (int i = 0; i + s < modulus; ++i) r.c[i + s] = c[i];
        return r;
    }

    // Multiplicative inverse of a unit in k[T]/(T^e).
    TruncPoly inverse() const {
        if (!is_unit()) throw Error("inverse of a non-unit truncated polynomial");
        TruncPoly r(field, modulus);
        const Elem u0 = field.inv(c[0]);
        r.c[0] = u0;
        for (int i = 1; i < modulus; ++i) {
            Elem acc = field.zero();
            for (int j = 1; j <= i; ++j)
                if (!field.is_zero(c[j]) && !field.is_zero(r.c[i - j]))
                    acc = field.add(acc, field.mul(c[j], r.c[i - j]));
            r.c[i] = field.neg(field.mul(u0, acc));
        }
        return r;
    }

    std::string str() const {
        std::string out;
        bool any = false;
        for (int i = 0; i < modulus; ++i) {
            if (field.is_zero(c[i])) continue;
            if (any) out += " + ";
            any = true;
            const bool one = field.is_one(c[i]);
            if (i == 0) {
                out += field.str(c[i]);
            } else {
                if (!one) out += field.str(c[i]) + "*";
                out += i == 1 ? "T" : "T^" + std::to_string(i);
            }
        }
        return any ? out : "0";
    }

    void require_same_modulus(const TruncPoly& o) const {
        if (modulus != o.modulus) throw ShapeMismatch("truncated polynomial modulus mismatch");
    }
};

}  // namespace lamrep
