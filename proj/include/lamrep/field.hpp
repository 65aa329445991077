#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "lamrep/errors.hpp"

namespace lamrep {

// Exact rational scalar.  mpq_class keeps values in lowest terms with a
// positive denominator as long as all values are produced by arithmetic or
// by the helpers below.
using Rat = mpq_class;

Rat rat_of(long num, long den = 1);
Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& x);

bool is_prime_u32(std::uint32_t n);

// Runtime descriptor of the ground field, used at API boundaries (JSON, CLI).
// Computation itself goes through the statically typed fields below.
struct FieldSpec {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime(std::uint32_t p) { return FieldSpec{Kind::Prime, p}; }
    bool is_rationals() const { return kind == Kind::Rationals; }
    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    std::string str() const { return is_rationals() ? "q" : "fp:" + std::to_string(p); }

    // Accepts "q", "Q", "rationals", "fp:P", "Fp:P".
    static FieldSpec parse(const std::string& s);
};

// The field of rational numbers.
struct RationalField {
    using Elem = Rat;
    static constexpr bool prime_field = false;

    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(long v) const { return Rat(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw Error("division by zero");
        return Rat(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_one(const Elem& a) const { return a == 1; }
    FieldSpec spec() const { return FieldSpec::rationals(); }
    bool operator==(const RationalField&) const { return true; }

    std::string str(const Elem& a) const { return rat_str(a); }
    Elem parse(const std::string& s) const { return rat_parse(s); }
};

// F_p for a prime p < 2^31, canonical representatives in [0, p).
// Products of two representatives fit in uint64 without overflow.
struct PrimeField {
    using Elem = std::uint64_t;
    static constexpr bool prime_field = true;

    std::uint64_t p = 0;

    PrimeField() = default;
    explicit PrimeField(std::uint32_t prime);

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    bool is_one(Elem a) const { return a == 1 % p; }
    FieldSpec spec() const { return FieldSpec::prime(static_cast<std::uint32_t>(p)); }
    bool operator==(const PrimeField& o) const { return p == o.p; }

    std::string str(Elem a) const { return std::to_string(a); }
    Elem parse(const std::string& s) const;
};

// Deterministic seeded RNG with portable draws.  mt19937_64 output is pinned
// by the C++ standard; std::uniform_int_distribution is not, so bounded draws
// use plain modulo (bias is irrelevant for the sampling done here).
struct Rng {
    explicit Rng(std::uint64_t seed) : state(seed) { next(); }
    std::uint64_t next() {
        // splitmix64 step; stable across platforms and fast enough.
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    // Uniform-ish integer in [-range, range].
    long in_range(long range) {
        return static_cast<long>(below(2 * static_cast<std::uint64_t>(range) + 1)) - range;
    }

private:
    std::uint64_t state;
};

}  // namespace lamrep
