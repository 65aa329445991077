#include "lamrep/field.hpp"

#include <cctype>

namespace lamrep {

Rat rat_of(long num, long den) {
    if (den == 0) throw Error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw Error("bad rational literal: " + s);
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    if (sgn(r.get_den()) == 0) throw Error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
    if (!is_prime_u32(prime)) throw Error("modulus is not prime: " + std::to_string(prime));
    if (prime >= (1u << 31)) throw Error("prime modulus must be < 2^31");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw Error("division by zero");
    // Fermat: a^(p-2) mod p.
    Elem result = 1 % p, base = a % p;
    std::uint64_t e = p - 2;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

PrimeField::Elem PrimeField::parse(const std::string& s) const {
    if (s.empty()) throw Error("empty field element literal");
    long v = 0;
    try {
        v = std::stol(s);
    } catch (const std::exception&) {
        throw Error("bad field element literal: " + s);
    }
    return from_int(v);
}

FieldSpec FieldSpec::parse(const std::string& s) {
    std::string t;
    for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "q" || t == "rationals") return rationals();
    if (t.rfind("fp:", 0) == 0) {
        unsigned long v = 0;
        try {
            v = std::stoul(t.substr(3));
        } catch (const std::exception&) {
            throw Error("bad field spec: " + s);
        }
        if (v >= (1ul << 31) || !is_prime_u32(static_cast<std::uint32_t>(v)))
            throw Error("field spec needs a prime < 2^31: " + s);
        return prime(static_cast<std::uint32_t>(v));
    }
    throw Error("bad field spec (expected q or fp:P): " + s);
}

}  // namespace lamrep
