#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "lamrep/errors.hpp"

namespace lamrep {

// Partition with a bound on the part size.  Parts are stored explicitly in
// weakly decreasing order; exponent notation like "3,1^2" is parse/print
// sugar only.  The empty partition (of 0) is allowed.
struct Partition {
    std::vector<int> parts;
    int bound = 0;  // maximal allowed part; >= first part

    Partition() = default;
    Partition(std::initializer_list<int> ps);
    explicit Partition(std::vector<int> ps, int bnd = 0);

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    int min_part() const;                         // last part; 0 for empty
    int max_part() const;                         // first part; 0 for empty
    int count_part(int v) const;                  // multiplicity of v
    Partition without_index(int idx) const;       // drop parts[idx]
    int operator[](int i) const { return parts[i]; }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    std::string str() const;                             // "3,1,1"; "" for empty
    static Partition parse(const std::string& s, int bound = 0);  // accepts "3,1^2"

    void validate() const;  // throws Error on malformed data
};

// All partitions of d with parts of size at most e, in reverse-lexicographic
// order.  d = 0 yields just the empty partition.
std::vector<Partition> enumerate_partitions(int d, int e);

// Dominance order: p <= q iff every prefix sum of p is <= that of q.
// Requires equal weight.
bool dominance_leq(const Partition& p, const Partition& q);

Partition conjugate(const Partition& p);

// Cap every part at 2; idempotent and length-preserving.
Partition bar(const Partition& p);

// Dimension of the conjugation orbit of a nilpotent d x d matrix of Jordan
// type p: d^2 - sum of squares of the conjugate parts.
long nilpotent_orbit_dim(const Partition& p, int d);

}  // namespace lamrep
