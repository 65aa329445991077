#include "lamrep/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace lamrep {

Partition::Partition(std::initializer_list<int> ps) : parts(ps) {
    bound = parts.empty() ? 0 : parts.front();
    validate();
}

Partition::Partition(std::vector<int> ps, int bnd) : parts(std::move(ps)), bound(bnd) {
    if (bound == 0) bound = parts.empty() ? 0 : parts.front();
    validate();
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::min_part() const { return parts.empty() ? 0 : parts.back(); }

int Partition::max_part() const { return parts.empty() ? 0 : parts.front(); }

int Partition::count_part(int v) const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), v));
}

Partition Partition::without_index(int idx) const {
    Partition r = *this;
    r.parts.erase(r.parts.begin() + idx);
    return r;
}

void Partition::validate() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw Error("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw Error("partition parts must be weakly decreasing");
        if (bound > 0 && parts[i] > bound) throw PartExceedsBound("part exceeds bound");
    }
}

std::string Partition::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& s, int bound) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw Error("bad partition literal: " + s);
        int part = 0, mult = 1;
        auto caret = tok.find('^');
        try {
            if (caret == std::string::npos) {
                part = std::stoi(tok);
            } else {
                part = std::stoi(tok.substr(0, caret));
                mult = std::stoi(tok.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw Error("bad partition literal: " + s);
        }
        if (part <= 0 || mult < 0) throw Error("bad partition literal: " + s);
        for (int i = 0; i < mult; ++i) parts.push_back(part);
    }
    if (!std::is_sorted(parts.rbegin(), parts.rend()))
        throw Error("partition parts must be weakly decreasing: " + s);
    return Partition(std::move(parts), bound);
}

namespace {
void enumerate_rec(int d, int max_part, std::vector<int>& acc, std::vector<Partition>& out, int bound) {
    if (d == 0) {
        out.push_back(Partition(acc, bound));
        return;
    }
    for (int first = std::min(d, max_part); first >= 1; --first) {
        acc.push_back(first);
        enumerate_rec(d - first, first, acc, out, bound);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int d, int e) {
    if (d < 0) throw Error("enumerate_partitions: negative weight");
    if (e < 1) throw Error("enumerate_partitions: bound must be >= 1");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(d, e, acc, out, e);
    return out;
}

bool dominance_leq(const Partition& p, const Partition& q) {
    if (p.weight() != q.weight()) throw UnequalWeight("dominance on unequal weights");
    int sp = 0, sq = 0;
    const int len = std::max(p.length(), q.length());
    for (int k = 0; k < len; ++k) {
        sp += k < p.length() ? p[k] : 0;
        sq += k < q.length() ? q[k] : 0;
        if (sp > sq) return false;
    }
    return true;
}

Partition conjugate(const Partition& p) {
    std::vector<int> t;
    for (int j = 1; j <= p.max_part(); ++j) {
        int count = 0;
        for (int part : p.parts)
            if (part >= j) ++count;
        t.push_back(count);
    }
    return Partition(std::move(t), p.empty() ? 0 : p.length());
}

Partition bar(const Partition& p) {
    std::vector<int> capped;
    capped.reserve(p.parts.size());
    for (int part : p.parts) capped.push_back(std::min(part, 2));
    return Partition(std::move(capped), std::min(p.bound, 2) > 0 ? std::min(p.bound, 2) : 0);
}

long nilpotent_orbit_dim(const Partition& p, int d) {
    if (p.weight() != d) throw UnequalWeight("partition weight differs from matrix size");
    Partition t = conjugate(p);
    long s = 0;
    for (int part : t.parts) s += static_cast<long>(part) * part;
    return static_cast<long>(d) * d - s;
}

}  // namespace lamrep
