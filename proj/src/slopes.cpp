#include "knotfill/slopes.hpp"

#include <numeric>
#include <stdexcept>

namespace knotfill {

long mod_inverse(long a, long n) {
    if (n < 2) throw std::invalid_argument("modulus must be at least 2");
    long r0 = n, r1 = ((a % n) + n) % n;
    long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        long s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("no inverse: arguments not coprime");
    return ((s0 % n) + n) % n;
}

std::vector<long> cf_expand(long p, long q) {
    if (!(p > q && q >= 1) || std::gcd(p, q) != 1)
        throw std::invalid_argument("continued fraction needs coprime p > q >= 1");
    std::vector<long> digits;
    while (q > 0) {
        long c = (p + q - 1) / q;  // ceil(p/q)
        digits.push_back(c);
        long next_q = c * q - p;  // p/q = c - next_q/q, recurse on q/next_q
        p = q;
        q = next_q;
    }
    return digits;
}

Rat m_torus(long p, long q) {
    SlopeInvariants inv = slope_invariants(p, q);
    return inv.m_value;
}

SlopeInvariants slope_invariants(long p, long q) {
    if (!(p > q && q > 1) || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus slope data needs coprime p > q > 1");
    SlopeInvariants inv;
    inv.p = p;
    inv.q = q;
    inv.q_star = mod_inverse(q, p);
    inv.p_star = mod_inverse(p, q);
    inv.cf = cf_expand(p, q);
    Int pq = Int(p) * Int(q);
    // m(T(p,q)) = pq - q/p* for even expansion length, pq - p/q* for odd.
    if (inv.cf.size() % 2 == 0)
        inv.m_value = Rat(pq) - Rat(q, inv.p_star);
    else
        inv.m_value = Rat(pq) - Rat(p, inv.q_star);
    return inv;
}

std::optional<SfcValue> sfc_known(const KnotFamily& k) {
    switch (k.tag) {
        case KnotTag::Unknot:
            return SfcValue{Rat(-1), true, "[§4.2]"};
        case KnotTag::Torus:
            return SfcValue{m_torus(k.a, k.b), true, "[§4.2]"};
        case KnotTag::NegTorus:
            return SfcValue{Rat(-Int(k.a) * Int(k.b)), true, "[Ex 4.5]"};
        case KnotTag::Knm:
        case KnotTag::Kpnm:
        case KnotTag::Sum:
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace knotfill
