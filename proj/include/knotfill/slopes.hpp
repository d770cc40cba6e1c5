#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotfill/catalog.hpp"
#include "knotfill/rational.hpp"

namespace knotfill {

/// Unique inverse of a mod n in [1, n-1]. Throws for non-coprime input.
long mod_inverse(long a, long n);

/// Hirzebruch-Jung (minus-sign) continued fraction of p/q: the unique
/// expansion p/q = c1 - 1/(c2 - ...) with all digits >= 2 (for p > q > 1;
/// (n,1) gives [n]). Requires p > q >= 1 coprime.
std::vector<long> cf_expand(long p, long q);

/// Owens-Strle invariant of a positive torus knot:
///   m(T(p,q)) = pq - q/p*  (expansion length even),
///             = pq - p/q*  (expansion length odd),
/// with qq* = 1 mod p and pp* = 1 mod q.
Rat m_torus(long p, long q);

struct SlopeInvariants {
    long p = 0, q = 0;
    long q_star = 0;  // qq* == 1 mod p, in [1, p-1]
    long p_star = 0;  // pp* == 1 mod q, in [1, q-1]
    std::vector<long> cf;
    Rat m_value;
};

SlopeInvariants slope_invariants(long p, long q);

struct SfcValue {
    Rat value;
    bool exact = true;  // false: lower bound only
    std::string citation;
};

/// Stein fillable coefficient where the catalog knows one; nullopt when the
/// paper trail gives neither a value nor a usable bound.
std::optional<SfcValue> sfc_known(const KnotFamily& k);

}  // namespace knotfill
