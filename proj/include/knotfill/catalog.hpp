#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotfill/braid.hpp"
#include "knotfill/laurent.hpp"

namespace knotfill {

// Closed-form invariant data for the knot and link families the tool
// understands. Catalog values double as oracles against the braid pipeline.

enum class KnotTag {
    Unknot,
    Knm,       // twisted torus knot T(3,3m+2;2,n-2), n >= 2, m >= 1
    Kpnm,      // twisted torus knot T(3,3m+1;2,n-2), n >= 2, m >= 1
    Torus,     // positive torus knot T(p,q), p > q > 1 coprime
    NegTorus,  // negative torus knot T(-p,q)
    Sum,       // connected sum of catalog knots
};

struct KnotFamily {
    KnotTag tag = KnotTag::Unknot;
    int a = 0;  // n for Knm/Kpnm, p for Torus/NegTorus
    int b = 0;  // m for Knm/Kpnm, q for Torus/NegTorus
    std::vector<KnotFamily> summands;  // Sum only

    static KnotFamily unknot() { return {}; }
    static KnotFamily knm(int n, int m);
    static KnotFamily kpnm(int n, int m);
    static KnotFamily torus(int p, int q);
    static KnotFamily neg_torus(int p, int q);
    static KnotFamily sum(std::vector<KnotFamily> parts);

    std::string name() const;  // CLI subject string, e.g. "knm:3,1"
};

struct KnotMetadata {
    long genus = 0;
    long tb = 0;  // maximal Thurston-Bennequin invariant
    std::optional<long> lspace_floor;      // slope above which surgeries are L-spaces
    std::optional<long> stein_threshold;   // slope above which surgeries are Stein fillable
};

/// Symmetrized Alexander polynomial with Delta(1) = 1.
LaurentPoly1 alexander_closed_form(const KnotFamily& k);

/// Closed-braid presentation where the catalog has one (3-braid families
/// and torus knots T(p,q) as (sigma_1...sigma_{p-1})^q).
std::optional<BraidWord> catalog_braid_word(const KnotFamily& k);

KnotMetadata family_metadata(const KnotFamily& k);

enum class LinkTag {
    Ln,         // chain-twisted Whitehead family, n >= 0 (n = 0 is the Whitehead link)
    TwoBridge,  // K(a1,a2), both odd; only (5,5) is table-backed
    Unlink,     // two-component unlink surrogate (h == 0)
};

/// Two-component link with linking number zero. Stores the shifted
/// two-variable Alexander polynomial and the finite component numerators
/// Delta(L_i); the infinite tail series are never materialized.
struct LinkFamily {
    LinkTag tag = LinkTag::Unlink;
    int n = 0;            // Ln parameter
    int a1 = 0, a2 = 0;   // TwoBridge parameters
    LaurentPoly2 delta_tilde;
    LaurentPoly1 comp1_num;  // Delta(L_1)
    LaurentPoly1 comp2_num;  // Delta(L_2)
    int linking_number = 0;

    static LinkFamily ln(int n);
    static LinkFamily two_bridge(int a1, int a2);  // throws if not in catalog
    static LinkFamily unlink();

    std::string name() const;  // e.g. "Ln:2", "k2b:5,5"
    /// True when the catalog records the (p1,p2)-surgery as an L-space.
    bool lspace_known(long p1, long p2) const;
};

/// Closed form of the shifted Alexander polynomial of L_n:
///   -(t1 - 1)(t2^{n+1} - t2^n + ... + t2^{-n+1} - t2^{-n}).
LaurentPoly2 ln_delta_tilde_closed_form(int n);

/// Same polynomial built through the Conway-potential recursion
///   nabla_n = (t2^2 + t2^-2) nabla_{n-1} - nabla_{n-2}.
LaurentPoly2 ln_delta_tilde_by_recursion(int n);

/// Conway potential of L_n (exponents of nabla live at twice the Alexander
/// lattice); exposed for the recursion tests.
LaurentPoly2 ln_conway_potential(int n);

// Subject-string addressing used by the CLI: `knm:3,1`, `kpnm:4,2`,
// `torus:3,5`, `negtorus:3,5`, `sum:torus:2,3+torus:2,5`, `unknot`,
// `pretzel:-2,3,7` (alias of knm:n,1). Throws std::invalid_argument on
// unknown subjects.
KnotFamily parse_knot_subject(const std::string& text);
/// `Ln:2`, `k2b:5,5`.
LinkFamily parse_link_subject(const std::string& text);
bool is_link_subject(const std::string& text);

}  // namespace knotfill
