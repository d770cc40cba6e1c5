#pragma once

#include <vector>

#include "knotfill/catalog.hpp"
#include "knotfill/laurent.hpp"
#include "knotfill/rational.hpp"

namespace knotfill {

/// Torsion coefficients t_i = sum_{j>0} j a_{i+j} of a symmetrized
/// Alexander polynomial, for 0 <= i <= g. Entries are nonnegative and
/// non-increasing (rejected otherwise; both fail only outside the L-space
/// knot regime this tool works in).
struct TorsionCoefficients {
    long genus = 0;
    std::vector<Int> values;  // t_0 ... t_g

    /// t_i for any i >= 0; zero beyond the genus.
    Int at(long i) const;
};

/// Requires a symmetric input with Delta(1) = 1.
TorsionCoefficients torsion_coefficients(const LaurentPoly1& alex);

/// d(S^3_p(U), i) = (p - 2i)^2 / (4p) - 1/4, for 0 <= i <= p.
Rat d_lens(long p, long i);

/// d-invariants of p-surgery on a knot, indexed by Spin^c label i in [0, p-1].
struct DInvariantTableKnot {
    long p = 0;
    std::vector<Rat> entries;

    const Rat& at(long i) const { return entries.at(static_cast<size_t>(i)); }
    Rat max() const;
    std::string json() const;  // {"p": ..., "entries": [{"i": ..., "d": ...}]}
};

/// entry(i) = d_lens(p, min(i, p-i)) - 2 t_{min(i, p-i)}.
DInvariantTableKnot d_knot_surgery(const LaurentPoly1& alex, long p);

/// Lattice H- and h-function of a linking-zero two-component L-space link,
/// evaluated from the shifted Alexander polynomial and the component
/// numerators. Tail sums are closed-form; no series is materialized.
class HFunction {
public:
    HFunction(LaurentPoly2 delta_tilde, LaurentPoly1 comp1_num, LaurentPoly1 comp2_num);

    Int H(long s1, long s2) const;
    /// h = H - H_O, with H_O(s1,s2) = max(0,-s1) + max(0,-s2) (unlink).
    Int h(long s1, long s2) const;

    /// Closed-form tail sum sum_{k>s} c_k (k - s) for one component.
    static Int component_tail(const LaurentPoly1& numerator, long s);

private:
    LaurentPoly2 delta_tilde_;
    LaurentPoly1 num1_, num2_;
};

/// Throws std::invalid_argument for nonzero linking number.
HFunction h_function(const LinkFamily& link);

struct DInvariantTableLink {
    long p1 = 0, p2 = 0;
    std::vector<Rat> entries;  // row-major, (i1, i2) at i1 * p2 + i2

    const Rat& at(long i1, long i2) const;
    Rat max() const;
    std::string json() const;
};

/// Theorem-style two-index table: entry(i1,i2) uses the four lattice
/// representatives s_j in {i_j, i_j - p_j}.
DInvariantTableLink d_link_surgery(const LinkFamily& link, long p1, long p2);

}  // namespace knotfill
