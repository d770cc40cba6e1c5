#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotfill/catalog.hpp"
#include "knotfill/floer.hpp"
#include "knotfill/rational.hpp"

namespace knotfill {

/// N = z * w^2 with z square-free.
struct SquareFreeDecomposition {
    Int n, z, w;
};

SquareFreeDecomposition square_free_decompose(const Int& n);

struct OwensStrleResult {
    bool obstructed = false;   // the surgered manifold bounds no negative-definite 4-manifold
    Rat threshold;             // (1 - 1/z)/4 for z odd, 1/4 for z even
    bool via_nonsquare = false;  // fired through the |H1| non-square, max d < 1/6 shortcut
    Int z, w;
};

/// Negative-definiteness test from the maximum d-invariant and |H_1|.
OwensStrleResult owens_strle_test(const Rat& max_d, const Int& h1_order);

struct SlopeInterval {
    Rat lo, hi;  // closed interval [lo, hi]; empty() when lo > hi
    bool empty() const { return lo > hi; }
};

/// Downward extension of a negative-definiteness failure: the failure at
/// `failing_slope` propagates to every smaller positive slope, and the
/// fillability conclusion holds where the L-space property does, i.e. on
/// [lspace_floor, failing_slope]. Requires failing_slope > 0.
SlopeInterval extend_downward(const Rat& failing_slope, const Rat& lspace_floor);

struct CriterionResult {
    bool holds = false;
    std::vector<long> i_sequence;  // i_0 ... i_{[(g-1)/4]+1}
};

/// The (2g-1)-slope criterion: i_k = min{ i >= 0 : 2i > 2g-1 - sqrt((8k+1)(2g-1)) },
/// decided by exact integer square comparison, and holds iff t_{i_k} >= k+1
/// for every k in [0, [(g-1)/4]+1].
CriterionResult criterion_2g_minus_1(long g, const TorsionCoefficients& t);

/// One half-open/closed slope window of a verdict, with its citation tag.
struct SlopeWindow {
    std::optional<Rat> lo, hi;  // nullopt = unbounded
    bool lo_closed = true, hi_closed = true;
    std::string citation;

    std::string str() const;
    bool overlaps(const SlopeWindow& o) const;
};

struct FillabilityReport {
    std::string subject;
    bool is_link = false;
    long p1 = 0, p2 = 0;  // link surgery slopes

    std::vector<SlopeWindow> nonfillable;
    std::vector<SlopeWindow> stein;
    std::vector<SlopeWindow> unknown;
    // Link verdicts are per-slope-pair rather than windows.
    std::string link_verdict;  // "nonfillable" | "not obstructed" | ""
    std::vector<std::string> notes;  // each ends with a citation tag

    // Evidence
    std::optional<Rat> max_d;
    std::optional<long> max_d_index1, max_d_index2;
    std::optional<Int> h1_order;
    std::optional<OwensStrleResult> obstruction;
    std::optional<long> test_slope;

    std::string text() const;
    std::string json() const;
};

FillabilityReport verdict(const KnotFamily& k);
FillabilityReport verdict(const LinkFamily& link, long p1, long p2);

}  // namespace knotfill
