#include "knotfill/obstruct.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "knotfill/slopes.hpp"

namespace knotfill {

SquareFreeDecomposition square_free_decompose(const Int& n) {
    if (n < 1) throw std::invalid_argument("square-free decomposition needs a positive integer");
    SquareFreeDecomposition out{n, 1, 1};
    Int rest = n;
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) out.w *= p;
        if (e % 2 == 1) out.z *= p;
    }
    out.z *= rest;  // leftover prime
    return out;
}

OwensStrleResult owens_strle_test(const Rat& max_d, const Int& h1_order) {
    SquareFreeDecomposition dec = square_free_decompose(h1_order);
    OwensStrleResult res;
    res.z = dec.z;
    res.w = dec.w;
    if (dec.z % 2 == 1)
        res.threshold = Rat(dec.z - 1, 4 * dec.z);  // (1 - 1/z)/4
    else
        res.threshold = Rat(1, 4);
    // |H1| is a square iff z == 1; the 1/6 shortcut applies otherwise.
    res.via_nonsquare = dec.z != 1 && max_d < Rat(1, 6);
    res.obstructed = max_d < res.threshold || res.via_nonsquare;
    return res;
}

SlopeInterval extend_downward(const Rat& failing_slope, const Rat& lspace_floor) {
    if (failing_slope <= 0)
        throw std::invalid_argument("downward extension needs a positive failing slope");
    SlopeInterval out;
    out.lo = std::max(lspace_floor, Rat(0));
    out.hi = failing_slope;
    return out;
}

CriterionResult criterion_2g_minus_1(long g, const TorsionCoefficients& t) {
    if (g < 1) throw std::invalid_argument("criterion needs genus >= 1");
    CriterionResult res;
    res.holds = true;
    long k_max = (g - 1) / 4 + 1;
    for (long k = 0; k <= k_max; ++k) {
        // minimal i >= 0 with 2i > 2g-1 - sqrt((8k+1)(2g-1)), decided by
        // exact integer square comparison
        Int radicand = Int(8 * k + 1) * Int(2 * g - 1);
        long ik = 0;
        for (;; ++ik) {
            Int lhs = Int(2 * g - 1) - 2 * Int(ik);
            if (lhs < 0 || radicand > lhs * lhs) break;
            if (ik > 2 * g) throw std::logic_error("i_k search did not terminate");
        }
        res.i_sequence.push_back(ik);
        if (t.at(ik) < k + 1) res.holds = false;
    }
    return res;
}

namespace {

std::string bound_str(const std::optional<Rat>& b, bool neg_inf) {
    if (!b) return neg_inf ? "-inf" : "inf";
    return rat_str(*b);
}

}  // namespace

std::string SlopeWindow::str() const {
    std::string s = lo && lo_closed ? "[" : "(";
    s += bound_str(lo, true) + ", " + bound_str(hi, false);
    s += hi && hi_closed ? "]" : ")";
    return s;
}

bool SlopeWindow::overlaps(const SlopeWindow& o) const {
    // this entirely below o?
    if (hi && o.lo && (*hi < *o.lo || (*hi == *o.lo && !(hi_closed && o.lo_closed)))) return false;
    // o entirely below this?
    if (o.hi && lo && (*o.hi < *lo || (*o.hi == *lo && !(o.hi_closed && lo_closed)))) return false;
    return true;
}

namespace {

// Complement of a set of pairwise disjoint windows, as open/half-open gaps.
std::vector<SlopeWindow> coverage_gaps(std::vector<SlopeWindow> covered) {
    std::vector<SlopeWindow> out;
    if (covered.empty()) {
        out.push_back({std::nullopt, std::nullopt, false, false, ""});
        return out;
    }
    std::sort(covered.begin(), covered.end(), [](const SlopeWindow& a, const SlopeWindow& b) {
        if (!a.lo) return static_cast<bool>(b.lo);
        if (!b.lo) return false;
        return *a.lo < *b.lo;
    });
    for (size_t i = 0; i + 1 < covered.size(); ++i)
        if (covered[i].overlaps(covered[i + 1]))
            throw std::logic_error("verdict windows overlap");

    if (covered.front().lo)
        out.push_back({std::nullopt, covered.front().lo, false, !covered.front().lo_closed, ""});
    for (size_t i = 0; i + 1 < covered.size(); ++i) {
        const SlopeWindow& a = covered[i];
        const SlopeWindow& b = covered[i + 1];
        bool lo_cl = !a.hi_closed, hi_cl = !b.lo_closed;
        // empty or point-touching gap
        if (*a.hi > *b.lo) throw std::logic_error("verdict windows overlap");
        if (*a.hi == *b.lo && (a.hi_closed || b.lo_closed)) continue;
        SlopeWindow gap{a.hi, b.lo, lo_cl, hi_cl, ""};
        if (*gap.lo == *gap.hi && !(lo_cl && hi_cl)) continue;
        out.push_back(gap);
    }
    if (covered.back().hi)
        out.push_back({covered.back().hi, std::nullopt, !covered.back().hi_closed, false, ""});
    return out;
}

nlohmann::json window_json(const SlopeWindow& w) {
    nlohmann::json j;
    j["lo"] = w.lo ? nlohmann::json(rat_str(*w.lo)) : nlohmann::json(nullptr);
    j["hi"] = w.hi ? nlohmann::json(rat_str(*w.hi)) : nlohmann::json(nullptr);
    j["lo_closed"] = w.lo_closed;
    j["hi_closed"] = w.hi_closed;
    j["interval"] = w.str();
    if (!w.citation.empty()) j["citation"] = w.citation;
    return j;
}

}  // namespace

std::string FillabilityReport::text() const {
    std::ostringstream out;
    out << "subject: " << subject;
    if (is_link) out << "  surgery (" << p1 << ", " << p2 << ")";
    out << "\n";
    for (const auto& w : nonfillable) out << "nonfillable: " << w.str() << "  " << w.citation << "\n";
    for (const auto& w : stein) out << "stein: " << w.str() << "  " << w.citation << "\n";
    for (const auto& w : unknown) out << "unknown: " << w.str() << "\n";
    if (!link_verdict.empty()) out << "verdict: " << link_verdict << "\n";
    if (max_d) {
        out << "evidence: max d = " << rat_str(*max_d);
        if (max_d_index1 && max_d_index2)
            out << " at (i1, i2) = (" << *max_d_index1 << ", " << *max_d_index2 << ")";
        else if (max_d_index1)
            out << " at i = " << *max_d_index1;
        if (h1_order) out << ", |H1| = " << h1_order->str();
        if (test_slope) out << ", test slope " << *test_slope;
        if (obstruction)
            out << ", threshold " << rat_str(obstruction->threshold)
                << (obstruction->obstructed ? " (fails)" : " (passes)");
        out << "  [Prop 2.2]\n";
    }
    for (const auto& n : notes) out << "note: " << n << "\n";
    return out.str();
}

std::string FillabilityReport::json() const {
    nlohmann::json j;
    j["subject"] = subject;
    if (is_link) {
        j["p1"] = p1;
        j["p2"] = p2;
        j["verdict"] = link_verdict;
    }
    j["nonfillable"] = nlohmann::json::array();
    for (const auto& w : nonfillable) j["nonfillable"].push_back(window_json(w));
    j["stein"] = nlohmann::json::array();
    for (const auto& w : stein) j["stein"].push_back(window_json(w));
    j["unknown"] = nlohmann::json::array();
    for (const auto& w : unknown) j["unknown"].push_back(window_json(w));
    j["notes"] = notes;
    nlohmann::json ev;
    if (max_d) ev["max_d"] = rat_str(*max_d);
    if (max_d_index1) ev["max_d_index1"] = *max_d_index1;
    if (max_d_index2) ev["max_d_index2"] = *max_d_index2;
    if (h1_order) ev["h1_order"] = h1_order->str();
    if (test_slope) ev["test_slope"] = *test_slope;
    if (obstruction) {
        ev["obstructed"] = obstruction->obstructed;
        ev["threshold"] = rat_str(obstruction->threshold);
        ev["via_nonsquare"] = obstruction->via_nonsquare;
        ev["z"] = obstruction->z.str();
        ev["w"] = obstruction->w.str();
    }
    j["evidence"] = ev;
    return j.dump();
}

FillabilityReport verdict(const KnotFamily& k) {
    FillabilityReport rep;
    rep.subject = k.name();
    KnotMetadata md = family_metadata(k);

    // Slopes below the maximal Thurston-Bennequin invariant give Stein
    // fillable surgeries; above a recorded threshold likewise.
    rep.stein.push_back({std::nullopt, Rat(md.tb), false, false, "[§1]"});
    if (auto sfc = sfc_known(k)) {
        rep.stein.push_back({sfc->value, std::nullopt, true, false, sfc->citation});
    } else if (md.stein_threshold) {
        rep.stein.push_back({Rat(*md.stein_threshold), std::nullopt, true, false, "[Thm 1.8]"});
    }

    if (!md.lspace_floor) {
        rep.notes.push_back(
            "no recorded L-space surgery range for this family; the negative-definite "
            "obstruction is omitted [Prop 2.2]");
    } else {
        long slope = std::max(2 * md.genus, 1L);
        DInvariantTableKnot table = d_knot_surgery(alexander_closed_form(k), slope);
        Rat max_d = table.max();
        rep.max_d = max_d;
        for (long i = 0; i < slope; ++i)
            if (table.at(i) == max_d) {
                rep.max_d_index1 = i;
                break;
            }
        rep.h1_order = Int(slope);
        rep.test_slope = slope;
        OwensStrleResult res = owens_strle_test(max_d, Int(slope));
        rep.obstruction = res;
        if (res.obstructed) {
            SlopeInterval iv = extend_downward(Rat(slope), Rat(*md.lspace_floor));
            if (!iv.empty()) {
                std::string tag = (k.tag == KnotTag::Knm || k.tag == KnotTag::Kpnm)
                                      ? "[Thm 1.1]"
                                      : "[Prop 2.2]";
                rep.nonfillable.push_back({iv.lo, iv.hi, true, true, tag});
                rep.notes.push_back(
                    "negative-definite failure at slope " + std::to_string(slope) +
                    " extends down over the recorded L-space range [Lemma 2.3]");
            }
        } else {
            rep.notes.push_back("negative-definite test passes at slope " +
                                std::to_string(slope) + "; no obstruction found [Prop 2.2]");
        }
    }

    std::vector<SlopeWindow> covered = rep.nonfillable;
    covered.insert(covered.end(), rep.stein.begin(), rep.stein.end());
    rep.unknown = coverage_gaps(std::move(covered));
    return rep;
}

FillabilityReport verdict(const LinkFamily& link, long p1, long p2) {
    if (p1 < 1 || p2 < 1) throw std::invalid_argument("surgery slopes must be positive integers");
    FillabilityReport rep;
    rep.subject = link.name();
    rep.is_link = true;
    rep.p1 = p1;
    rep.p2 = p2;

    DInvariantTableLink table = d_link_surgery(link, p1, p2);
    Rat max_d = table.max();
    rep.max_d = max_d;
    for (long i1 = 0; i1 < p1 && !rep.max_d_index1; ++i1)
        for (long i2 = 0; i2 < p2; ++i2)
            if (table.at(i1, i2) == max_d) {
                rep.max_d_index1 = i1;
                rep.max_d_index2 = i2;
                break;
            }
    Int h1 = Int(p1) * Int(p2);
    rep.h1_order = h1;

    if (link.tag == LinkTag::Ln)
        rep.notes.push_back("Stein fillable for (r1, r2)-surgeries with r1 > 0 and r2 > " +
                            std::to_string(4 * link.n + 4) + " [§4.3]");

    if (link.tag == LinkTag::Ln && p1 == 2 && p2 == 2L * link.n + 2) {
        long s = link.n + 1;
        long r = 0;
        while (r * r < s) ++r;
        if (r * r == s) {
            rep.notes.push_back("criterion inapplicable: n+1 = " + std::to_string(s) +
                                " is a square [Thm 1.4]");
            return rep;
        }
    }

    if (!link.lspace_known(p1, p2)) {
        rep.notes.push_back(
            "the L-space property is not recorded for this slope pair; the obstruction is "
            "inconclusive [Lemma 3.9]");
        return rep;
    }

    OwensStrleResult res = owens_strle_test(max_d, h1);
    rep.obstruction = res;
    if (res.obstructed) {
        rep.link_verdict = "nonfillable";
        std::string tag = link.tag == LinkTag::Ln ? "[Thm 1.4]" : "[Prop 1.6]";
        rep.notes.push_back("negative-definite test fails: max d = " + rat_str(max_d) +
                            " against threshold " + rat_str(res.threshold) +
                            (res.via_nonsquare ? " (non-square |H1|, 1/6 shortcut)" : "") + " " +
                            tag);
    } else {
        rep.link_verdict = "not obstructed";
        rep.notes.push_back("negative-definite test passes; no obstruction found [Prop 2.2]");
    }
    return rep;
}

}  // namespace knotfill
