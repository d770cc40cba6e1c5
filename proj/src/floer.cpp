#include "knotfill/floer.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace knotfill {

Int TorsionCoefficients::at(long i) const {
    if (i < 0) throw std::invalid_argument("torsion coefficient index must be nonnegative");
    if (i > genus) return 0;
    return values[static_cast<size_t>(i)];
}

TorsionCoefficients torsion_coefficients(const LaurentPoly1& alex) {
    if (alex.is_zero() || alex.value_at_one() != 1)
        throw std::invalid_argument("torsion coefficients need Delta(1) = 1");
    if (!alex.is_symmetric())
        throw std::invalid_argument("torsion coefficients need a symmetrized polynomial");

    TorsionCoefficients t;
    t.genus = alex.high_deg();
    for (long i = 0; i <= t.genus; ++i) {
        Int acc = 0;
        for (long j = 1; i + j <= t.genus; ++j) acc += j * alex.coeff(i + j);
        t.values.push_back(acc);
    }
    for (size_t i = 0; i < t.values.size(); ++i) {
        if (t.values[i] < 0 || (i > 0 && t.values[i] > t.values[i - 1]))
            throw std::invalid_argument(
                "torsion coefficients not nonnegative and non-increasing; input is not an "
                "L-space knot polynomial");
    }
    return t;
}

Rat d_lens(long p, long i) {
    if (p < 1 || i < 0 || i > p) throw std::invalid_argument("d_lens needs p >= 1, 0 <= i <= p");
    Int a = Int(p) - 2 * Int(i);
    return Rat(a * a, 4 * Int(p)) - Rat(1, 4);
}

Rat DInvariantTableKnot::max() const {
    if (entries.empty()) throw std::logic_error("empty d-invariant table");
    return *std::max_element(entries.begin(), entries.end());
}

std::string DInvariantTableKnot::json() const {
    nlohmann::json j;
    j["p"] = p;
    j["entries"] = nlohmann::json::array();
    for (long i = 0; i < p; ++i)
        j["entries"].push_back({{"i", i}, {"d", rat_str(at(i))}});
    j["max"] = rat_str(max());
    return j.dump();
}

DInvariantTableKnot d_knot_surgery(const LaurentPoly1& alex, long p) {
    if (p < 1) throw std::invalid_argument("surgery slope must be a positive integer");
    TorsionCoefficients t = torsion_coefficients(alex);
    DInvariantTableKnot table;
    table.p = p;
    for (long i = 0; i < p; ++i) {
        long ibar = std::min(i, p - i);
        table.entries.push_back(d_lens(p, ibar) - 2 * Rat(t.at(ibar)));
    }
    return table;
}

HFunction::HFunction(LaurentPoly2 delta_tilde, LaurentPoly1 comp1_num, LaurentPoly1 comp2_num)
    : delta_tilde_(std::move(delta_tilde)),
      num1_(std::move(comp1_num)),
      num2_(std::move(comp2_num)) {}

Int HFunction::component_tail(const LaurentPoly1& numerator, long s) {
    Int acc = 0;
    for (const auto& [k, c] : numerator.coeffs())
        if (k > s) acc += c * Int(k - s);
    return acc;
}

Int HFunction::H(long s1, long s2) const {
    Int q = 0;
    for (const auto& [key, c] : delta_tilde_.coeffs())
        if (key.first > s1 && key.second > s2) q += c;
    return component_tail(num1_, s1) + component_tail(num2_, s2) - q;
}

Int HFunction::h(long s1, long s2) const {
    Int base = Int(std::max(0L, -s1)) + Int(std::max(0L, -s2));
    return H(s1, s2) - base;
}

HFunction h_function(const LinkFamily& link) {
    if (link.linking_number != 0)
        throw std::invalid_argument("h-function evaluation requires linking number zero");
    return HFunction(link.delta_tilde, link.comp1_num, link.comp2_num);
}

const Rat& DInvariantTableLink::at(long i1, long i2) const {
    if (i1 < 0 || i1 >= p1 || i2 < 0 || i2 >= p2)
        throw std::invalid_argument("spin-c index out of range");
    return entries[static_cast<size_t>(i1) * static_cast<size_t>(p2) + static_cast<size_t>(i2)];
}

Rat DInvariantTableLink::max() const {
    if (entries.empty()) throw std::logic_error("empty d-invariant table");
    return *std::max_element(entries.begin(), entries.end());
}

std::string DInvariantTableLink::json() const {
    nlohmann::json j;
    j["p1"] = p1;
    j["p2"] = p2;
    j["entries"] = nlohmann::json::array();
    for (long i1 = 0; i1 < p1; ++i1)
        for (long i2 = 0; i2 < p2; ++i2)
            j["entries"].push_back({{"i1", i1}, {"i2", i2}, {"d", rat_str(at(i1, i2))}});
    j["max"] = rat_str(max());
    return j.dump();
}

DInvariantTableLink d_link_surgery(const LinkFamily& link, long p1, long p2) {
    if (p1 < 1 || p2 < 1) throw std::invalid_argument("surgery slopes must be positive integers");
    HFunction hf = h_function(link);
    DInvariantTableLink table;
    table.p1 = p1;
    table.p2 = p2;
    for (long i1 = 0; i1 < p1; ++i1)
        for (long i2 = 0; i2 < p2; ++i2) {
            Int best = hf.h(i1, i2);
            best = std::max(best, hf.h(i1, i2 - p2));
            best = std::max(best, hf.h(i1 - p1, i2));
            best = std::max(best, hf.h(i1 - p1, i2 - p2));
            table.entries.push_back(d_lens(p1, i1) + d_lens(p2, i2) - 2 * Rat(best));
        }
    return table;
}

}  // namespace knotfill
