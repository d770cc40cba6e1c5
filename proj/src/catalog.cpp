#include "knotfill/catalog.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knotfill {

namespace {

[[noreturn]] void bad_subject(const std::string& text) {
    throw std::invalid_argument("unknown subject: '" + text + "'");
}

void check_twisted_params(int n, int m) {
    if (n < 2 || m < 1) throw std::invalid_argument("twisted family needs n >= 2, m >= 1");
}

// Accepts either order; callers store p > q > 1.
void check_torus_params(int& p, int& q) {
    if (p < q) std::swap(p, q);
    if (!(p > q && q > 1) || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus knot needs coprime p, q > 1 with p != q");
}

}  // namespace

KnotFamily KnotFamily::knm(int n, int m) {
    check_twisted_params(n, m);
    return {KnotTag::Knm, n, m, {}};
}

KnotFamily KnotFamily::kpnm(int n, int m) {
    check_twisted_params(n, m);
    return {KnotTag::Kpnm, n, m, {}};
}

KnotFamily KnotFamily::torus(int p, int q) {
    check_torus_params(p, q);
    return {KnotTag::Torus, p, q, {}};
}

KnotFamily KnotFamily::neg_torus(int p, int q) {
    check_torus_params(p, q);
    return {KnotTag::NegTorus, p, q, {}};
}

KnotFamily KnotFamily::sum(std::vector<KnotFamily> parts) {
    if (parts.size() < 2) throw std::invalid_argument("connected sum needs at least 2 summands");
    for (const auto& p : parts)
        if (p.tag == KnotTag::Sum) throw std::invalid_argument("nested connected sums not supported");
    KnotFamily k;
    k.tag = KnotTag::Sum;
    k.summands = std::move(parts);
    return k;
}

std::string KnotFamily::name() const {
    std::ostringstream out;
    switch (tag) {
        case KnotTag::Unknot: out << "unknot"; break;
        case KnotTag::Knm: out << "knm:" << a << "," << b; break;
        case KnotTag::Kpnm: out << "kpnm:" << a << "," << b; break;
        case KnotTag::Torus: out << "torus:" << a << "," << b; break;
        case KnotTag::NegTorus: out << "negtorus:" << a << "," << b; break;
        case KnotTag::Sum: {
            out << "sum:";
            for (size_t i = 0; i < summands.size(); ++i) {
                if (i) out << "+";
                out << summands[i].name();
            }
            break;
        }
    }
    return out.str();
}

namespace {

LaurentPoly1 torus_alexander(int p, int q) {
    // (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetrized.
    auto cyclic = [](long k) {
        LaurentPoly1 r;
        r.add_term(k, 1);
        r.add_term(0, -1);
        return r;
    };
    LaurentPoly1 num = cyclic(static_cast<long>(p) * q) * cyclic(1);
    auto step = num.divide_exact(cyclic(p));
    if (!step) throw std::logic_error("torus Alexander division failed");
    auto poly = step->divide_exact(cyclic(q));
    if (!poly) throw std::logic_error("torus Alexander division failed");
    long shift = static_cast<long>(p - 1) * (q - 1) / 2;
    LaurentPoly1 alex = poly->shifted(-shift + poly->low_deg() * 0);
    // poly has support [0, (p-1)(q-1)]; center it.
    alex = poly->shifted(-shift);
    if (alex.value_at_one() != 1 || !alex.is_symmetric())
        throw std::logic_error("torus Alexander normalization failed");
    return alex;
}

LaurentPoly1 knm_alexander(int n, int m) {
    LaurentPoly1 r;
    int sign0 = (n - 1) % 2 == 0 ? 1 : -1;
    r.add_term(0, sign0);
    for (int i = 1; i <= n - 1; ++i) {
        int s = (n - i - 1) % 2 == 0 ? 1 : -1;
        r.add_term(i, s);
        r.add_term(-i, s);
    }
    for (int k = 1; k <= m; ++k) {
        r.add_term(n + 3 * k - 2, -1);
        r.add_term(-(n + 3 * k - 2), -1);
        r.add_term(n + 3 * k - 1, 1);
        r.add_term(-(n + 3 * k - 1), 1);
    }
    return r;
}

LaurentPoly1 kpnm_alexander(int n, int m) {
    LaurentPoly1 r;
    r.add_term(0, n % 2 == 0 ? 1 : -1);
    for (int i = 1; i <= n - 2; ++i) {
        int s = (n - i) % 2 == 0 ? 1 : -1;
        r.add_term(i, s);
        r.add_term(-i, s);
    }
    for (int k = 0; k <= m - 1; ++k) {
        r.add_term(n + 3 * k, -1);
        r.add_term(-(n + 3 * k), -1);
        r.add_term(n + 3 * k + 1, 1);
        r.add_term(-(n + 3 * k + 1), 1);
    }
    return r;
}

}  // namespace

LaurentPoly1 alexander_closed_form(const KnotFamily& k) {
    switch (k.tag) {
        case KnotTag::Unknot:
            return LaurentPoly1::one();
        case KnotTag::Knm:
            return knm_alexander(k.a, k.b);
        case KnotTag::Kpnm:
            return kpnm_alexander(k.a, k.b);
        case KnotTag::Torus:
        case KnotTag::NegTorus:
            return torus_alexander(k.a, k.b);
        case KnotTag::Sum: {
            LaurentPoly1 prod = LaurentPoly1::one();
            for (const auto& s : k.summands) prod = prod * alexander_closed_form(s);
            return prod;
        }
    }
    throw std::logic_error("unreachable");
}

std::optional<BraidWord> catalog_braid_word(const KnotFamily& k) {
    switch (k.tag) {
        case KnotTag::Unknot: {
            BraidWord w(2, {});
            w.push(1, 1);
            return w;
        }
        case KnotTag::Knm:
        case KnotTag::Kpnm: {
            // sigma_1^{-2n+4} (sigma_1^-1 sigma_2^-1)^{3m+2} (resp. ^{3m+1}) in B_3
            BraidWord w(3, {});
            w.push(1, -2 * k.a + 4);
            int reps = 3 * k.b + (k.tag == KnotTag::Knm ? 2 : 1);
            for (int r = 0; r < reps; ++r) {
                w.push(1, -1);
                w.push(2, -1);
            }
            return w;
        }
        case KnotTag::Torus:
        case KnotTag::NegTorus: {
            // (sigma_1 ... sigma_{p-1})^{+-q} in B_p
            BraidWord w(k.a, {});
            int sign = k.tag == KnotTag::Torus ? 1 : -1;
            for (int r = 0; r < k.b; ++r)
                for (int i = 1; i < k.a; ++i) w.push(i, sign);
            return w;
        }
        case KnotTag::Sum:
            return std::nullopt;
    }
    throw std::logic_error("unreachable");
}

KnotMetadata family_metadata(const KnotFamily& k) {
    KnotMetadata md;
    switch (k.tag) {
        case KnotTag::Unknot:
            md.genus = 0;
            md.tb = -1;
            md.lspace_floor = -1;  // every positive surgery is a lens space
            break;
        case KnotTag::Knm:
            md.genus = k.a + 3L * k.b - 1;
            md.tb = 2L * k.a + 6L * k.b - 3;
            md.lspace_floor = 2 * md.genus - 1;
            md.stein_threshold = 9L * k.b + 4L * k.a - 8;
            break;
        case KnotTag::Kpnm:
            md.genus = k.a + 3L * k.b - 2;
            md.tb = 2L * k.a + 6L * k.b - 5;
            md.lspace_floor = 2 * md.genus - 1;
            md.stein_threshold = 9L * k.b + 4L * k.a - 4;
            break;
        case KnotTag::Torus:
            md.genus = static_cast<long>(k.a - 1) * (k.b - 1) / 2;
            md.tb = static_cast<long>(k.a) * k.b - k.a - k.b;
            md.lspace_floor = 2 * md.genus - 1;
            break;
        case KnotTag::NegTorus:
            md.genus = static_cast<long>(k.a - 1) * (k.b - 1) / 2;
            md.tb = -static_cast<long>(k.a) * k.b;
            // negative torus knots are not L-space knots; no floor
            break;
        case KnotTag::Sum: {
            // connected sums of L-space knots need not be L-space knots,
            // so no L-space floor is recorded
            for (const auto& s : k.summands) {
                KnotMetadata smd = family_metadata(s);
                md.genus += smd.genus;
                md.tb += smd.tb;
            }
            md.tb += static_cast<long>(k.summands.size()) - 1;
            break;
        }
    }
    return md;
}

LaurentPoly2 ln_delta_tilde_closed_form(int n) {
    if (n < 0) throw std::invalid_argument("Ln needs n >= 0");
    // -(t1 - 1)(t2^{n+1} - t2^n + ... + t2^{-n+1} - t2^{-n})
    LaurentPoly2 t1_factor = LaurentPoly2::term(1, 0, 1) - LaurentPoly2::constant(1);
    LaurentPoly2 t2_factor;
    for (long j = -n; j <= n + 1; ++j)
        t2_factor.add_term(0, j, (n + 1 - j) % 2 == 0 ? 1 : -1);
    return -(t1_factor * t2_factor);
}

LaurentPoly2 ln_conway_potential(int n) {
    if (n < 0) throw std::invalid_argument("Ln needs n >= 0");
    auto band = [](std::initializer_list<std::pair<long, int>> terms) {
        LaurentPoly2 p;
        for (auto [e2, c] : terms) p.add_term(0, e2, c);
        return p;
    };
    LaurentPoly2 t1_factor = LaurentPoly2::term(1, 0, 1) - LaurentPoly2::term(-1, 0, 1);
    LaurentPoly2 prev2 = -(t1_factor * band({{1, 1}, {-1, -1}}));               // nabla_0
    if (n == 0) return prev2;
    LaurentPoly2 prev1 = -(t1_factor * band({{3, 1}, {1, -1}, {-1, 1}, {-3, -1}}));  // nabla_1
    if (n == 1) return prev1;
    LaurentPoly2 mult = band({{2, 1}, {-2, 1}});
    for (int k = 2; k <= n; ++k) {
        LaurentPoly2 cur = mult * prev1 - prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

LaurentPoly2 ln_delta_tilde_by_recursion(int n) {
    // nabla(t1,t2) = Delta(t1^2,t2^2); the half-shift lands on integers.
    LaurentPoly2 nabla = ln_conway_potential(n);
    LaurentPoly2 r;
    for (const auto& [key, c] : nabla.coeffs()) {
        auto [j1, j2] = key;
        if ((j1 % 2 + 2) % 2 != 1 || (j2 % 2 + 2) % 2 != 1)
            throw std::logic_error("Conway potential has even exponents");
        r.add_term((j1 + 1) / 2, (j2 + 1) / 2, c);
    }
    return r;
}

LinkFamily LinkFamily::ln(int n) {
    if (n < 0) throw std::invalid_argument("Ln needs n >= 0");
    LinkFamily l;
    l.tag = LinkTag::Ln;
    l.n = n;
    l.delta_tilde = ln_delta_tilde_closed_form(n);
    l.comp1_num = LaurentPoly1::one();  // L_1 is the unknot
    // L_2 is T(2,2n+1): t^n - t^{n-1} + ... + t^{-n}
    LaurentPoly1 c2;
    for (long j = -n; j <= n; ++j) c2.add_term(j, (n - j) % 2 == 0 ? 1 : -1);
    l.comp2_num = c2;
    return l;
}

LinkFamily LinkFamily::two_bridge(int a1, int a2) {
    if (a1 != 5 || a2 != 5)
        throw std::invalid_argument("two-bridge link K(" + std::to_string(a1) + "," +
                                    std::to_string(a2) + ") is not in catalog (only K(5,5))");
    LinkFamily l;
    l.tag = LinkTag::TwoBridge;
    l.a1 = a1;
    l.a2 = a2;
    l.delta_tilde = parse_poly2(
        "-t2^-1 + t1*t2^-1 - t1^-1 + 1 - t1 + t1^2 + t1^-1*t2 - t2 + t1*t2 - t1^2*t2 + t2^2 - "
        "t1*t2^2");
    l.comp1_num = LaurentPoly1::one();  // both components are unknots
    l.comp2_num = LaurentPoly1::one();
    return l;
}

LinkFamily LinkFamily::unlink() {
    LinkFamily l;
    l.tag = LinkTag::Unlink;
    l.comp1_num = LaurentPoly1::one();
    l.comp2_num = LaurentPoly1::one();
    return l;
}

std::string LinkFamily::name() const {
    switch (tag) {
        case LinkTag::Ln: return "Ln:" + std::to_string(n);
        case LinkTag::TwoBridge: return "k2b:" + std::to_string(a1) + "," + std::to_string(a2);
        case LinkTag::Unlink: return "unlink";
    }
    throw std::logic_error("unreachable");
}

bool LinkFamily::lspace_known(long p1, long p2) const {
    switch (tag) {
        case LinkTag::Ln:
            return p1 >= 1 && p2 >= 2L * n + 1;
        case LinkTag::TwoBridge:
            return p1 == 3 && p2 == 3;  // recorded surgery fact for K(5,5)
        case LinkTag::Unlink:
            return p1 >= 1 && p2 >= 1;  // connected sums of lens spaces
    }
    return false;
}

namespace {

std::pair<int, int> parse_int_pair(const std::string& text, const std::string& whole) {
    size_t comma = text.find(',');
    if (comma == std::string::npos) bad_subject(whole);
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        bad_subject(whole);
    }
}

KnotFamily parse_simple_knot(const std::string& text, const std::string& whole) {
    if (text == "unknot" || text == "torus:unknot") return KnotFamily::unknot();
    size_t colon = text.find(':');
    if (colon == std::string::npos) bad_subject(whole);
    std::string head = text.substr(0, colon), rest = text.substr(colon + 1);
    if (head == "knm") {
        auto [n, m] = parse_int_pair(rest, whole);
        return KnotFamily::knm(n, m);
    }
    if (head == "kpnm") {
        auto [n, m] = parse_int_pair(rest, whole);
        return KnotFamily::kpnm(n, m);
    }
    if (head == "torus") {
        auto [p, q] = parse_int_pair(rest, whole);
        return KnotFamily::torus(p, q);
    }
    if (head == "negtorus") {
        auto [p, q] = parse_int_pair(rest, whole);
        return KnotFamily::neg_torus(p, q);
    }
    if (head == "pretzel") {
        // P(-2,3,2n+1) is K_{n,1}
        int a, b, c;
        if (std::sscanf(rest.c_str(), "%d,%d,%d", &a, &b, &c) != 3) bad_subject(whole);
        if (a != -2 || b != 3 || c < 5 || c % 2 == 0) bad_subject(whole);
        return KnotFamily::knm((c - 1) / 2, 1);
    }
    bad_subject(whole);
}

}  // namespace

KnotFamily parse_knot_subject(const std::string& text) {
    if (text.rfind("sum:", 0) == 0) {
        std::vector<KnotFamily> parts;
        std::string rest = text.substr(4);
        size_t start = 0;
        while (start <= rest.size()) {
            size_t plus = rest.find('+', start);
            std::string piece =
                plus == std::string::npos ? rest.substr(start) : rest.substr(start, plus - start);
            if (piece.empty()) bad_subject(text);
            parts.push_back(parse_simple_knot(piece, text));
            if (plus == std::string::npos) break;
            start = plus + 1;
        }
        return KnotFamily::sum(std::move(parts));
    }
    return parse_simple_knot(text, text);
}

bool is_link_subject(const std::string& text) {
    return text.rfind("Ln:", 0) == 0 || text.rfind("ln:", 0) == 0 || text.rfind("k2b:", 0) == 0 ||
           text == "unlink";
}

LinkFamily parse_link_subject(const std::string& text) {
    if (text == "unlink") return LinkFamily::unlink();
    if (text.rfind("Ln:", 0) == 0 || text.rfind("ln:", 0) == 0) {
        try {
            return LinkFamily::ln(std::stoi(text.substr(3)));
        } catch (const std::invalid_argument&) {
            bad_subject(text);
        }
    }
    if (text.rfind("k2b:", 0) == 0) {
        auto [a1, a2] = parse_int_pair(text.substr(4), text);
        return LinkFamily::two_bridge(a1, a2);
    }
    bad_subject(text);
}

}  // namespace knotfill
