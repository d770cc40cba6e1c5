#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotfill/braid.hpp"
#include "knotfill/catalog.hpp"
#include "knotfill/floer.hpp"
#include "knotfill/obstruct.hpp"
#include "knotfill/parse.hpp"
#include "knotfill/slopes.hpp"
#include "knotfill/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitOracleMismatch = 2;
constexpr int kExitReproduceFailure = 3;

struct Output {
    std::string path;  // empty = stdout

    void emit(const std::string& payload) const {
        if (path.empty()) {
            std::cout << payload;
            if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::invalid_argument("cannot open output file: " + path);
        f << payload;
        if (!payload.empty() && payload.back() != '\n') f << "\n";
    }
};

long parse_integer_slope(const std::string& text) {
    knotfill::Rat r = knotfill::rat_parse(text);
    if (denominator(r) != 1)
        throw std::invalid_argument("slope '" + text +
                                    "' is not an integer; d-tables are defined at integer "
                                    "slopes, see `check` for interval conclusions");
    if (r < 1 || r > 1'000'000) throw std::invalid_argument("slope out of range: " + text);
    return static_cast<long>(numerator(r));
}

knotfill::GridSpec parse_grid(const std::string& text) {
    knotfill::GridSpec g;
    if (text.empty()) return g;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        size_t eq = part.find('=');
        size_t dots = part.find("..");
        if (eq == std::string::npos || dots == std::string::npos || dots < eq)
            throw std::invalid_argument("malformed grid spec: '" + text +
                                        "' (expected n=2..8,m=1..5,link=1..6)");
        std::string key = part.substr(0, eq);
        int lo = std::stoi(part.substr(eq + 1, dots - eq - 1));
        int hi = std::stoi(part.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty grid range: '" + part + "'");
        if (key == "n") {
            g.n_lo = lo;
            g.n_hi = hi;
        } else if (key == "m") {
            g.m_lo = lo;
            g.m_hi = hi;
        } else if (key == "link") {
            g.link_n_lo = lo;
            g.link_n_hi = hi;
        } else {
            throw std::invalid_argument("unknown grid key: '" + key + "'");
        }
    }
    return g;
}

int cmd_alex(const std::string& subject, const std::string& format, const Output& out) {
    if (knotfill::is_link_subject(subject)) {
        knotfill::LinkFamily link = knotfill::parse_link_subject(subject);
        if (format == "json") {
            nlohmann::json j;
            j["subject"] = link.name();
            j["delta_tilde"] = link.delta_tilde.str();
            j["component1"] = link.comp1_num.str();
            j["component2"] = link.comp2_num.str();
            out.emit(j.dump());
        } else {
            out.emit("delta~(" + link.name() + ") = " + link.delta_tilde.str() +
                     "\ncomponent 1: " + link.comp1_num.str() +
                     "\ncomponent 2: " + link.comp2_num.str());
        }
        return kExitOk;
    }

    knotfill::KnotFamily k = knotfill::parse_knot_subject(subject);
    knotfill::LaurentPoly1 closed = knotfill::alexander_closed_form(k);
    std::optional<knotfill::BraidWord> word = knotfill::catalog_braid_word(k);
    std::optional<knotfill::LaurentPoly1> from_braid;
    if (word) from_braid = knotfill::alexander_of_closure(*word);
    bool agree = !from_braid || *from_braid == closed;

    if (format == "json") {
        nlohmann::json j;
        j["subject"] = k.name();
        j["closed_form"] = closed.str();
        if (from_braid) {
            j["burau"] = from_braid->str();
            j["agree"] = agree;
        }
        out.emit(j.dump());
    } else {
        std::string text = "Delta(" + k.name() + ") = " + closed.str();
        if (from_braid)
            text += "\nburau: " + from_braid->str() + "\n" + (agree ? "AGREE" : "DISAGREE");
        out.emit(text);
    }
    return agree ? kExitOk : kExitOracleMismatch;
}

int cmd_dinv(const std::string& subject, const std::vector<std::string>& slopes,
             const std::string& format, const Output& out) {
    if (knotfill::is_link_subject(subject)) {
        if (slopes.size() != 2)
            throw std::invalid_argument("link subjects need two slopes: dinv <subject> p1 p2");
        knotfill::LinkFamily link = knotfill::parse_link_subject(subject);
        long p1 = parse_integer_slope(slopes[0]), p2 = parse_integer_slope(slopes[1]);
        knotfill::DInvariantTableLink table = knotfill::d_link_surgery(link, p1, p2);
        if (format == "json") {
            out.emit(table.json());
        } else {
            std::ostringstream text;
            text << "d-invariants of (" << p1 << ", " << p2 << ")-surgery on " << link.name()
                 << "\n";
            knotfill::Rat max = table.max();
            for (long i1 = 0; i1 < p1; ++i1)
                for (long i2 = 0; i2 < p2; ++i2) {
                    text << "(" << i1 << ", " << i2 << "): " << knotfill::rat_str(table.at(i1, i2));
                    if (table.at(i1, i2) == max) text << "  (max)";
                    text << "\n";
                }
            out.emit(text.str());
        }
        return kExitOk;
    }

    if (slopes.size() != 1)
        throw std::invalid_argument("knot subjects need one slope: dinv <subject> p");
    knotfill::KnotFamily k = knotfill::parse_knot_subject(subject);
    long p = parse_integer_slope(slopes[0]);
    knotfill::DInvariantTableKnot table =
        knotfill::d_knot_surgery(knotfill::alexander_closed_form(k), p);
    if (format == "json") {
        out.emit(table.json());
    } else {
        std::ostringstream text;
        text << "d-invariants of " << p << "-surgery on " << k.name() << "\n";
        knotfill::Rat max = table.max();
        for (long i = 0; i < p; ++i) {
            text << i << ": " << knotfill::rat_str(table.at(i));
            if (table.at(i) == max) text << "  (max)";
            text << "\n";
        }
        out.emit(text.str());
    }
    return kExitOk;
}

int cmd_check(const std::string& subject, std::optional<long> p1, std::optional<long> p2,
              const std::string& format, const Output& out) {
    knotfill::FillabilityReport rep;
    if (knotfill::is_link_subject(subject)) {
        if (!p1 || !p2)
            throw std::invalid_argument("link subjects need --p1 and --p2 surgery slopes");
        rep = knotfill::verdict(knotfill::parse_link_subject(subject), *p1, *p2);
    } else {
        if (p1 || p2)
            throw std::invalid_argument("--p1/--p2 apply only to link subjects");
        rep = knotfill::verdict(knotfill::parse_knot_subject(subject));
    }
    out.emit(format == "json" ? rep.json() : rep.text());
    return kExitOk;
}

int cmd_slopes(const std::string& subject, const std::string& format, const Output& out) {
    knotfill::KnotFamily k = knotfill::parse_knot_subject(subject);
    if (k.tag != knotfill::KnotTag::Torus)
        throw std::invalid_argument("slope invariants are defined for torus:p,q subjects");
    knotfill::SlopeInvariants inv = knotfill::slope_invariants(k.a, k.b);
    auto sfc = knotfill::sfc_known(k);
    if (format == "json") {
        nlohmann::json j;
        j["subject"] = k.name();
        j["q_star"] = inv.q_star;
        j["p_star"] = inv.p_star;
        j["cf"] = inv.cf;
        j["m"] = knotfill::rat_str(inv.m_value);
        if (sfc) {
            j["sfc"] = knotfill::rat_str(sfc->value);
            j["sfc_exact"] = sfc->exact;
            j["sfc_citation"] = sfc->citation;
        }
        out.emit(j.dump());
    } else {
        std::ostringstream text;
        text << "subject: " << k.name() << "\n";
        text << "q* = " << inv.q_star << "  (qq* = 1 mod p)  [§4.2]\n";
        text << "p* = " << inv.p_star << "  (pp* = 1 mod q)  [§4.2]\n";
        text << "cf(" << inv.p << "/" << inv.q << ") = [";
        for (size_t i = 0; i < inv.cf.size(); ++i) text << (i ? ", " : "") << inv.cf[i];
        text << "]  [§4.2]\n";
        text << "m = " << knotfill::rat_str(inv.m_value) << "  [§4.2]\n";
        if (sfc)
            text << "Sfc = " << knotfill::rat_str(sfc->value)
                 << (sfc->exact ? " (exact)" : " (lower bound)") << "  " << sfc->citation << "\n";
        out.emit(text.str());
    }
    return kExitOk;
}

int cmd_reproduce(const std::string& scope, const std::string& grid_text, int jobs,
                  const std::string& format, const Output& out) {
    knotfill::GridSpec grid = parse_grid(grid_text);
    std::vector<knotfill::CheckResult> results = knotfill::run_checks(scope, grid, jobs);
    bool all_pass = true;
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : results) {
            j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            all_pass = all_pass && r.pass;
        }
        out.emit(j.dump());
    } else {
        std::ostringstream text;
        int passed = 0;
        for (const auto& r : results) {
            text << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
            all_pass = all_pass && r.pass;
            if (r.pass) ++passed;
        }
        text << passed << "/" << results.size() << " checks passed\n";
        out.emit(text.str());
    }
    return all_pass ? kExitOk : kExitReproduceFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact surgery-invariant calculator for catalog knots and links"};
    app.require_subcommand(1);

    std::string format = "text";
    Output out;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out.path, "Write output to a file instead of stdout");

    std::string subject;
    std::vector<std::string> slope_args;
    std::optional<long> p1, p2;
    std::string scope = "all";
    std::string grid_text;
    int jobs = 1;

    CLI::App* alex = app.add_subcommand("alex", "Alexander polynomial of a subject");
    alex->add_option("subject", subject)->required();

    CLI::App* dinv = app.add_subcommand("dinv", "d-invariant table of an integer surgery");
    dinv->add_option("subject", subject)->required();
    dinv->add_option("slopes", slope_args, "Integer slope (one for knots, two for links)")
        ->expected(1, 2);

    CLI::App* check = app.add_subcommand("check", "Fillability verdict for a subject");
    check->add_option("subject", subject)->required();
    check->add_option("--p1", p1, "First surgery slope (links)");
    check->add_option("--p2", p2, "Second surgery slope (links)");

    CLI::App* slopes = app.add_subcommand("slopes", "Torus-knot slope invariants");
    slopes->add_option("subject", subject)->required();

    CLI::App* reproduce = app.add_subcommand("reproduce", "Re-run the verification matrix");
    reproduce->add_option("--scope", scope, "Check scope or 'all'");
    reproduce->add_option("--grid", grid_text, "Parameter ranges, e.g. n=2..8,m=1..5,link=1..6");
    reproduce->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 64));

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(alex)) return cmd_alex(subject, format, out);
        if (app.got_subcommand(dinv)) return cmd_dinv(subject, slope_args, format, out);
        if (app.got_subcommand(check)) return cmd_check(subject, p1, p2, format, out);
        if (app.got_subcommand(slopes)) return cmd_slopes(subject, format, out);
        if (app.got_subcommand(reproduce))
            return cmd_reproduce(scope, grid_text, jobs, format, out);
    } catch (const knotfill::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitOracleMismatch;
    }
    return kExitUsage;
}
