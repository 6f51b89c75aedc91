#include "nilpoly/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilpoly/bounded.hpp"
#include "nilpoly/error.hpp"
#include "nilpoly/json_io.hpp"
#include "nilpoly/orbit.hpp"
#include "nilpoly/search.hpp"
#include "nilpoly/verify.hpp"

namespace nilpoly {

namespace {

const std::string kIntegerPattern = "-?[0-9]+";

std::string join_values(const std::vector<Int>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += to_string(v[i]);
    }
    return out;
}

std::string describe_status(const OrbitStatus& status) {
    if (const auto* nil = std::get_if<Nilpotent>(&status))
        return "nilpotent, index " + to_string(nil->index);
    if (const auto* per = std::get_if<EventuallyPeriodic>(&status))
        return "eventually periodic, preperiod " + std::to_string(per->preperiod) +
               ", cycle [" + join_values(per->cycle) + "]";
    const auto& div = std::get<Divergent>(status);
    if (div.bound == 0) return "divergent (unbounded linear drift)";
    return "divergent at step " + std::to_string(div.escape_step) + " (escape bound " +
           to_string(div.bound) + ")";
}

std::string describe_form(const BoundedForm& f) {
    std::string out = "form " + std::to_string(f.form) + ": S=" + to_string(f.S);
    if (f.R) out += ", R=" + to_string(*f.R);
    if (f.eps) out += std::string(", eps=") + (*f.eps > 0 ? "+1" : "-1");
    return out;
}

void print_checks(const std::vector<CheckResult>& checks, bool as_json, const std::string& suite,
                  std::ostream& out) {
    std::size_t passed = 0;
    for (const auto& c : checks) passed += c.pass;
    if (as_json) {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        out << json{{"suite", suite}, {"checks", arr}, {"passed", passed}, {"total", checks.size()}}
                   .dump(2)
            << "\n";
        return;
    }
    for (const auto& c : checks) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) out << " -- " << c.detail;
        out << "\n";
    }
    out << "passed " << passed << "/" << checks.size() << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for integer polynomial orbits: nilpotency decisions, "
                 "nilpotent-family enumeration, bounded-orbit classification"};
    app.name("nilpoly");
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.require_subcommand(1);

    auto integer = CLI::Validator(
        [](std::string& s) {
            if (s.empty()) return std::string("empty integer");
            std::size_t start = s[0] == '-' ? 1 : 0;
            if (start == s.size()) return std::string("empty integer");
            for (std::size_t i = start; i < s.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(s[i])))
                    return std::string("not an integer: ") + s;
            return std::string();
        },
        "INT", "integer");

    std::string poly_text, r_text;
    std::string suite = "all";
    std::string goldens_dir = "goldens";
    unsigned long max_index = 0;
    bool families = false;
    int form_tag = 0;
    std::string form_s, form_r, recurring_value;
    int form_eps = 0;
    std::string recurring_kind;
    unsigned long recurring_m = 0;
    std::vector<std::string> prefix_text;
    unsigned deg_max = 0;
    unsigned long coeff_max = 0;
    std::string r_lo_text, r_hi_text;

    CLI::App* check = app.add_subcommand("check", "decide nilpotency of u at r");
    check->add_option("poly", poly_text, "polynomial (expression or [c0,c1,...])")->required();
    check->add_option("r", r_text, "starting integer")->required()->check(integer);

    CLI::App* orbit = app.add_subcommand("orbit", "full orbit report of u at r");
    orbit->add_option("poly", poly_text)->required();
    orbit->add_option("r", r_text)->required()->check(integer);

    CLI::App* enumerate = app.add_subcommand("enumerate", "all nilpotent sequences at r");
    enumerate->add_option("r", r_text)->required()->check(integer);
    enumerate->add_option("--max-index", max_index, "search depth (default: formula bound + 2)")
        ->check(CLI::PositiveNumber);
    enumerate->add_flag("--families", families, "emit interpolant and modulus per sequence");

    CLI::App* classify = app.add_subcommand("classify", "bounded-form of the orbit of u at r");
    classify->add_option("poly", poly_text)->required();
    classify->add_option("r", r_text)->required()->check(integer);

    CLI::App* witness = app.add_subcommand("witness", "polynomial realizing a bounded form");
    witness->add_option("form", form_tag, "form tag 1..7")->required()->check(CLI::Range(1, 7));
    witness->add_option("--S", form_s, "parameter S")->required()->check(integer);
    witness->add_option("--R", form_r, "parameter R (forms 2, 5, 6)")->check(integer);
    witness->add_option("--eps", form_eps, "+1 or -1 (forms 3, 4, 6, 7)")
        ->check(CLI::IsMember({1, -1}));

    CLI::App* recurring = app.add_subcommand("recurring", "realizability of a recurring zero pattern");
    recurring->add_option("kind", recurring_kind, "one-zero-tail | alternating-zero")
        ->required()
        ->check(CLI::IsMember({"one-zero-tail", "alternating-zero"}));
    recurring->add_option("m", recurring_m, "length of the nonzero prefix")->required();
    recurring->add_option("prefix", prefix_text, "prefix entries r_0 .. r_{m-1}")->check(integer);
    recurring->add_option("--value", recurring_value, "recurring nonzero value (alternating-zero)")
        ->check(integer);

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "classification | index-bound | nrr-structure | bounded-forms | all")
        ->required();
    verify->add_option("--goldens", goldens_dir, "directory with the golden tables");

    CLI::App* scan = app.add_subcommand("scan", "classify every orbit over a coefficient box");
    scan->add_option("deg_max", deg_max)->required();
    scan->add_option("coeff_max", coeff_max)->required();
    scan->add_option("r_lo", r_lo_text)->required()->check(integer);
    scan->add_option("r_hi", r_hi_text)->required()->check(integer);

    // A leading '-' reads as an option to the argument parser; it already lets
    // "-2x+4"-style arguments through (digit after the dash), so only "-x..."
    // polynomials need a disguise. Prefix those with a harmless "0" term and
    // restore the original spelling after parsing.
    std::vector<std::string> cooked = args;
    std::map<std::string, std::string> disguised;
    for (std::string& a : cooked) {
        if (a.size() >= 2 && a[0] == '-' &&
            (a[1] == 'x' || (a[1] == ' ' && a.find('x') != std::string::npos))) {
            std::string original = a;
            a = "0" + a;
            disguised.emplace(a, original);
        }
    }
    auto undisguise = [&](std::string& text) {
        auto it = disguised.find(text);
        if (it != disguised.end()) text = it->second;
    };

    try {
        std::vector<std::string> reversed(cooked.rbegin(), cooked.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    undisguise(poly_text);

    try {
        if (app.got_subcommand(check)) {
            OrbitReport rep = orbit_classify(parse_poly(poly_text), int_from_string(r_text));
            if (as_json) {
                out << to_json(rep).dump(2) << "\n";
            } else if (const auto* nil = std::get_if<Nilpotent>(&rep.status)) {
                out << "nilpotent, index " << to_string(nil->index) << "\n";
            } else if (std::holds_alternative<Divergent>(rep.status)) {
                out << "not nilpotent (divergent)\n";
            } else {
                out << "not nilpotent (eventually periodic)\n";
            }
        } else if (app.got_subcommand(orbit)) {
            OrbitReport rep = orbit_classify(parse_poly(poly_text), int_from_string(r_text));
            if (as_json) {
                out << to_json(rep).dump(2) << "\n";
            } else {
                out << "start: " << to_string(rep.start) << "\n";
                out << "values: " << join_values(rep.values) << "\n";
                out << "differences: " << join_values(rep.differences) << "\n";
                out << "status: " << describe_status(rep.status) << "\n";
            }
        } else if (app.got_subcommand(enumerate)) {
            Int start = int_from_string(r_text);
            if (start == 0) {
                // The families at 0 form an infinite parameterized set; print the
                // closed form rather than a silently truncated list.
                if (as_json) {
                    out << json{{"start", 0},
                                {"closed_form",
                                 json::array({{{"index", 1}, {"pattern", "x*p(x), p nonzero"}},
                                              {{"index", 2},
                                               {"pattern",
                                                "(x - a)*(x*p(x) - 1), a nonzero (sequence {0, a, 0})"}}})},
                                {"max_index", 2}}
                               .dump(2)
                        << "\n";
                } else {
                    out << "start 0 has infinitely many nilpotent families; closed form:\n"
                        << "  index 1: x*p(x) for any nonzero integer polynomial p\n"
                        << "  index 2: (x - a)*(x*p(x) - 1) for any nonzero integer a "
                           "(sequence {0, a, 0})\n"
                        << "no index exceeds 2 at start 0\n";
                }
                return 0;
            }
            EnumerationResult result =
                enumerate_nilpotent_sequences({start, max_index, families});
            if (as_json) {
                out << to_json(result).dump(2) << "\n";
            } else {
                out << "start: " << to_string(result.start) << "\n";
                out << "sequences (" << result.sequences.size() << "):\n";
                for (std::size_t i = 0; i < result.sequences.size(); ++i) {
                    out << "  " << join_values(result.sequences[i]);
                    if (families)
                        out << "  |  L = " << format_poly(result.families[i].interpolant)
                            << "  |  M = " << format_poly(result.families[i].modulus);
                    out << "\n";
                }
                out << "max index found: " << result.max_index_found << "\n";
                out << "nodes explored: " << result.nodes_explored << "\n";
            }
        } else if (app.got_subcommand(classify)) {
            OrbitClassification cls =
                classify_orbit_of(parse_poly(poly_text), int_from_string(r_text));
            if (const auto* form = std::get_if<BoundedForm>(&cls)) {
                if (as_json)
                    out << to_json(*form).dump(2) << "\n";
                else
                    out << describe_form(*form) << "\n";
            } else if (std::holds_alternative<Unbounded>(cls)) {
                if (as_json)
                    out << json{{"unbounded", true}}.dump(2) << "\n";
                else
                    out << "unbounded\n";
            } else {
                // would contradict the bounded-orbit classification
                const auto& o = std::get<NoMatchingForm>(cls).orbit;
                if (as_json)
                    out << json{{"unclassified", true},
                                {"preperiod", ints_to_json(o.preperiod)},
                                {"cycle", ints_to_json(o.cycle)}}
                               .dump(2)
                        << "\n";
                else
                    out << "bounded orbit matches no form (preperiod [" << join_values(o.preperiod)
                        << "], cycle [" << join_values(o.cycle) << "])\n";
            }
        } else if (app.got_subcommand(witness)) {
            BoundedForm f;
            f.form = form_tag;
            f.S = int_from_string(form_s);
            if (witness->count("--R")) f.R = int_from_string(form_r);
            if (witness->count("--eps")) f.eps = form_eps;
            IntPoly poly = witness_for_form(f);
            if (as_json) {
                json j = to_json(f);
                j["witness"] = format_poly(poly);
                out << j.dump(2) << "\n";
            } else {
                out << format_poly(poly) << "\n";
            }
        } else if (app.got_subcommand(recurring)) {
            std::vector<Int> prefix;
            for (const auto& s : prefix_text) prefix.push_back(int_from_string(s));
            std::optional<Int> value;
            if (recurring->count("--value")) value = int_from_string(recurring_value);
            RecurringKind kind = recurring_kind == "one-zero-tail"
                                     ? RecurringKind::one_zero_tail
                                     : RecurringKind::alternating_zero;
            auto result = recurring_pattern_check(recurring_m, kind, prefix, value);
            if (as_json) {
                json j{{"realizable", result.has_value()}};
                if (result) j["witness"] = format_poly(*result);
                out << j.dump(2) << "\n";
            } else if (result) {
                out << "realizable: " << format_poly(*result) << "\n";
            } else {
                out << "not realizable\n";
            }
        } else if (app.got_subcommand(verify)) {
            auto checks = run_suite(suite, goldens_dir);
            print_checks(checks, as_json, suite, out);
            bool all_pass =
                std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
            return all_pass ? 0 : 1;
        } else if (app.got_subcommand(scan)) {
            ScanReport report =
                scan_bounded_orbits(deg_max, coeff_max, int_from_string(r_lo_text),
                                    int_from_string(r_hi_text));
            if (as_json) {
                out << to_json(report).dump(2) << "\n";
            } else {
                out << "orbits: " << report.total << " (" << report.bounded << " bounded, "
                    << report.unbounded << " unbounded)\n";
                out << "forms:";
                for (std::size_t i = 0; i < report.form_counts.size(); ++i)
                    out << " " << (i + 1) << ":" << report.form_counts[i];
                out << "\n";
                out << "counterexamples: " << report.counterexamples.size() << "\n";
                for (const auto& ce : report.counterexamples)
                    out << "  " << format_poly(ce.poly) << " at " << to_string(ce.r)
                        << ": preperiod [" << join_values(ce.orbit.preperiod) << "], cycle ["
                        << join_values(ce.orbit.cycle) << "]\n";
            }
        }
    } catch (const Error& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace nilpoly
