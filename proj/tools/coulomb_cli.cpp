#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "coulomb/abelian.hpp"
#include "coulomb/io.hpp"
#include "coulomb/klein.hpp"
#include "coulomb/monopole.hpp"
#include "coulomb/suites.hpp"

namespace {

using namespace coulomb;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConvergence = 3;

std::vector<int64_t> parse_int_list(const std::string& text) {
    std::vector<int64_t> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(',', pos);
        const std::string piece =
            text.substr(pos, next == std::string::npos ? next : next - pos);
        try {
            out.push_back(std::stoll(piece));
        } catch (const std::exception&) {
            throw StructuralError("bad integer '" + piece + "' in list '" + text + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

std::pair<int64_t, int64_t> parse_range(const std::string& text) {
    const size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int64_t v = std::stoll(text);
            return {v, v};
        }
        return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw StructuralError("bad range '" + text + "' (expected a or a..b)");
    }
}

void print_series(const TruncatedSeries& s, const std::string& format) {
    if (format == "json")
        std::cout << series_to_json(s).dump(2) << "\n";
    else
        std::cout << s.str() << "\n";
}

// --- ring expression parsing: products of named elements, r-literals and
// integer powers, e.g. "z_j * y_j^2 * r[1,0;1,0]".

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

RingElement parse_atom(const TheorySpec& t, const std::string& atom) {
    if (atom.rfind("r[", 0) == 0 && atom.back() == ']') {
        const std::string body = atom.substr(2, atom.size() - 3);
        const size_t semi = body.find(';');
        if (semi == std::string::npos)
            throw StructuralError("r-literal needs 'gauge;flavor': " + atom);
        ClassIndex idx;
        idx.gauge = parse_int_list(body.substr(0, semi));
        const std::string flavor = strip(body.substr(semi + 1));
        if (flavor == "0") {
            idx.flavor.assign(t.flavor_rank, 0);
        } else {
            idx.flavor = parse_int_list(flavor);
        }
        if (static_cast<int>(idx.gauge.size()) != t.n_factors() ||
            static_cast<int>(idx.flavor.size()) != t.flavor_rank)
            throw StructuralError("class index shape mismatch in " + atom);
        return basis_class(t, idx);
    }
    return two_node_named(t, atom);
}

RingElement parse_ring_expr(const TheorySpec& t, const std::string& expr, bool formal) {
    std::vector<std::string> factors;
    size_t pos = 0;
    while (pos <= expr.size()) {
        size_t next = expr.find('*', pos);
        factors.push_back(strip(expr.substr(pos, next == std::string::npos ? next : next - pos)));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    RingElement out = RingElement::one(t);
    for (const auto& f : factors) {
        if (f.empty()) throw StructuralError("empty factor in expression '" + expr + "'");
        std::string base = f;
        int64_t exp = 1;
        // A trailing ^k is a power; '^' inside r[...] cannot occur.
        const size_t caret = f.rfind('^');
        if (caret != std::string::npos && f.find(']', caret) == std::string::npos) {
            base = strip(f.substr(0, caret));
            try {
                exp = std::stoll(f.substr(caret + 1));
            } catch (const std::exception&) {
                throw StructuralError("bad power in '" + f + "'");
            }
            if (exp < 0) throw StructuralError("negative powers are not elements: '" + f + "'");
        }
        out = multiply(out, power(parse_atom(t, base), exp, formal), formal);
    }
    return out;
}

int print_report(const CheckReport& report, const std::string& format) {
    if (format == "json") {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        for (const auto& c : report.cases) {
            if (c.pass) {
                std::cout << "PASS " << c.id << "\n";
            } else {
                std::cout << "FAIL " << c.id;
                if (!c.expected.empty())
                    std::cout << ": expected " << c.expected << ", got " << c.actual;
                std::cout << "\n";
            }
        }
        std::cout << report.name << ": " << report.cases.size() << " cases, "
                  << report.failures() << " failures (" << static_cast<int>(report.wall_ms)
                  << " ms)\n";
    }
    return report.all_pass() ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact monopole-formula Hilbert series and abelian Coulomb-branch algebra"};
    app.require_subcommand(1);

    std::string spec, format = "text", kappa_text, lambda_text, expr, suite;
    int64_t order = 16;
    bool graded = false, generators = false, formal = false;
    int klein_n = 2;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--order", order, "t-truncation order")->capture_default_str();
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* hilbert = app.add_subcommand("hilbert", "Monopole-formula Hilbert series");
    hilbert->add_option("--spec", spec, "theory preset or JSON file")->required();
    hilbert->add_option("--kappa", kappa_text, "flavor coweight (comma list; default 0)");
    hilbert->add_flag("--graded", graded, "keep the x-grading by topological charge");
    add_common(hilbert);

    CLI::App* costalk = app.add_subcommand("costalk", "Flavored costalk character");
    costalk->add_option("--spec", spec, "theory preset or JSON file")->required();
    costalk->add_option("--kappa", kappa_text, "flavor coweight (comma list)");
    costalk->add_option("--lambda", lambda_text,
                        "dominant weight (sqed only: Kleinian costalk form)");
    costalk->add_flag("--generators", generators, "generators only (drop classical factor)");
    costalk->add_flag("--graded", graded, "keep the x-grading by topological charge");
    add_common(costalk);

    CLI::App* klein = app.add_subcommand("klein-char", "Section-module character from "
                                                       "semi-invariants");
    klein->add_option("--n", klein_n, "Kleinian surface parameter N")->required();
    klein->add_option("--lambda", lambda_text, "dominant weight (comma list)")->required();
    add_common(klein);

    CLI::App* ring = app.add_subcommand("ring", "Multiply named abelian ring elements");
    ring->add_option("--spec", spec, "two-node theory preset")->required();
    ring->add_option("--expr", expr, "product expression, e.g. \"z_j*z_i\"")->required();
    ring->add_flag("--flavor-formal", formal, "keep flavor parameters symbolic");
    add_common(ring);

    CLI::App* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("--suite", suite, "suite name")->required();
    std::string l_range, wj_range, wi_range, m_range, n_range;
    int64_t lambda_max = 3, verify_order = 0;
    verify->add_option("--l", l_range, "l range, e.g. 0..5");
    verify->add_option("--n", n_range,
                       "N range (klein/sn suites) or n range (ring-rmn), e.g. -4..4");
    verify->add_option("--wj", wj_range, "w_j range");
    verify->add_option("--wi", wi_range, "w_i range");
    verify->add_option("--m", m_range, "m range");
    verify->add_option("--lambda-max", lambda_max, "cap on lambda_1")->capture_default_str();
    verify->add_option("--order", verify_order, "t-truncation order (0 = suite default)");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
    }

    try {
        if (hilbert->parsed() || costalk->parsed()) {
            CLI::App* active = hilbert->parsed() ? hilbert : costalk;
            const SpecFile file = resolve_spec(spec);
            const TheorySpec& theory = file.theory;
            if (file.order && active->count("--order") == 0) order = *file.order;
            std::vector<int64_t> kappa(theory.flavor_rank, 0);
            if (!kappa_text.empty()) {
                kappa = parse_int_list(kappa_text);
                if (static_cast<int>(kappa.size()) != theory.flavor_rank)
                    throw StructuralError("kappa length != flavor rank");
            } else if (file.kappa) {
                kappa = *file.kappa;
            }
            if (costalk->parsed() && !lambda_text.empty()) {
                if (theory != preset_sqed(theory.flavor_rank))
                    throw StructuralError("--lambda is the Kleinian costalk form; "
                                          "use it with --spec sqed:N");
                const auto lambda = parse_int_list(lambda_text);
                print_series(klein_costalk_character(theory.flavor_rank, lambda, order,
                                                     !generators),
                             format);
                return kExitOk;
            }
            print_series(monopole_series(theory, kappa, order, graded), format);
            return kExitOk;
        }
        if (klein->parsed()) {
            print_series(
                character_from_semiinvariants(klein_n, parse_int_list(lambda_text), order),
                format);
            return kExitOk;
        }
        if (ring->parsed()) {
            const TheorySpec theory = resolve_theory(spec);
            const RingElement value = parse_ring_expr(theory, expr, formal);
            if (format == "json")
                std::cout << element_to_json(value).dump(2) << "\n";
            else
                std::cout << value.str() << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            SuiteParams p;
            p.order = verify_order;
            if (!l_range.empty()) std::tie(p.l_min, p.l_max) = parse_range(l_range);
            if (!n_range.empty()) {
                auto [lo, hi] = parse_range(n_range);
                if (suite == "ring-rmn") {
                    p.n_lo = lo;
                    p.n_hi = hi;
                } else {
                    p.n_min = static_cast<int>(lo);
                    p.n_max = static_cast<int>(hi);
                }
            }
            if (!wj_range.empty()) {
                auto [lo, hi] = parse_range(wj_range);
                p.wj_min = static_cast<int>(lo);
                p.wj_max = static_cast<int>(hi);
            }
            if (!wi_range.empty()) {
                auto [lo, hi] = parse_range(wi_range);
                p.wi_min = static_cast<int>(lo);
                p.wi_max = static_cast<int>(hi);
            }
            if (!m_range.empty()) std::tie(p.m_min, p.m_max) = parse_range(m_range);
            p.lambda_max = lambda_max;
            return print_report(run_suite(suite, p), format);
        }
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
