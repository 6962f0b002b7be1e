#include <npser/alexander.hpp>
#include <npser/diagram.hpp>
#include <npser/json_io.hpp>
#include <npser/parse.hpp>
#include <npser/series.hpp>
#include <npser/valuation.hpp>
#include <npser/verify.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace npser;

std::string load_input(const std::string &arg)
{
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) {
            throw std::runtime_error("cannot open input file: " + arg.substr(1));
        }
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    return arg;
}

bool looks_like_json(const std::string &text)
{
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == '{';
}

// A diagram, either computed from a germ or given directly as JSON.
NewtonDiagram input_diagram(const std::string &arg)
{
    const std::string text = load_input(arg);
    if (looks_like_json(text)) {
        return diagram_from_json(json::parse(text));
    }
    return diagram_of(parse_poly(text));
}

void require_facets(const NewtonDiagram &d)
{
    if (d.facet_count() == 0) {
        throw NoFacetsError();
    }
}

std::string format_vector(const std::vector<std::int64_t> &v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    os << ")";
    return os.str();
}

int cmd_diagram(const std::string &input, const std::string &format)
{
    const NewtonDiagram d = input_diagram(input);
    require_facets(d);
    const ExponentMatrix m = exponent_matrix(d);

    if (format == "json") {
        json out = to_json(d);
        out["matrix"] = m.entries;
        out["lengths"] = m.lengths;
        out["ux"] = m.ux;
        out["uy"] = m.uy;
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "vertices:";
    for (const auto &v : d.vertices) {
        std::cout << " (" << v.x << "," << v.y << ")";
    }
    std::cout << "\n";
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        const Edge &e = d.edges[i];
        std::cout << "edge " << i + 1 << ": (" << e.v_from.x << "," << e.v_from.y << ")-("
                  << e.v_to.x << "," << e.v_to.y << ")  l = " << e.normal.lx << "*kx";
        if (e.normal.ly != 1) {
            std::cout << " + " << e.normal.ly << "*ky";
        } else {
            std::cout << " + ky";
        }
        std::cout << "  c = " << e.level << "  s = " << e.length << "\n";
    }
    std::cout << "M:\n";
    for (const auto &row : m.entries) {
        std::cout << "  " << format_vector(row) << "\n";
    }
    std::cout << "s = " << format_vector(m.lengths) << "\n";
    std::cout << "u(x) = " << format_vector(m.ux) << ", u(y) = " << format_vector(m.uy) << "\n";

    // informational only; not a documented identity
    bool symmetric = true;
    for (std::size_t i = 0; i < m.size() && symmetric; ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m.entries[i][j] / m.lengths[i] != m.entries[j][i] / m.lengths[j]) {
                symmetric = false;
                break;
            }
        }
    }
    std::cout << "note: reduced matrix m symmetric: " << (symmetric ? "yes" : "no") << "\n";
    return 0;
}

int cmd_poincare(const std::string &input, std::int64_t max_degree, bool check,
                 const std::string &format)
{
    const NewtonDiagram d = input_diagram(input);
    require_facets(d);
    const BinomialProduct p = poincare_closed_form(d);
    const TruncatedSeries expansion = expand(p, max_degree);
    bool match = true;
    if (check) {
        match = series_equal(expansion, enumeration_oracle(d, max_degree));
    }

    if (format == "json") {
        json out;
        out["closed_form"] = to_json(p);
        out["simplified"] = to_json(p.simplified());
        out["expansion"] = to_json(expansion);
        if (check) {
            out["check"] = match ? "match" : "mismatch";
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "P = " << p.str() << "\n";
        std::cout << "  = " << p.simplified().str() << "\n";
        std::cout << "expansion (D = " << max_degree << "): " << expansion.str() << "\n";
        if (check) {
            std::cout << "enumeration check: " << (match ? "MATCH" : "MISMATCH") << "\n";
        }
    }
    return match ? 0 : 1;
}

int cmd_valuate(const std::string &input, const std::string &g_text, const std::string &which,
                std::int64_t cap, bool oracle, const std::string &format)
{
    const LaurentPoly2 f = parse_poly(load_input(input));
    const NewtonDiagram d = diagram_of(f);
    require_facets(d);
    const LaurentPoly2 g = parse_poly(load_input(g_text));

    std::vector<ValueOrInfinite> values;
    for (std::size_t i = 0; i < d.facet_count(); ++i) {
        const std::int64_t c = cap > 0 ? cap : default_cap(d.edges[i].level);
        if (which == "u") {
            values.push_back(u_val(d.edges[i].normal, g));
        } else if (which == "vprime") {
            values.push_back(v_prime(g, f, d, i, c));
        } else {
            values.push_back(v_double_prime(g, f, d, i, c));
        }
    }

    bool oracle_ok = true;
    std::vector<std::string> oracle_notes;
    if (oracle && which != "u") {
        const OracleMode mode = which == "vprime" ? OracleMode::Holomorphic : OracleMode::Laurent;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!values[i].is_finite()) {
                oracle_notes.push_back("component " + std::to_string(i + 1) + ": skipped (not finite)");
                continue;
            }
            const std::int64_t t = values[i].value;
            const bool lo = v_feasibility_oracle(g, f, d, i, t, 12, mode);
            const bool hi = v_feasibility_oracle(g, f, d, i, t + 1, 12, mode);
            const bool ok = lo && !hi;
            oracle_ok = oracle_ok && ok;
            oracle_notes.push_back("component " + std::to_string(i + 1) + ": "
                                   + (ok ? "confirmed" : "DISAGREES"));
        }
    }

    if (format == "json") {
        json out;
        out["which"] = which;
        out["values"] = json::array();
        for (const auto &v : values) {
            out["values"].push_back(v.str());
        }
        if (!oracle_notes.empty()) {
            out["oracle"] = oracle_notes;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << which << "(g) = (";
        for (std::size_t i = 0; i < values.size(); ++i) {
            std::cout << (i ? ", " : "") << values[i].str();
        }
        std::cout << ")\n";
        for (const auto &n : oracle_notes) {
            std::cout << "oracle " << n << "\n";
        }
    }
    return oracle_ok ? 0 : 1;
}

int cmd_alexander(const std::string &input, const std::string &format)
{
    const NewtonDiagram d = input_diagram(input);
    require_facets(d);
    const BinomialProduct delta = alexander_delta(d);
    const BinomialProduct multilink = alexander_multilink(d);
    const CyclotomicMatrixForm reduced = reduced_poincare(d);
    const BinomialProduct quasi = quasihomogeneous_poincare(d);
    const bool correspondence = transpose_involution(reduced).rows == multilink.numerator;

    if (format == "json") {
        json out;
        out["delta"] = to_json(delta);
        out["delta_multilink"] = to_json(multilink);
        out["reduced_poincare"] = to_json(reduced);
        out["quasihomogeneous"] = to_json(quasi);
        out["transpose_correspondence"] = correspondence;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "Delta_g        = " << delta.str() << "\n";
        std::cout << "Delta_{g^s}    = " << multilink.str() << "\n";
        std::cout << "P~ (reduced)   = " << reduced.as_product().str() << "\n";
        std::cout << "P_{u} (quasih) = " << quasi.str() << "\n";
        std::cout << "transpose(P~ matrix) == Delta_{g^s} numerator: "
                  << (correspondence ? "yes" : "NO") << "\n";
    }
    return correspondence ? 0 : 1;
}

int cmd_verify(std::uint64_t seed, const std::string &suite, std::size_t n, std::int64_t degree,
               std::size_t diagrams, std::int64_t cap)
{
    std::vector<SuiteResult> results;
    if (suite == "all" || suite == "division") {
        results.push_back(suite_division(seed, n == 0 ? 1000 : n));
    }
    if (suite == "all" || suite == "identity") {
        results.push_back(suite_identity(seed, diagrams, degree));
    }
    if (suite == "all" || suite == "axioms") {
        results.push_back(suite_axioms(seed, n == 0 ? 500 : n));
    }
    if (suite == "all" || suite == "agreement") {
        results.push_back(suite_agreement(seed, n == 0 ? 200 : n, cap));
    }
    if (suite == "all" || suite == "transpose") {
        results.push_back(suite_transpose(seed, diagrams));
    }
    if (results.empty()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    bool all_ok = true;
    for (const auto &r : results) {
        std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.name << " (" << r.checked
                  << " cases)\n";
        for (const auto &f : r.failures) {
            std::cout << "  " << f << "\n";
        }
        all_ok = all_ok && r.passed();
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Newton diagram filtrations of plane curve germs: Poincare series, "
                 "order functions and Alexander polynomials"};
    app.require_subcommand(1);

    std::string input, g_text, format = "text", which = "vdoubleprime", suite = "all";
    std::int64_t max_degree = 16, cap = 0, verify_cap = 30, degree = 20;
    std::uint64_t seed = 1;
    std::size_t n = 0, diagrams = 25;
    bool check = false, oracle = false;

    auto add_common = [&](CLI::App *cmd, bool needs_input) {
        auto *opt = cmd->add_option("-f,--input", input, "polynomial expression, @file, or diagram JSON");
        if (needs_input) {
            opt->required();
        }
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto *diagram_cmd = app.add_subcommand("diagram", "Newton diagram and facet data");
    add_common(diagram_cmd, true);

    auto *poincare_cmd = app.add_subcommand("poincare", "Poincare series closed form and expansion");
    add_common(poincare_cmd, true);
    poincare_cmd->add_option("--max-degree", max_degree, "truncation total degree");
    poincare_cmd->add_flag("--check", check, "cross-check against the enumeration oracle");

    auto *valuate_cmd = app.add_subcommand("valuate", "order functions u, v', v'' of g relative to f");
    add_common(valuate_cmd, true);
    valuate_cmd->add_option("-g", g_text, "polynomial to valuate")->required();
    valuate_cmd->add_option("--which", which, "which order function")
        ->check(CLI::IsMember({"u", "vprime", "vdoubleprime"}));
    valuate_cmd->add_option("--cap", cap, "reduction cap (0 = per-facet default)");
    valuate_cmd->add_flag("--oracle", oracle, "cross-check finite values by linear feasibility");

    auto *alexander_cmd = app.add_subcommand("alexander", "Alexander polynomials and reduced series");
    add_common(alexander_cmd, true);

    auto *verify_cmd = app.add_subcommand("verify", "run the randomized verification suites");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--suite", suite, "suite to run")
        ->check(CLI::IsMember({"all", "division", "identity", "axioms", "agreement", "transpose"}));
    verify_cmd->add_option("--n", n, "number of random cases (0 = suite default)");
    verify_cmd->add_option("--degree", degree, "truncation degree for the identity suite");
    verify_cmd->add_option("--diagrams", diagrams, "number of random diagrams");
    verify_cmd->add_option("--cap", verify_cap, "reduction cap for the agreement suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (diagram_cmd->parsed()) {
            return cmd_diagram(input, format);
        }
        if (poincare_cmd->parsed()) {
            return cmd_poincare(input, max_degree, check, format);
        }
        if (valuate_cmd->parsed()) {
            return cmd_valuate(input, g_text, which, cap, oracle, format);
        }
        if (alexander_cmd->parsed()) {
            return cmd_alexander(input, format);
        }
        return cmd_verify(seed, suite, n, degree, diagrams, verify_cap);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
