// kmcoh: command-line front end.
//
// Exit codes: 0 ok, 2 bad input, 3 hypothesis not met (--require-ring),
// 4 verification failure (engine bug).

#include <cstddef>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <kmcoh/cartan.hpp>
#include <kmcoh/charseq.hpp>
#include <kmcoh/cohomology.hpp>
#include <kmcoh/matrix_io.hpp>
#include <kmcoh/polynomial.hpp>
#include <kmcoh/rational_function.hpp>
#include <kmcoh/report.hpp>
#include <kmcoh/series.hpp>
#include <kmcoh/weylgrowth.hpp>

namespace
{

using namespace kmcoh;

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_hypothesis = 3;
constexpr int exit_verification = 4;

struct ReportFlags {
    std::size_t order = 20;
    std::string format = "json";
    bool require_ring = false;
};

int require_ring(const CartanMatrix &a)
{
    if (!is_indecomposable(a)) {
        std::cerr << "error: " << errc_name(errc::not_indecomposable) << ": matrix has " << components(a).size()
                  << " components\n";
        return exit_hypothesis;
    }
    if (const KMType t = classify(a); t != KMType::indefinite) {
        std::cerr << "error: " << errc_name(errc::not_indefinite) << ": matrix is of " << to_string(t) << " type\n";
        return exit_hypothesis;
    }
    return exit_ok;
}

int emit_reports(const std::vector<std::pair<std::string, CartanMatrix>> &inputs, const ReportFlags &f)
{
    if (f.require_ring) {
        for (const auto &[name, a] : inputs) {
            if (int rc = require_ring(a); rc != exit_ok) {
                return rc;
            }
        }
    }
    std::vector<AnalysisReport> reports;
    for (const auto &[name, a] : inputs) {
        reports.push_back(analyze(a, f.order, name));
    }
    if (f.format == "json") {
        if (reports.size() == 1) {
            std::cout << reports.front().dump(2) << "\n";
        } else {
            std::cout << AnalysisReport(reports).dump(2) << "\n";
        }
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::cout << (i ? "\n" : "") << render_text(reports[i]);
        }
    }
    return exit_ok;
}

std::vector<Int> parse_coeffs(const std::string &s)
{
    std::vector<Int> out;
    std::istringstream in(s);
    for (std::string tok; in >> tok;) {
        try {
            out.emplace_back(tok);
        } catch (const std::exception &) {
            throw error(errc::parse_error, "'" + tok + "' is not an integer");
        }
    }
    if (out.empty()) {
        throw error(errc::parse_error, "empty coefficient list");
    }
    return out;
}

Series charseq_input(const std::string &series, const std::string &rational, std::size_t n)
{
    if (!series.empty()) {
        return Series(parse_coeffs(series), n);
    }
    const auto semi = rational.find(';');
    if (semi == std::string::npos) {
        throw error(errc::parse_error, "--rational expects \"num;den\"");
    }
    const Polynomial num(parse_coeffs(rational.substr(0, semi)));
    const Polynomial den(parse_coeffs(rational.substr(semi + 1)));
    if (den.degree() < 0) {
        throw error(errc::parse_error, "zero denominator");
    }
    if (den.coeff(0) != 1 && den.coeff(0) != -1) {
        throw error(errc::non_unit_constant_term, "denominator constant term must be 1 or -1");
    }
    // Expand by hand so a den(0) = -1 input needs no renormalization.
    return Series::from_polynomial(num, n) * Series::from_polynomial(den, n).reciprocal();
}

int cmd_charseq(const std::string &series, const std::string &rational, std::size_t n, const std::string &method,
                const std::string &format)
{
    const Series f = charseq_input(series, rational, n);
    std::vector<std::pair<std::string, CharSeq>> cols;
    if (method == "prop1" || method == "both") {
        cols.emplace_back("prop1", char_sequence(f, n));
    }
    if (method == "prop2" || method == "both") {
        cols.emplace_back("prop2", char_sequence_log(f, n));
    }
    const bool agree = cols.size() < 2 || cols[0].second == cols[1].second;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        for (const auto &[name, seq] : cols) {
            j[name] = json_out::strings(seq.values());
        }
        if (cols.size() == 2) {
            j["agree"] = agree;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "k";
        for (const auto &c : cols) {
            std::cout << "\t" << c.first;
        }
        std::cout << "\n";
        for (std::size_t k = 1; k <= n; ++k) {
            std::cout << k;
            for (const auto &c : cols) {
                std::cout << "\t" << c.second(k);
            }
            std::cout << "\n";
        }
    }
    if (!agree) {
        std::cerr << "error: prop1 and prop2 disagree\n";
        return exit_verification;
    }
    return exit_ok;
}

int cmd_oracle(const std::string &path, std::size_t lmax, const std::string &method)
{
    const CartanMatrix a = read_matrix_file(path);
    const std::vector<Int> counts =
        method == "tree" ? weyl_growth_descent_tree(a, lmax) : weyl_growth_bfs(a, lmax);
    const Series expected = weyl_growth_rational(a).expand(lmax);
    bool match = true;
    for (std::size_t k = 0; k <= lmax; ++k) {
        if (counts[k] != expected[k]) {
            if (match) {
                std::cerr << "length\tenumerated\trational\n";
            }
            match = false;
            std::cerr << k << "\t" << counts[k] << "\t" << expected[k] << "\n";
        }
    }
    nlohmann::ordered_json j;
    j["lengths"] = json_out::strings(counts);
    j["matched_rational"] = match;
    std::cout << j.dump(2) << "\n";
    return match ? exit_ok : exit_verification;
}

void add_report_flags(CLI::App *cmd, ReportFlags &f)
{
    cmd->add_option("--order", f.order, "series cutoff in steps of q^2")->check(CLI::PositiveNumber);
    cmd->add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--require-ring", f.require_ring, "fail with exit 3 unless the matrix is indecomposable indefinite");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Cohomology of Kac-Moody groups and flag manifolds from a generalized Cartan matrix"};
    app.require_subcommand(1);

    ReportFlags analyze_flags;
    std::vector<std::string> paths;
    auto *analyze_cmd = app.add_subcommand("analyze", "full report for one or more matrix files");
    analyze_cmd->add_option("files", paths, "matrix files (text or JSON)")->required();
    add_report_flags(analyze_cmd, analyze_flags);

    std::string oracle_path;
    std::size_t lmax = 10;
    std::string oracle_method = "bfs";
    auto *oracle_cmd = app.add_subcommand("oracle", "compare enumerated length counts with the growth series");
    oracle_cmd->add_option("file", oracle_path, "matrix file")->required();
    oracle_cmd->add_option("--lmax", lmax, "largest length to enumerate");
    oracle_cmd->add_option("--method", oracle_method, "bfs or tree")->check(CLI::IsMember({"bfs", "tree"}));

    std::string series;
    std::string rational;
    std::size_t n = 10;
    std::string method = "both";
    std::string cs_format = "text";
    auto *charseq_cmd = app.add_subcommand("charseq", "characteristic sequence of a series with constant term 1");
    auto *series_opt = charseq_cmd->add_option("--series", series, "coefficients, constant term first");
    auto *rational_opt = charseq_cmd->add_option("--rational", rational, "\"num;den\" coefficient lists");
    series_opt->excludes(rational_opt);
    charseq_cmd->add_option("--n", n, "number of terms")->check(CLI::PositiveNumber);
    charseq_cmd->add_option("--method", method, "prop1, prop2 or both")
        ->check(CLI::IsMember({"prop1", "prop2", "both"}));
    charseq_cmd->add_option("--format", cs_format, "json or text")->check(CLI::IsMember({"json", "text"}));

    ReportFlags family_flags;
    std::string family;
    std::size_t rank = 0;
    NamedParams params;
    auto *family_cmd = app.add_subcommand("family", "report for a named matrix family");
    family_cmd->add_option("name", family, "A..G, complete, rank2 or affine")->required();
    family_cmd->add_option("--rank", rank, "rank (of the base for affine)");
    family_cmd->add_option("--a", params.a, "off-diagonal magnitude a");
    family_cmd->add_option("--b", params.b, "second off-diagonal magnitude (rank2)");
    family_cmd->add_option("--base", params.base, "finite base family for affine");
    add_report_flags(family_cmd, family_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_input;
    }

    try {
        if (*analyze_cmd) {
            std::vector<std::pair<std::string, CartanMatrix>> inputs;
            for (const auto &p : paths) {
                try {
                    inputs.emplace_back(p, read_matrix_file(p));
                } catch (const error &e) {
                    std::cerr << "error: " << p << ": " << e.what() << "\n";
                    return exit_input;
                }
            }
            return emit_reports(inputs, analyze_flags);
        }
        if (*oracle_cmd) {
            return cmd_oracle(oracle_path, lmax, oracle_method);
        }
        if (*charseq_cmd) {
            if (series.empty() && rational.empty()) {
                std::cerr << "error: one of --series or --rational is required\n";
                return exit_input;
            }
            return cmd_charseq(series, rational, n, method, cs_format);
        }
        if (*family_cmd) {
            const CartanMatrix a = build_named(family, rank, params);
            return emit_reports({{family, a}}, family_flags);
        }
    } catch (const error &e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
        case errc::internal_inconsistency: return exit_verification;
        case errc::not_indefinite:
        case errc::not_indecomposable: return exit_hypothesis;
        default: return exit_input;
        }
    }
    return exit_ok;
}
