// Command-line front end. Subcommands:
//   poly       exact I(G,z) coefficients
//   certify    zero-free gap certificate (JSON or text)
//   verify     property suites over graph populations
//   plot-data  theta, |f_u|, majorant CSV on a grid
//   family     per-n closed-form table for a graph family
//
// Exit codes: 0 ok; 1 verify found violations; 2 bad input; 3 size cap
// exceeded (graphs beyond 64 vertices); 4 disconnected input or numeric
// failure; 5 certificate emitted but some internal check failed.

#include "CLI11.hpp"

#include "indgap/analytic.hpp"
#include "indgap/certify.hpp"
#include "indgap/errors.hpp"
#include "indgap/families.hpp"
#include "indgap/graph.hpp"
#include "indgap/indpoly.hpp"
#include "indgap/roots.hpp"
#include "indgap/suites.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace indgap;

Int pow10_int(long k) {
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return v;
}

// Exact rational from a decimal-scientific literal such as "2.5e-13".
Rat parse_decimal_rat(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    std::string digits;
    long frac = 0, exp = 0;
    bool any = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        digits += s[i++];
        any = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
            ++frac;
            any = true;
        }
    }
    if (!any || digits.size() > 5000) throw ParseError("bad decimal literal: '" + s + "'");
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
        bool eany = false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            exp = exp * 10 + (s[i++] - '0');
            if (exp > 100000) throw ParseError("exponent out of range in '" + s + "'");
            eany = true;
        }
        if (!eany) throw ParseError("bad exponent in '" + s + "'");
        if (eneg) exp = -exp;
    }
    if (i != s.size()) throw ParseError("trailing characters in number '" + s + "'");
    Int num(digits.c_str());
    long e10 = exp - frac;
    Rat r = e10 >= 0 ? Rat(num * pow10_int(e10)) : make_rat(num, pow10_int(-e10));
    return neg ? Rat(-r) : r;
}

Rat parse_positive_tolerance(const std::string& s) {
    Rat t = parse_decimal_rat(s);
    if (sign(t) <= 0) throw ParseError("tolerance must be positive, got '" + s + "'");
    return t;
}

Graph load_graph(const std::string& spec, const std::string& path) {
    if (!spec.empty() && !path.empty())
        throw ParseError("choose one of --graph / --file, not both");
    if (!spec.empty()) return parse_graph_spec(spec);
    if (!path.empty()) return read_edge_list_file(path);
    throw ParseError("no graph given: use --graph SPEC or --file PATH");
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw ParseError("cannot open output file: " + path);
        os = &file;
    }
};

unsigned resolve_precision(unsigned flag_bits) {
    if (flag_bits != 0) return flag_bits;
    if (const char* env = std::getenv("INDGAP_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 53 || v > (1 << 20))
            throw ParseError("INDGAP_PRECISION must be an integer in [53, 1048576]");
        return static_cast<unsigned>(v);
    }
    return 256;
}

std::string coefficient_row(const IntPoly& p) {
    std::string row = "[";
    for (int k = 0; k <= p.degree(); ++k) {
        if (k) row += ", ";
        row += p.coeff(k).get_str();
    }
    return row + "]";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"independence-polynomial root gap toolkit"};
    app.require_subcommand(1);

    std::string graph_spec, file_path, out_path, format = "json", tol_str = "1e-12";
    unsigned precision = 0;
    int grid = 721, nmax = 8, count = 200, order = 30, pivot = -1, jobs = 1;
    std::uint64_t seed = 1;
    std::string suite_name, family_name;

    auto add_graph_opts = [&](CLI::App* c) {
        c->add_option("--graph", graph_spec,
                      "graph spec: path:7, cycle:12, star:5, complete:6, kbip:3x4, "
                      "gnp:10:0.4:seed42");
        c->add_option("--file", file_path, "edge-list file: '# comment', 'n m', then 'u v' rows");
    };
    auto add_precision_opt = [&](CLI::App* c) {
        c->add_option("--precision", precision,
                      "working precision in bits (default 256, or INDGAP_PRECISION)")
            ->check(CLI::Range(53u, 1048576u));
    };

    CLI::App* poly = app.add_subcommand("poly", "print exact I(G,z) coefficients");
    add_graph_opts(poly);
    poly->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    poly->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* certify = app.add_subcommand("certify", "produce a zero-free gap certificate");
    add_graph_opts(certify);
    certify->add_option("--tol", tol_str, "beta enclosure width target (default 1e-12)");
    add_precision_opt(certify);
    certify->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    certify->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run property suites");
    std::vector<std::string> allowed = suite_names();
    allowed.push_back("all");
    verify->add_option("suite", suite_name, "one of: combinatorics, families, positivity, gamma, majorant, soundness, all")
        ->required()
        ->check(CLI::IsMember(allowed));
    verify->add_option("--nmax", nmax,
                       "population ceiling: exhaustive graphs up to min(nmax,10) vertices, "
                       "family tables up to nmax")
        ->check(CLI::Range(2, 200));
    verify->add_option("--count", count, "random-graph instances (default 200)")
        ->check(CLI::Range(0, 100000));
    verify->add_option("--order", order, "series truncation order (default 30)")
        ->check(CLI::Range(1, 1000));
    verify->add_option("--grid", grid, "theta grid points (default 721)")
        ->check(CLI::Range(16, 1000000));
    verify->add_option("--seed", seed, "random population seed (default 1)");
    verify->add_option("--jobs", jobs, "worker cap; runs are sequential either way")
        ->check(CLI::Range(1, 1024));
    add_precision_opt(verify);
    verify->add_option("--out", out_path, "write report to file instead of stdout");

    CLI::App* plot = app.add_subcommand(
        "plot-data", "CSV of theta, |f_u(beta e^{i theta})|, majorant on [0, pi]");
    add_graph_opts(plot);
    plot->add_option("--pivot", pivot, "pivot vertex (default: a center vertex)");
    plot->add_option("--grid", grid, "grid points (default 721)")
        ->check(CLI::Range(16, 1000000));
    plot->add_option("--tol", tol_str, "beta enclosure width target (default 1e-12)");
    add_precision_opt(plot);
    plot->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* family = app.add_subcommand("family", "closed-form root table for a family");
    family->add_option("kind", family_name, "path, cycle, or bipartite")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "bipartite"}));
    family->add_option("--nmax", nmax, "largest n in the table (default 30)")
        ->check(CLI::Range(2, 400));
    family->add_option("--out", out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*poly) {
            Graph g = load_graph(graph_spec, file_path);
            IntPoly p = independence_poly(g);
            OutputTarget out;
            out.open(out_path);
            if (format == "text") {
                *out.os << "I(G,z) = " << to_string(p) << "\n"
                        << "coefficients: " << coefficient_row(p) << "\n";
            } else {
                *out.os << poly_to_json(p) << "\n";
            }
            return 0;
        }

        if (*certify) {
            Graph g = load_graph(graph_spec, file_path);
            if (!is_connected(g)) {
                std::cerr << "certify: input graph is disconnected\n";
                return 4;
            }
            set_precision_bits(resolve_precision(precision));
            Rat tol = parse_positive_tolerance(tol_str);
            BetaEnclosure enc = beta_bracket(g, tol);
            GapCertificate cert = certified_gap(g, enc, true);
            OutputTarget out;
            out.open(out_path);
            if (format == "text")
                *out.os << certificate_text(cert);
            else
                *out.os << certificate_to_json(cert) << "\n";
            return cert.valid ? 0 : 5;
        }

        if (*verify) {
            set_precision_bits(resolve_precision(precision));
            SuiteOptions opt;
            opt.nmax = std::min(nmax, 10);
            opt.family_nmax = nmax;
            opt.random_count = count;
            opt.order = order;
            opt.grid = grid;
            opt.seed = seed;
            opt.jobs = jobs;
            OutputTarget out;
            out.open(out_path);
            opt.log = out.os;
            std::vector<SuiteResult> results = run_suites(suite_name, opt);
            long viol = 0;
            for (const SuiteResult& r : results) viol += r.violations;
            *out.os << (viol == 0 ? "verify: PASS\n" : "verify: FAIL\n");
            return viol == 0 ? 0 : 1;
        }

        if (*plot) {
            Graph g = load_graph(graph_spec, file_path);
            if (!is_connected(g)) {
                std::cerr << "plot-data: input graph is disconnected\n";
                return 4;
            }
            if (pivot >= g.n)
                throw ParseError("pivot " + std::to_string(pivot) + " out of range for n=" +
                                 std::to_string(g.n));
            set_precision_bits(resolve_precision(precision));
            Rat tol = parse_positive_tolerance(tol_str);
            BetaEnclosure enc = beta_bracket(g, tol);
            Rat blo = enc.exact_hi ? enc.hi : enc.lo;
            int u = pivot < 0 ? center_vertex(g) : pivot;
            OutputTarget out;
            out.open(out_path);
            *out.os << "# n=" << g.n << " pivot=" << u << " beta_lo="
                    << to_real(enc.lo).str(17, std::ios_base::scientific) << " beta_hi="
                    << to_real(enc.hi).str(17, std::ios_base::scientific) << "\n";
            *out.os << majorant_grid_csv(g, u, to_real(blo), grid);
            return 0;
        }

        if (*family) {
            FamilyKind kind = parse_family_kind(family_name);
            int start = kind == FamilyKind::path ? 3 : kind == FamilyKind::cycle ? 4 : 2;
            if (nmax < start)
                throw ParseError("family table needs --nmax >= " + std::to_string(start));
            std::vector<int> ns;
            for (int n = start; n <= nmax; ++n) ns.push_back(n);
            OutputTarget out;
            out.open(out_path);
            *out.os << family_report_csv(kind, ns);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
