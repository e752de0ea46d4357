// polytri: exact polynomial-triangle toolkit.
//
// Exit codes: 0 success / all checks pass, 1 mathematical counterexample or
// sequence mismatch, 2 usage, precondition or IO error.

#include "polytri/algebra.hpp"
#include "polytri/asymptotics.hpp"
#include "polytri/color_vector.hpp"
#include "polytri/enumerate.hpp"
#include "polytri/genfun.hpp"
#include "polytri/identities.hpp"
#include "polytri/oeis.hpp"
#include "polytri/sturm.hpp"
#include "polytri/triangle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#ifdef _WIN32
#include <io.h>
#define POLYTRI_ISATTY _isatty(1)
#else
#include <unistd.h>
#define POLYTRI_ISATTY isatty(1)
#endif

namespace {

using nlohmann::json;
using namespace polytri;

enum class Format { Plain, Csv, Json };

struct GlobalOptions {
    Format format = Format::Plain;
    std::string out_path;
};

std::string fixed6(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", v);
    return buffer;
}

bool use_color() {
    return POLYTRI_ISATTY && std::getenv("NO_COLOR") == nullptr;
}

int emit(const GlobalOptions& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(opts.out_path);
    if (!out) {
        std::cerr << "error: cannot open output file '" << opts.out_path << "'\n";
        return 2;
    }
    out << payload;
    return 0;
}

std::string join_row(const Row& row) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
        if (i) line += ',';
        line += to_string(row[i]);
    }
    return line;
}

json color_json(const ColorVector& a) {
    json entries = json::array();
    for (const Rational& c : a.entries()) entries.push_back(to_string(c));
    return entries;
}

// ---------------------------------------------------------------- coeff

int cmd_coeff(const GlobalOptions& opts, const ColorVector& a, int k, long long n) {
    const Rational value = poly_coeff(a, k, n);
    std::string payload;
    switch (opts.format) {
        case Format::Plain: payload = to_string(value) + "\n"; break;
        case Format::Csv:
            payload = "k,n,value\n" + std::to_string(k) + "," + std::to_string(n) + "," +
                      to_string(value) + "\n";
            break;
        case Format::Json:
            payload = json{{"a", color_json(a)}, {"k", k}, {"n", n}, {"value", to_string(value)}}
                          .dump() + "\n";
            break;
    }
    return emit(opts, payload);
}

// ------------------------------------------------------------ row / triangle

int cmd_row(const GlobalOptions& opts, const ColorVector& a, int k) {
    const Row row = triangle_row(a, k);
    std::string payload;
    switch (opts.format) {
        case Format::Plain: payload = join_row(row) + "\n"; break;
        case Format::Csv: {
            payload = "n,value\n";
            for (size_t n = 0; n < row.size(); ++n)
                payload += std::to_string(n) + "," + to_string(row[n]) + "\n";
            break;
        }
        case Format::Json: {
            json values = json::array();
            for (const Rational& v : row) values.push_back(to_string(v));
            payload = json{{"a", color_json(a)}, {"k", k}, {"values", values}}.dump() + "\n";
            break;
        }
    }
    return emit(opts, payload);
}

int cmd_triangle(const GlobalOptions& opts, const ColorVector& a, int k_max, bool centered) {
    std::vector<std::string> lines;
    lines.reserve(static_cast<size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) lines.push_back(join_row(triangle_row(a, k)));

    std::string payload;
    switch (opts.format) {
        case Format::Plain: {
            const size_t width = lines.back().size();
            for (std::string& line : lines) {
                if (centered && line.size() < width)
                    line.insert(0, (width - line.size()) / 2, ' ');
                payload += line + "\n";
            }
            break;
        }
        case Format::Csv: {
            payload = "k,n,value\n";
            for (int k = 0; k <= k_max; ++k) {
                const Row row = triangle_row(a, k);
                for (size_t n = 0; n < row.size(); ++n)
                    payload += std::to_string(k) + "," + std::to_string(n) + "," +
                               to_string(row[n]) + "\n";
            }
            break;
        }
        case Format::Json: {
            json rows = json::array();
            for (int k = 0; k <= k_max; ++k) {
                json row = json::array();
                for (const Rational& v : triangle_row(a, k)) row.push_back(to_string(v));
                rows.push_back(row);
            }
            payload = json{{"a", color_json(a)}, {"rows", rows}}.dump() + "\n";
            break;
        }
    }
    return emit(opts, payload);
}

// -------------------------------------------------------------- identities

int cmd_identities(const GlobalOptions& opts, const ColorVector& a, int k_max,
                   const std::string& only) {
    std::vector<IdentityId> selected;
    const bool explicit_selection = !only.empty();
    if (explicit_selection) {
        std::istringstream stream(only);
        std::string tag;
        while (std::getline(stream, tag, ',')) {
            const auto id = parse_identity_tag(tag);
            if (!id) {
                std::cerr << "error: unknown identity tag '" << tag << "'\n";
                return 2;
            }
            selected.push_back(*id);
        }
    } else {
        selected = all_identities();
    }

    std::vector<IdentityReport> reports;
    for (IdentityId id : selected) reports.push_back(verify_identity(id, a, k_max));

    bool any_failed = false;
    bool any_rejected = false;
    for (const IdentityReport& r : reports) {
        any_failed |= r.status == IdentityReport::Status::Failed;
        any_rejected |= r.status == IdentityReport::Status::Rejected;
    }

    std::string payload;
    switch (opts.format) {
        case Format::Plain: {
            const bool color = use_color() && opts.out_path.empty();
            for (const IdentityReport& r : reports) {
                std::string status;
                switch (r.status) {
                    case IdentityReport::Status::Passed:
                        status = color ? "\033[32mpassed\033[0m" : "passed";
                        break;
                    case IdentityReport::Status::Failed:
                        status = color ? "\033[31mFAILED\033[0m" : "FAILED";
                        status += " (" + std::to_string(r.counterexamples.size()) +
                                  " counterexamples)";
                        break;
                    case IdentityReport::Status::Rejected:
                        status = "rejected: " + r.rejection_reason;
                        break;
                }
                payload += r.tag + ": " + status + "\n";
                for (const Counterexample& ce : r.counterexamples)
                    payload += "  " + ce.where + ": lhs=" + ce.lhs + " rhs=" + ce.rhs + "\n";
            }
            break;
        }
        case Format::Csv: {
            payload = "identity,status,counterexamples\n";
            for (const IdentityReport& r : reports) {
                std::string status = r.status == IdentityReport::Status::Passed   ? "passed"
                                     : r.status == IdentityReport::Status::Failed ? "failed"
                                                                                  : "rejected";
                payload += r.tag + "," + status + "," +
                           std::to_string(r.counterexamples.size()) + "\n";
            }
            break;
        }
        case Format::Json: {
            json results = json::array();
            for (const IdentityReport& r : reports) {
                json entry{{"identity", r.tag}};
                switch (r.status) {
                    case IdentityReport::Status::Passed: entry["status"] = "passed"; break;
                    case IdentityReport::Status::Failed: entry["status"] = "failed"; break;
                    case IdentityReport::Status::Rejected:
                        entry["status"] = "rejected";
                        entry["reason"] = r.rejection_reason;
                        break;
                }
                json counterexamples = json::array();
                for (const Counterexample& ce : r.counterexamples)
                    counterexamples.push_back(
                        {{"where", ce.where}, {"lhs", ce.lhs}, {"rhs", ce.rhs}});
                entry["counterexamples"] = counterexamples;
                results.push_back(entry);
            }
            payload = json{{"a", color_json(a)}, {"kmax", k_max}, {"results", results}}.dump() +
                      "\n";
            break;
        }
    }
    const int rc = emit(opts, payload);
    if (rc != 0) return rc;
    if (any_failed) return 1;
    // An explicitly requested identity whose precondition fails is a usage
    // error; in a full-catalogue run inapplicable identities are skipped.
    if (any_rejected && explicit_selection) return 2;
    return 0;
}

// ----------------------------------------------------------------- entropy

int cmd_entropy(const GlobalOptions& opts, const ColorVector& a, int samples) {
    const auto curve = entropy_curve(a, samples);
    std::string payload;
    switch (opts.format) {
        case Format::Plain:
            for (const auto& [rho, h] : curve) payload += fixed6(rho) + " " + fixed6(h) + "\n";
            break;
        case Format::Csv:
            payload = "rho,entropy\n";
            for (const auto& [rho, h] : curve) payload += fixed6(rho) + "," + fixed6(h) + "\n";
            break;
        case Format::Json: {
            json points = json::array();
            for (const auto& [rho, h] : curve) points.push_back({{"rho", rho}, {"entropy", h}});
            payload = json{{"a", color_json(a)}, {"samples", samples}, {"curve", points}}.dump() +
                      "\n";
            break;
        }
    }
    return emit(opts, payload);
}

// -------------------------------------------------------------------- dist

int cmd_dist(const GlobalOptions& opts, const ColorVector& a, int k, long long sample_trials,
             uint64_t seed) {
    const std::vector<Rational> exact = score_distribution(a, k);
    std::optional<EmpiricalDistribution> empirical;
    if (sample_trials > 0) empirical = sample_scores(a, k, sample_trials, seed);

    std::string payload;
    switch (opts.format) {
        case Format::Plain: {
            for (size_t n = 0; n < exact.size(); ++n) {
                payload += std::to_string(n) + " " + to_string(exact[n]) + " " +
                           fixed6(to_double(exact[n]));
                if (empirical) payload += " " + fixed6(to_double(empirical->frequencies[n]));
                payload += "\n";
            }
            if (empirical)
                payload += "tv_distance " +
                           fixed6(to_double(empirical->tv_distance(exact))) + "\n";
            break;
        }
        case Format::Csv: {
            payload = empirical ? "n,exact,probability,empirical\n" : "n,exact,probability\n";
            for (size_t n = 0; n < exact.size(); ++n) {
                payload += std::to_string(n) + "," + to_string(exact[n]) + "," +
                           fixed6(to_double(exact[n]));
                if (empirical) payload += "," + fixed6(to_double(empirical->frequencies[n]));
                payload += "\n";
            }
            if (empirical)
                payload += "# tv_distance," +
                           fixed6(to_double(empirical->tv_distance(exact))) + "\n";
            break;
        }
        case Format::Json: {
            json rows = json::array();
            for (size_t n = 0; n < exact.size(); ++n) {
                json row{{"n", n},
                         {"exact", to_string(exact[n])},
                         {"probability", to_double(exact[n])}};
                if (empirical) row["empirical"] = to_string(empirical->frequencies[n]);
                rows.push_back(row);
            }
            json doc{{"a", color_json(a)}, {"k", k}, {"distribution", rows}};
            if (empirical) {
                doc["trials"] = empirical->trials;
                doc["seed"] = seed;
                doc["tv_distance"] = to_double(empirical->tv_distance(exact));
            }
            payload = doc.dump() + "\n";
            break;
        }
    }
    return emit(opts, payload);
}

// -------------------------------------------------------------- conjecture

int cmd_conjecture(const GlobalOptions& opts, int m, int n_max) {
    const ConjectureReport report = conjecture_scan(m, n_max);
    std::string payload;
    switch (opts.format) {
        case Format::Plain: {
            payload = "m=" + std::to_string(m) + " nmax=" + std::to_string(n_max) + ": ";
            if (report.all_real()) {
                payload += "no counterexamples (" + std::to_string(report.entries.size()) +
                           " polynomials checked)\n";
            } else {
                payload += "counterexamples at n =";
                for (int n : report.counterexamples) payload += " " + std::to_string(n);
                payload += "\n";
            }
            break;
        }
        case Format::Csv: {
            payload = "n,stripped_degree,squarefree_degree,distinct_real_roots,real_rooted\n";
            for (const ConjectureEntry& e : report.entries)
                payload += std::to_string(e.n) + "," + std::to_string(e.stripped_degree) + "," +
                           std::to_string(e.squarefree_degree) + "," +
                           std::to_string(e.distinct_real_roots) + "," +
                           (e.real_rooted ? "true" : "false") + "\n";
            break;
        }
        case Format::Json: {
            json entries = json::array();
            for (const ConjectureEntry& e : report.entries)
                entries.push_back({{"n", e.n},
                                   {"stripped_degree", e.stripped_degree},
                                   {"squarefree_degree", e.squarefree_degree},
                                   {"distinct_real_roots", e.distinct_real_roots},
                                   {"real_rooted", e.real_rooted}});
            payload = json{{"m", m},
                           {"nmax", n_max},
                           {"counterexamples", report.counterexamples},
                           {"entries", entries}}
                          .dump() + "\n";
            break;
        }
    }
    const int rc = emit(opts, payload);
    if (rc != 0) return rc;
    return report.all_real() ? 0 : 1;
}

// --------------------------------------------------------------------- fib

int cmd_fib(const GlobalOptions& opts, int n) {
    const BigInt value = fibonacci_trinomial(n);
    std::string payload;
    switch (opts.format) {
        case Format::Plain: payload = value.str() + "\n"; break;
        case Format::Csv: payload = "n,fibonacci\n" + std::to_string(n) + "," + value.str() + "\n"; break;
        case Format::Json:
            payload = json{{"n", n}, {"fibonacci", value.str()}}.dump() + "\n";
            break;
    }
    return emit(opts, payload);
}

// -------------------------------------------------------------------- oeis

int cmd_oeis(const GlobalOptions& opts, const std::string& id, int rows, bool fetch) {
    const OeisEntry* embedded = embedded_entry(id);
    std::vector<long long> reference;
    int m = 0;
    std::string source;
    bool fetch_failed = false;

    if (fetch) {
        if (embedded == nullptr) {
            std::cerr << "error: cannot infer the triangle degree for unknown id '" << id
                      << "'\n";
            return 2;
        }
        m = embedded->m;
        if (const auto path = fetch_bfile(id, oeis_cache_dir())) {
            std::ifstream in(*path);
            reference = parse_bfile(in);
            source = "fetch:" + *path;
        } else {
            std::cerr << "error: fetching b-file for " << id
                      << " failed; falling back to the embedded prefix\n";
            fetch_failed = true;
        }
    }
    if (reference.empty()) {
        if (embedded == nullptr) {
            std::cerr << "error: unknown sequence id '" << id
                      << "' (embedded: A027907, A008287, A035343); use --fetch\n";
            return 2;
        }
        m = embedded->m;
        reference = embedded->terms;
        source = "embedded";
    }

    const int max_rows = rows > 0 ? rows : std::numeric_limits<int>::max();
    const OeisComparison result = compare_with_triangle(reference, m, max_rows);

    std::string payload;
    switch (opts.format) {
        case Format::Plain: {
            payload = id + ": compared " + std::to_string(result.compared) + " terms (" + source +
                      "), ";
            if (result.match) payload += "match\n";
            else
                payload += "MISMATCH at index " + std::to_string(result.first_mismatch) +
                           ": reference " + std::to_string(result.expected) + ", generated " +
                           std::to_string(result.generated) + "\n";
            break;
        }
        case Format::Csv: {
            payload = "id,source,compared,match,first_mismatch\n";
            payload += id + "," + source + "," + std::to_string(result.compared) + "," +
                       (result.match ? "true" : "false") + "," +
                       (result.match ? "" : std::to_string(result.first_mismatch)) + "\n";
            break;
        }
        case Format::Json: {
            json doc{{"id", id},
                     {"source", source},
                     {"compared", result.compared},
                     {"match", result.match}};
            if (!result.match) {
                doc["first_mismatch"] = result.first_mismatch;
                doc["reference"] = result.expected;
                doc["generated"] = result.generated;
            }
            payload = doc.dump() + "\n";
            break;
        }
    }
    const int rc = emit(opts, payload);
    if (rc != 0) return rc;
    if (!result.match) return 1;
    return fetch_failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polytri: exact coefficients of polynomial powers, their identities,\n"
                 "column generating functions, and entropy asymptotics"};
    app.require_subcommand(1);
    app.footer(
        "Machine formats (stable):\n"
        "  csv headers   coeff: k,n,value | row: n,value | triangle: k,n,value\n"
        "                identities: identity,status,counterexamples\n"
        "                entropy: rho,entropy | dist: n,exact,probability[,empirical]\n"
        "                conjecture: n,stripped_degree,squarefree_degree,\n"
        "                            distinct_real_roots,real_rooted\n"
        "                fib: n,fibonacci | oeis: id,source,compared,match,first_mismatch\n"
        "                ('.' decimal separator, nothing quoted; a sampled dist\n"
        "                appends '# tv_distance,<value>')\n"
        "  json keys     a, k, n, value, values, rows, kmax, results, identity,\n"
        "                status, reason, counterexamples, where, lhs, rhs, samples,\n"
        "                curve, rho, entropy, distribution, exact, probability,\n"
        "                empirical, trials, seed, tv_distance, m, nmax, entries,\n"
        "                stripped_degree, squarefree_degree, distinct_real_roots,\n"
        "                real_rooted, id, source, compared, match, first_mismatch,\n"
        "                reference, generated, fibonacci\n"
        "                (exact values are strings like \"5/32\"; keys sort\n"
        "                alphabetically)\n"
        "Exit codes: 0 success/all-pass, 1 counterexample or mismatch,\n"
        "            2 usage/precondition/IO error.\n"
        "Environment: POLYTRI_CACHE_DIR (b-file cache), NO_COLOR.");

    GlobalOptions opts;
    std::map<std::string, Format> format_names{
        {"plain", Format::Plain}, {"csv", Format::Csv}, {"json", Format::Json}};
    app.add_option("--format", opts.format, "Output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
        ->default_str("plain");
    app.add_option("--out", opts.out_path, "Write output to a file instead of stdout");

    std::string colors_text = "1,1,1";
    int k = 0;
    long long n = 0;
    int k_max = 10;
    int samples = 101;
    bool centered = false;
    std::string only_tags;
    long long sample_trials = 0;
    uint64_t seed = 0;
    int conj_m = 2;
    int conj_nmax = 30;
    int fib_n = 1;
    std::string oeis_id;
    int oeis_rows = 0;
    bool oeis_fetch = false;

    auto add_colors = [&](CLI::App* cmd) {
        cmd->add_option("-a,--colors", colors_text,
                        "Comma-separated exact rational weights, e.g. 1,1/2,3")
            ->required();
    };

    CLI::App* coeff = app.add_subcommand("coeff", "Coefficient of t^n in p_a(t)^k");
    add_colors(coeff);
    coeff->add_option("-k", k, "Power")->required()->check(CLI::NonNegativeNumber);
    coeff->add_option("-n", n, "Exponent (any integer; out of range gives 0)")->required();

    CLI::App* row = app.add_subcommand("row", "Full row k of the triangle");
    add_colors(row);
    row->add_option("-k", k, "Row index")->required()->check(CLI::NonNegativeNumber);

    CLI::App* triangle_cmd = app.add_subcommand("triangle", "Rows 0..k of the triangle");
    add_colors(triangle_cmd);
    triangle_cmd->add_option("-k", k, "Last row index")->required()->check(CLI::NonNegativeNumber);
    triangle_cmd->add_flag("--centered", centered, "Pad rows to center the display");

    CLI::App* identities = app.add_subcommand("identities", "Verify the identity catalogue");
    add_colors(identities);
    identities->add_option("--kmax", k_max, "Row sweep bound")->check(CLI::PositiveNumber);
    identities->add_option("--only", only_tags, "Comma-separated identity tags to run");

    CLI::App* entropy_cmd = app.add_subcommand("entropy", "Entropy density curve over [0, m]");
    add_colors(entropy_cmd);
    entropy_cmd->add_option("--samples", samples, "Grid points including endpoints")
        ->check(CLI::Range(2, 1000000));

    CLI::App* dist = app.add_subcommand("dist", "Exact score distribution after k draws");
    add_colors(dist);
    dist->add_option("-k", k, "Number of draws")->required()->check(CLI::NonNegativeNumber);
    dist->add_option("--sample", sample_trials, "Also sample this many games")
        ->check(CLI::PositiveNumber);
    dist->add_option("--seed", seed, "Sampler seed");

    CLI::App* conjecture = app.add_subcommand(
        "conjecture", "Real-rootedness scan of the colorless column polynomials");
    conjecture->add_option("--m", conj_m, "Degree of the colorless vector")
        ->check(CLI::PositiveNumber);
    conjecture->add_option("--nmax", conj_nmax, "Scan columns 0..nmax")
        ->check(CLI::NonNegativeNumber);

    CLI::App* fib = app.add_subcommand("fib", "Fibonacci number via the trinomial column value");
    fib->add_option("-n", fib_n, "Index (n >= 1)")->required()->check(CLI::PositiveNumber);

    CLI::App* oeis = app.add_subcommand("oeis", "Compare a triangle against its catalogued terms");
    oeis->add_option("--id", oeis_id, "Sequence id (A027907, A008287, A035343)")->required();
    oeis->add_option("--rows", oeis_rows, "Compare at most this many triangle rows")
        ->check(CLI::PositiveNumber);
    oeis->add_flag("--fetch", oeis_fetch, "Fetch the published term file over HTTPS");

    // Global flags (--format, --out) may appear after the subcommand.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // parse/usage errors exit 2; --help exits 0
    }

    try {
        if (coeff->parsed()) return cmd_coeff(opts, ColorVector::parse(colors_text), k, n);
        if (row->parsed()) return cmd_row(opts, ColorVector::parse(colors_text), k);
        if (triangle_cmd->parsed())
            return cmd_triangle(opts, ColorVector::parse(colors_text), k, centered);
        if (identities->parsed())
            return cmd_identities(opts, ColorVector::parse(colors_text), k_max, only_tags);
        if (entropy_cmd->parsed())
            return cmd_entropy(opts, ColorVector::parse(colors_text), samples);
        if (dist->parsed())
            return cmd_dist(opts, ColorVector::parse(colors_text), k, sample_trials, seed);
        if (conjecture->parsed()) return cmd_conjecture(opts, conj_m, conj_nmax);
        if (fib->parsed()) return cmd_fib(opts, fib_n);
        if (oeis->parsed()) return cmd_oeis(opts, oeis_id, oeis_rows, oeis_fetch);
    } catch (const EnumerationCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
