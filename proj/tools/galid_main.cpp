// galid — Galois groups of integer cubics, quartics, and quintics from
// factorization types mod p, with a brute-force group-theory verifier and a
// certified discriminant bound chain.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <unistd.h>

#include <galid/galid.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitUnsupportedDegree = 3;

bool env_flag(const char* name) {
    const char* v = std::getenv(name);
    return v && *v && std::string(v) != "0";
}

bool color_enabled() {
    const char* v = std::getenv("GALID_COLOR");
    std::string mode = v ? v : "auto";
    if (mode == "always") return true;
    if (mode == "never") return false;
    return isatty(fileno(stdout));
}

std::string paint(const std::string& s, const char* code) {
    if (!color_enabled()) return s;
    return std::string("\033[") + code + "m" + s + "\033[0m";
}

galid::BigRat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        galid::BigInt num(text.substr(0, slash));
        galid::BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("denominator must be nonzero");
        return galid::BigRat(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return galid::BigRat(galid::BigInt(text));
    const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    galid::BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const bool neg = !whole.empty() && whole[0] == '-';
    galid::BigInt w(whole.empty() || whole == "-" ? "0" : whole);
    galid::BigInt f(frac.empty() ? "0" : frac);
    galid::BigRat r = galid::BigRat(abs(w)) + galid::BigRat(f, den);
    return neg ? -r : r;
}

void emit(const std::string& payload, const std::string& out_file) {
    std::cout << payload;
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw std::runtime_error("cannot open output file: " + out_file);
        f << payload;
    }
}

struct AnalyzeArgs {
    std::string poly;
    std::uint64_t prime_limit = 1000;
    std::string mode = "strict";
    std::string format = "text";
    bool frequencies = false;
    bool no_disc_refinement = false;
    bool no_timestamp = false;
    std::string out_file;
};

int run_analyze(const AnalyzeArgs& args) {
    galid::IntPoly c = galid::parse_poly(args.poly);
    if (c.degree() < 3 || c.degree() > 5) {
        std::cerr << "error: determination supports degrees 3-5 (got degree " << c.degree()
                  << ")\n";
        return kExitUnsupportedDegree;
    }
    if (!c.is_monic()) {
        std::cerr << "error: the polynomial must be monic\n";
        return kExitInputError;
    }

    galid::DetermineOptions opts;
    opts.prime_limit = args.prime_limit;
    opts.mode = args.mode == "strict" ? galid::DetermineMode::strict
                                      : galid::DetermineMode::assume_complete;
    opts.disc_refinement = !args.no_disc_refinement;
    opts.keep_log = args.format == "csv";
    const galid::DeterminationReport rep = galid::determine(c, opts);

    galid::ReportOptions ropts;
    ropts.with_timestamp = !args.no_timestamp && !env_flag("GALID_NO_TIMESTAMP");
    ropts.with_frequencies = args.frequencies;

    if (args.format == "json") {
        emit(galid::report_to_json(rep, ropts).dump(2) + "\n", args.out_file);
    } else if (args.format == "csv") {
        emit(galid::report_to_csv(rep), args.out_file);
    } else {
        std::string text = galid::report_to_text(rep, ropts);
        if (color_enabled()) {
            const std::string key = "verdict:        ";
            auto pos = text.find(key);
            if (pos != std::string::npos) {
                auto eol = text.find('\n', pos);
                const std::string line = text.substr(pos + key.size(), eol - pos - key.size());
                const char* code = rep.verdict.kind == galid::VerdictKind::conclusive ? "32" : "33";
                text = text.substr(0, pos + key.size()) + paint(line, code) + text.substr(eol);
            }
        }
        emit(text, args.out_file);
    }
    return kExitOk;
}

int run_tables(int degree, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        if (degree == 0) {
            galid::ordered_json all = galid::ordered_json::array();
            for (int n = 3; n <= 5; ++n) all.push_back(galid::tables_to_json(n));
            os << all.dump(2) << "\n";
        } else {
            os << galid::tables_to_json(degree).dump(2) << "\n";
        }
    } else {
        if (degree == 0)
            for (int n = 3; n <= 5; ++n) os << galid::tables_to_text(n);
        else
            os << galid::tables_to_text(degree);
    }
    std::cout << os.str();
    return kExitOk;
}

int run_verify(int degree_max) {
    const auto lines = galid::run_group_theory_suite(degree_max);
    bool all_pass = true;
    for (const auto& line : lines) {
        all_pass = all_pass && line.pass;
        std::cout << (line.pass ? paint("PASS", "32") : paint("FAIL", "31")) << "  " << line.name
                  << "  [" << line.checks << " checks; " << line.detail << "]\n";
    }
    return all_pass ? kExitOk : 1;
}

struct BoundArgs {
    std::string poly;
    std::string lmo_exponent;
    std::string format = "text";
    bool no_timestamp = false;
    std::string out_file;
};

int run_bound(const BoundArgs& args) {
    galid::IntPoly c = galid::parse_poly(args.poly);
    if (c.degree() < 2) {
        std::cerr << "error: the bound chain needs degree >= 2\n";
        return kExitUnsupportedDegree;
    }
    if (!c.is_monic()) {
        std::cerr << "error: the polynomial must be monic\n";
        return kExitInputError;
    }
    std::optional<galid::BigRat> a;
    if (!args.lmo_exponent.empty()) a = parse_rational(args.lmo_exponent);
    const galid::BoundReport rep = galid::compute_bound_chain(c, a);

    if (args.format == "json") {
        galid::ordered_json j;
        j["poly"] = galid::to_expression_string(c);
        j["degree"] = c.degree();
        j["bound"] = galid::bound_to_json(rep);
        if (!args.no_timestamp && !env_flag("GALID_NO_TIMESTAMP"))
            j["timestamp"] = galid::detail::iso8601_utc_now();
        emit(j.dump(2) + "\n", args.out_file);
    } else {
        emit(galid::bound_to_text(c, rep), args.out_file);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "galid — Galois group determination for monic irreducible integer polynomials\n"
        "of degree 3-5 via factorization types modulo primes.\n\n"
        "Environment: GALID_NO_TIMESTAMP=1 suppresses report timestamps\n"
        "             GALID_COLOR=always|never|auto controls colored text output"};
    app.require_subcommand(1);

    AnalyzeArgs aa;
    CLI::App* analyze = app.add_subcommand("analyze", "scan primes and determine the Galois group");
    analyze->add_option("poly", aa.poly, "polynomial, e.g. \"x^3-2\" or \"1,0,0,-2\"")->required();
    analyze->add_option("--prime-limit", aa.prime_limit, "scan primes up to this bound")
        ->capture_default_str();
    analyze->add_option("--mode", aa.mode, "verdict mode")
        ->check(CLI::IsMember({"strict", "assume-complete"}))
        ->capture_default_str();
    analyze->add_option("--emit", aa.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    analyze->add_flag("--frequencies", aa.frequencies,
                      "include expected Chebotarev densities per candidate");
    analyze->add_flag("--no-disc-refinement", aa.no_disc_refinement,
                      "disable the square-discriminant tie-break");
    analyze->add_flag("--no-timestamp", aa.no_timestamp, "omit the timestamp field");
    analyze->add_option("--out", aa.out_file, "also write the report to this file");

    int table_degree = 0;
    std::string table_format = "text";
    CLI::App* tables = app.add_subcommand("tables", "print the determination tables");
    tables->add_option("--degree", table_degree, "restrict to one degree")
        ->check(CLI::IsMember({3, 4, 5}));
    tables->add_option("--emit", table_format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    int degree_max = 5;
    CLI::App* verify =
        app.add_subcommand("verify-group-theory", "run the brute-force group-theory verifier suite");
    verify->add_option("--degree-max", degree_max, "largest symmetric-group degree to sweep")
        ->check(CLI::IsMember({4, 5}))
        ->capture_default_str();

    BoundArgs ba;
    CLI::App* bound = app.add_subcommand("bound", "print the certified discriminant bound chain");
    bound->add_option("poly", ba.poly, "polynomial")->required();
    bound->add_option("--A", ba.lmo_exponent,
                      "exponent A of the prime-search bound 2*disc^A (rational or decimal)");
    bound->add_option("--emit", ba.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    bound->add_flag("--no-timestamp", ba.no_timestamp, "omit the timestamp field");
    bound->add_option("--out", ba.out_file, "also write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (*analyze) return run_analyze(aa);
        if (*tables) return run_tables(table_degree, table_format);
        if (*verify) return run_verify(degree_max);
        if (*bound) return run_bound(ba);
    } catch (const galid::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
