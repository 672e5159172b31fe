// Command-line interface: compute growth series coefficients, print the
// Riccati data for a family, cross-check the independent methods against
// each other and against the brute-force oracle, and tabulate exact vs
// asymptotic values.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 internal inconsistency.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hmc/asymptotics.hpp"
#include "hmc/cycleindex.hpp"
#include "hmc/errors.hpp"
#include "hmc/hypercount.hpp"
#include "hmc/numtheory.hpp"
#include "hmc/oracle.hpp"
#include "hmc/report_io.hpp"
#include "hmc/riccati.hpp"
#include "hmc/series.hpp"

namespace {

int parse_factor(const std::string& s) {
    if (s == "inf") return hmc::FamilySpec::kInf;
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::domain_error("factor must be an integer >= 2 or \"inf\": " + s);
    }
    if (pos != s.size() || v < 0)
        throw std::domain_error("factor must be an integer >= 2 or \"inf\": " + s);
    return v;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::domain_error("cannot open output file: " + out_path);
    out << text;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("HYPERCOUNT_ORACLE_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::domain_error("HYPERCOUNT_ORACLE_BUDGET is not a number");
        }
    }
    return 100'000'000ULL;
}

std::string fmt6(double v) {
    std::ostringstream out;
    out << std::setprecision(6) << v;
    return out.str();
}

struct GrowthArgs {
    std::string p, q;
    std::string kind = "rooted";
    std::size_t terms = 0;
    std::string format = "plain";
    std::string out;
};

int run_growth(const GrowthArgs& args) {
    hmc::FamilySpec family =
        hmc::FamilySpec::make(parse_factor(args.p), parse_factor(args.q));
    hmc::Kind kind = hmc::report_io::kind_from_string(args.kind);
    hmc::CountReport rep = kind == hmc::Kind::rooted
                               ? hmc::hypercount::rooted_report(family, args.terms)
                               : hmc::cycleindex::conjugacy_report(family, args.terms);
    std::string text;
    if (args.format == "plain") text = hmc::report_io::to_plain(rep);
    else if (args.format == "json") text = hmc::report_io::to_json(rep);
    else if (args.format == "bfile") text = hmc::report_io::to_bfile(rep);
    else if (args.format == "csv") text = hmc::report_io::to_csv(rep);
    else throw std::domain_error("unknown format: " + args.format);
    emit(text, args.out);
    return 0;
}

struct RiccatiArgs {
    std::string p, q;
    std::size_t terms = 0;
    std::string out;
};

int run_riccati(const RiccatiArgs& args) {
    hmc::FamilySpec family =
        hmc::FamilySpec::make(parse_factor(args.p), parse_factor(args.q));
    if (family.both_infinite())
        throw std::domain_error("riccati: (inf,inf) has no hypergeometric form");
    hmc::riccati::RiccatiEquation eq = hmc::riccati::build_equation(family);

    std::ostringstream out;
    out << "family " << family.str() << "\n";
    out << "N " << eq.N << "\n";
    out << "sigma [";
    for (int i = 0; i <= eq.N; ++i)
        out << (i ? ", " : "") << eq.sigma[i].get_str();
    out << "]\n";
    if (eq.N == 2) {
        out << "equation: w = x^2 w' + " << eq.sigma[1].get_str() << " x w + x w^2 + "
            << eq.sigma[2].get_str() << " x   (classical Riccati)\n";
    } else {
        out << "equation: w = x [";
        for (int i = 0; i <= eq.N; ++i)
            out << (i ? " + " : " ") << eq.sigma[eq.N - i].get_str() << " w_" << i;
        out << " ],  w_0 = 1, w_1 = w, w_i = x w_{i-1}' + w w_{i-1}\n";
    }
    try {
        hmc::riccati::NamedRecurrence rec = hmc::riccati::named_recurrence(family);
        out << "recurrence: " << rec.describe() << "\n";
    } catch (const hmc::riccati::not_classical_riccati& e) {
        out << "recurrence: n/a, not a classical Riccati case (N = " << e.N << ")\n";
    }
    if (args.terms > 0) {
        hmc::CountReport rep = hmc::riccati::rooted_from_riccati(family, args.terms);
        for (std::size_t n : rep.support())
            out << n << " " << rep.coeff[n].get_str() << "\n";
    }
    emit(out.str(), args.out);
    return 0;
}

struct VerifyArgs {
    std::string p, q;
    std::size_t terms = 0;    // 0 = pick per family
    int max_darts = -1;       // -1 = pick per family
    std::uint64_t budget = 0; // 0 = env or default
};

int run_verify(const VerifyArgs& args) {
    hmc::FamilySpec family =
        hmc::FamilySpec::make(parse_factor(args.p), parse_factor(args.q));
    std::uint64_t budget = args.budget ? args.budget : default_budget();

    std::int64_t stride = 1;
    if (family.both_finite()) stride = hmc::numtheory::lcm(family.p, family.q);
    else if (family.p_finite()) stride = family.p;

    int max_darts = args.max_darts;
    if (max_darts < 0)
        max_darts = family.both_infinite() ? 4 : static_cast<int>(2 * stride);

    std::size_t T = args.terms;
    if (T == 0) T = family.both_infinite() ? 20 : static_cast<std::size_t>(10 * stride);
    if (T < static_cast<std::size_t>(max_darts)) T = max_darts;
    // series support lives on the stride lattice
    T = (T / stride) * stride;

    std::cout << "verify family " << family.str() << "  terms " << T << "  max darts "
              << max_darts << "  budget " << budget << "\n";

    bool all_agree = true;
    auto compare = [&](const std::string& label, const hmc::CountReport& a,
                       const hmc::CountReport& b) {
        std::size_t upto = std::min(a.max_index(), b.max_index());
        for (std::size_t n = 0; n <= upto; ++n) {
            if (a.coeff[n] != b.coeff[n]) {
                std::cout << "MISMATCH  " << label << " at index " << n << ": "
                          << a.coeff[n].get_str() << " vs " << b.coeff[n].get_str()
                          << "\n";
                all_agree = false;
                return;
            }
        }
        std::cout << label << "  agree  (" << upto + 1 << " coefficients)\n";
    };

    // series-method stages
    hmc::CountReport rooted = hmc::hypercount::rooted_report(family, T);
    if (!family.both_infinite()) {
        compare("rooted    hypergeometric vs riccati         ", rooted,
                hmc::riccati::rooted_from_riccati(family, T));
        try {
            hmc::riccati::NamedRecurrence rec = hmc::riccati::named_recurrence(family);
            compare("rooted    hypergeometric vs named recurrence", rooted,
                    rec.as_report(T));
        } catch (const hmc::riccati::not_classical_riccati& e) {
            std::cout << "rooted    named recurrence n/a (N = " << e.N << ")\n";
        }
    } else {
        // Hall recurrence vs the log-derivative of sum n! z^n
        hmc::TruncSeries egf(T);
        for (std::size_t n = 0; n <= T; ++n) egf.coeff[n] = hmc::Rat(hmc::factorial(n));
        hmc::TruncSeries hderiv = theta(log_series(egf));
        hmc::CountReport alt = rooted;
        for (std::size_t n = 0; n <= T; ++n)
            alt.coeff[n] = hmc::to_integer(hderiv.coeff[n]);
        compare("rooted    hall recurrence vs log derivative ", rooted, alt);
    }

    hmc::CountReport conj = hmc::cycleindex::conjugacy_report(family, T);
    if (family.both_infinite()) {
        // conjugacy_report already cross-checked closed form vs moebius-log
        std::cout << "conjugacy closed form vs moebius-log        agree  (" << T
                  << " coefficients)\n";
    }

    // oracle stage
    hmc::oracle::Budget ob;
    ob.max_pairs = budget;
    for (int n = family.both_infinite() ? 1 : static_cast<int>(stride); n <= max_darts;
         n += family.both_infinite() ? 1 : static_cast<int>(stride)) {
        try {
            hmc::Int r = hmc::oracle::rooted_count(family, n, ob);
            if (r == rooted.coeff[n]) {
                std::cout << "oracle n=" << n << "  rooted     " << r.get_str()
                          << " = series  agree\n";
            } else {
                std::cout << "MISMATCH  oracle n=" << n << " rooted " << r.get_str()
                          << " vs series " << rooted.coeff[n].get_str() << "\n";
                all_agree = false;
            }
            hmc::Int c = hmc::oracle::conjugacy_count(family, n, ob);
            if (c == conj.coeff[n]) {
                std::cout << "oracle n=" << n << "  conjugacy  " << c.get_str()
                          << " = series  agree\n";
            } else {
                std::cout << "MISMATCH  oracle n=" << n << " conjugacy " << c.get_str()
                          << " vs series " << conj.coeff[n].get_str() << "\n";
                all_agree = false;
            }
        } catch (const hmc::oracle::budget_exceeded& e) {
            std::cout << "oracle n=" << n << "  refused (" << e.what()
                      << "); series stages unaffected\n";
            break;
        }
    }

    std::cout << (all_agree ? "all stages agree\n" : "verification failed\n");
    return all_agree ? 0 : 1;
}

struct AsymptoticsArgs {
    std::string p, q;
    std::size_t terms = 0;
    std::string out;
};

int run_asymptotics(const AsymptoticsArgs& args) {
    hmc::FamilySpec family =
        hmc::FamilySpec::make(parse_factor(args.p), parse_factor(args.q));
    if (family.both_infinite())
        throw std::domain_error("asymptotics: no expansion available for (inf,inf)");
    hmc::HyperParams hp = hmc::hypercount::derive_params(family);
    hmc::CountReport rooted = hmc::hypercount::rooted_report(family, args.terms);

    std::ostringstream out;
    out << "k exact asymptotic ratio\n";
    for (std::int64_t k = 1; k * hp.lcm_pq <= static_cast<std::int64_t>(args.terms);
         ++k) {
        const hmc::Int& exact = rooted.coeff[k * hp.lcm_pq];
        double log_asym = hmc::asympt::log_rooted_estimate(family, k);
        double ratio = std::exp(hmc::asympt::log_int(exact) - log_asym);
        out << k << " " << fmt6(exact.get_d()) << " " << fmt6(std::exp(log_asym)) << " "
            << fmt6(ratio) << "\n";
    }
    emit(out.str(), args.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counts of free finite-index subgroups of Z_p*Z_q, Z_p*Z, Z*Z\n"
                 "(equivalently rooted and unrooted (p,q)-hypermaps)"};
    app.require_subcommand(1);

    GrowthArgs growth;
    CLI::App* growth_cmd =
        app.add_subcommand("growth", "coefficient table for one family and kind");
    growth_cmd->add_option("--p", growth.p, "first factor (integer or inf)")->required();
    growth_cmd->add_option("--q", growth.q, "second factor (integer or inf)")->required();
    growth_cmd->add_option("--kind", growth.kind, "rooted | conjugacy")
        ->check(CLI::IsMember({"rooted", "conjugacy"}));
    growth_cmd->add_option("--terms", growth.terms, "max index (dart count)")
        ->required()
        ->check(CLI::PositiveNumber);
    growth_cmd->add_option("--format", growth.format, "plain | json | bfile | csv")
        ->check(CLI::IsMember({"plain", "json", "bfile", "csv"}));
    growth_cmd->add_option("--out", growth.out, "write to file instead of stdout");

    RiccatiArgs riccati;
    CLI::App* riccati_cmd =
        app.add_subcommand("riccati", "Riccati equation and recurrence for a family");
    riccati_cmd->add_option("--p", riccati.p)->required();
    riccati_cmd->add_option("--q", riccati.q)->required();
    riccati_cmd->add_option("--terms", riccati.terms,
                            "also print counts up to this index via the Riccati solve");
    riccati_cmd->add_option("--out", riccati.out, "write to file instead of stdout");

    VerifyArgs verify;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "cross-check hypergeometric, Riccati, cycle-index and oracle routes");
    verify_cmd->add_option("--p", verify.p)->required();
    verify_cmd->add_option("--q", verify.q)->required();
    verify_cmd->add_option("--terms", verify.terms, "series comparison depth");
    verify_cmd->add_option("--max-darts", verify.max_darts, "largest oracle instance")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--oracle-budget", verify.budget,
                           "estimated-pair cap for the oracle (default "
                           "HYPERCOUNT_ORACLE_BUDGET or 1e8)")
        ->check(CLI::PositiveNumber);

    AsymptoticsArgs asym;
    CLI::App* asym_cmd =
        app.add_subcommand("asymptotics", "exact vs asymptotic coefficient table");
    asym_cmd->add_option("--p", asym.p)->required();
    asym_cmd->add_option("--q", asym.q)->required();
    asym_cmd->add_option("--terms", asym.terms, "max index (dart count)")
        ->required()
        ->check(CLI::PositiveNumber);
    asym_cmd->add_option("--out", asym.out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
        if (growth_cmd->parsed()) return run_growth(growth);
        if (riccati_cmd->parsed()) return run_riccati(riccati);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (asym_cmd->parsed()) return run_asymptotics(asym);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const hmc::internal_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
