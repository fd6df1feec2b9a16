#include "harmcert/cli.hpp"

#include "harmcert/constants.hpp"
#include "harmcert/errors.hpp"
#include "harmcert/harmonic.hpp"
#include "harmcert/lodge.hpp"
#include "harmcert/ramanujan_error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace harmcert::cli {

namespace {

struct CommonOptions {
    unsigned precision_bits = 128;
    unsigned max_bits = 4096;
    std::string format = "csv";
    std::string out_path;
};

void add_output_options(CLI::App& cmd, CommonOptions& opts)
{
    cmd.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd.add_option("--out", opts.out_path, "Write the report to PATH instead of stdout");
}

void add_precision_options(CLI::App& cmd, CommonOptions& opts)
{
    cmd.add_option("--precision-bits", opts.precision_bits, "Initial working precision in bits")
        ->check(CLI::Range(16u, 1u << 20))
        ->capture_default_str();
    cmd.add_option("--max-bits", opts.max_bits, "Precision escalation cap in bits")
        ->check(CLI::Range(16u, 1u << 20))
        ->capture_default_str();
}

// Emits text to --out or to `out`. Returns false (after a message) if the
// file cannot be written.
bool emit(const CommonOptions& opts, const std::string& text, std::ostream& out, std::ostream& err)
{
    if (opts.out_path.empty()) {
        out << text;
        return static_cast<bool>(out);
    }
    std::ofstream file(opts.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open '" << opts.out_path << "' for writing\n";
        return false;
    }
    file << text;
    file.close();
    if (!file) {
        err << "error: failed writing '" << opts.out_path << "'\n";
        return false;
    }
    return true;
}

// Fails fast on an unwritable --out before any long computation.
bool check_writable(const CommonOptions& opts, std::ostream& err)
{
    if (opts.out_path.empty()) {
        return true;
    }
    std::ofstream probe(opts.out_path, std::ios::app);
    if (!probe) {
        err << "error: cannot open '" << opts.out_path << "' for writing\n";
        return false;
    }
    return true;
}

std::string decimal(const CertifiedReal& x) { return to_decimal(x, report_digits).midpoint; }

std::string decimal_up(const Rational& q)
{
    BigFloat v(256);
    mpfr_set_q(v.get(), q.get_mpq().get_mpq_t(), MPFR_RNDU);
    return format_decimal(v.get(), report_digits, MPFR_RNDU);
}

std::string join(const std::vector<std::uint64_t>& values)
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        s += (i ? "," : "") + std::to_string(values[i]);
    }
    return s;
}

int cmd_certify(const std::string& subject, std::uint64_t n_max, unsigned threads,
                const CommonOptions& opts, std::ostream& out, std::ostream& err)
{
    if (n_max < 1) {
        err << "error: --n-max must be at least 1\n";
        return exit_usage;
    }
    const PrecisionPolicy policy{opts.precision_bits, opts.max_bits, 2};
    policy.validate();
    if (!check_writable(opts, err)) {
        return exit_usage;
    }
    CertificationReport report;
    if (subject == "theorem" || subject == "all") {
        report.append(certify_theorem(1, n_max, policy, threads));
    }
    if (subject == "corollaries" || subject == "all") {
        report.append(certify_corollaries(1, n_max, policy, threads));
    }
    report.meta.command = "certify " + subject;
    report.meta.parameters = {{"subject", subject}, {"n_max", std::to_string(n_max)}};
    report.meta.policy = policy;

    const std::string text = opts.format == "json" ? report.to_json() : report.to_csv();
    if (!emit(opts, text, out, err)) {
        return exit_usage;
    }
    const Verdict aggregate = report.aggregate();
    std::size_t failed = 0;
    std::size_t unresolved = 0;
    for (const auto& r : report.rows) {
        failed += r.verdict == Verdict::fail;
        unresolved += r.verdict == Verdict::unresolved;
    }
    err << "certify " << subject << ": " << report.rows.size() << " rows, " << failed
        << " failed, " << unresolved << " unresolved, aggregate " << to_string(aggregate) << "\n";
    return aggregate == Verdict::pass ? exit_pass : exit_failed;
}

int cmd_table(const std::vector<std::uint64_t>& n_list, unsigned terms, const CommonOptions& opts,
              std::ostream& out, std::ostream& err)
{
    if (n_list.empty()) {
        err << "error: --n-list must name at least one n\n";
        return exit_usage;
    }
    if (terms > 5) {
        err << "error: --terms must be between 0 and 5\n";
        return exit_usage;
    }
    if (!check_writable(opts, err)) {
        return exit_usage;
    }
    Table table;
    table.columns = {"n", "m", "H_n", "approx", "residual", "next_term_bound", "bracketing"};
    for (const std::uint64_t nv : n_list) {
        const HarmonicIndex n(nv);
        const TriangularM m = m_of(n);
        const Rational h = harmonic_exact(n);
        const CertifiedReal approx = ramanujan_approx(n, terms, opts.precision_bits);
        const CertifiedReal residual = CertifiedReal::from_rational(h, opts.precision_bits + 16) - approx;
        // Past the fifth term the bound is the full last term, 1/(2310 m^5).
        const unsigned next = terms < 5 ? terms : 4;
        const Rational bound = ramanujan_coefficients()[next].abs() *
                               m.as_rational().pow(-static_cast<int>(next + 1));
        const char* sign = residual.is_positive() ? "+" : residual.is_negative() ? "-" : "?";
        table.rows.push_back({std::to_string(nv), std::to_string(m.value()), h.to_string(),
                              decimal(approx), decimal(residual), decimal_up(bound), sign});
    }
    const std::string text =
        opts.format == "json"
            ? table.to_json({{"command", "table"},
                             {"n_list", join(n_list)},
                             {"terms", std::to_string(terms)},
                             {"precision_bits", std::to_string(opts.precision_bits)}})
            : table.to_csv();
    return emit(opts, text, out, err) ? exit_pass : exit_usage;
}

int cmd_identities(std::uint64_t k_max, const CommonOptions& opts, std::ostream& out,
                   std::ostream& err)
{
    if (k_max < 2) {
        err << "error: --k-max must be at least 2\n";
        return exit_usage;
    }
    if (!check_writable(opts, err)) {
        return exit_usage;
    }
    Table table;
    table.columns = {"id", "k", "lhs", "rhs", "verdict"};
    std::size_t failures = 0;
    for (std::uint64_t k = 2; k <= k_max; ++k) {
        for (const IdentityId id : exact_identities) {
            const IdentityResult r = identity_check(id, k);
            failures += r.holds ? 0 : 1;
            table.rows.push_back({std::string(to_string(id)), std::to_string(k), r.lhs.to_string(),
                                  r.rhs.to_string(), r.holds ? "pass" : "fail"});
        }
    }
    const std::string text =
        opts.format == "json"
            ? table.to_json({{"command", "identities"}, {"k_max", std::to_string(k_max)}})
            : table.to_csv();
    if (!emit(opts, text, out, err)) {
        return exit_usage;
    }
    err << "identities: " << table.rows.size() << " checks, " << failures << " failed\n";
    return failures == 0 ? exit_pass : exit_failed;
}

int cmd_limits(const std::string& quantity_name, const std::vector<std::uint64_t>& n_list,
               const CommonOptions& opts, std::ostream& out, std::ostream& err)
{
    const LimitQuantity quantity = parse_limit_quantity(quantity_name);
    if (n_list.empty()) {
        err << "error: --n-list must name at least one n\n";
        return exit_usage;
    }
    if (!check_writable(opts, err)) {
        return exit_usage;
    }
    const Rational target = limit_target(quantity);
    const auto scan = limit_scan(quantity, n_list, opts.precision_bits);
    Table table;
    table.columns = {"n", "quantity", "value", "target", "relative_deviation"};
    std::optional<double> previous;
    for (const auto& [n, value] : scan) {
        CertifiedReal deviation = value / target - Rational(1);
        const double current = value.mid_double();
        if (previous && (quantity == LimitQuantity::scaled_lambda || quantity == LimitQuantity::delta) &&
            current <= *previous) {
            err << "warning: " << quantity_name << " is not increasing at n = " << n << "\n";
        }
        previous = current;
        if (deviation.is_negative()) {
            deviation = -deviation;
        }
        table.rows.push_back({std::to_string(n), std::string(to_string(quantity)), decimal(value),
                              target.to_string(), decimal(deviation)});
    }
    const std::string text =
        opts.format == "json"
            ? table.to_json({{"command", "limits"},
                             {"quantity", std::string(to_string(quantity))},
                             {"n_list", join(n_list)},
                             {"precision_bits", std::to_string(opts.precision_bits)}})
            : table.to_csv();
    return emit(opts, text, out, err) ? exit_pass : exit_usage;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Certified evaluation of the expansion of H_n in powers of m = n(n+1)/2"};
    app.name("harmcert");
    app.require_subcommand(1);

    CommonOptions certify_opts;
    std::string subject;
    std::uint64_t n_max = 0;
    unsigned threads = 0;
    auto* certify = app.add_subcommand("certify", "Certify the bounds for every n in [1, N]");
    certify->add_option("subject", subject, "theorem, corollaries or all")
        ->required()
        ->check(CLI::IsMember({"theorem", "corollaries", "all"}));
    certify->add_option("--n-max", n_max, "Largest n to certify")->required();
    certify->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
    add_precision_options(*certify, certify_opts);
    add_output_options(*certify, certify_opts);

    CommonOptions table_opts;
    std::vector<std::uint64_t> table_n;
    unsigned terms = 5;
    auto* table = app.add_subcommand("table", "Tabulate H_n against truncated expansions");
    table->add_option("--n-list", table_n, "Comma-separated n values")->required()->delimiter(',');
    table->add_option("--terms", terms, "Number of expansion terms (0-5)")->capture_default_str();
    add_precision_options(*table, table_opts);
    add_output_options(*table, table_opts);

    CommonOptions identity_opts;
    std::uint64_t k_max = 0;
    auto* identities = app.add_subcommand("identities", "Audit the per-term identities exactly");
    identities->add_option("--k-max", k_max, "Check every k in [2, K]")->required();
    add_output_options(*identities, identity_opts);

    CommonOptions limit_opts;
    std::string quantity;
    std::vector<std::uint64_t> limit_n;
    auto* limits = app.add_subcommand("limits", "Scaled error sequences against their limits");
    limits->add_option("quantity", quantity, "scaled_lambda, scaled_rho, delta or cesaro_c")
        ->required();
    limits->add_option("--n-list", limit_n, "Strictly increasing n values")
        ->required()
        ->delimiter(',');
    add_precision_options(*limits, limit_opts);
    add_output_options(*limits, limit_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (certify->parsed()) {
            return cmd_certify(subject, n_max, threads, certify_opts, out, err);
        }
        if (table->parsed()) {
            return cmd_table(table_n, terms, table_opts, out, err);
        }
        if (identities->parsed()) {
            return cmd_identities(k_max, identity_opts, out, err);
        }
        if (limits->parsed()) {
            return cmd_limits(quantity, limit_n, limit_opts, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace harmcert::cli
