#include <pentagon/cli.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <pentagon/arithfuncs.hpp>
#include <pentagon/catalog.hpp>
#include <pentagon/divergent.hpp>
#include <pentagon/identities.hpp>
#include <pentagon/pentagonal.hpp>

namespace pentagon {

namespace {

using nlohmann::json;

enum class Format { text, json };

struct CliConfig {
    Format format = Format::text;
    std::string output;

    // pent
    std::uint64_t max_exponent = 0;

    // sigma / partitions
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> table;
    std::optional<std::uint64_t> max_part;
    bool verify = false;

    // verify
    std::string identity;
    std::optional<std::size_t> degree;
    std::optional<std::size_t> zdegree;

    // divergent
    std::optional<unsigned> lambda;
    std::optional<std::uint64_t> modulus;
    std::optional<std::uint64_t> residue;
    std::optional<std::uint64_t> period;
    std::vector<std::uint64_t> radial;
    std::vector<std::string> transform;
    std::optional<std::uint64_t> search_bound;
    double tolerance = 1e-4;
    double tail_tolerance = 1e-12;
    int schedule_first = 3;
    std::optional<int> schedule_last;
    int richardson_levels = 2;

    // bench
    std::optional<std::uint64_t> bench_partitions;
    std::optional<std::size_t> bench_product;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

int cmd_pent(const CliConfig& cfg, std::ostream& out)
{
    const auto terms = pent_sequence(cfg.max_exponent);
    if (cfg.format == Format::json) {
        auto arr = json::array();
        for (std::size_t i = 0; i < terms.size(); ++i) {
            json row{{"exponent", terms[i].exponent}, {"k", terms[i].k}, {"sign", terms[i].sign}};
            row["diff"] = i == 0 ? json(nullptr) : json(terms[i].exponent - terms[i - 1].exponent);
            arr.push_back(std::move(row));
        }
        out << arr.dump(2) << '\n';
        return kExitOk;
    }
    out << "exponent\tk\tsign\tdiff\n";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        out << terms[i].exponent << '\t' << terms[i].k << '\t' << sign_char(terms[i].sign) << '\t';
        if (i == 0) {
            out << '-';
        } else {
            out << terms[i].exponent - terms[i - 1].exponent;
        }
        out << '\n';
    }
    return kExitOk;
}

void write_table(const CliConfig& cfg, std::ostream& out, const std::vector<mpz_class>& values, std::uint64_t first)
{
    if (cfg.format == Format::json) {
        auto arr = json::array();
        for (std::uint64_t i = first; i < values.size(); ++i) {
            arr.push_back(values[i].get_str());
        }
        out << arr.dump() << '\n';
        return;
    }
    out << "n,value\n";
    for (std::uint64_t i = first; i < values.size(); ++i) {
        out << i << ',' << values[i].get_str() << '\n';
    }
}

int report_mismatch(std::ostream& err, const char* what, std::uint64_t n, const mpz_class& got,
                    const mpz_class& want)
{
    err << what << " mismatch at n=" << n << ": recurrence " << got.get_str() << ", oracle " << want.get_str()
        << '\n';
    return kExitCheckFailed;
}

int cmd_sigma(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.n.has_value() == cfg.table.has_value()) {
        throw UsageError("sigma: give exactly one of --n or --table");
    }
    const std::uint64_t top = cfg.n ? *cfg.n : *cfg.table;
    if (top < 1) {
        throw UsageError("sigma: N must be at least 1");
    }
    const auto table = sigma_recurrence(top);
    if (cfg.verify) {
        for (std::uint64_t i = cfg.n ? top : 1; i <= top; ++i) {
            const auto oracle = sigma_divisors(i);
            if (oracle != table(i)) {
                return report_mismatch(err, "sigma", i, table(i), oracle);
            }
        }
    }
    if (cfg.n) {
        if (cfg.format == Format::json) {
            out << json{{"n", top}, {"sigma", table(top).get_str()}}.dump() << '\n';
        } else {
            out << table(top).get_str() << '\n';
        }
    } else {
        write_table(cfg, out, table.values, 1);
    }
    return kExitOk;
}

int cmd_partitions(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.n.has_value() == cfg.table.has_value()) {
        throw UsageError("partitions: give exactly one of --n or --table");
    }
    if (cfg.max_part) {
        if (!cfg.n) {
            throw UsageError("partitions: --max-part needs --n");
        }
        if (*cfg.max_part == 0) {
            throw UsageError("partitions: --max-part must be positive");
        }
        // Restricted counts have no pentagonal recurrence; the DP is the only route.
        const auto v = partitions_dp(*cfg.n, cfg.max_part);
        if (cfg.format == Format::json) {
            out << json{{"n", *cfg.n}, {"max_part", *cfg.max_part}, {"partitions", v.get_str()}}.dump() << '\n';
        } else {
            out << v.get_str() << '\n';
        }
        return kExitOk;
    }
    const std::uint64_t top = cfg.n ? *cfg.n : *cfg.table;
    const auto table = partitions_recurrence(top);
    if (cfg.verify) {
        if (cfg.n) {
            const auto oracle = partitions_dp(top);
            if (oracle != table(top)) {
                return report_mismatch(err, "partitions", top, table(top), oracle);
            }
        } else {
            const auto oracle = partitions_dp_table(top);
            for (std::uint64_t i = 0; i <= top; ++i) {
                if (oracle(i) != table(i)) {
                    return report_mismatch(err, "partitions", i, table(i), oracle(i));
                }
            }
        }
    }
    if (cfg.n) {
        if (cfg.format == Format::json) {
            out << json{{"n", top}, {"partitions", table(top).get_str()}}.dump() << '\n';
        } else {
            out << table(top).get_str() << '\n';
        }
    } else {
        write_table(cfg, out, table.values, 0);
    }
    return kExitOk;
}

std::string box_text(const std::vector<std::int64_t>& box)
{
    std::string s = "[";
    for (std::size_t i = 0; i < box.size(); ++i) {
        s += (i ? "," : "") + std::to_string(box[i]);
    }
    return s + "]";
}

unsigned suite_jobs()
{
    if (const char* env = std::getenv("PENTAGON_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_verify(const CliConfig& cfg, std::ostream& out)
{
    std::vector<IdentityReport> reports;
    if (cfg.identity == "all") {
        reports = run_all_identities(cfg.degree, cfg.zdegree, suite_jobs());
    } else {
        const auto* entry = find_identity(cfg.identity);
        if (entry == nullptr) {
            std::string names;
            for (const auto& e : identity_catalog()) {
                names += " " + e.name;
            }
            throw UsageError("unknown identity '" + cfg.identity + "'; known: all" + names);
        }
        reports.push_back(run_identity(*entry, cfg.degree, cfg.zdegree));
    }
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.verified;
    }
    if (cfg.format == Format::json) {
        const json j = reports.size() == 1 && cfg.identity != "all" ? json(reports.front()) : json(reports);
        out << j.dump() << '\n';
    } else {
        for (const auto& r : reports) {
            out << r.identity << ' ' << box_text(r.box) << ' ' << (r.verified ? "verified" : "FAILED") << '\n';
            if (!r.verified) {
                out << json(r).dump() << '\n';
            }
        }
    }
    return ok ? kExitOk : kExitCheckFailed;
}

std::vector<mpq_class> parse_terms(const std::vector<std::string>& raw)
{
    std::vector<mpq_class> terms;
    for (const auto& s : raw) {
        try {
            mpq_class q(s, 10);
            if (q.get_den() == 0) {
                throw std::invalid_argument("zero denominator");
            }
            q.canonicalize();
            terms.push_back(q);
        } catch (const std::invalid_argument&) {
            throw UsageError("not a rational number: '" + s + "'");
        }
    }
    return terms;
}

int cmd_divergent(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    const int modes = (cfg.lambda && !cfg.modulus ? 1 : 0) + (cfg.modulus ? 1 : 0) + (cfg.period ? 1 : 0) +
                      (!cfg.radial.empty() ? 1 : 0) + (!cfg.transform.empty() ? 1 : 0);
    if (modes != 1) {
        throw UsageError("divergent: choose one of --lambda, --modulus/--residue/--lambda, --period, --radial, "
                         "--transform");
    }
    if (!(cfg.tolerance > 0) || !(cfg.tail_tolerance > 0)) {
        throw UsageError("divergent: tolerances must be positive");
    }

    if (!cfg.transform.empty()) {
        const auto terms = parse_terms(cfg.transform);
        if (terms.size() < 2) {
            throw UsageError("divergent: --transform needs at least two terms");
        }
        const auto table = difference_table(terms, terms.size());
        std::optional<RegularizedValue> value;
        std::string failure;
        try {
            value = euler_transform_sum(terms);
        } catch (const NonTerminatingTable& e) {
            failure = e.what();
        }
        if (cfg.format == Format::json) {
            json j{{"table", table}};
            j["sum"] = value ? json(*value) : json(nullptr);
            out << j.dump() << '\n';
        } else {
            for (std::size_t d = 0; d < table.rows.size(); ++d) {
                out << (d == 0 ? "terms" : "diff " + std::to_string(d)) << ':';
                for (const auto& v : table.rows[d]) {
                    out << ' ' << v.get_str();
                }
                out << '\n';
            }
            out << "sum=" << (value ? value->exact->get_str() : "undetermined") << '\n';
        }
        if (!value) {
            err << failure << '\n';
            return kExitCheckFailed;
        }
        return kExitOk;
    }

    if (cfg.modulus) {
        if (!cfg.residue || !cfg.lambda) {
            throw UsageError("divergent: --modulus needs --residue and --lambda");
        }
        if (*cfg.modulus == 0 || *cfg.residue >= *cfg.modulus) {
            throw UsageError("divergent: need 0 <= residue < modulus");
        }
        ResidueSumOptions opts;
        opts.schedule = RadiusSchedule{cfg.schedule_first, cfg.schedule_last.value_or(12)};
        opts.tolerance = cfg.tolerance;
        opts.tail_tolerance = cfg.tail_tolerance;
        opts.richardson_levels = cfg.richardson_levels;
        const auto r = residue_class_power_sum(*cfg.modulus, *cfg.residue, *cfg.lambda, opts);
        if (cfg.format == Format::json) {
            out << json(r).dump() << '\n';
        } else {
            out << "j,rho,value\n";
            for (const auto& s : r.trace) {
                out << s.j << ',' << std::setprecision(17) << s.rho << ',' << std::setprecision(10) << s.value << '\n';
            }
            out << "limit=" << std::setprecision(6) << r.limit.value << " error_estimate=" << r.limit.error_estimate
                << " tolerance=" << cfg.tolerance << ' ' << (r.passed ? "zero" : "NONZERO") << '\n';
        }
        return r.passed ? kExitOk : kExitCheckFailed;
    }

    if (cfg.lambda) {
        const auto p = pentagonal_power_sum(*cfg.lambda);
        if (cfg.format == Format::json) {
            out << json(p).dump() << '\n';
        } else {
            out << "s=" << p.s.get_str() << " t=" << p.t.get_str() << " total=" << p.total.get_str() << '\n';
        }
        return kExitOk;
    }

    if (cfg.period) {
        if (*cfg.period == 0) {
            throw UsageError("divergent: --period needs a positive modulus");
        }
        const auto bound = cfg.search_bound.value_or(12 * *cfg.period);
        const auto r = residue_period_check(*cfg.period, bound);
        if (cfg.format == Format::json) {
            out << json(r).dump() << '\n';
        } else if (!r.found) {
            out << "no period within " << bound << " terms\n";
        } else {
            out << "period " << r.period_length << " offset " << r.offset << " sum [";
            for (std::size_t i = 0; i < r.period_sum.coeffs().size(); ++i) {
                out << (i ? "," : "") << r.period_sum.coeffs()[i];
            }
            out << "] " << (r.zero_sum() ? "zero sum" : "NONZERO sum") << '\n';
            out << "pattern";
            for (std::size_t i = 0; i < r.pattern_signs.size(); ++i) {
                out << ' ' << sign_char(r.pattern_signs[i]) << "a^" << r.pattern_residues[i];
            }
            out << '\n';
        }
        return r.zero_sum() ? kExitOk : kExitCheckFailed;
    }

    // --radial N J L
    if (cfg.radial.size() != 3) {
        throw UsageError("divergent: --radial takes N J L");
    }
    const auto n = cfg.radial[0];
    const auto j = cfg.radial[1];
    if (n == 0 || j >= n) {
        throw UsageError("divergent: --radial needs 0 <= J < N");
    }
    const auto report = radial_theta_limit(n, j, static_cast<unsigned>(cfg.radial[2]),
                                           RadiusSchedule{cfg.schedule_first, cfg.schedule_last.value_or(10)});
    if (cfg.format == Format::json) {
        out << json(report).dump() << '\n';
    } else {
        out << "rho,magnitude,log10_magnitude\n";
        for (const auto& p : report.points) {
            out << std::setprecision(17) << p.rho << ',' << p.magnitude << ',' << std::setprecision(8)
                << p.log10_magnitude << '\n';
        }
    }
    const bool tail_decreasing = report.points.size() < 2 || report.decreasing_from() + 1 < report.points.size();
    return tail_decreasing ? kExitOk : kExitCheckFailed;
}

int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.bench_partitions.has_value() == cfg.bench_product.has_value()) {
        throw UsageError("bench: give exactly one of --partitions or --product");
    }
    json j;
    bool ok = true;
    if (cfg.bench_partitions) {
        const auto n = *cfg.bench_partitions;
        const auto r = bench_partitions(n);
        const auto check_n = std::min<std::uint64_t>(n, 2000);
        const auto oracle = partitions_dp_table(check_n);
        for (std::uint64_t i = 0; i <= check_n; ++i) {
            if (oracle(i) != r.table(i)) {
                err << "bench: recurrence disagrees with the DP oracle at n=" << i << '\n';
                ok = false;
                break;
            }
        }
        j = {{"task", "partitions"},
             {"n", n},
             {"seconds", r.seconds},
             {"check", ok ? "ok" : "mismatch"},
             {"value", r.value},
             {"digits", r.digits},
             {"values_per_second", r.values_per_second},
             {"oracle_prefix", check_n}};
    } else {
        const auto n = *cfg.bench_product;
        const auto start = std::chrono::steady_clock::now();
        const auto report = check_pentagonal(n);
        const auto stop = std::chrono::steady_clock::now();
        ok = report.verified;
        j = {{"task", "product"},
             {"n", n},
             {"seconds", std::chrono::duration<double>(stop - start).count()},
             {"check", ok ? "ok" : "mismatch"},
             {"verified", report.verified}};
    }
    if (cfg.format == Format::json) {
        out << j.dump() << '\n';
    } else {
        out << "task=" << j["task"].get<std::string>() << " n=" << j["n"].get<std::uint64_t>()
            << " seconds=" << j["seconds"].get<double>() << " check=" << j["check"].get<std::string>();
        if (j.contains("value")) {
            out << " p(" << j["n"].get<std::uint64_t>() << ")=" << j["value"].get<std::string>()
                << " digits=" << j["digits"].get<std::size_t>();
        }
        if (j.contains("verified")) {
            out << " verified=" << (j["verified"].get<bool>() ? "true" : "false");
        }
        out << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CliConfig cfg;
    CLI::App app{"Pentagonal number theorem toolkit: exact series identities, divisor and partition "
                 "recurrences, divergent sums"};
    app.require_subcommand(1);
    std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
    app.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("text");
    app.add_option("--output", cfg.output, "Write output to PATH instead of standard output");

    auto* pent = app.add_subcommand("pent", "List generalized pentagonal numbers with signs and differences");
    pent->add_option("--max", cfg.max_exponent, "Largest exponent")->required();

    auto* sigma = app.add_subcommand("sigma", "Divisor sums by the pentagonal recurrence");
    sigma->add_option("--n", cfg.n, "Single value sigma(N)");
    sigma->add_option("--table", cfg.table, "Table sigma(1..N)");
    sigma->add_flag("--verify", cfg.verify, "Cross-check against divisor enumeration");

    auto* parts = app.add_subcommand("partitions", "Partition numbers by the pentagonal recurrence");
    parts->add_option("--n", cfg.n, "Single value p(N)");
    parts->add_option("--table", cfg.table, "Table p(0..N)");
    parts->add_option("--max-part", cfg.max_part, "Restrict parts to at most M (dynamic programming)");
    parts->add_flag("--verify", cfg.verify, "Cross-check against dynamic programming");

    auto* verify = app.add_subcommand("verify", "Verify a registered identity by coefficient comparison");
    verify->add_option("--identity", cfg.identity, "Identity name, or 'all'")->required();
    verify->add_option("--degree", cfg.degree, "Truncation degree");
    verify->add_option("--zdegree", cfg.zdegree, "Second box size (z range, or proof steps)");

    auto* div = app.add_subcommand("divergent", "Sums of divergent pentagonal power series");
    div->add_option("--lambda", cfg.lambda, "Power lambda");
    div->add_option("--modulus", cfg.modulus, "Root-of-unity order n for residue-class sums");
    div->add_option("--residue", cfg.residue, "Residue class r");
    div->add_option("--period", cfg.period, "Find the cancelling period at n-th roots of unity");
    div->add_option("--radial", cfg.radial, "N J L: |theta^L P(rho zeta)| along the radius schedule")
        ->expected(3);
    div->add_option("--transform", cfg.transform, "Euler transform of A - B + C - ... for the given terms")
        ->delimiter(',');
    div->add_option("--search-bound", cfg.search_bound, "Terms scanned by --period (default 12n)");
    div->add_option("--tolerance", cfg.tolerance, "Zero-assertion tolerance")->capture_default_str();
    div->add_option("--tail-tolerance", cfg.tail_tolerance, "Truncation tail bound")->capture_default_str();
    div->add_option("--schedule-first", cfg.schedule_first, "First j of rho_j = 1 - 2^-j")->capture_default_str();
    div->add_option("--schedule-last", cfg.schedule_last, "Last j (default 12 for sums, 10 for --radial)");
    div->add_option("--richardson-levels", cfg.richardson_levels, "Richardson elimination levels")
        ->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Timed runs with deterministic checks");
    bench->add_option("--partitions", cfg.bench_partitions, "Partition recurrence up to N");
    bench->add_option("--product", cfg.bench_product, "Pentagonal identity check at degree N");

    std::vector<std::string> argv_storage{"pentagon"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "cannot open output file " << cfg.output << '\n';
            return kExitUsage;
        }
        sink = &file;
    }

    try {
        if (pent->parsed()) {
            return cmd_pent(cfg, *sink);
        }
        if (sigma->parsed()) {
            return cmd_sigma(cfg, *sink, err);
        }
        if (parts->parsed()) {
            return cmd_partitions(cfg, *sink, err);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, *sink);
        }
        if (div->parsed()) {
            return cmd_divergent(cfg, *sink, err);
        }
        if (bench->parsed()) {
            return cmd_bench(cfg, *sink, err);
        }
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "assertion failed: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}

} // namespace pentagon
