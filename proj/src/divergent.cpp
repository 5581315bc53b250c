#include <pentagon/divergent.hpp>

#include <algorithm>
#include <cmath>

#include <pentagon/pentagonal.hpp>

namespace pentagon {

std::string to_string(SummationMethod m)
{
    switch (m) {
    case SummationMethod::euler_transform:
        return "euler-transform";
    case SummationMethod::rademacher:
        return "rademacher";
    case SummationMethod::abel_radial:
        return "abel-radial";
    }
    return "unknown";
}

RegularizedValue RegularizedValue::make_exact(mpq_class v, SummationMethod m)
{
    RegularizedValue r;
    r.kind = ValueKind::exact;
    r.method = m;
    r.value = v.get_d();
    r.error_estimate = 0.0;
    r.exact = std::move(v);
    return r;
}

namespace {

bool all_zero(const std::vector<mpq_class>& row)
{
    return std::all_of(row.begin(), row.end(), [](const mpq_class& q) { return sgn(q) == 0; });
}

std::string describe_row(const std::vector<mpq_class>& row)
{
    std::string s;
    for (std::size_t i = 0; i < row.size() && i < 8; ++i) {
        s += (i ? ", " : "") + row[i].get_str();
    }
    if (row.size() > 8) {
        s += ", ...";
    }
    return s;
}

} // namespace

DifferenceTable difference_table(std::span<const mpq_class> terms, std::size_t max_depth)
{
    if (terms.size() < 2) {
        throw std::invalid_argument("difference_table: need at least two terms");
    }
    DifferenceTable t;
    t.rows.emplace_back(terms.begin(), terms.end());
    if (all_zero(t.rows[0])) {
        t.terminal_depth = 0;
        return t;
    }
    for (std::size_t d = 1; d <= max_depth && t.rows.back().size() >= 2; ++d) {
        const auto& prev = t.rows.back();
        std::vector<mpq_class> next(prev.size() - 1);
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
            next[i] = prev[i + 1] - prev[i];
        }
        t.rows.push_back(std::move(next));
        if (all_zero(t.rows.back())) {
            t.terminal_depth = d;
            break;
        }
    }
    return t;
}

NonTerminatingTable::NonTerminatingTable(std::size_t depth, std::vector<mpq_class> deepest_row)
    : std::runtime_error("difference table reaches no zero row; deepest row (depth " + std::to_string(depth) +
                         "): " + describe_row(deepest_row)),
      depth_(depth), deepest_(std::move(deepest_row))
{
}

RegularizedValue euler_transform_sum(std::span<const mpq_class> terms)
{
    const auto table = difference_table(terms, terms.size());
    if (!table.terminal_depth) {
        throw NonTerminatingTable(table.rows.size() - 1, table.rows.back());
    }
    mpq_class sum = 0;
    mpz_class pow2 = 2;
    for (std::size_t d = 0; d < *table.terminal_depth; ++d) {
        const mpq_class term = table.rows[d][0] / mpq_class(pow2);
        if (d % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
        pow2 *= 2;
    }
    sum.canonicalize();
    return RegularizedValue::make_exact(std::move(sum), SummationMethod::euler_transform);
}

PowerSum pentagonal_power_sum(unsigned lambda)
{
    // g_{+-k}^lambda is a polynomial of degree 2 lambda in k, so 2 lambda + 2
    // terms reach the zero row; a few spare terms make it a visible row.
    const std::size_t count = std::max<std::size_t>(7, 2 * static_cast<std::size_t>(lambda) + 4);
    std::vector<mpq_class> lower(count);
    std::vector<mpq_class> upper(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto k = static_cast<std::int64_t>(i + 1);
        mpz_class a;
        mpz_class b;
        mpz_pow_ui(a.get_mpz_t(), mpz_class(static_cast<unsigned long>(gpent(k))).get_mpz_t(), lambda);
        mpz_pow_ui(b.get_mpz_t(), mpz_class(static_cast<unsigned long>(gpent(-k))).get_mpz_t(), lambda);
        lower[i] = a;
        upper[i] = b;
    }
    PowerSum p;
    p.lambda = lambda;
    // The branches start with sign (-1)^1, the transform with +.
    p.s = -*euler_transform_sum(lower).exact;
    p.t = -*euler_transform_sum(upper).exact;
    p.total = p.s + p.t + (lambda == 0 ? 1 : 0);
    if (sgn(p.total) != 0) {
        throw std::logic_error("pentagonal_power_sum: total " + p.total.get_str() + " is not zero for lambda " +
                               std::to_string(lambda));
    }
    return p;
}

RegularizedValue rademacher_sum(std::span<const mpq_class> a, std::size_t n)
{
    if (a.size() <= n) {
        throw std::invalid_argument("rademacher_sum: need terms a_0..a_" + std::to_string(n));
    }
    mpq_class partial = 0;
    mpq_class last_mean = 0;
    mpz_class pow2 = 2;
    std::vector<mpz_class> binom{1};
    for (std::size_t m = 0; m <= n; ++m) {
        if (m > 0) {
            std::vector<mpz_class> next(m + 1);
            next[0] = 1;
            next[m] = 1;
            for (std::size_t i = 1; i < m; ++i) {
                next[i] = binom[i - 1] + binom[i];
            }
            binom = std::move(next);
        }
        mpq_class inner = 0;
        for (std::size_t i = 0; i <= m; ++i) {
            inner += mpq_class(binom[i]) * a[i];
        }
        last_mean = inner / mpq_class(pow2);
        partial += last_mean;
        pow2 *= 2;
    }
    partial.canonicalize();

    RegularizedValue r;
    r.kind = ValueKind::numeric;
    r.method = SummationMethod::rademacher;
    r.value = partial.get_d();
    std::vector<mpq_class> unsigned_terms(a.begin(), a.end());
    for (std::size_t i = 1; i < unsigned_terms.size(); i += 2) {
        unsigned_terms[i] = -unsigned_terms[i];
    }
    try {
        const mpq_class exact = *euler_transform_sum(unsigned_terms).exact;
        r.error_estimate = std::fabs(mpq_class(partial - exact).get_d());
    } catch (const NonTerminatingTable&) {
        r.error_estimate = std::fabs(last_mean.get_d());
    } catch (const std::invalid_argument&) {
        r.error_estimate = std::fabs(last_mean.get_d());
    }
    r.exact = std::move(partial);
    return r;
}

// ---------------------------------------------------------------------------

ResidueVector::ResidueVector(std::uint64_t modulus)
{
    if (modulus == 0) {
        throw std::invalid_argument("ResidueVector: modulus must be positive");
    }
    coeffs_.assign(modulus, 0);
}

void ResidueVector::add_power(std::uint64_t exponent, std::int64_t sign)
{
    coeffs_[exponent % coeffs_.size()] += sign;
}

ResidueVector& ResidueVector::operator+=(const ResidueVector& o)
{
    if (o.modulus() != modulus()) {
        throw std::invalid_argument("ResidueVector: modulus mismatch");
    }
    for (std::size_t r = 0; r < coeffs_.size(); ++r) {
        coeffs_[r] += o.coeffs_[r];
    }
    return *this;
}

bool ResidueVector::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

PeriodReport residue_period_check(std::uint64_t n, std::uint64_t search_bound)
{
    if (n == 0) {
        throw std::invalid_argument("residue_period_check: modulus must be positive");
    }
    PeriodReport report;
    report.modulus = n;
    report.search_bound = search_bound;
    report.period_sum = ResidueVector(n);

    std::vector<std::pair<std::uint64_t, int>> seq(search_bound);
    for (std::uint64_t t = 0; t < search_bound; ++t) {
        const auto term = PentTerm::at(index_of_position(t));
        seq[t] = {term.exponent % n, term.sign};
    }
    for (std::uint64_t p = 1; 2 * p <= search_bound; ++p) {
        // Periodic from `offset` on iff no mismatch at or after it.
        std::uint64_t offset = 0;
        for (std::uint64_t i = search_bound - p; i-- > 0;) {
            if (seq[i] != seq[i + p]) {
                offset = i + 1;
                break;
            }
        }
        if (offset + 2 * p > search_bound) {
            continue;
        }
        report.found = true;
        report.period_length = p;
        report.offset = offset;
        for (std::uint64_t i = offset; i < offset + p; ++i) {
            report.period_sum.add_power(seq[i].first, seq[i].second);
            report.pattern_residues.push_back(seq[i].first);
            report.pattern_signs.push_back(seq[i].second);
        }
        break;
    }
    return report;
}

// ---------------------------------------------------------------------------

nlohmann::json rational_json(const mpq_class& q)
{
    return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

mpq_class rational_from_json(const nlohmann::json& j)
{
    mpq_class q(mpz_class(j.at("num").get<std::string>(), 10), mpz_class(j.at("den").get<std::string>(), 10));
    if (q.get_den() == 0) {
        throw std::invalid_argument("rational: zero denominator");
    }
    q.canonicalize();
    return q;
}

void to_json(nlohmann::json& j, const DifferenceTable& t)
{
    j = nlohmann::json::object();
    auto rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::json::array();
        for (const auto& v : row) {
            r.push_back(rational_json(v));
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["terminal_depth"] = t.terminal_depth ? nlohmann::json(*t.terminal_depth) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, DifferenceTable& t)
{
    t.rows.clear();
    for (const auto& row : j.at("rows")) {
        std::vector<mpq_class> r;
        for (const auto& v : row) {
            r.push_back(rational_from_json(v));
        }
        t.rows.push_back(std::move(r));
    }
    const auto& d = j.at("terminal_depth");
    t.terminal_depth = d.is_null() ? std::nullopt : std::optional<std::size_t>(d.get<std::size_t>());
}

void to_json(nlohmann::json& j, const RegularizedValue& v)
{
    j = {{"kind", v.kind == ValueKind::exact ? "exact" : "numeric"}, {"method", to_string(v.method)}};
    if (v.kind == ValueKind::exact) {
        j["value"] = rational_json(*v.exact);
        j["error_estimate"] = 0.0;
    } else {
        j["value"] = v.value;
        j["error_estimate"] = v.error_estimate;
    }
}

void from_json(const nlohmann::json& j, RegularizedValue& v)
{
    const auto kind = j.at("kind").get<std::string>();
    const auto method = j.at("method").get<std::string>();
    if (method == "euler-transform") {
        v.method = SummationMethod::euler_transform;
    } else if (method == "rademacher") {
        v.method = SummationMethod::rademacher;
    } else if (method == "abel-radial") {
        v.method = SummationMethod::abel_radial;
    } else {
        throw std::invalid_argument("unknown summation method '" + method + "'");
    }
    if (kind == "exact") {
        v.kind = ValueKind::exact;
        v.exact = rational_from_json(j.at("value"));
        v.value = v.exact->get_d();
        v.error_estimate = 0.0;
    } else if (kind == "numeric") {
        v.kind = ValueKind::numeric;
        v.exact.reset();
        v.value = j.at("value").get<double>();
        v.error_estimate = j.at("error_estimate").get<double>();
    } else {
        throw std::invalid_argument("unknown value kind '" + kind + "'");
    }
}

void to_json(nlohmann::json& j, const PowerSum& p)
{
    j = {{"lambda", p.lambda}, {"s", rational_json(p.s)}, {"t", rational_json(p.t)}, {"total", rational_json(p.total)}};
}

void to_json(nlohmann::json& j, const PeriodReport& p)
{
    j = {{"modulus", p.modulus},
         {"search_bound", p.search_bound},
         {"found", p.found},
         {"period_length", p.period_length},
         {"offset", p.offset},
         {"period_sum", p.period_sum.coeffs()},
         {"zero_sum", p.zero_sum()},
         {"pattern", {{"signs", p.pattern_signs}, {"residues", p.pattern_residues}}}};
}

void to_json(nlohmann::json& j, const ResidueSumReport& r)
{
    auto trace = nlohmann::json::array();
    for (const auto& s : r.trace) {
        trace.push_back({{"j", s.j}, {"rho", s.rho}, {"value", s.value}});
    }
    j = {{"modulus", r.modulus}, {"residue", r.residue}, {"lambda", r.lambda},
         {"limit", r.limit},     {"passed", r.passed},   {"trace", std::move(trace)}};
}

void to_json(nlohmann::json& j, const RadialReport& r)
{
    auto points = nlohmann::json::array();
    for (const auto& p : r.points) {
        points.push_back({{"rho", p.rho},
                          {"magnitude", p.magnitude},
                          {"log10_magnitude", std::isfinite(p.log10_magnitude) ? nlohmann::json(p.log10_magnitude)
                                                                                : nlohmann::json(nullptr)}});
    }
    j = {{"modulus", r.modulus},
         {"root_index", r.root_index},
         {"lambda", r.lambda},
         {"points", std::move(points)},
         {"strictly_decreasing", r.strictly_decreasing()},
         {"decreasing_from", r.decreasing_from()}};
}

} // namespace pentagon
