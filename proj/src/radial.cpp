#include <pentagon/divergent.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include <mpfr.h>

#include <pentagon/pentagonal.hpp>

namespace pentagon {

namespace {

// Owning handle for an mpfr_t at a fixed precision.
class Real {
public:
    explicit Real(mpfr_prec_t prec)
    {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real& operator=(const Real& o)
    {
        if (this != &o) {
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() noexcept { return v_; }
    mpfr_srcptr get() const noexcept { return v_; }

private:
    mpfr_t v_;
};

void check_rho(const mpq_class& rho)
{
    if (sgn(rho) < 0 || rho >= 1) {
        throw std::invalid_argument("radius must satisfy 0 <= rho < 1");
    }
}

mpq_class schedule_radius(int j)
{
    mpz_class pow2 = 1;
    pow2 <<= static_cast<mp_bitcnt_t>(j);
    return mpq_class(pow2 - 1, pow2);
}

// Smallest cutoff G (up to a factor of ~1) with
//   sum_{g > G} g^lambda rho^g <= G^lambda rho^G / (1 - rho (1 + 1/G)^lambda)
// below exp(log_target).
std::uint64_t tail_cutoff(const mpq_class& rho, unsigned lambda, long double log_target)
{
    if (sgn(rho) == 0) {
        return 0;
    }
    const long double h = mpq_class(1 - rho).get_d();
    const long double log_rho = std::log1p(-h);
    auto log_bound = [&](long double g) {
        const long double ratio = std::exp(log_rho + lambda * std::log1p(1.0L / g));
        if (ratio >= 1.0L) {
            return std::numeric_limits<long double>::infinity();
        }
        return lambda * std::log(g) + g * log_rho - std::log1p(-ratio);
    };
    std::uint64_t hi = 1;
    while (log_bound(static_cast<long double>(hi)) > log_target) {
        hi *= 2;
        if (hi > (std::uint64_t{1} << 60)) {
            throw std::runtime_error("tail cutoff exceeds the supported range");
        }
    }
    std::uint64_t lo = hi / 2;
    while (lo + 1 < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (log_bound(static_cast<long double>(mid)) > log_target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

// Per-residue sums F_r = sum_{g <= cutoff, g = r mod n} sign g^lambda rho^g.
std::vector<Real> residue_sums(std::uint64_t n, unsigned lambda, const mpq_class& rho, std::uint64_t cutoff,
                               mpfr_prec_t prec)
{
    std::vector<Real> sums(n, Real(prec));
    Real r(prec);
    mpfr_set_q(r.get(), rho.get_mpq_t(), MPFR_RNDN);
    Real r2(prec);
    mpfr_sqr(r2.get(), r.get(), MPFR_RNDN);

    Real term(prec);
    auto emit = [&](std::uint64_t g, int sign, const Real& power) {
        if (lambda > 0 && g == 0) {
            return;
        }
        mpfr_set(term.get(), power.get(), MPFR_RNDN);
        if (lambda > 0) {
            mpz_class gl;
            mpz_ui_pow_ui(gl.get_mpz_t(), static_cast<unsigned long>(g), lambda);
            mpfr_mul_z(term.get(), term.get(), gl.get_mpz_t(), MPFR_RNDN);
        }
        auto& acc = sums[g % n];
        if (sign > 0) {
            mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
        } else {
            mpfr_sub(acc.get(), acc.get(), term.get(), MPFR_RNDN);
        }
    };

    Real current(prec);
    mpfr_set_ui(current.get(), 1, MPFR_RNDN);
    emit(0, 1, current);
    // g_k - g_{-(k-1)} = 2k - 1 and g_{-k} - g_k = k.
    Real step_odd(prec);
    mpfr_set(step_odd.get(), r.get(), MPFR_RNDN);
    Real step_k(prec);
    mpfr_set(step_k.get(), r.get(), MPFR_RNDN);
    for (std::int64_t k = 1;; ++k) {
        const auto lower = gpent(k);
        if (lower > cutoff) {
            break;
        }
        mpfr_mul(current.get(), current.get(), step_odd.get(), MPFR_RNDN);
        emit(lower, pent_sign(k), current);
        mpfr_mul(current.get(), current.get(), step_k.get(), MPFR_RNDN);
        const auto upper = gpent(-k);
        if (upper <= cutoff) {
            emit(upper, pent_sign(k), current);
        }
        mpfr_mul(step_odd.get(), step_odd.get(), r2.get(), MPFR_RNDN);
        mpfr_mul(step_k.get(), step_k.get(), r.get(), MPFR_RNDN);
    }
    return sums;
}

std::string scientific(const Real& v)
{
    if (mpfr_zero_p(v.get())) {
        return "0";
    }
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, "%.6Re", v.get()) < 0) {
        throw std::runtime_error("mpfr_asprintf failed");
    }
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

} // namespace

std::vector<int> RadiusSchedule::exponents() const
{
    if (first < 1 || last < first || last > 60) {
        throw std::invalid_argument("radius schedule needs 1 <= first <= last <= 60");
    }
    std::vector<int> out;
    for (int j = first; j <= last; ++j) {
        out.push_back(j);
    }
    return out;
}

double residue_class_value(std::uint64_t n, std::uint64_t r, unsigned lambda, int j, double tail_tolerance,
                           unsigned precision_bits)
{
    if (n == 0 || r >= n) {
        throw std::invalid_argument("residue class needs 0 <= r < n");
    }
    if (!(tail_tolerance > 0)) {
        throw std::invalid_argument("tail tolerance must be positive");
    }
    const auto rho = schedule_radius(j);
    const auto cutoff = tail_cutoff(rho, lambda, std::log(static_cast<long double>(tail_tolerance)));
    const auto sums = residue_sums(n, lambda, rho, cutoff, precision_bits);
    return mpfr_get_d(sums[r].get(), MPFR_RNDN);
}

ResidueSumReport residue_class_power_sum(std::uint64_t n, std::uint64_t r, unsigned lambda,
                                         const ResidueSumOptions& opts)
{
    if (!(opts.tolerance > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (opts.richardson_levels < 0) {
        throw std::invalid_argument("richardson levels must be non-negative");
    }
    ResidueSumReport report;
    report.modulus = n;
    report.residue = r;
    report.lambda = lambda;

    std::vector<double> values;
    for (const int j : opts.schedule.exponents()) {
        const double v = residue_class_value(n, r, lambda, j, opts.tail_tolerance, opts.precision_bits);
        report.trace.push_back(RadialSample{j, 1.0 - std::ldexp(1.0, -j), v});
        values.push_back(v);
    }

    // Step size halves along the schedule; level m removes the h^m term.
    const int levels = std::min<int>(opts.richardson_levels, static_cast<int>(values.size()) - 1);
    std::vector<double> previous = values;
    std::vector<double> current = values;
    for (int m = 1; m <= levels; ++m) {
        const double f = std::ldexp(1.0, m);
        std::vector<double> next(current.size() - 1);
        for (std::size_t i = 0; i + 1 < current.size(); ++i) {
            next[i] = (f * current[i + 1] - current[i]) / (f - 1.0);
        }
        previous = std::move(current);
        current = std::move(next);
    }
    const double limit = current.back();
    double error = 0.0;
    if (levels >= 1) {
        error = std::fabs(limit - previous.back());
    } else if (values.size() >= 2) {
        error = std::fabs(values.back() - values[values.size() - 2]);
    }

    report.limit.kind = ValueKind::numeric;
    report.limit.method = SummationMethod::abel_radial;
    report.limit.value = limit;
    report.limit.error_estimate = error;
    report.passed = std::isfinite(limit) && std::fabs(limit) < opts.tolerance;
    return report;
}

RadialPoint radial_theta_point(std::uint64_t n, std::uint64_t j, unsigned lambda, const mpq_class& rho)
{
    if (n == 0 || j >= n) {
        throw std::invalid_argument("root selection needs 0 <= j < n");
    }
    check_rho(rho);
    const long double h = mpq_class(1 - rho).get_d();
    // |P(rho)| ~ exp(-pi^2 / (6h)) is the smallest value over all roots;
    // resolve that many bits plus the growth of the largest terms.
    const long double decay_bits = std::numbers::pi_v<long double> * std::numbers::pi_v<long double> /
                                   (6.0L * h * std::numbers::ln2_v<long double>);
    const auto resolution = static_cast<mpfr_prec_t>(std::ceil(decay_bits)) + 64;
    const long double growth = lambda * std::log2(lambda / h + 2.0L);
    const auto prec = resolution + static_cast<mpfr_prec_t>(std::ceil(growth)) + 64;
    const auto cutoff =
        tail_cutoff(rho, lambda, -static_cast<long double>(resolution) * std::numbers::ln2_v<long double>);

    const auto sums = residue_sums(n, lambda, rho, cutoff, prec);
    Real re(prec);
    Real im(prec);
    Real angle(prec);
    Real c(prec);
    Real s(prec);
    Real tmp(prec);
    for (std::uint64_t r = 0; r < n; ++r) {
        // angle = 2 pi (j r mod n) / n
        mpfr_const_pi(angle.get(), MPFR_RNDN);
        mpfr_mul_ui(angle.get(), angle.get(), 2 * ((j * r) % n), MPFR_RNDN);
        mpfr_div_ui(angle.get(), angle.get(), n, MPFR_RNDN);
        mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
        mpfr_mul(tmp.get(), sums[r].get(), c.get(), MPFR_RNDN);
        mpfr_add(re.get(), re.get(), tmp.get(), MPFR_RNDN);
        mpfr_mul(tmp.get(), sums[r].get(), s.get(), MPFR_RNDN);
        mpfr_add(im.get(), im.get(), tmp.get(), MPFR_RNDN);
    }
    Real mag(prec);
    mpfr_hypot(mag.get(), re.get(), im.get(), MPFR_RNDN);

    RadialPoint p;
    p.rho = rho.get_d();
    p.magnitude = scientific(mag);
    if (mpfr_zero_p(mag.get())) {
        p.log10_magnitude = -std::numeric_limits<double>::infinity();
    } else {
        Real lg(prec);
        mpfr_log10(lg.get(), mag.get(), MPFR_RNDN);
        p.log10_magnitude = mpfr_get_d(lg.get(), MPFR_RNDN);
    }
    return p;
}

RadialReport radial_theta_limit(std::uint64_t n, std::uint64_t j, unsigned lambda, const RadiusSchedule& schedule)
{
    RadialReport report;
    report.modulus = n;
    report.root_index = j;
    report.lambda = lambda;
    for (const int e : schedule.exponents()) {
        report.points.push_back(radial_theta_point(n, j, lambda, schedule_radius(e)));
    }
    return report;
}

bool RadialReport::strictly_decreasing() const
{
    return decreasing_from() == 0;
}

std::size_t RadialReport::decreasing_from() const
{
    if (points.empty()) {
        return 0;
    }
    std::size_t i = points.size() - 1;
    while (i > 0 && points[i].log10_magnitude < points[i - 1].log10_magnitude) {
        --i;
    }
    return i;
}

} // namespace pentagon
