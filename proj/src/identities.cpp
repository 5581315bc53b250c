#include <pentagon/identities.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

#include <pentagon/pentagonal.hpp>

namespace pentagon {

namespace {

using Box = std::vector<std::int64_t>;

std::int64_t to_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

std::size_t isqrt(std::size_t n)
{
    auto r = static_cast<std::size_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

// Adds c * x^shift * s to acc, dropping terms beyond acc's order.
void add_shifted(IntSeries& acc, const IntSeries& s, std::size_t shift, long c)
{
    for (std::size_t n = 0; n + shift <= acc.order() && n <= s.order(); ++n) {
        if (sgn(s[n]) != 0) {
            if (c == 1) {
                acc[n + shift] += s[n];
            } else if (c == -1) {
                acc[n + shift] -= s[n];
            } else {
                acc[n + shift] += c * s[n];
            }
        }
    }
}

// Largest J with J(J+1)/2 <= n.
std::size_t last_triangular_index(std::size_t n)
{
    std::size_t j = 0;
    while (triangular(j + 1) <= n) {
        ++j;
    }
    return j;
}

// Bivariate form of a series in the first indeterminate at z-power 0.
BiSeries lift(const IntSeries& s, std::int64_t z_min, std::int64_t z_max)
{
    BiSeries b(s.order(), z_min, z_max);
    for (std::size_t q = 0; q <= s.order(); ++q) {
        b.add_term(q, 0, s[q]);
    }
    return b;
}

// sum_{k=0}^{nz} numerator_exp(k) z^k prod_{i=k+1}^{nz} (1 - m^i), truncated
// at m-degree nm. This is sum_k m^{e_k} z^k D / (m;m)_k with D = (m;m)_{nz}.
template <typename ExponentFn>
BiSeries cleared_qbinomial_sum(std::size_t nm, std::size_t nz, ExponentFn numerator_exp)
{
    BiSeries out(nm, 0, to_i64(nz));
    auto suffix = IntSeries::one(nm, "m");
    for (std::size_t k = nz + 1; k-- > 0;) {
        // suffix == prod_{i=k+1}^{nz} (1 - m^i) here.
        const std::size_t e = numerator_exp(k);
        for (std::size_t q = 0; q + e <= nm; ++q) {
            if (sgn(suffix[q]) != 0) {
                out.add_term(q + e, to_i64(k), suffix[q]);
            }
        }
        if (k >= 1 && k <= nm) {
            suffix.multiply_one_minus(k);
        }
    }
    return out;
}

IntSeries qpochhammer(std::size_t order, std::size_t count, const char* label)
{
    auto d = IntSeries::one(order, label);
    for (std::size_t i = 1; i <= count && i <= order; ++i) {
        d.multiply_one_minus(i);
    }
    return d;
}

} // namespace

IdentityReport check_pentagonal(std::size_t n)
{
    return compare_series("pentagonal", {to_i64(n)}, euler_product(n), pentagonal_series(n));
}

IdentityReport check_lemma(std::size_t n)
{
    auto rhs = IntSeries::one(n);
    if (n >= 1) {
        rhs[1] -= 1;
    }
    auto running = IntSeries::one(n); // prod_{i=1}^{j-1} (1 - x^i)
    for (std::size_t j = 2; j <= n; ++j) {
        running.multiply_one_minus(j - 1);
        add_shifted(rhs, running, j, -1);
    }
    return compare_series("lemma", {to_i64(n)}, euler_product(n), rhs);
}

IdentityReport check_s_expansion(std::size_t n)
{
    const std::size_t big_j = last_triangular_index(n);
    const auto denom = qpochhammer(n, big_j, "x");
    const auto lhs = euler_product(n) * denom;

    IntSeries rhs(n);
    auto suffix = IntSeries::one(n); // prod_{i=j+1}^{J} (1 - x^i)
    for (std::size_t j = big_j + 1; j-- > 0;) {
        add_shifted(rhs, suffix, triangular(j), (j % 2 == 0) ? 1 : -1);
        if (j >= 1) {
            suffix.multiply_one_minus(j);
        }
    }
    return compare_series("s-expansion", {to_i64(n)}, lhs, rhs);
}

IntSeries s_expansion_rhs(std::size_t n)
{
    auto rhs = IntSeries::one(n);
    auto denom = IntSeries::one(n);
    for (std::size_t j = 1; triangular(j) <= n; ++j) {
        denom.multiply_one_minus(j);
        add_shifted(rhs, invert(denom), triangular(j), (j % 2 == 0) ? 1 : -1);
    }
    return rhs;
}

BiSeries qbinomial_plus_product(std::size_t nm, std::size_t nz)
{
    auto prod = BiSeries::one(nm, 0, to_i64(nz));
    for (std::size_t k = 1; k <= nm; ++k) {
        prod.multiply_binomial(k, 1, 1);
    }
    return prod;
}

IdentityReport check_qbinomial_plus(std::size_t nm, std::size_t nz)
{
    auto lhs = qbinomial_plus_product(nm, nz);
    lhs.multiply_q_series(qpochhammer(nm, nz, "m"));
    const auto rhs = cleared_qbinomial_sum(nm, nz, [](std::size_t k) { return triangular(k); });
    return compare_bi_series("qbinomial-plus", {to_i64(nm), to_i64(nz)}, lhs, rhs, nm, 0, to_i64(nz));
}

IdentityReport check_qbinomial_inv(std::size_t nm, std::size_t nz)
{
    // D = prod_k (1 - m^k z) * sum_k m^k z^k D / (m;m)_k.
    const auto lhs = lift(qpochhammer(nm, nz, "m"), 0, to_i64(nz));
    auto rhs = cleared_qbinomial_sum(nm, nz, [](std::size_t k) { return k; });
    for (std::size_t k = 1; k <= nm; ++k) {
        rhs.multiply_binomial(k, 1, -1);
    }
    return compare_bi_series("qbinomial-inv", {to_i64(nm), to_i64(nz)}, lhs, rhs, nm, 0, to_i64(nz));
}

IdentityReport check_goldbach_cb(std::size_t n)
{
    const auto b = pentagonal_series(n);
    const auto c = substitute_power(b, 2);
    std::vector<std::size_t> odd;
    for (std::size_t m = 1; m <= n; m += 2) {
        odd.push_back(m);
    }
    return compare_series("goldbach-cb", {to_i64(n)}, b, c * product_one_minus(n, odd));
}

IdentityReport check_goldbach_cb_as_written(std::size_t n)
{
    const auto b = pentagonal_series(n);
    const auto c = substitute_power(b, 2);
    std::vector<std::size_t> odd;
    for (std::size_t m = 1; m <= n; m += 2) {
        odd.push_back(m);
    }
    return compare_series("goldbach-cb-as-written", {to_i64(n)}, c, b * product_one_minus(n, odd));
}

namespace {

IntSeries half_integer_product(std::size_t n)
{
    // A(y^2): the x-truncation at n leaves every y-power up to n exact.
    auto lhs = substitute_power(euler_product(n), 2);
    lhs.set_label("y");
    for (std::size_t k = 1; 2 * k - 1 <= n; ++k) {
        lhs.multiply_one_minus(2 * k - 1);
    }
    return lhs;
}

} // namespace

IdentityReport check_half_integer(std::size_t n)
{
    auto rhs = pentagonal_series(n);
    rhs.set_label("y");
    return compare_series("half-integer", {to_i64(n)}, half_integer_product(n), rhs);
}

std::vector<std::pair<std::size_t, int>> half_integer_sign_pattern(std::size_t n)
{
    const auto s = half_integer_product(n);
    std::vector<std::pair<std::size_t, int>> out;
    for (std::size_t e = 0; e <= n; ++e) {
        if (sgn(s[e]) != 0) {
            out.emplace_back(e, sgn(s[e]));
        }
    }
    return out;
}

IdentityReport check_jacobi_triple(std::size_t nq, std::size_t z_max)
{
    if (z_max < 1) {
        throw std::invalid_argument("check_jacobi_triple: z box must be at least 1");
    }
    // A monomial z^{2(a-b)} of the product uses a plus-factors and b
    // minus-factors, so its q-degree is at least a^2 + b^2. Within q <= nq
    // every partial product stays inside |z| <= 2 floor(sqrt(nq)).
    const auto window = to_i64(std::max(2 * z_max, 2 * isqrt(nq)));
    auto lhs = BiSeries::one(nq, -window, window);
    for (std::size_t m = 1; 2 * m - 1 <= nq; ++m) {
        if (2 * m <= nq) {
            lhs.multiply_binomial(2 * m, 0, -1);
        }
        lhs.multiply_binomial(2 * m - 1, 2, 1);
        lhs.multiply_binomial(2 * m - 1, -2, 1);
    }
    BiSeries rhs(nq, -window, window);
    for (std::int64_t k = -to_i64(z_max); k <= to_i64(z_max); ++k) {
        const auto e = static_cast<std::size_t>(k * k);
        if (e <= nq) {
            rhs.add_term(e, 2 * k, 1);
        }
    }
    const auto zb = 2 * to_i64(z_max);
    return compare_bi_series("jacobi-triple", {to_i64(nq), to_i64(z_max)}, lhs, rhs, nq, -zb, zb);
}

IdentityReport check_jtp_specialization(std::size_t n)
{
    std::vector<std::size_t> exps;
    for (std::size_t m = 1; 3 * m - 2 <= n; ++m) {
        exps.push_back(3 * m);
        exps.push_back(3 * m - 1);
        exps.push_back(3 * m - 2);
    }
    const auto lhs = product_one_minus(n, exps);
    IntSeries rhs(n);
    rhs[0] = 1;
    // n(3n+1)/2 for n = +-k; the n = -k value k(3k-1)/2 is the smaller one.
    for (std::int64_t k = 1; static_cast<std::size_t>(k * (3 * k - 1) / 2) <= n; ++k) {
        const int sign = (k % 2 == 0) ? 1 : -1;
        rhs[static_cast<std::size_t>(k * (3 * k - 1) / 2)] += sign;
        const auto upper = static_cast<std::size_t>(k * (3 * k + 1) / 2);
        if (upper <= n) {
            rhs[upper] += sign;
        }
    }
    return compare_series("jtp-specialization", {to_i64(n)}, lhs, rhs);
}

IntSeries cube_series(std::size_t n)
{
    IntSeries rhs(n);
    for (std::size_t k = 0; triangular(k) <= n; ++k) {
        const long coeff = static_cast<long>(2 * k + 1);
        rhs[triangular(k)] = (k % 2 == 0) ? coeff : -coeff;
    }
    return rhs;
}

IdentityReport check_cube(std::size_t n)
{
    const auto p = euler_product(n);
    return compare_series("cube", {to_i64(n)}, p * p * p, cube_series(n));
}

BiSeries andrews_lhs(std::size_t nq, std::size_t nz)
{
    auto lhs = BiSeries::one(nq, 0, to_i64(nz));
    auto running = BiSeries::one(nq, 0, to_i64(nz)); // (zq; q)_{m-1}
    // Terms with m > nq or m + 1 > nz lie outside the box.
    for (std::size_t m = 1; m <= nq && m + 1 <= nz; ++m) {
        if (m >= 2) {
            running.multiply_binomial(m - 1, 1, -1);
        }
        auto term = running;
        term.shift(m, to_i64(m) + 1);
        lhs -= term;
    }
    return lhs;
}

IdentityReport check_andrews(std::size_t nq, std::size_t nz)
{
    const auto lhs = andrews_lhs(nq, nz);
    auto rhs = BiSeries::one(nq, 0, to_i64(nz));
    for (std::int64_t k = 1;; ++k) {
        const auto g_pos = gpent(k);
        if (g_pos > nq) {
            break;
        }
        const int sign = pent_sign(k);
        rhs.add_term(g_pos, 3 * k - 1, sign);
        rhs.add_term(gpent(-k), 3 * k, sign);
    }
    auto report = compare_bi_series("andrews", {to_i64(nq), to_i64(nz)}, lhs, rhs, nq, 0, to_i64(nz));

    // z = 1: term m carries z-powers up to 2m, so the window [0, 2nq + 1]
    // holds every contribution at q-degree <= nq.
    const auto collapsed = andrews_lhs(nq, 2 * nq + 1).at_z_one();
    auto pent = pentagonal_series(nq);
    pent.set_label("q");
    auto collapse = compare_series("andrews", {to_i64(nq), to_i64(nz)}, collapsed, pent);
    if (collapse.discrepancy) {
        // Mark the witness as coming from the z = 1 collapse.
        collapse.discrepancy->exponent.push_back(1);
    }
    merge_into(report, collapse);
    return report;
}

} // namespace pentagon
