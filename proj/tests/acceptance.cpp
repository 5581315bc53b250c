// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <pentagon/arithfuncs.hpp>
#include <pentagon/catalog.hpp>
#include <pentagon/divergent.hpp>
#include <pentagon/identities.hpp>
#include <pentagon/pentagonal.hpp>
#include <pentagon/proof.hpp>
#include <pentagon/series.hpp>

using namespace pentagon;
using Q = mpq_class;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::vector<Q> ints(std::initializer_list<long> v)
{
    std::vector<Q> out;
    for (auto x : v) {
        out.emplace_back(x);
    }
    return out;
}

std::vector<long> as_longs(const IntSeries& s)
{
    std::vector<long> out;
    for (const auto& c : s.coeffs()) {
        out.push_back(c.get_si());
    }
    return out;
}

std::vector<std::pair<int, long>> signed_values(const std::vector<Addend>& as)
{
    std::vector<std::pair<int, long>> out;
    for (const auto& a : as) {
        out.emplace_back(a.sign, a.value.get_si());
    }
    return out;
}

Outcome c1_pentagonal()
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = check_pentagonal(10000);
    const double secs = seconds_since(t0);
    const bool prefix = as_longs(euler_product(12)) == std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1} &&
                        as_longs(pentagonal_series(12)) == as_longs(euler_product(12));
    return {r.verified && prefix && secs < 10.0,
            "degree 10000 " + std::string(r.verified ? "verified" : "FAILED") + " in " + fmt("%.2f s", secs) +
                ", degree-12 prefix " + (prefix ? "ok" : "wrong")};
}

Outcome c2_partition_gf()
{
    const auto inv = as_longs(invert(euler_product(11)));
    const bool ok = inv == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56};
    return {ok, "1/prod(1-x^m) to x^11 " + std::string(ok ? "= 1,1,2,3,5,7,11,15,22,30,42,56" : "differs")};
}

Outcome c3_sigma_table()
{
    const auto rec = sigma_recurrence(5000);
    const auto div = sigma_table_divisors(5000);
    std::vector<long> first;
    for (std::uint64_t n = 1; n <= 16; ++n) {
        first.push_back(rec(n).get_si());
    }
    const bool table = first == std::vector<long>{1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28, 14, 24, 24, 31};
    std::size_t mismatches = 0;
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        mismatches += rec(n) != div(n) ? 1 : 0;
    }
    return {table && mismatches == 0, std::string("sigma(1..16) ") + (table ? "matches" : "differs") +
                                          ", recurrence vs divisors n<=5000: " + std::to_string(mismatches) +
                                          " mismatches"};
}

Outcome c4_worked()
{
    const auto st = sigma_recurrence(35);
    const bool s12 = st(12) == 28 && signed_values(sigma_addends(st, 12)) ==
                                         std::vector<std::pair<int, long>>{{1, 12}, {1, 18}, {-1, 8}, {-1, 6}, {1, 12}};
    const bool s35 = st(35) == 48;
    const auto pt = partitions_recurrence(2000);
    const bool p30 = pt(30) == 5604 &&
                     signed_values(partition_addends(pt, 30)) ==
                         std::vector<std::pair<int, long>>{{1, 4565}, {1, 3718}, {-1, 1958}, {-1, 1255},
                                                           {1, 385},  {1, 176},  {-1, 22},   {-1, 5}};
    const auto dp = partitions_dp_table(2000);
    std::size_t mismatches = 0;
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        mismatches += pt(n) != dp(n) ? 1 : 0;
    }
    std::ostringstream d;
    d << "sigma(12)=28 addends " << (s12 ? "ok" : "wrong") << ", sigma(35)=" << st(35).get_str()
      << ", p(30)=5604 addends " << (p30 ? "ok" : "wrong") << ", recurrence vs DP n<=2000: " << mismatches
      << " mismatches";
    return {s12 && s35 && p30 && mismatches == 0, d.str()};
}

Outcome c5_power_sums()
{
    const auto p1 = pentagonal_power_sum(1);
    const auto p2 = pentagonal_power_sum(2);
    const bool l1 = p1.s == Q(1, 8) && p1.t == Q(-1, 8);
    // the lambda = 2 case is written with both branch signs changed
    const bool l2 = -p2.s == Q(3, 16) && -p2.t == Q(-3, 16);
    bool totals = true;
    for (unsigned l = 0; l <= 10; ++l) {
        totals = totals && pentagonal_power_sum(l).total == 0;
    }
    bool abel = true;
    double worst = 0.0;
    for (unsigned l = 3; l <= 10; ++l) {
        const auto r = residue_class_power_sum(1, 0, l);
        abel = abel && r.passed;
        worst = std::max(worst, std::fabs(r.limit.value));
    }
    std::ostringstream d;
    d << "lambda=1 s=" << p1.s.get_str() << " t=" << p1.t.get_str() << "; lambda=2 sign-changed s="
      << Q(-p2.s).get_str() << " t=" << Q(-p2.t).get_str() << "; totals 0 for lambda=0..10: "
      << (totals ? "yes" : "no") << "; Abel lambda=3..10 max |limit| " << fmt("%.2e", worst);
    return {l1 && l2 && totals && abel, d.str()};
}

Outcome c6_leibnitz()
{
    std::vector<Q> ones(8, Q(1));
    const bool exact = *euler_transform_sum(ones).exact == Q(1, 2);
    std::vector<Q> alt;
    for (int i = 0; i <= 40; ++i) {
        alt.emplace_back(i % 2 == 0 ? 1 : -1);
    }
    const auto r = rademacher_sum(alt, 40);
    const double err = std::fabs(r.value - 0.5);
    return {exact && err < 1e-6, "Euler transform of 1-1+1-... = " + euler_transform_sum(ones).exact->get_str() +
                                     ", Rademacher N=40 off by " + fmt("%.1e", err)};
}

Outcome c7_tables()
{
    const auto a = difference_table(ints({1, 5, 12, 22, 35, 51, 70}), 10);
    const bool t28 = a.rows.size() == 4 && a.rows[1] == ints({4, 7, 10, 13, 16, 19}) &&
                     a.rows[2] == ints({3, 3, 3, 3, 3}) && a.rows[3] == ints({0, 0, 0, 0});
    const auto b = difference_table(ints({2, 7, 15, 26, 40, 57, 77}), 10);
    const bool t28b = b.rows.size() == 4 && b.rows[1] == ints({5, 8, 11, 14, 17, 20}) &&
                      b.rows[2] == ints({3, 3, 3, 3, 3}) && b.rows[3] == ints({0, 0, 0, 0});
    const auto c = difference_table(ints({1, 25, 144, 484, 1225, 2601, 4900}), 10);
    const bool t29a = c.rows.size() == 6 && c.rows[1] == ints({24, 119, 340, 741, 1376, 2299}) &&
                      c.rows[2] == ints({95, 221, 401, 635, 923}) && c.rows[3] == ints({126, 180, 234, 288}) &&
                      c.rows[4] == ints({54, 54, 54}) && c.rows[5] == ints({0, 0});
    const auto d = difference_table(ints({4, 49, 225, 676, 1600, 3249, 5929}), 10);
    const bool t29b = d.rows.size() == 6 && d.rows[1] == ints({45, 176, 451, 924, 1649, 2680}) &&
                      d.rows[2] == ints({131, 275, 473, 725, 1031}) && d.rows[3] == ints({144, 198, 252, 306}) &&
                      d.rows[4] == ints({54, 54, 54}) && d.rows[5] == ints({0, 0});
    const bool ok = t28 && t28b && t29a && t29b;
    return {ok, std::string("lambda=1 tables ") + (t28 && t28b ? "ok" : "wrong") + ", lambda=2 tables (25 for 24) " +
                    (t29a && t29b ? "ok" : "wrong")};
}

Outcome c8_periods()
{
    const auto p1 = residue_period_check(1, 12);
    const auto p2 = residue_period_check(2, 24);
    const bool base = p1.found && p1.period_length == 4 && p1.pattern_signs == std::vector<int>{1, -1, -1, 1} &&
                      p1.zero_sum() && p2.found && p2.period_length == 8 && p2.zero_sum();
    std::uint64_t bad = 0;
    std::uint64_t longest = 0;
    for (std::uint64_t n = 1; n <= 24; ++n) {
        const auto r = residue_period_check(n, 12 * n);
        if (!r.zero_sum()) {
            bad = n;
        }
        longest = std::max(longest, r.period_length);
    }
    std::ostringstream d;
    d << "n=1 period " << p1.period_length << ", n=2 period " << p2.period_length << "; n<=24 "
      << (bad == 0 ? "all zero-sum" : "fails at n=" + std::to_string(bad)) << " (longest period " << longest << ")";
    return {base && bad == 0, d.str()};
}

Outcome c9_suite()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<IdentityReport> reports;
    reports.push_back(check_jacobi_triple(200, 14));
    reports.push_back(check_cube(2000));
    reports.push_back(check_andrews(60, 60));
    reports.push_back(check_goldbach_cb(500));
    reports.push_back(check_half_integer(500));
    reports.push_back(check_s_expansion(500));
    reports.push_back(check_qbinomial_plus(40, 8));
    reports.push_back(check_qbinomial_inv(40, 8));
    reports.push_back(check_sigma_lambert(1000));
    std::string failed;
    for (const auto& r : reports) {
        if (!r.verified) {
            failed += " " + r.identity;
        }
    }
    const auto all = run_all_identities(std::nullopt, std::nullopt, 1);
    for (const auto& r : all) {
        if (!r.verified) {
            failed += " " + r.identity;
        }
    }
    const double secs = seconds_since(t0);
    return {failed.empty() && secs < 60.0,
            std::to_string(reports.size()) + " checks at the stated boxes plus the full catalog (" +
                std::to_string(all.size()) + ") " + (failed.empty() ? "verified" : "failed:" + failed) + " in " +
                fmt("%.2f s", secs)};
}

Outcome c10_proof()
{
    const std::size_t n = 500;
    const auto target = euler_product(n);
    const auto pent = pentagonal_series(2000);
    auto s = proof_initial();
    bool materialize = proof_materialize(s, n) == target;
    bool heads = true;
    for (std::uint64_t step = 1; step <= 25; ++step) {
        s = proof_step(s);
        materialize = materialize && proof_materialize(s, n) == target;
        const auto prefix = certified_prefix(s);
        std::size_t seen = 0;
        for (std::size_t e = 0; e <= pent.order() && seen < prefix.size(); ++e) {
            if (pent[e] != 0) {
                heads = heads && prefix[seen].exponent == e && prefix[seen].sign == sgn(pent[e]);
                ++seen;
            }
        }
        heads = heads && seen == prefix.size() && prefix.size() >= 2 * step + 1;
    }
    const bool report = check_proof(n, 25).verified;
    return {materialize && heads && report, "25 steps, every state = prod(1-x^m) to x^500: " +
                                                std::string(materialize ? "yes" : "no") +
                                                ", heads = pentagonal prefix: " + (heads ? "yes" : "no")};
}

Outcome c11_radial()
{
    std::size_t cases = 0;
    std::size_t not_decreasing = 0;
    std::size_t not_small = 0;
    double worst_final = 0.0;
    std::string worst_case;
    for (std::uint64_t n = 1; n <= 6; ++n) {
        for (std::uint64_t j = 0; j < n; ++j) {
            for (unsigned l = 0; l <= 3; ++l) {
                const auto r = radial_theta_limit(n, j, l, RadiusSchedule{3, 10});
                ++cases;
                not_decreasing += r.strictly_decreasing() ? 0 : 1;
                const double final_log = r.points.back().log10_magnitude;
                if (final_log >= -8.0) {
                    ++not_small;
                }
                if (std::pow(10.0, final_log) > worst_final) {
                    worst_final = std::pow(10.0, final_log);
                    worst_case = "(" + std::to_string(n) + "," + std::to_string(j) + "," + std::to_string(l) + ")";
                }
            }
        }
    }
    std::ostringstream d;
    d << cases << " (n,j,lambda) cases: " << not_decreasing << " not strictly decreasing over j=3..10, "
      << not_small << " with final magnitude >= 1e-8 (largest " << fmt("%.3e", worst_final) << " at " << worst_case
      << ")";
    return {not_decreasing == 0 && not_small == 0, d.str()};
}

Outcome c12_residue_sums()
{
    std::size_t cases = 0;
    std::size_t failed = 0;
    double worst = 0.0;
    for (std::uint64_t n = 1; n <= 6; ++n) {
        for (std::uint64_t r = 0; r < n; ++r) {
            for (unsigned l = 0; l <= 2; ++l) {
                const auto rep = residue_class_power_sum(n, r, l);
                ++cases;
                failed += rep.passed ? 0 : 1;
                worst = std::max(worst, std::fabs(rep.limit.value));
            }
        }
    }
    return {failed == 0, std::to_string(cases) + " (n,r,lambda) cases, " + std::to_string(failed) +
                             " above 1e-4, max |limit| " + fmt("%.2e", worst)};
}

Outcome c13_bench()
{
    const auto b = bench_partitions(50000);
    const auto dp = partitions_dp_table(2000);
    bool prefix = true;
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        prefix = prefix && b.table(n) == dp(n);
    }
    std::ostringstream d;
    d << "p(0..50000) in " << fmt("%.3f s", b.seconds) << " (" << fmt("%.0f", b.values_per_second)
      << " values/s), p(50000) has " << b.digits << " digits, n<=2000 prefix vs DP " << (prefix ? "ok" : "MISMATCH");
    return {prefix, d.str()};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"pentagonal identity", c1_pentagonal},
        {"partition generating function", c2_partition_gf},
        {"divisor table", c3_sigma_table},
        {"worked recurrences", c4_worked},
        {"exact divergent sums", c5_power_sums},
        {"Leibnitz series", c6_leibnitz},
        {"difference tables", c7_tables},
        {"period cancellation", c8_periods},
        {"identity suite", c9_suite},
        {"proof state machine", c10_proof},
        {"radial limits", c11_radial},
        {"residue-class sums", c12_residue_sums},
        {"benchmark", c13_bench},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << (i + 1 < 10 ? " " : "") << i + 1 << ' '
                  << criteria[i].first << ": " << o.detail << std::endl;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failures) << '/' << criteria.size() << " criteria passed"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
