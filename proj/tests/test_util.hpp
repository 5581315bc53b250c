#pragma once

// Small helpers shared by the unit tests: plain integer reference
// implementations and seeded random generators.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include <pentagon/series.hpp>

namespace testutil {

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(0x5eed1234abcdULL);
    return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline pentagon::IntSeries random_series(std::size_t order, std::int64_t lo = -50, std::int64_t hi = 50)
{
    pentagon::IntSeries s(order);
    for (std::size_t i = 0; i <= order; ++i) {
        s[i] = static_cast<long>(uniform(lo, hi));
    }
    return s;
}

// schoolbook product on machine integers, no truncation
inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b)
{
    std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

inline std::vector<std::int64_t> coeffs_i64(const pentagon::IntSeries& s)
{
    std::vector<std::int64_t> out;
    for (const auto& c : s.coeffs()) {
        out.push_back(c.get_si());
    }
    return out;
}

inline std::vector<std::int64_t> first(std::vector<std::int64_t> v, std::size_t n)
{
    v.resize(n, 0);
    return v;
}

// brute force sigma
inline std::uint64_t sigma_naive(std::uint64_t n)
{
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
            s += d;
        }
    }
    return s;
}

// partitions of n into parts <= m, by direct recursion (small n only)
inline std::uint64_t partitions_naive(std::int64_t n, std::int64_t m)
{
    if (n == 0) {
        return 1;
    }
    if (n < 0 || m == 0) {
        return 0;
    }
    return partitions_naive(n - m, m) + partitions_naive(n, m - 1);
}

} // namespace testutil
