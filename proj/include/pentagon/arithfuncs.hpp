#pragma once

// Divisor sums and partition numbers via the pentagonal recurrences, together
// with the brute-force routes they are checked against.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <pentagon/report.hpp>

namespace pentagon {

enum class Provenance { recurrence, divisor_enumeration, dynamic_programming };

std::string to_string(Provenance p);

/// sigma(1..n_max); values[0] is unused and holds 0.
struct SigmaTable {
    std::uint64_t n_max = 0;
    std::vector<mpz_class> values;
    Provenance provenance = Provenance::recurrence;

    const mpz_class& operator()(std::uint64_t n) const { return values.at(n); }
};

/// p(0..n_max).
struct PartitionTable {
    std::uint64_t n_max = 0;
    std::vector<mpz_class> values;
    Provenance provenance = Provenance::recurrence;

    const mpz_class& operator()(std::uint64_t n) const { return values.at(n); }
};

/// One signed term of a recurrence evaluation: sign * value, where value is
/// the table entry at n - offset (or n itself for the sigma(0) slot).
struct Addend {
    std::uint64_t offset = 0;
    int sign = 1;
    mpz_class value;
};

/// Sum of divisors by trial division up to sqrt(n). n = 0 throws.
mpz_class sigma_divisors(std::uint64_t n);

/// Table of sigma_divisors values.
SigmaTable sigma_table_divisors(std::uint64_t n_max);

/// sigma(n) = sum_k (-1)^(k+1) sigma(n - g_k) over g_k <= n, where a
/// sigma(0) slot stands for n itself. n_max = 0 throws.
SigmaTable sigma_recurrence(std::uint64_t n_max);

/// Addends of the recurrence at n, read from a table that covers n - 1.
std::vector<Addend> sigma_addends(const SigmaTable& table, std::uint64_t n);

/// Partitions of n into parts <= max_part (unbounded when empty).
/// max_part = 0 throws.
mpz_class partitions_dp(std::uint64_t n, std::optional<std::uint64_t> max_part = std::nullopt);

/// p(0..n_max) by the unrestricted-parts dynamic program.
PartitionTable partitions_dp_table(std::uint64_t n_max);

/// p(n) = sum_k (-1)^(k+1) p(n - g_k), p(0) = 1.
PartitionTable partitions_recurrence(std::uint64_t n_max);

std::vector<Addend> partition_addends(const PartitionTable& table, std::uint64_t n);

/// Number of pentagonal offsets the recurrences touch at n.
std::size_t recurrence_term_count(std::uint64_t n);

/// -x B'(x) = B(x) * sum sigma(n) x^n with B the pentagonal series and
/// sigma from divisor enumeration, up to x^n.
IdentityReport check_sigma_lambert(std::size_t n);

struct PartitionBench {
    std::uint64_t n_max = 0;
    double seconds = 0.0;
    double values_per_second = 0.0;
    std::size_t digits = 0;
    std::string value;
    PartitionTable table;
};

/// Times partitions_recurrence(n_max).
PartitionBench bench_partitions(std::uint64_t n_max);

} // namespace pentagon
