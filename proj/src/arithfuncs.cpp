#include <pentagon/arithfuncs.hpp>

#include <chrono>
#include <stdexcept>

#include <pentagon/pentagonal.hpp>
#include <pentagon/series.hpp>

namespace pentagon {

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::recurrence:
        return "recurrence";
    case Provenance::divisor_enumeration:
        return "divisor-enumeration";
    case Provenance::dynamic_programming:
        return "dynamic-programming";
    }
    return "unknown";
}

mpz_class sigma_divisors(std::uint64_t n)
{
    if (n == 0) {
        throw std::invalid_argument("sigma_divisors: n must be positive");
    }
    mpz_class sum = 0;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d == 0) {
            sum += mpz_class(static_cast<unsigned long>(d));
            const std::uint64_t e = n / d;
            if (e != d) {
                sum += mpz_class(static_cast<unsigned long>(e));
            }
        }
    }
    return sum;
}

SigmaTable sigma_table_divisors(std::uint64_t n_max)
{
    SigmaTable t{n_max, std::vector<mpz_class>(n_max + 1), Provenance::divisor_enumeration};
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        t.values[n] = sigma_divisors(n);
    }
    return t;
}

SigmaTable sigma_recurrence(std::uint64_t n_max)
{
    if (n_max == 0) {
        throw std::invalid_argument("sigma_recurrence: n_max must be positive");
    }
    SigmaTable t{n_max, std::vector<mpz_class>(n_max + 1), Provenance::recurrence};
    const auto offsets = recurrence_offsets(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        mpz_class acc = 0;
        for (const auto& [g, sign] : offsets) {
            if (g > n) {
                break;
            }
            // The sigma(0) slot is replaced by n; offsets beyond n are dropped.
            const mpz_class& v = (g == n) ? mpz_class(static_cast<unsigned long>(n)) : t.values[n - g];
            if (sign > 0) {
                acc += v;
            } else {
                acc -= v;
            }
        }
        t.values[n] = std::move(acc);
    }
    return t;
}

std::vector<Addend> sigma_addends(const SigmaTable& table, std::uint64_t n)
{
    if (n == 0 || n > table.n_max + 1) {
        throw std::out_of_range("sigma_addends: n outside the table");
    }
    std::vector<Addend> out;
    for (const auto& [g, sign] : recurrence_offsets(n)) {
        out.push_back(Addend{g, sign, g == n ? mpz_class(static_cast<unsigned long>(n)) : table(n - g)});
    }
    return out;
}

mpz_class partitions_dp(std::uint64_t n, std::optional<std::uint64_t> max_part)
{
    if (max_part && *max_part == 0) {
        throw std::invalid_argument("partitions_dp: max_part must be positive");
    }
    const std::uint64_t top = max_part ? std::min(*max_part, n) : n;
    std::vector<mpz_class> ways(n + 1);
    ways[0] = 1;
    for (std::uint64_t part = 1; part <= top; ++part) {
        for (std::uint64_t s = part; s <= n; ++s) {
            ways[s] += ways[s - part];
        }
    }
    return ways[n];
}

PartitionTable partitions_dp_table(std::uint64_t n_max)
{
    PartitionTable t{n_max, std::vector<mpz_class>(n_max + 1), Provenance::dynamic_programming};
    t.values[0] = 1;
    for (std::uint64_t part = 1; part <= n_max; ++part) {
        for (std::uint64_t s = part; s <= n_max; ++s) {
            t.values[s] += t.values[s - part];
        }
    }
    return t;
}

PartitionTable partitions_recurrence(std::uint64_t n_max)
{
    PartitionTable t{n_max, std::vector<mpz_class>(n_max + 1), Provenance::recurrence};
    t.values[0] = 1;
    const auto offsets = recurrence_offsets(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        mpz_class acc = 0;
        for (const auto& [g, sign] : offsets) {
            if (g > n) {
                break;
            }
            if (sign > 0) {
                acc += t.values[n - g];
            } else {
                acc -= t.values[n - g];
            }
        }
        t.values[n] = std::move(acc);
    }
    return t;
}

std::vector<Addend> partition_addends(const PartitionTable& table, std::uint64_t n)
{
    if (n > table.n_max + 1) {
        throw std::out_of_range("partition_addends: n outside the table");
    }
    std::vector<Addend> out;
    for (const auto& [g, sign] : recurrence_offsets(n)) {
        out.push_back(Addend{g, sign, table(n - g)});
    }
    return out;
}

std::size_t recurrence_term_count(std::uint64_t n)
{
    return pent_term_count(n) - 1;
}

IdentityReport check_sigma_lambert(std::size_t n)
{
    const auto b = pentagonal_series(n);
    const auto lhs = -theta_derivative(b);
    IntSeries sigma(n);
    for (std::size_t m = 1; m <= n; ++m) {
        sigma[m] = sigma_divisors(m);
    }
    return compare_series("sigma-lambert", {static_cast<std::int64_t>(n)}, lhs, b * sigma);
}

PartitionBench bench_partitions(std::uint64_t n_max)
{
    const auto start = std::chrono::steady_clock::now();
    auto table = partitions_recurrence(n_max);
    const auto stop = std::chrono::steady_clock::now();
    PartitionBench r;
    r.n_max = n_max;
    r.seconds = std::chrono::duration<double>(stop - start).count();
    r.values_per_second = r.seconds > 0 ? static_cast<double>(n_max + 1) / r.seconds : 0.0;
    r.value = table(n_max).get_str();
    r.digits = r.value.size();
    r.table = std::move(table);
    return r;
}

} // namespace pentagon
