#pragma once

// Generalized pentagonal numbers g_k = k(3k-1)/2, k in Z, and the sign
// pattern (-1)^k attached to them in the expansion of prod (1 - x^m).

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pentagon {

/// One term sign * x^exponent of the pentagonal series.
struct PentTerm {
    std::int64_t k = 0;
    std::uint64_t exponent = 0;
    int sign = 1;

    /// Term for index k. |k| must not exceed kMaxIndex.
    static PentTerm at(std::int64_t k);

    friend bool operator==(const PentTerm&, const PentTerm&) = default;
};

/// Largest |k| for which the 64-bit routines are exact.
inline constexpr std::int64_t kMaxIndex = std::int64_t{1} << 31;

/// k(3k-1)/2. Throws std::out_of_range when |k| > kMaxIndex; use the
/// mpz_class overload beyond that.
std::uint64_t gpent(std::int64_t k);
mpz_class gpent(const mpz_class& k);

std::uint64_t triangular(std::uint64_t n);
mpz_class triangular(const mpz_class& n);

/// (-1)^k.
constexpr int pent_sign(std::int64_t k) noexcept { return (k % 2 == 0) ? 1 : -1; }

/// Index of the t-th term when terms are listed by ascending exponent:
/// t = 0, 1, 2, 3, 4, ... maps to k = 0, 1, -1, 2, -2, ...
constexpr std::int64_t index_of_position(std::uint64_t t) noexcept
{
    if (t % 2 == 1) {
        return static_cast<std::int64_t>((t + 1) / 2);
    }
    return -static_cast<std::int64_t>(t / 2);
}

/// Every term with exponent <= max_exponent (k = 0 included), ascending.
std::vector<PentTerm> pent_sequence(std::uint64_t max_exponent);

/// Closed-form size of pent_sequence(max_exponent).
std::uint64_t pent_term_count(std::uint64_t max_exponent);

/// Pentagonal exponents 1, 2, 5, 7, ... <= n paired with the recurrence
/// sign (-1)^(k+1) used by the sigma and partition recurrences.
std::vector<std::pair<std::uint64_t, int>> recurrence_offsets(std::uint64_t n);

} // namespace pentagon
