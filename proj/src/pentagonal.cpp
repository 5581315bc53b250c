#include <pentagon/pentagonal.hpp>

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pentagon {

PentTerm PentTerm::at(std::int64_t k)
{
    return PentTerm{k, gpent(k), pent_sign(k)};
}

std::uint64_t gpent(std::int64_t k)
{
    if (k > kMaxIndex || k < -kMaxIndex) {
        throw std::out_of_range("gpent: |k| too large for 64-bit evaluation: " + std::to_string(k));
    }
    // k(3k-1) is always even.
    const auto kk = static_cast<__int128>(k);
    return static_cast<std::uint64_t>(kk * (3 * kk - 1) / 2);
}

mpz_class gpent(const mpz_class& k)
{
    mpz_class r = k * (3 * k - 1);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 2);
    return r;
}

std::uint64_t triangular(std::uint64_t n)
{
    const auto nn = static_cast<unsigned __int128>(n);
    const auto r = nn * (nn + 1) / 2;
    if (r > UINT64_MAX) {
        throw std::out_of_range("triangular: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

mpz_class triangular(const mpz_class& n)
{
    mpz_class r = n * (n + 1);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 2);
    return r;
}

std::vector<PentTerm> pent_sequence(std::uint64_t max_exponent)
{
    std::vector<PentTerm> out;
    out.reserve(pent_term_count(max_exponent));
    out.push_back(PentTerm::at(0));
    // g_k < g_{-k} < g_{k+1} for k >= 1, so walking k = 1, -1, 2, -2, ...
    // already yields ascending exponents.
    for (std::int64_t k = 1;; ++k) {
        const auto pos = PentTerm::at(k);
        if (pos.exponent > max_exponent) {
            break;
        }
        assert(pos.exponent > out.back().exponent);
        out.push_back(pos);
        const auto neg = PentTerm::at(-k);
        if (neg.exponent > max_exponent) {
            break;
        }
        assert(neg.exponent > pos.exponent);
        out.push_back(neg);
    }
    return out;
}

namespace {

// Largest k >= 0 with k(3k + offset)/2 <= n, offset = -1 or +1.
std::uint64_t largest_index(std::uint64_t n, int offset)
{
    // Start from the real root and correct by +-1.
    const long double disc = 1.0L + 24.0L * static_cast<long double>(n);
    auto k = static_cast<std::int64_t>((std::sqrt(disc) - offset) / 6.0L);
    auto value = [offset](std::int64_t j) {
        const auto jj = static_cast<__int128>(j);
        return jj * (3 * jj + offset) / 2;
    };
    while (k > 0 && value(k) > static_cast<__int128>(n)) {
        --k;
    }
    while (value(k + 1) <= static_cast<__int128>(n)) {
        ++k;
    }
    return static_cast<std::uint64_t>(k);
}

} // namespace

std::uint64_t pent_term_count(std::uint64_t max_exponent)
{
    return largest_index(max_exponent, -1) + largest_index(max_exponent, +1) + 1;
}

std::vector<std::pair<std::uint64_t, int>> recurrence_offsets(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, int>> out;
    for (const auto& t : pent_sequence(n)) {
        if (t.exponent == 0) {
            continue;
        }
        out.emplace_back(t.exponent, -t.sign);
    }
    return out;
}

} // namespace pentagon
