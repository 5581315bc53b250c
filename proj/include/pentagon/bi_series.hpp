#pragma once

// Series in q truncated at degree Nq, with a bounded window [z_min, z_max] of
// (possibly negative) powers of a second indeterminate z. Products drop every
// term that falls outside the window, so callers must size the window from a
// valuation bound that keeps all contributing terms inside it.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <pentagon/series.hpp>

namespace pentagon {

class BiSeries {
public:
    BiSeries(std::size_t q_order, std::int64_t z_min, std::int64_t z_max);

    static BiSeries one(std::size_t q_order, std::int64_t z_min, std::int64_t z_max);

    std::size_t q_order() const noexcept { return q_order_; }
    std::int64_t z_min() const noexcept { return z_min_; }
    std::int64_t z_max() const noexcept { return z_max_; }

    bool in_box(std::size_t q, std::int64_t z) const noexcept
    {
        return q <= q_order_ && z >= z_min_ && z <= z_max_;
    }

    /// Coefficient of q^q z^z; zero outside the box.
    mpz_class coeff(std::size_t q, std::int64_t z) const;
    /// Mutable access; throws std::out_of_range outside the box.
    mpz_class& at(std::size_t q, std::int64_t z);

    /// Adds c q^q z^z when it lies inside the box.
    void add_term(std::size_t q, std::int64_t z, const mpz_class& c);

    /// In place *= (1 + c q^qe z^ze) with qe >= 1.
    void multiply_binomial(std::size_t qe, std::int64_t ze, const mpz_class& c);

    /// In place *= s(q) for a series in q alone.
    void multiply_q_series(const IntSeries& s);

    /// In place *= c q^qe z^ze; terms shifted out of the box are dropped.
    void shift(std::size_t qe, std::int64_t ze);

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);

    /// Coefficient series of z^z as a series in q.
    IntSeries z_slice(std::int64_t z) const;

    /// Sum over all stored z-powers: the specialization z = 1.
    IntSeries at_z_one() const;

    /// Restriction to a smaller box.
    BiSeries restricted(std::size_t q_order, std::int64_t z_min, std::int64_t z_max) const;

    friend bool operator==(const BiSeries&, const BiSeries&) = default;

private:
    std::size_t index(std::size_t q, std::int64_t z) const noexcept
    {
        return q * width_ + static_cast<std::size_t>(z - z_min_);
    }

    std::size_t q_order_;
    std::int64_t z_min_;
    std::int64_t z_max_;
    std::size_t width_;
    std::vector<mpz_class> coeffs_;
};

} // namespace pentagon
