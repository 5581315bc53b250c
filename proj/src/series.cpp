#include <pentagon/series.hpp>

#include <pentagon/pentagonal.hpp>

namespace pentagon {

IntSeries euler_product(std::size_t order)
{
    // Factors with m > order cannot touch coefficients up to x^order.
    auto s = IntSeries::one(order);
    for (std::size_t m = 1; m <= order; ++m) {
        s.multiply_one_minus(m);
    }
    return s;
}

IntSeries pentagonal_series(std::size_t order)
{
    IntSeries s(order);
    for (const auto& t : pent_sequence(order)) {
        s[t.exponent] = t.sign;
    }
    return s;
}

IntSeries lambert_sigma_series(std::size_t order)
{
    IntSeries s(order);
    for (std::size_t m = 1; m <= order; ++m) {
        for (std::size_t e = m; e <= order; e += m) {
            s[e] += static_cast<unsigned long>(m);
        }
    }
    return s;
}

IntSeries product_one_minus(std::size_t order, std::span<const std::size_t> exponents)
{
    auto s = IntSeries::one(order);
    for (auto e : exponents) {
        if (e <= order) {
            s.multiply_one_minus(e);
        }
    }
    return s;
}

} // namespace pentagon
