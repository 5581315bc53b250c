#include <pentagon/bi_series.hpp>

#include <algorithm>
#include <stdexcept>

namespace pentagon {

BiSeries::BiSeries(std::size_t q_order, std::int64_t z_min, std::int64_t z_max)
    : q_order_(q_order), z_min_(z_min), z_max_(z_max)
{
    if (z_max < z_min) {
        throw std::invalid_argument("BiSeries: empty z window");
    }
    width_ = static_cast<std::size_t>(z_max - z_min + 1);
    coeffs_.resize((q_order + 1) * width_);
}

BiSeries BiSeries::one(std::size_t q_order, std::int64_t z_min, std::int64_t z_max)
{
    BiSeries s(q_order, z_min, z_max);
    s.add_term(0, 0, 1);
    return s;
}

mpz_class BiSeries::coeff(std::size_t q, std::int64_t z) const
{
    if (!in_box(q, z)) {
        return 0;
    }
    return coeffs_[index(q, z)];
}

mpz_class& BiSeries::at(std::size_t q, std::int64_t z)
{
    if (!in_box(q, z)) {
        throw std::out_of_range("BiSeries::at: (" + std::to_string(q) + ", " + std::to_string(z) +
                                ") outside box");
    }
    return coeffs_[index(q, z)];
}

void BiSeries::add_term(std::size_t q, std::int64_t z, const mpz_class& c)
{
    if (in_box(q, z)) {
        coeffs_[index(q, z)] += c;
    }
}

void BiSeries::multiply_binomial(std::size_t qe, std::int64_t ze, const mpz_class& c)
{
    if (qe == 0) {
        throw std::invalid_argument("BiSeries::multiply_binomial: q exponent must be positive");
    }
    if (qe > q_order_) {
        return;
    }
    // Descending q makes the update in place: row q reads only rows < q.
    for (std::size_t q = q_order_; q >= qe; --q) {
        const std::size_t src_q = q - qe;
        for (std::int64_t z = z_min_; z <= z_max_; ++z) {
            const std::int64_t src_z = z - ze;
            if (src_z < z_min_ || src_z > z_max_) {
                continue;
            }
            const auto& src = coeffs_[index(src_q, src_z)];
            if (sgn(src) != 0) {
                mpz_addmul(coeffs_[index(q, z)].get_mpz_t(), c.get_mpz_t(), src.get_mpz_t());
            }
        }
        if (q == qe) {
            break;
        }
    }
}

void BiSeries::multiply_q_series(const IntSeries& s)
{
    const std::size_t n = std::min(q_order_, s.order());
    std::vector<mpz_class> out((n + 1) * width_);
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(s[i]) == 0) {
            continue;
        }
        for (std::size_t q = 0; q + i <= n; ++q) {
            for (std::size_t w = 0; w < width_; ++w) {
                const auto& src = coeffs_[q * width_ + w];
                if (sgn(src) != 0) {
                    mpz_addmul(out[(q + i) * width_ + w].get_mpz_t(), s[i].get_mpz_t(), src.get_mpz_t());
                }
            }
        }
    }
    q_order_ = n;
    coeffs_ = std::move(out);
}

void BiSeries::shift(std::size_t qe, std::int64_t ze)
{
    BiSeries out(q_order_, z_min_, z_max_);
    for (std::size_t q = 0; q + qe <= q_order_; ++q) {
        for (std::int64_t z = z_min_; z <= z_max_; ++z) {
            const auto& src = coeffs_[index(q, z)];
            if (sgn(src) != 0) {
                out.add_term(q + qe, z + ze, src);
            }
        }
    }
    *this = std::move(out);
}

BiSeries& BiSeries::operator+=(const BiSeries& o)
{
    if (o.q_order_ < q_order_) {
        *this = restricted(o.q_order_, z_min_, z_max_);
    }
    for (std::size_t q = 0; q <= q_order_; ++q) {
        for (std::int64_t z = std::max(z_min_, o.z_min_); z <= std::min(z_max_, o.z_max_); ++z) {
            coeffs_[index(q, z)] += o.coeffs_[o.index(q, z)];
        }
    }
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o)
{
    if (o.q_order_ < q_order_) {
        *this = restricted(o.q_order_, z_min_, z_max_);
    }
    for (std::size_t q = 0; q <= q_order_; ++q) {
        for (std::int64_t z = std::max(z_min_, o.z_min_); z <= std::min(z_max_, o.z_max_); ++z) {
            coeffs_[index(q, z)] -= o.coeffs_[o.index(q, z)];
        }
    }
    return *this;
}

IntSeries BiSeries::z_slice(std::int64_t z) const
{
    IntSeries s(q_order_, "q");
    if (z < z_min_ || z > z_max_) {
        return s;
    }
    for (std::size_t q = 0; q <= q_order_; ++q) {
        s[q] = coeffs_[index(q, z)];
    }
    return s;
}

IntSeries BiSeries::at_z_one() const
{
    IntSeries s(q_order_, "q");
    for (std::size_t q = 0; q <= q_order_; ++q) {
        for (std::size_t w = 0; w < width_; ++w) {
            s[q] += coeffs_[q * width_ + w];
        }
    }
    return s;
}

BiSeries BiSeries::restricted(std::size_t q_order, std::int64_t z_min, std::int64_t z_max) const
{
    if (q_order > q_order_ || z_min < z_min_ || z_max > z_max_) {
        throw std::invalid_argument("BiSeries::restricted: target box exceeds the stored box");
    }
    BiSeries out(q_order, z_min, z_max);
    for (std::size_t q = 0; q <= q_order; ++q) {
        for (std::int64_t z = z_min; z <= z_max; ++z) {
            out.coeffs_[out.index(q, z)] = coeffs_[index(q, z)];
        }
    }
    return out;
}

} // namespace pentagon
