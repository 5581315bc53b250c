#pragma once

// Truncated formal power series with exact coefficients. Everything lives in
// the quotient ring R[x]/(x^(N+1)); binary operations take the smaller of the
// two truncation orders and never extend it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pentagon {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

inline void add_product(mpz_class& acc, const mpz_class& a, const mpz_class& b)
{
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline void add_product(mpq_class& acc, const mpq_class& a, const mpq_class& b) { acc += a * b; }

inline bool is_zero(const mpz_class& v) { return sgn(v) == 0; }
inline bool is_zero(const mpq_class& v) { return sgn(v) == 0; }

inline mpz_class parse_coeff(const std::string& s, const mpz_class*) { return mpz_class(s, 10); }

inline mpq_class parse_coeff(const std::string& s, const mpq_class*)
{
    mpq_class q(s, 10);
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in '" + s + "'");
    }
    q.canonicalize();
    return q;
}

} // namespace detail

template <typename Coeff>
class TruncSeries {
public:
    using coeff_type = Coeff;

    /// Zero series of the given truncation order.
    explicit TruncSeries(std::size_t order = 0, std::string label = "x")
        : coeffs_(order + 1), label_(std::move(label))
    {
    }

    /// Series c_0 + c_1 x + ... with order coeffs.size() - 1.
    explicit TruncSeries(std::vector<Coeff> coeffs, std::string label = "x")
        : coeffs_(std::move(coeffs)), label_(std::move(label))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("TruncSeries needs at least one coefficient");
        }
    }

    static TruncSeries one(std::size_t order, std::string label = "x")
    {
        TruncSeries s(order, std::move(label));
        s.coeffs_[0] = 1;
        return s;
    }

    /// c * x^exponent; vanishes when exponent > order.
    static TruncSeries monomial(std::size_t order, std::size_t exponent, Coeff c = 1,
                                std::string label = "x")
    {
        TruncSeries s(order, std::move(label));
        if (exponent <= order) {
            s.coeffs_[exponent] = std::move(c);
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::string& label() const noexcept { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
    const Coeff& operator[](std::size_t n) const { return coeffs_.at(n); }
    Coeff& operator[](std::size_t n) { return coeffs_.at(n); }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return detail::is_zero(c); });
    }

    std::size_t nonzero_count() const
    {
        return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                                      [](const Coeff& c) { return !detail::is_zero(c); }));
    }

    /// Same series reduced to a smaller (or equal) order.
    TruncSeries truncated(std::size_t order) const
    {
        if (order > this->order()) {
            throw std::invalid_argument("truncated: cannot raise the truncation order");
        }
        return TruncSeries(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1),
                           label_);
    }

    /// In place *= (1 + c x^e), e >= 1.
    void multiply_binomial(std::size_t e, const Coeff& c)
    {
        if (e == 0) {
            throw std::invalid_argument("multiply_binomial: exponent must be positive");
        }
        for (std::size_t n = order(); n >= e; --n) {
            detail::add_product(coeffs_[n], c, coeffs_[n - e]);
            if (n == e) {
                break;
            }
        }
    }

    /// In place *= (1 - x^e), e >= 1.
    void multiply_one_minus(std::size_t e)
    {
        if (e == 0) {
            throw std::invalid_argument("multiply_one_minus: exponent must be positive");
        }
        for (std::size_t n = order(); n >= e; --n) {
            coeffs_[n] -= coeffs_[n - e];
            if (n == e) {
                break;
            }
        }
    }

    TruncSeries& operator+=(const TruncSeries& o)
    {
        shrink_to(o.order());
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] += o.coeffs_[n];
        }
        return *this;
    }

    TruncSeries& operator-=(const TruncSeries& o)
    {
        shrink_to(o.order());
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] -= o.coeffs_[n];
        }
        return *this;
    }

    TruncSeries& operator*=(const Coeff& c)
    {
        for (auto& v : coeffs_) {
            v *= c;
        }
        return *this;
    }

    /// Coefficients and order equal; the label is not compared.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    void shrink_to(std::size_t order)
    {
        if (order < this->order()) {
            coeffs_.resize(order + 1);
        }
    }

    std::vector<Coeff> coeffs_;
    std::string label_;
};

using IntSeries = TruncSeries<Integer>;
using RatSeries = TruncSeries<Rational>;

template <typename C>
TruncSeries<C> operator+(TruncSeries<C> a, const TruncSeries<C>& b)
{
    a += b;
    return a;
}

template <typename C>
TruncSeries<C> operator-(TruncSeries<C> a, const TruncSeries<C>& b)
{
    a -= b;
    return a;
}

template <typename C>
TruncSeries<C> operator-(TruncSeries<C> a)
{
    a *= C(-1);
    return a;
}

/// Cauchy product truncated at min(order(a), order(b)).
template <typename C>
TruncSeries<C> operator*(const TruncSeries<C>& a, const TruncSeries<C>& b)
{
    const std::size_t n_max = std::min(a.order(), b.order());
    TruncSeries<C> out(n_max, a.label());
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<C> acc(n_max + 1);
    for (std::size_t i = 0; i <= n_max; ++i) {
        if (detail::is_zero(ac[i])) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n_max; ++j) {
            if (!detail::is_zero(bc[j])) {
                detail::add_product(acc[i + j], ac[i], bc[j]);
            }
        }
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
        out[n] = std::move(acc[n]);
    }
    return out;
}

/// Multiplicative inverse. Integer series need a constant term of +-1,
/// rational ones a nonzero constant term; anything else throws
/// std::domain_error.
template <typename C>
TruncSeries<C> invert(const TruncSeries<C>& a)
{
    const auto ac = a.coeffs();
    C inv0;
    if constexpr (std::is_same_v<C, Integer>) {
        if (ac[0] != 1 && ac[0] != -1) {
            throw std::domain_error("invert: constant term " + ac[0].get_str() + " is not a unit");
        }
        inv0 = ac[0];
    } else {
        if (detail::is_zero(ac[0])) {
            throw std::domain_error("invert: constant term is zero");
        }
        inv0 = 1 / ac[0];
    }
    TruncSeries<C> b(a.order(), a.label());
    b[0] = inv0;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        C acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (!detail::is_zero(ac[i])) {
                detail::add_product(acc, ac[i], b[n - i]);
            }
        }
        b[n] = -inv0 * acc;
    }
    return b;
}

/// x d/dx: c_n -> n c_n.
template <typename C>
TruncSeries<C> theta_derivative(TruncSeries<C> a)
{
    for (std::size_t n = 0; n <= a.order(); ++n) {
        a[n] *= C(static_cast<unsigned long>(n));
    }
    return a;
}

/// x -> x^d, keeping the input order.
template <typename C>
TruncSeries<C> substitute_power(const TruncSeries<C>& a, std::size_t d)
{
    if (d == 0) {
        throw std::invalid_argument("substitute_power: d must be positive");
    }
    TruncSeries<C> out(a.order(), a.label());
    for (std::size_t n = 0; n * d <= a.order(); ++n) {
        out[n * d] = a[n];
    }
    return out;
}

/// Line format: "order N" then "n c_n" for each nonzero coefficient.
template <typename C>
void write_text(std::ostream& os, const TruncSeries<C>& s)
{
    os << "order " << s.order() << '\n';
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (!detail::is_zero(s[n])) {
            os << n << ' ' << s[n].get_str() << '\n';
        }
    }
}

template <typename C>
std::string to_text(const TruncSeries<C>& s)
{
    std::ostringstream os;
    write_text(os, s);
    return os.str();
}

template <typename C>
TruncSeries<C> read_text(std::istream& is)
{
    std::string keyword;
    std::size_t order = 0;
    if (!(is >> keyword >> order) || keyword != "order") {
        throw std::invalid_argument("series text: expected header 'order N'");
    }
    TruncSeries<C> s(order);
    std::size_t n = 0;
    std::string value;
    std::size_t last = 0;
    bool first = true;
    while (is >> n) {
        if (!(is >> value)) {
            throw std::invalid_argument("series text: missing coefficient for exponent " + std::to_string(n));
        }
        if (n > order) {
            throw std::invalid_argument("series text: exponent " + std::to_string(n) + " beyond order");
        }
        if (!first && n <= last) {
            throw std::invalid_argument("series text: exponents must be strictly increasing");
        }
        s[n] = detail::parse_coeff(value, static_cast<const C*>(nullptr));
        last = n;
        first = false;
    }
    if (!is.eof()) {
        throw std::invalid_argument("series text: malformed line");
    }
    return s;
}

template <typename C>
TruncSeries<C> from_text(const std::string& text)
{
    std::istringstream is(text);
    return read_text<C>(is);
}

// ---------------------------------------------------------------------------
// Named series

/// prod_{m=1}^{N} (1 - x^m) truncated at N.
IntSeries euler_product(std::size_t order);

/// sum over pent_sequence(N) of sign * x^exponent.
IntSeries pentagonal_series(std::size_t order);

/// sum_{m=1}^{N} m (x^m + x^{2m} + ...) truncated at N; coefficient n is sigma(n).
IntSeries lambert_sigma_series(std::size_t order);

/// prod over the given factor exponents of (1 - x^e), truncated at order.
IntSeries product_one_minus(std::size_t order, std::span<const std::size_t> exponents);

} // namespace pentagon
