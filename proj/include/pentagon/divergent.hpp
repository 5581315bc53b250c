#pragma once

// Summation of the divergent pentagonal power series: the exact Euler
// transform by forward differences, its partial-mean form, period
// cancellation at roots of unity, and radial (Abel) evaluation near the unit
// circle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace pentagon {

// ---------------------------------------------------------------------------
// Exact backend

/// rows[0] is the input; rows[d + 1][i] = rows[d][i + 1] - rows[d][i].
struct DifferenceTable {
    std::vector<std::vector<mpq_class>> rows;
    /// Depth of the first all-zero row, when one was reached.
    std::optional<std::size_t> terminal_depth;
};

/// Builds difference rows until an all-zero row or max_depth rows past the
/// input. Needs at least two terms.
DifferenceTable difference_table(std::span<const mpq_class> terms, std::size_t max_depth);

enum class ValueKind { exact, numeric };
enum class SummationMethod { euler_transform, rademacher, abel_radial };

std::string to_string(SummationMethod m);

struct RegularizedValue {
    ValueKind kind = ValueKind::exact;
    SummationMethod method = SummationMethod::euler_transform;
    /// Exact value (exact kind) or the exact partial sum behind a numeric one.
    std::optional<mpq_class> exact;
    double value = 0.0;
    double error_estimate = 0.0;

    static RegularizedValue make_exact(mpq_class v, SummationMethod m);
};

/// Thrown when the difference table has no zero row within the supplied terms.
class NonTerminatingTable : public std::runtime_error {
public:
    NonTerminatingTable(std::size_t depth, std::vector<mpq_class> deepest_row);

    std::size_t depth() const noexcept { return depth_; }
    const std::vector<mpq_class>& deepest_row() const noexcept { return deepest_; }

private:
    std::size_t depth_;
    std::vector<mpq_class> deepest_;
};

/// t_0 - t_1 + t_2 - ... = sum_{d<D} (-1)^d (Delta^d t)_0 / 2^{d+1}, where D
/// is the depth of the first zero difference row.
RegularizedValue euler_transform_sum(std::span<const mpq_class> terms);

struct PowerSum {
    unsigned lambda = 0;
    /// -1^l + 5^l - 12^l + 22^l - ... (exponents g_k, k >= 1, with sign (-1)^k).
    mpq_class s;
    /// -2^l + 7^l - 15^l + 26^l - ... (exponents g_{-k}).
    mpq_class t;
    /// s + t, plus the constant term 1 when lambda = 0.
    mpq_class total;
};

/// Splits sum_{k != 0} (-1)^k g_k^lambda into its two branches and sums each
/// with the exact transform. Throws std::logic_error if the total is not 0.
PowerSum pentagonal_power_sum(unsigned lambda);

/// sum_{m=0}^{n} 2^{-(m+1)} sum_{i<=m} C(m, i) a_i, evaluated exactly.
/// Needs a.size() > n. The error estimate is the distance to the exact
/// transform of (-1)^i a_i when that terminates on the supplied terms, and
/// the magnitude of the last mean otherwise.
RegularizedValue rademacher_sum(std::span<const mpq_class> a, std::size_t n);

// ---------------------------------------------------------------------------
// Roots of unity

/// One integer per residue class mod n: an element of Z[zeta_n] written in
/// the basis 1, zeta, ..., zeta^{n-1} without reduction.
class ResidueVector {
public:
    explicit ResidueVector(std::uint64_t modulus);

    std::uint64_t modulus() const noexcept { return coeffs_.size(); }
    std::int64_t operator[](std::uint64_t r) const { return coeffs_.at(r); }

    /// Adds sign * zeta^exponent.
    void add_power(std::uint64_t exponent, std::int64_t sign);
    ResidueVector& operator+=(const ResidueVector& o);

    bool is_zero() const;
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const ResidueVector&, const ResidueVector&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

struct PeriodReport {
    std::uint64_t modulus = 0;
    std::uint64_t search_bound = 0;
    bool found = false;
    std::uint64_t period_length = 0;
    std::uint64_t offset = 0;
    ResidueVector period_sum{1};
    /// Signs of one period, for display.
    std::vector<int> pattern_signs;
    std::vector<std::uint64_t> pattern_residues;

    bool zero_sum() const { return found && period_sum.is_zero(); }
};

/// Maps the pentagonal terms (ascending exponents) to sign * zeta^{g mod n}
/// over search_bound terms and finds the shortest period (with the smallest
/// offset for that length) that repeats through the whole window.
PeriodReport residue_period_check(std::uint64_t n, std::uint64_t search_bound);

// ---------------------------------------------------------------------------
// Numeric radial backend

/// Radii rho_j = 1 - 2^{-j} for j = first..last.
struct RadiusSchedule {
    int first = 3;
    int last = 12;

    std::vector<int> exponents() const;
};

struct ResidueSumOptions {
    RadiusSchedule schedule{3, 12};
    /// Bound on the discarded tail of each truncated sum.
    double tail_tolerance = 1e-12;
    /// Zero-assertion threshold on the extrapolated limit.
    double tolerance = 1e-4;
    /// Richardson elimination levels (h^1, h^2, ...).
    int richardson_levels = 2;
    unsigned precision_bits = 256;
};

struct RadialSample {
    int j = 0;
    double rho = 0.0;
    double value = 0.0;
};

struct ResidueSumReport {
    std::uint64_t modulus = 0;
    std::uint64_t residue = 0;
    unsigned lambda = 0;
    RegularizedValue limit;
    std::vector<RadialSample> trace;
    bool passed = false;
};

/// F(rho) = sum_{g = r mod n} sign * g^lambda * rho^g over the pentagonal
/// terms, evaluated along the schedule and extrapolated to rho -> 1.
ResidueSumReport residue_class_power_sum(std::uint64_t n, std::uint64_t r, unsigned lambda,
                                         const ResidueSumOptions& opts = {});

/// One residue-class value F(rho) at rho = 1 - 2^{-j}.
double residue_class_value(std::uint64_t n, std::uint64_t r, unsigned lambda, int j, double tail_tolerance,
                           unsigned precision_bits);

struct RadialPoint {
    double rho = 0.0;
    /// log10 |theta^lambda P(rho zeta)|; -inf for an exact zero.
    double log10_magnitude = 0.0;
    /// |.| in scientific notation, exact to the printed digits even far below
    /// the double range.
    std::string magnitude;
};

struct RadialReport {
    std::uint64_t modulus = 0;
    std::uint64_t root_index = 0;
    unsigned lambda = 0;
    std::vector<RadialPoint> points;

    /// Strictly decreasing over the whole schedule.
    bool strictly_decreasing() const;
    /// First index from which the magnitudes decrease strictly to the end.
    std::size_t decreasing_from() const;
};

/// |theta^lambda P(rho zeta)| with zeta = exp(2 pi i j / n), evaluated at
/// rho given exactly. Working precision grows with 1 / (1 - rho) so that the
/// value is resolved even when it is astronomically small; the truncated
/// tail stays below the working precision.
RadialPoint radial_theta_point(std::uint64_t n, std::uint64_t j, unsigned lambda, const mpq_class& rho);

RadialReport radial_theta_limit(std::uint64_t n, std::uint64_t j, unsigned lambda,
                                const RadiusSchedule& schedule = {3, 12});

// ---------------------------------------------------------------------------
// JSON

nlohmann::json rational_json(const mpq_class& q);
mpq_class rational_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const DifferenceTable& t);
void from_json(const nlohmann::json& j, DifferenceTable& t);
void to_json(nlohmann::json& j, const RegularizedValue& v);
void from_json(const nlohmann::json& j, RegularizedValue& v);
void to_json(nlohmann::json& j, const PowerSum& p);
void to_json(nlohmann::json& j, const PeriodReport& p);
void to_json(nlohmann::json& j, const ResidueSumReport& r);
void to_json(nlohmann::json& j, const RadialReport& r);

} // namespace pentagon
