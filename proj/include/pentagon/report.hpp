#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <pentagon/bi_series.hpp>
#include <pentagon/series.hpp>

namespace pentagon {

struct Discrepancy {
    std::vector<std::int64_t> exponent;
    std::string lhs;
    std::string rhs;

    friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

/// Outcome of one coefficientwise identity check. verified holds exactly
/// when discrepancy is empty; the witness is the first mismatch in
/// ascending exponent order.
struct IdentityReport {
    std::string identity;
    std::vector<std::int64_t> box;
    bool verified = true;
    std::optional<Discrepancy> discrepancy;

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// Compares two univariate series up to the smaller truncation order.
IdentityReport compare_series(std::string identity, std::vector<std::int64_t> box, const IntSeries& lhs,
                              const IntSeries& rhs);

/// Compares two bivariate series over q <= q_order and z in [z_min, z_max].
IdentityReport compare_bi_series(std::string identity, std::vector<std::int64_t> box, const BiSeries& lhs,
                                 const BiSeries& rhs, std::size_t q_order, std::int64_t z_min,
                                 std::int64_t z_max);

/// Folds a sub-check into a report: the first failing part supplies the witness.
void merge_into(IdentityReport& into, const IdentityReport& part);

void to_json(nlohmann::json& j, const IdentityReport& r);
void from_json(const nlohmann::json& j, IdentityReport& r);

} // namespace pentagon
