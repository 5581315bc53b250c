#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <pentagon/report.hpp>

namespace pentagon {

/// A named identity check with its default truncation box. Bivariate checks
/// (and the proof runner, whose second parameter is the step count) take a
/// second size.
struct CatalogEntry {
    std::string name;
    std::size_t default_degree = 0;
    std::optional<std::size_t> default_zdegree;
    std::function<IdentityReport(std::size_t degree, std::size_t zdegree)> run;
};

const std::vector<CatalogEntry>& identity_catalog();

/// nullptr when the name is not registered.
const CatalogEntry* find_identity(const std::string& name);

/// Runs one entry, filling unspecified sizes from its defaults.
IdentityReport run_identity(const CatalogEntry& entry, std::optional<std::size_t> degree,
                            std::optional<std::size_t> zdegree);

/// Runs every entry, at most `jobs` at a time; results keep catalog order.
std::vector<IdentityReport> run_all_identities(std::optional<std::size_t> degree, std::optional<std::size_t> zdegree,
                                               unsigned jobs);

} // namespace pentagon
