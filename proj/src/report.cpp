#include <pentagon/report.hpp>

#include <algorithm>
#include <stdexcept>

namespace pentagon {

IdentityReport compare_series(std::string identity, std::vector<std::int64_t> box, const IntSeries& lhs,
                              const IntSeries& rhs)
{
    IdentityReport r{std::move(identity), std::move(box), true, std::nullopt};
    const std::size_t n_max = std::min(lhs.order(), rhs.order());
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (lhs[n] != rhs[n]) {
            r.verified = false;
            r.discrepancy = Discrepancy{{static_cast<std::int64_t>(n)}, lhs[n].get_str(), rhs[n].get_str()};
            break;
        }
    }
    return r;
}

IdentityReport compare_bi_series(std::string identity, std::vector<std::int64_t> box, const BiSeries& lhs,
                                 const BiSeries& rhs, std::size_t q_order, std::int64_t z_min,
                                 std::int64_t z_max)
{
    IdentityReport r{std::move(identity), std::move(box), true, std::nullopt};
    for (std::size_t q = 0; q <= q_order; ++q) {
        for (std::int64_t z = z_min; z <= z_max; ++z) {
            const auto a = lhs.coeff(q, z);
            const auto b = rhs.coeff(q, z);
            if (a != b) {
                r.verified = false;
                r.discrepancy = Discrepancy{{static_cast<std::int64_t>(q), z}, a.get_str(), b.get_str()};
                return r;
            }
        }
    }
    return r;
}

void merge_into(IdentityReport& into, const IdentityReport& part)
{
    if (into.verified && !part.verified) {
        into.verified = false;
        into.discrepancy = part.discrepancy;
    }
}

void to_json(nlohmann::json& j, const IdentityReport& r)
{
    j = nlohmann::json{{"identity", r.identity}, {"box", r.box}, {"verified", r.verified}};
    if (r.discrepancy) {
        j["discrepancy"] = {{"exponent", r.discrepancy->exponent},
                            {"lhs", r.discrepancy->lhs},
                            {"rhs", r.discrepancy->rhs}};
    } else {
        j["discrepancy"] = nullptr;
    }
}

void from_json(const nlohmann::json& j, IdentityReport& r)
{
    r.identity = j.at("identity").get<std::string>();
    r.box = j.at("box").get<std::vector<std::int64_t>>();
    r.verified = j.at("verified").get<bool>();
    const auto& d = j.at("discrepancy");
    if (d.is_null()) {
        r.discrepancy.reset();
    } else {
        r.discrepancy = Discrepancy{d.at("exponent").get<std::vector<std::int64_t>>(),
                                    d.at("lhs").get<std::string>(), d.at("rhs").get<std::string>()};
    }
    if (r.verified != !r.discrepancy.has_value()) {
        throw std::invalid_argument("IdentityReport: verified flag disagrees with discrepancy");
    }
}

} // namespace pentagon
