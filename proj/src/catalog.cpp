#include <pentagon/catalog.hpp>

#include <algorithm>
#include <future>

#include <pentagon/arithfuncs.hpp>
#include <pentagon/identities.hpp>
#include <pentagon/proof.hpp>

namespace pentagon {

namespace {

CatalogEntry univariate(std::string name, std::size_t degree, IdentityReport (*fn)(std::size_t))
{
    return CatalogEntry{std::move(name), degree, std::nullopt, [fn](std::size_t d, std::size_t) { return fn(d); }};
}

CatalogEntry bivariate(std::string name, std::size_t degree, std::size_t zdegree,
                       IdentityReport (*fn)(std::size_t, std::size_t))
{
    return CatalogEntry{std::move(name), degree, zdegree, [fn](std::size_t d, std::size_t z) { return fn(d, z); }};
}

} // namespace

const std::vector<CatalogEntry>& identity_catalog()
{
    static const std::vector<CatalogEntry> catalog{
        univariate("pentagonal", 10000, check_pentagonal),
        univariate("lemma", 200, check_lemma),
        bivariate("proof", 500, 25, check_proof),
        univariate("s-expansion", 500, check_s_expansion),
        bivariate("qbinomial-plus", 40, 8, check_qbinomial_plus),
        bivariate("qbinomial-inv", 40, 8, check_qbinomial_inv),
        univariate("goldbach-cb", 500, check_goldbach_cb),
        univariate("half-integer", 500, check_half_integer),
        bivariate("jacobi-triple", 200, 14, check_jacobi_triple),
        univariate("jtp-specialization", 1000, check_jtp_specialization),
        univariate("cube", 2000, check_cube),
        bivariate("andrews", 60, 60, check_andrews),
        univariate("sigma-lambert", 1000, check_sigma_lambert),
    };
    return catalog;
}

const CatalogEntry* find_identity(const std::string& name)
{
    const auto& c = identity_catalog();
    const auto it = std::find_if(c.begin(), c.end(), [&](const CatalogEntry& e) { return e.name == name; });
    return it == c.end() ? nullptr : &*it;
}

IdentityReport run_identity(const CatalogEntry& entry, std::optional<std::size_t> degree,
                            std::optional<std::size_t> zdegree)
{
    return entry.run(degree.value_or(entry.default_degree), zdegree.value_or(entry.default_zdegree.value_or(0)));
}

std::vector<IdentityReport> run_all_identities(std::optional<std::size_t> degree, std::optional<std::size_t> zdegree,
                                               unsigned jobs)
{
    const auto& c = identity_catalog();
    std::vector<IdentityReport> out(c.size());
    jobs = std::max(1u, jobs);
    for (std::size_t start = 0; start < c.size(); start += jobs) {
        std::vector<std::future<IdentityReport>> batch;
        const std::size_t stop = std::min(c.size(), start + jobs);
        for (std::size_t i = start; i < stop; ++i) {
            batch.push_back(std::async(std::launch::async, [&, i] { return run_identity(c[i], degree, zdegree); }));
        }
        for (std::size_t i = start; i < stop; ++i) {
            out[i] = batch[i - start].get();
        }
    }
    return out;
}

} // namespace pentagon
