#include <doctest.h>

#include <algorithm>
#include <set>

#include <pentagon/pentagonal.hpp>

#include "test_util.hpp"

using namespace pentagon;

TEST_CASE("gpent small values")
{
    CHECK(gpent(1) == 1);
    CHECK(gpent(-1) == 2);
    CHECK(gpent(2) == 5);
    CHECK(gpent(-2) == 7);
    CHECK(gpent(0) == 0);
    CHECK(gpent(7) == 70);
    CHECK(gpent(-7) == 77);
}

TEST_CASE("gpent agrees with the arbitrary precision overload")
{
    for (int i = 0; i < 500; ++i) {
        const auto k = testutil::uniform(-kMaxIndex, kMaxIndex);
        CHECK(mpz_class(std::to_string(gpent(k))) == gpent(mpz_class(static_cast<long>(k))));
    }
    CHECK(gpent(kMaxIndex) == 6917529026567340032ULL);
    CHECK_THROWS_AS(gpent(kMaxIndex + 1), std::out_of_range);
    const mpz_class big("100000000000000000000");
    CHECK(gpent(big) == big * (3 * big - 1) / 2);
}

TEST_CASE("PentTerm invariants")
{
    for (std::int64_t k = -300; k <= 300; ++k) {
        const auto t = PentTerm::at(k);
        CHECK(t.k == k);
        CHECK(2 * t.exponent == static_cast<std::uint64_t>(k * (3 * k - 1)));
        CHECK((t.sign == 1) == (k % 2 == 0));
        CHECK((t.exponent == 0) == (k == 0));
    }
}

TEST_CASE("pent_sequence examples")
{
    const auto s7 = pent_sequence(7);
    std::vector<std::uint64_t> e;
    std::vector<int> sg;
    for (const auto& t : s7) {
        e.push_back(t.exponent);
        sg.push_back(t.sign);
    }
    CHECK(e == std::vector<std::uint64_t>{0, 1, 2, 5, 7});
    CHECK(sg == std::vector<int>{1, -1, -1, 1, 1});

    const auto s0 = pent_sequence(0);
    REQUIRE(s0.size() == 1);
    CHECK(s0[0].k == 0);

    const auto s145 = pent_sequence(145);
    REQUIRE(s145.size() >= 3);
    CHECK(s145[s145.size() - 3].exponent == 117);
    CHECK(s145[s145.size() - 2].exponent == 126);
    CHECK(s145.back().exponent == 145);
    std::vector<std::uint64_t> diffs;
    for (std::size_t i = 2; i < s145.size(); ++i) {
        diffs.push_back(s145[i].exponent - s145[i - 1].exponent);
    }
    CHECK(diffs == std::vector<std::uint64_t>{1, 3, 2, 5, 3, 7, 4, 9, 5, 11, 6, 13, 7, 15, 8, 17, 9, 19});
}

TEST_CASE("pent_sequence matches a brute-force scan")
{
    for (std::uint64_t n : {0u, 1u, 2u, 3u, 5u, 6u, 7u, 100u, 1000u, 4321u}) {
        std::vector<std::uint64_t> brute;
        for (std::int64_t k = -100; k <= 100; ++k) {
            const auto g = static_cast<std::uint64_t>(k * (3 * k - 1) / 2);
            if (g <= n) {
                brute.push_back(g);
            }
        }
        std::sort(brute.begin(), brute.end());
        const auto seq = pent_sequence(n);
        std::vector<std::uint64_t> got;
        for (const auto& t : seq) {
            got.push_back(t.exponent);
        }
        CHECK(got == brute);
        CHECK(pent_term_count(n) == brute.size());
    }
}

TEST_CASE("pent_term_count agrees with the branch counts near boundaries")
{
    for (int i = 0; i < 300; ++i) {
        const auto k = testutil::uniform(1, 2000000);
        for (std::int64_t delta : {-1, 0, 1}) {
            const auto n = static_cast<std::uint64_t>(k * (3 * k - 1) / 2 + delta);
            std::uint64_t pos = 0;
            while (static_cast<std::uint64_t>((pos + 1) * (3 * (pos + 1) - 1) / 2) <= n) {
                ++pos;
            }
            std::uint64_t neg = 0;
            while (static_cast<std::uint64_t>((neg + 1) * (3 * (neg + 1) + 1) / 2) <= n) {
                ++neg;
            }
            CHECK(pent_term_count(n) == pos + neg + 1);
        }
    }
}

TEST_CASE("triangular")
{
    CHECK(triangular(5) == 15);
    CHECK(triangular(0) == 0);
    for (std::uint64_t k = 1; k <= 1000; ++k) {
        CHECK(3 * gpent(static_cast<std::int64_t>(k)) == triangular(3 * k - 1));
        CHECK(3 * gpent(-static_cast<std::int64_t>(k)) == triangular(3 * k));
    }
}

TEST_CASE("gpent(-k) - gpent(k) = k")
{
    for (int i = 0; i < 1000; ++i) {
        const auto k = testutil::uniform(1, kMaxIndex);
        CHECK(gpent(-k) - gpent(k) == static_cast<std::uint64_t>(k));
    }
}

TEST_CASE("merged differences alternate odd and natural numbers")
{
    std::uint64_t prev = 0;
    for (std::uint64_t t = 1; t <= 400; ++t) {
        const auto e = gpent(index_of_position(t));
        const auto d = e - prev;
        const auto i = (t + 1) / 2;
        CHECK(d == (t % 2 == 1 ? 2 * i - 1 : i));
        prev = e;
    }
}

TEST_CASE("exponents are distinct")
{
    std::set<std::uint64_t> seen;
    for (std::int64_t k = -5000; k <= 5000; ++k) {
        CHECK(seen.insert(gpent(k)).second);
    }
}

TEST_CASE("recurrence_offsets")
{
    const auto r = recurrence_offsets(12);
    std::vector<std::pair<std::uint64_t, int>> want{{1, 1}, {2, 1}, {5, -1}, {7, -1}, {12, 1}};
    CHECK(r == want);
    CHECK(recurrence_offsets(0).empty());
}
