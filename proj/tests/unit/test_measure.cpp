#include "doctest.h"

#include "zeproc/family.hpp"
#include "zeproc/measure.hpp"
#include "zeproc/ruler.hpp"
#include "zeproc/sampler.hpp"
#include "zeproc/word.hpp"

#include <map>
#include <random>
#include <set>

using namespace zeproc;

TEST_CASE("occurrence progressions of short words") {
    auto p11 = occurrence_progression("11");
    CHECK(!p11.empty);
    CHECK(p11.gap == 2);
    CHECK(p11.least == 0);

    auto p1 = occurrence_progression("1");
    CHECK(p1.gap == 1); // direct intersection: no binding constraint
    CHECK(p1.least == 0);

    auto p10 = occurrence_progression("10");
    CHECK(p10.gap == 2);
    CHECK(p10.least == 1);
    CHECK(p10.xi(0) == 1); // z_0(1) - 0

    CHECK_THROWS(occurrence_progression("000"));
    CHECK_THROWS(occurrence_progression(""));

    auto p111 = occurrence_progression("111");
    CHECK(p111.empty); // gaps 0,0 demand i even and i odd at once
}

TEST_CASE("xi respects the split rule") {
    auto p = occurrence_progression("1102200");
    CHECK(p.gap == 4);
    CHECK(p.least == 0);
    for (std::uint64_t n = 0; n < 20; ++n)
        CHECK(p.xi(n) == z0(BigInt(n) * p.gap) + z0(p.least));
}

TEST_CASE("nu engine against enumeration counts") {
    auto pp = ProcessParams::preset("tiny2");
    auto fam = enumerate_family(1, pp);
    // nu(["11"]) = 1/4: one of four words starts with 11
    CHECK(nu_cylinder("11", 0, pp) == Dyadic::pow2(-2));
    // T^2 nu(["1"]) = 0: w_2 = 0
    CHECK(nu_cylinder("1", 2, pp) == Dyadic(0));
    // class {0,3} forces x_3 = negate(x_0)
    CHECK(nu_cylinder("1101", 0, pp) == Dyadic(0));
    int count = 0;
    for (const auto& u : fam)
        if (u.substr(0, 4) == "1102") ++count;
    CHECK(count == 1);
    CHECK(nu_cylinder("1102", 0, pp) == Dyadic::pow2(-2));

    // exact match against enumeration on all prefix lengths at b=(2,4)
    auto pp2 = ProcessParams::preset("tiny");
    auto a2 = enumerate_family(2, pp2);
    for (std::size_t len : {1u, 2u, 5u, 17u, 40u, 63u}) {
        std::map<std::string, int> counts;
        for (const auto& u : a2) ++counts[u.substr(0, len)];
        Dyadic total(0);
        for (const auto& [v, c] : counts) {
            Dyadic nu = nu_cylinder(v, 0, pp2);
            CHECK(nu == Dyadic(BigInt(c)) * Dyadic::pow2(-8));
            total = total + nu;
        }
        CHECK(total == Dyadic(1));
    }
}

TEST_CASE("theta values") {
    auto pp = ProcessParams::preset("tiny2");
    CHECK(theta("11", pp) == Dyadic::pow2(-2));
    for (const auto& u : enumerate_family(1, pp))
        CHECK(theta(u, pp) == Dyadic::pow2(-2)); // 1/#A_1
    CHECK(theta("000", pp) == Dyadic(1));
    CHECK_THROWS(theta("111", pp));
}

TEST_CASE("mu closed form") {
    auto pp = ProcessParams::preset("tiny2");
    CHECK(mu_cylinder("1", pp) == Dyadic::pow2(-2));
    CHECK(mu_cylinder("11", pp) == Dyadic::pow2(-4));
    Dyadic total = mu_cylinder("1", pp) + mu_cylinder("2", pp) + mu_zero_run(1);
    CHECK(total == Dyadic(1));
    CHECK(mu_zero_run(0) == Dyadic(1));
    CHECK(mu_zero_run(1) == Dyadic::pow2(-1));
    CHECK(mu_zero_run(3) == Dyadic::pow2(-3));
    CHECK(mu_cylinder("111", pp) == Dyadic(0));
    CHECK_THROWS(mu_cylinder("00", pp));

    auto cm = analyze_word("1101", pp);
    CHECK(cm.status == WordStatus::class_inconsistent);
    auto cm2 = analyze_word("111", pp);
    CHECK(cm2.status == WordStatus::empty_progression);
}

TEST_CASE("mu of words with leading zeros") {
    auto pp = ProcessParams::preset("tiny2");
    // [0] splits into [00], [01], [02]
    CHECK(mu_cylinder("01", pp) == Dyadic::pow2(-3));
    CHECK(mu_cylinder("02", pp) == Dyadic::pow2(-3));
    CHECK(mu_zero_run(2) + mu_cylinder("01", pp) + mu_cylinder("02", pp) == mu_zero_run(1));
    CHECK(mu_cylinder("0001", pp) == Dyadic::pow2(-5));
}

TEST_CASE("mu additivity on random words") {
    auto pp = ProcessParams::preset("tiny");
    std::mt19937_64 rng(77);
    auto mu_any = [&](const std::string& u) {
        return all_zero(u) ? mu_zero_run(u.size()) : mu_cylinder(u, pp);
    };
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t len = 1 + rng() % 12;
        std::string u;
        for (std::size_t j = 0; j < len; ++j) u.push_back("012"[rng() % 3]);
        Dyadic sum(0);
        for (char c : std::string("012")) sum = sum + mu_any(u + c);
        CHECK(sum == mu_any(u));
    }
}

TEST_CASE("theta is monotone under subwords") {
    auto pp = ProcessParams::preset("tiny");
    auto x = sample_point(pp, 63, 4242ull);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t len = 2 + rng() % 20;
        std::size_t start = rng() % (63 - len);
        std::size_t sublen = 1 + rng() % (len - 1);
        std::size_t suboff = rng() % (len - sublen + 1);
        std::string u = x.prefix.substr(start, len);
        std::string v = u.substr(suboff, sublen);
        auto au = analyze_word(u, pp);
        auto av = analyze_word(v, pp);
        REQUIRE(au.status == WordStatus::in_language);
        REQUIRE(av.status == WordStatus::in_language);
        CHECK(au.theta <= av.theta);
    }
    // theta along prefixes: non-increasing, pinned at family scales
    Dyadic prev = Dyadic(1);
    for (std::size_t n = 1; n <= 63; ++n) {
        Dyadic th = theta(x.prefix.substr(0, n), pp);
        CHECK(th <= prev);
        prev = th;
    }
    CHECK(theta(x.prefix.substr(0, 7), pp) == Dyadic::pow2(-2));   // 1/#A_1
    CHECK(theta(x.prefix.substr(0, 63), pp) == Dyadic::pow2(-8));  // 1/#A_2
}

TEST_CASE("nu invariance") {
    auto pp = ProcessParams::preset("tiny");
    CHECK(nu_invariance_check(0, 0, pp));
    CHECK(nu_invariance_check(1, 1, pp));
    CHECK(nu_invariance_check(2, 3, pp));
    for (unsigned n = 0; n <= 2; ++n)
        for (std::uint64_t m = 0; m <= 4; ++m) CHECK(nu_invariance_check(n, m, pp));
}

TEST_CASE("deep shifts keep exact values") {
    auto pp = ProcessParams::preset("tiny2");
    // 0^{11}1 anchors at index 2^11, far beyond a_1; one class only
    CHECK(mu_cylinder(std::string(11, '0') + "1", pp) == Dyadic::pow2(-13));
    // windows beyond a_K: nu at deep block-aligned shifts still matches nu at 0
    auto fam = enumerate_family(1, pp);
    for (const auto& u : fam) {
        CHECK(nu_cylinder(u, z_coeff(1, 5, pp), pp) == nu_cylinder(u, 0, pp));
        CHECK(nu_cylinder(u, z_coeff(1, 1000000, pp), pp) == nu_cylinder(u, 0, pp));
    }
}
