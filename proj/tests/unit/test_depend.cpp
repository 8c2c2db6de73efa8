#include "doctest.h"

#include "zeproc/depend.hpp"
#include "zeproc/family.hpp"
#include "zeproc/ruler.hpp"
#include "zeproc/sampler.hpp"
#include "zeproc/word.hpp"

#include <map>
#include <random>
#include <set>

using namespace zeproc;

TEST_CASE("direct dependency at b=(2)") {
    auto pp = ProcessParams::preset("tiny2");
    // Q cap [0,7) = {0,1,3,4}, (a_1 - 1)/2 = 3
    CHECK(direct_dependent(0, 3, pp));
    CHECK(direct_dependent(1, 4, pp));
    CHECK(!direct_dependent(0, 1, pp));
    CHECK(!direct_dependent(0, 2, pp)); // 2 off the skeleton
    CHECK(!direct_dependent(3, 3, pp)); // non-reflexive
}

TEST_CASE("class ids at b=(2)") {
    auto pp = ProcessParams::preset("tiny2");
    auto c0 = class_of(0, pp);
    auto c3 = class_of(3, pp);
    auto c1 = class_of(1, pp);
    CHECK(c0.same_class(c3));
    CHECK(((c0.parity ^ c3.parity) & 1) == 1);
    CHECK(!c0.same_class(c1));
    CHECK_THROWS(class_of(2, pp)); // w_2 = 0

    // z_0(b_1) reduces onto class 0 with flipped parity
    auto cb = class_of(z0(pp.b(1)), pp);
    CHECK(cb.same_class(c0));
    CHECK(((cb.parity ^ c0.parity) & 1) == 1);
}

TEST_CASE("class counting") {
    auto pp = ProcessParams::preset("tiny2");
    CHECK(d_count_interval(0, 7, pp) == 2); // p(0,1)/2
    std::vector<BigInt> just5 = {BigInt(5)};
    CHECK(d_count(just5, pp) == 0);
    std::vector<BigInt> firsttwo = {BigInt(0), BigInt(1)};
    CHECK(d_count(firsttwo, pp) == 2);
}

TEST_CASE("interval class counts follow the per-level formula") {
    auto pp = ProcessParams::preset("tiny");
    for (std::size_t k = 0; k <= 2; ++k)
        for (std::uint64_t m = 0; m < 20; ++m) {
            BigInt lo = z_coeff(k, m, pp), hi = z_coeff(k, m + 1, pp);
            CHECK(d_count_interval(lo, hi, pp) == (pp.p(0, k) >> unsigned(k)));
        }
}

TEST_CASE("interval counting agrees with direct class enumeration") {
    auto pp3 = ProcessParams::from_b({2, 2, 2});
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint64_t lo = rng() % 120, len = rng() % 60;
        std::vector<BigInt> pts;
        for (std::uint64_t p = lo; p < lo + len; ++p) pts.push_back(BigInt(p));
        CHECK(d_count_interval(lo, lo + len, pp3) == d_count(pts, pp3));
    }
}

TEST_CASE("classes equal the union-find closure of direct dependency") {
    auto pp = ProcessParams::preset("tiny");
    std::vector<BigInt> q;
    for (BigInt i = 0; z0(i) < pp.a(2); ++i) q.push_back(z0(i));
    std::vector<std::size_t> parent(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t x = 0; x < q.size(); ++x)
        for (std::size_t y = x + 1; y < q.size(); ++y)
            if (direct_dependent(q[x], q[y], pp)) parent[find(x)] = find(y);
    for (std::size_t x = 0; x < q.size(); ++x)
        for (std::size_t y = x + 1; y < q.size(); ++y)
            CHECK((find(x) == find(y)) == class_of(q[x], pp).same_class(class_of(q[y], pp)));
}

TEST_CASE("class members sit b_{k+1} blocks apart") {
    auto pp = ProcessParams::preset("tiny");
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        BigInt i = BigInt(rng() % 32);
        // random class sibling of i: flip a few alpha digits
        BigInt j = i;
        for (std::size_t t = 0; t < pp.depth(); ++t) {
            if (!(rng() & 1)) continue;
            std::uint64_t b = std::uint64_t(1) << pp.log2_b(t + 1);
            std::uint64_t digit = ((j >> pp.log2_p(0, t)) % (2 * b)).convert_to<std::uint64_t>();
            if (digit < b)
                j += BigInt(b) << pp.log2_p(0, t);
            else
                j -= BigInt(b) << pp.log2_p(0, t);
        }
        REQUIRE(class_of_index(i, pp).same_class(class_of_index(j, pp)));
        for (std::size_t k = 0; k < pp.depth(); ++k) {
            BigInt mi = i >> pp.log2_p(0, k), mj = j >> pp.log2_p(0, k);
            BigInt diff = mi > mj ? mi - mj : mj - mi;
            CHECK(diff % pp.b(k + 1) == 0);
        }
    }
}

TEST_CASE("entropy oracle equals class count") {
    auto pp = ProcessParams::preset("tiny");
    std::vector<BigInt> window;
    for (int i = 0; i < 7; ++i) window.push_back(BigInt(i));
    CHECK(partition_entropy_oracle(window, pp) == 2.0);
    std::vector<BigInt> two = {BigInt(2)};
    CHECK(partition_entropy_oracle(two, pp) == 0.0);
    std::vector<BigInt> zero = {BigInt(0)};
    CHECK(partition_entropy_oracle(zero, pp) == 1.0);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<BigInt> I;
        std::size_t sz = 1 + rng() % 8;
        for (std::size_t j = 0; j < sz; ++j) I.push_back(BigInt(rng() % 63));
        CHECK(partition_entropy_oracle(I, pp) == d_count(I, pp).convert_to<double>());
    }
}

TEST_CASE("sampled symbols respect class parity") {
    auto pp = ProcessParams::preset("tiny");
    auto x = sample_point(pp, 63, 1234ull);
    std::vector<BigInt> q;
    for (BigInt i = 0; z0(i) < 63; ++i) q.push_back(z0(i));
    for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = a + 1; b < q.size(); ++b) {
            auto ca = class_of(q[a], pp), cb = class_of(q[b], pp);
            if (!ca.same_class(cb)) continue;
            char sa = x.prefix[q[a].convert_to<std::size_t>()];
            char sb = x.prefix[q[b].convert_to<std::size_t>()];
            CHECK(sb == (((ca.parity ^ cb.parity) & 1) ? negate_symbol(sa) : sa));
        }
}
