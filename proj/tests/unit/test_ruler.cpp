#include "doctest.h"

#include "zeproc/ruler.hpp"

#include <numeric>

using namespace zeproc;

TEST_CASE("omega matches the listed sequence head") {
    // 0102010301020104 for n = 1..16
    const unsigned expected[] = {0, 1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0, 1, 0, 4};
    for (std::uint64_t n = 1; n <= 16; ++n) CHECK(omega_u64(n) == expected[n - 1]);
    CHECK(omega(BigInt(6)) == omega(BigInt(2)) + omega(BigInt(3)));
    CHECK_THROWS(omega_u64(0));
    CHECK_THROWS(omega(BigInt(0)));
}

TEST_CASE("omega identities over the small range") {
    for (std::uint64_t n = 1; n <= 1u << 8; ++n)
        for (std::uint64_t m = 1; m <= 1u << 8; ++m)
            REQUIRE(omega_u64(n * m) == omega_u64(n) + omega_u64(m));
    for (unsigned n = 1; n <= 8; ++n)
        for (std::uint64_t m = 1; m <= 32; ++m)
            for (std::uint64_t i = 1; i < (1u << n); ++i)
                REQUIRE(omega_u64((std::uint64_t(1) << n) * m + i) == omega_u64(i));
    std::uint64_t acc = 0;
    for (std::uint64_t j = 1; j <= 256; ++j) {
        acc += omega_u64(j);
        REQUIRE(omega_prefix_sum(BigInt(j)) == acc);
    }
    CHECK(omega_prefix_sum(BigInt(8)) == 7);
}

TEST_CASE("z coefficients") {
    auto pp = ProcessParams::preset("tiny2"); // b = (2)
    CHECK(z_coeff(0, 0, pp) == 0);
    CHECK(z_coeff(0, 4, pp) == 7); // 4 + (0+1+0+2)
    CHECK(pp.a(1) == 7);
    CHECK(z_coeff(1, 1, pp) == 7); // z_1(1) = a_1
    CHECK(z0(BigInt(4)) == 7);
    CHECK(z0(BigInt(8)) == 15);

    // split rule z_k(2^n m + i) = z_k(2^n m) + z_k(i), i < 2^n
    auto pp2 = ProcessParams::preset("tiny");
    for (std::size_t k = 0; k <= 2; ++k)
        for (unsigned n = 1; n <= 6; ++n)
            for (std::uint64_t m = 0; m <= 16; ++m)
                for (std::uint64_t i = 0; i < (1u << n); i += (n > 3 ? 3 : 1)) {
                    BigInt lhs = z_coeff(k, BigInt((std::uint64_t(1) << n) * m + i), pp2);
                    BigInt rhs = z_coeff(k, BigInt((std::uint64_t(1) << n) * m), pp2) +
                                 z_coeff(k, BigInt(i), pp2);
                    REQUIRE(lhs == rhs);
                }
    // level rule z_{k+l}(m) = z_k(m p(k,l))
    for (std::size_t k = 0; k <= 2; ++k)
        for (std::size_t l = 0; k + l <= 2; ++l)
            for (std::uint64_t m = 0; m <= 32; ++m)
                REQUIRE(z_coeff(k + l, BigInt(m), pp2) ==
                        z_coeff(k, BigInt(m) * pp2.p(k, l), pp2));
}

TEST_CASE("p products") {
    auto pp = ProcessParams::preset("tiny");
    CHECK(pp.p(0, 0) == 1);
    CHECK(pp.p(1, 0) == 1);
    CHECK(pp.p(0, 1) == 4);  // 2 b_1
    CHECK(pp.p(0, 2) == 32); // (2*2)(2*4)
    CHECK(pp.p(1, 1) == 8);
    CHECK_THROWS(pp.p(1, 2));
}

TEST_CASE("skeleton prefix and index lookup") {
    CHECK(skeleton_prefix(0) == "");
    CHECK(skeleton_prefix(16) == "1101100110110001");
    std::string w = skeleton_prefix(16);
    std::vector<std::size_t> ones;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == '1') ones.push_back(i);
    CHECK(ones == std::vector<std::size_t>{0, 1, 3, 4, 7, 8, 10, 11, 15});

    for (BigInt i = 0; i < 200; ++i) {
        auto back = skeleton_index_at(z0(i));
        REQUIRE(back.has_value());
        REQUIRE(*back == i);
    }
    CHECK(!skeleton_index_at(BigInt(2)).has_value());
    CHECK(skeleton_index_ceil(BigInt(2)) == 2); // z_0(2) = 3 >= 2

    // prefix up to z_0(2^n) holds exactly 2^n ones
    for (unsigned n = 0; n <= 10; ++n) {
        std::string p = skeleton_prefix(static_cast<std::size_t>(z0(BigInt(1) << n)));
        CHECK(std::count(p.begin(), p.end(), '1') == (1 << n));
    }
}

TEST_CASE("nonoverlapping property") {
    CHECK(nonoverlap_check(1, 2));
    CHECK(nonoverlap_check(4, 64));
    CHECK(nonoverlap_check(8, 256));
    for (std::size_t n = 1; n <= 32; ++n) CHECK(nonoverlap_check(n, 1 << 12));
    CHECK_THROWS(nonoverlap_check(0, 4));
    CHECK_THROWS(nonoverlap_check(5, 4));
}
