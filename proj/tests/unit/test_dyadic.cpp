#include "doctest.h"

#include "zeproc/dyadic.hpp"

using namespace zeproc;

TEST_CASE("dyadic canonical arithmetic") {
    Dyadic half = Dyadic::pow2(-1);
    Dyadic quarter = Dyadic::pow2(-2);
    CHECK(half + quarter + quarter == Dyadic(1));
    CHECK((half * half) == quarter);
    CHECK((Dyadic(3) * quarter).to_fraction_string() == "3/2^2");
    CHECK(Dyadic(12).to_fraction_string() == "12");
    CHECK(Dyadic(0).to_fraction_string() == "0");
    CHECK((half - half).is_zero());
    CHECK(quarter < half);
    CHECK(Dyadic(-1) < Dyadic(0));
    CHECK(Dyadic(6).mantissa() == 3);
    CHECK(Dyadic(6).exponent() == 1);
}

TEST_CASE("dyadic doubles across scales") {
    CHECK(Dyadic::pow2(-4).to_double() == doctest::Approx(0.0625));
    CHECK(Dyadic::pow2(-4096).to_double() == 0.0); // underflow clamps to zero
    Dyadic big = Dyadic::pow2(100) + Dyadic(1);
    CHECK(big.to_double() == doctest::Approx(1.2676506e30).epsilon(1e-6));
}

TEST_CASE("dyadic huge exponent gap stays exact") {
    Dyadic x = Dyadic(3) * Dyadic::pow2(-4096) + Dyadic::pow2(-5);
    CHECK(x > Dyadic::pow2(-5));
    CHECK(x - Dyadic(3) * Dyadic::pow2(-4096) == Dyadic::pow2(-5));
}

TEST_CASE("popcount") {
    CHECK(popcount_big(BigInt(0)) == 0);
    CHECK(popcount_big(BigInt(255)) == 8);
    CHECK(popcount_big((BigInt(1) << 200) + 7) == 4);
}
