#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fgc/growth.hpp"
#include "fgc/verify.hpp"

using namespace fgc;

TEST_CASE("big integer logarithm") {
    CHECK(ln_bigint(BigInt(1)) == doctest::Approx(0.0));
    CHECK(ln_bigint(BigInt(12345)) == doctest::Approx(std::log(12345.0)).epsilon(1e-12));
    BigInt googol = boost::multiprecision::pow(BigInt(10), 100);
    CHECK(ln_bigint(googol) == doctest::Approx(100.0 * std::log(10.0)).epsilon(1e-12));
    BigInt p = boost::multiprecision::pow(BigInt(2), 100000) + 12345;
    CHECK(ln_bigint(p) == doctest::Approx(100000.0 * std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(ln_bigint(BigInt(0)), InputError);
    CHECK(ln_bigrat(BigRat(1, 4)) == doctest::Approx(-std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("ratio sequence behaves as proved") {
    auto r3 = growth_ratios(3);
    CHECK(r3.alpha == BigRat(108, 246));
    CHECK(r3.p == BigRat(3 * 246, 108));
    for (int n = 4; n <= 12; ++n) {
        auto prev = growth_ratios(n - 1);
        auto cur = growth_ratios(n);
        CHECK(cur.alpha < prev.alpha);
        CHECK(cur.eta <= BigRat(2, 3));
        CHECK(cur.lambda >= BigRat(12, 11));
    }
}

TEST_CASE("the envelope constant is exact") {
    CHECK(q_constant() == BigRat(171215, 26568));
    CHECK(ln_bigrat(q_constant()) == doctest::Approx(std::log(171215.0 / 26568.0)).epsilon(1e-12));
}

TEST_CASE("bounds bracket the growth constant and tighten") {
    auto b7 = z_bounds(7);
    CHECK(b7.lower == doctest::Approx(0.4300134222).epsilon(1e-9));
    CHECK(b7.upper == doctest::Approx(0.4384279949).epsilon(1e-9));
    CHECK(b7.upper - b7.lower < 1e-2);
    auto b13 = z_bounds(13);
    CHECK(b13.lower == doctest::Approx(0.4301716366).epsilon(1e-9));
    CHECK(b13.upper == doctest::Approx(0.4301962236).epsilon(1e-9));
    CHECK(b13.upper - b13.lower < 1e-4);
    for (int m = 4; m <= 13; ++m) {
        auto prev = z_bounds(m - 1);
        auto cur = z_bounds(m);
        CHECK(cur.lower >= prev.lower);
        CHECK(cur.upper <= prev.upper);
    }
    CHECK(z_estimate_scaled(13) == doctest::Approx(0.4301950550).epsilon(1e-9));
    CHECK(z_estimate_per_vertex(13) ==
          doctest::Approx(2.0 * std::pow(3.0, 13) / (std::pow(3.0, 13) + 5.0) *
                          z_estimate_scaled(13) / 2.0)
              .epsilon(1e-12));
    CHECK_THROWS_AS(z_bounds(2), InputError);
}

TEST_CASE("verification suite passes and catches injected faults") {
    auto ok = run_verification(2, false);
    for (auto& r : ok) {
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
    auto bad = run_verification(2, true);
    int failures = 0;
    for (auto& r : bad) failures += !r.pass;
    CHECK(failures >= 3);
}
