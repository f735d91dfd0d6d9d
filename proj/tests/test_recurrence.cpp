#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgc/recurrence.hpp"

using namespace fgc;

TEST_CASE("matching sizes follow the closed forms") {
    CHECK(matching_sizes_tuple(1) == std::array<BigInt, 4>{0, 1, 1, 2});
    CHECK(matching_sizes_tuple(2) == std::array<BigInt, 4>{1, 2, 3, 3});
    CHECK(matching_sizes_tuple(3) == std::array<BigInt, 4>{4, 5, 6, 7});
    // the recursion itself asserts the closed forms at every level
    for (int n = 3; n <= 40; ++n) {
        auto b = matching_sizes_tuple(n);
        CHECK(b[3] == (pow3(n - 1) + 5) / 2);
        CHECK(b[3] - b[0] == 3);
    }
    CHECK(matching_profile(4).matching_number == 16);
}

TEST_CASE("matching counts reproduce the reference column") {
    CHECK(matching_counts_tuple(3) == std::array<BigInt, 4>{108, 246, 480, 738});
    auto c4 = matching_counts_tuple(4);
    CHECK(c4[0] == 8608032);
    CHECK(c4[3] == 615514464);
    auto c5 = matching_counts_tuple(5);
    CHECK(c5[0] == BigInt("8300560282271896633344"));
    CHECK(c5[1] == BigInt("71022198720317181345792"));
    CHECK(c5[2] == BigInt("601114712194856725217280"));
    CHECK(c5[3] == BigInt("5030805301520123200352256"));
}

TEST_CASE("profiles below the count base fall back to the search") {
    auto p2 = matching_profile(2);
    CHECK(p2.varphi == 3);
    CHECK(p2.theta == 4);
    CHECK(p2.phi == 3);
    CHECK(p2.tau == 23);
}

TEST_CASE("domination sizes follow the closed forms") {
    CHECK(domination_sizes_tuple(1) == std::array<BigInt, 4>{1, 1, 2, 3});
    CHECK(domination_sizes_tuple(2) == std::array<BigInt, 4>{1, 2, 2, 3});
    CHECK(domination_sizes_tuple(3) == std::array<BigInt, 4>{3, 3, 3, 3});
    CHECK(domination_sizes_tuple(4) == std::array<BigInt, 4>{7, 6, 5, 4});
    for (int n = 4; n <= 40; ++n) {
        auto g = domination_sizes_tuple(n);
        CHECK(g[3] == (pow3(n - 3) + 5) / 2);
        CHECK(domination_number(n) == g[3]);
    }
}

TEST_CASE("domination counts collapse to uniqueness") {
    auto c3 = domination_counts_tuple(3);
    CHECK(c3[0] == 11); // measured: A_3 sits below the uniqueness threshold
    auto c4 = domination_counts_tuple(4);
    CHECK(c4 == std::array<BigInt, 4>{1, 8, 2, 1});
    for (int n = 5; n <= 12; ++n) CHECK(domination_counts_tuple(n)[0] == 1);
    CHECK(domination_profile(6).w == 1);
}

TEST_CASE("hanoi matching counts match the power form") {
    for (int n = 2; n <= 10; ++n) {
        auto h = hanoi_matching_counts(n);
        CHECK(h.varphi == pow2((pow3(n - 1) - 1) / 2));
        CHECK(h.phi == h.varphi);
        CHECK(h.spm == 3 * h.phi);
        CHECK(h.beta0 == (pow3(n) - 3) / 2);
    }
    CHECK(hanoi_matching_counts(2).spm == 6);
    CHECK(hanoi_matching_counts(3).spm == 48);
}

TEST_CASE("extended hanoi domination numbers") {
    CHECK(ext_hanoi_domination_number(1).domination_number == 1);
    CHECK(ext_hanoi_domination_number(2).domination_number == 3);
    CHECK(ext_hanoi_domination_number(3).domination_number == 7);
    CHECK(ext_hanoi_domination_number(4).domination_number == 21);
    CHECK(ext_hanoi_domination_number(5).domination_number == 61);
    CHECK(ext_hanoi_domination_number(3).mds_count == 4);
    CHECK(ext_hanoi_domination_number(4).mds_count == 0);
}

TEST_CASE("caps and preconditions") {
    CHECK_THROWS_AS(matching_sizes_tuple(0), InputError);
    CHECK_THROWS_AS(matching_counts_tuple(2), InputError);
    CHECK_THROWS_AS(domination_counts_tuple(2), InputError);
    CHECK_THROWS_AS(matching_counts_tuple(15), ResourceError);
    CHECK_THROWS_AS(matching_sizes_tuple(61), ResourceError);
    CHECK_THROWS_AS(hanoi_matching_counts(1), InputError);
    CHECK_THROWS_AS(hanoi_matching_counts(20), ResourceError);
}
