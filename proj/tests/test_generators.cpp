#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgc/generators.hpp"

using namespace fgc;

TEST_CASE("apollonian vertex and edge totals") {
    for (int n = 1; n <= 8; ++n) {
        auto g = gen_apollonian_iterative(n);
        const long long p = detail::ipow3(n);
        CHECK(g.vertex_count() == (p + 5) / 2);
        CHECK(static_cast<long long>(g.edges().size()) == (3 * p + 3) / 2);
    }
}

TEST_CASE("apollonian fixed roles and ids") {
    auto g = gen_apollonian_iterative(4);
    auto [x, y, z] = g.outmost_ids();
    CHECK(x == 0);
    CHECK(y == 1);
    CHECK(z == 2);
    CHECK(g.find_role(RoleKind::Center) == 3);
    CHECK(g.birth_iteration(0) == 0);
    CHECK(g.birth_iteration(3) == 1);
    // outmost vertices form a triangle; the center is adjacent to all three
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(0, 2));
    for (VertexId v : {0, 1, 2}) CHECK(g.has_edge(3, v));
}

TEST_CASE("apollonian constructions agree on statistics") {
    for (int n = 1; n <= 7; ++n) {
        auto a = stats(gen_apollonian_iterative(n));
        auto b = stats(gen_apollonian_selfsimilar(n));
        CHECK(a == b);
    }
}

TEST_CASE("a1 is k4 under both constructions") {
    auto a = gen_apollonian_iterative(1);
    auto b = gen_apollonian_selfsimilar(1);
    CHECK(graph_equal(a, b));
    CHECK(a.vertex_count() == 4);
    CHECK(a.edges().size() == 6);
}

TEST_CASE("hanoi labels and ids are inverse bijections") {
    const int n = 4;
    auto g = gen_hanoi(n);
    REQUIRE(g.has_labels());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const std::string& l = g.label(v);
        CHECK(static_cast<int>(l.size()) == n);
        CHECK(detail::hanoi_id(l) == v);
    }
    // smallest disk is the most significant digit
    CHECK(g.label(0) == "0000");
    CHECK(detail::hanoi_id("1000") == 27);
}

TEST_CASE("hanoi adjacency changes exactly one digit") {
    for (int n = 1; n <= 6; ++n) {
        auto g = gen_hanoi(n);
        for (auto [a, b] : g.edges()) {
            int diff = 0;
            for (int i = 0; i < n; ++i) diff += g.label(a)[i] != g.label(b)[i];
            CHECK(diff == 1);
        }
    }
}

TEST_CASE("hanoi move rule and composition give identical graphs") {
    for (int n = 1; n <= 7; ++n) {
        auto a = gen_hanoi(n, GenMethod::Iterative);
        auto b = gen_hanoi(n, GenMethod::SelfSimilar);
        CHECK(graph_equal(a, b));
        CHECK(static_cast<long long>(a.edges().size()) == (detail::ipow3(n + 1) - 3) / 2);
    }
}

TEST_CASE("hanoi extremes sit at the all-equal labels") {
    auto g = gen_hanoi(3);
    auto [a, b, c] = g.extreme_ids();
    CHECK(g.label(a) == "000");
    CHECK(g.label(b) == "111");
    CHECK(g.label(c) == "222");
    for (VertexId e : {a, b, c}) CHECK(g.neighbors(e).size() == 2);
}

TEST_CASE("extended hanoi is 3-regular") {
    for (int n = 1; n <= 6; ++n) {
        auto g = gen_ext_hanoi(n);
        CHECK(g.vertex_count() == detail::ipow3(n) + 1);
        auto s = stats(g);
        CHECK(s.degree_histogram.size() == 1);
        CHECK(s.degree_histogram.at(3) == g.vertex_count());
    }
}

TEST_CASE("special vertex joins exactly the extremes") {
    auto g = gen_ext_hanoi(3);
    VertexId s = g.find_role(RoleKind::Special);
    CHECK(s == detail::ipow3(3));
    auto [a, b, c] = g.extreme_ids();
    CHECK(g.neighbors(s) == std::vector<VertexId>{a, b, c});
    CHECK(g.label(s) == "s");
}

TEST_CASE("preconditions and caps") {
    CHECK_THROWS_AS(gen_apollonian_iterative(-1), InputError);
    CHECK_THROWS_AS(gen_hanoi(0), InputError);
    CHECK_THROWS_AS(gen_ext_hanoi(-2), InputError);
    CHECK_THROWS_AS(gen_hanoi(5, GenMethod::Iterative, 4), ResourceError);
    CHECK_THROWS_AS(gen_apollonian_selfsimilar(5, 4), ResourceError);
}

TEST_CASE("family dispatch") {
    FamilySpec spec;
    spec.family = Family::Hanoi;
    spec.n = 3;
    spec.method = GenMethod::SelfSimilar;
    CHECK(graph_equal(generate(spec), gen_hanoi(3)));
    spec.family = Family::ExtHanoi;
    CHECK(graph_equal(generate(spec), gen_ext_hanoi(3)));
}
