#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fgc/recurrence.hpp"
#include "fgc/structures.hpp"

using namespace fgc;

TEST_CASE("constructed perfect matchings of the extended graphs") {
    for (int n = 1; n <= 8; ++n) {
        auto g = gen_ext_hanoi(n);
        auto m = build_perfect_matching_ext_hanoi(n);
        CHECK(is_matching(g, m));
        CHECK(2 * static_cast<long long>(m.size()) == g.vertex_count());
    }
}

TEST_CASE("constructed matchings avoid and then take the special vertex") {
    auto m = build_perfect_matching_ext_hanoi(3);
    const VertexId c = 26, s = 27;
    int touching_s = 0;
    for (auto [a, b] : m) touching_s += (a == s || b == s);
    CHECK(touching_s == 1);
    CHECK(std::count(m.begin(), m.end(), make_edge(c, s)) == 1);
}

TEST_CASE("perfect matchings of hanoi minus its extremes") {
    for (int n = 2; n <= 8; ++n) {
        auto g = gen_hanoi(n);
        auto ext = g.extreme_ids();
        auto d = delete_vertices(g, {ext[0], ext[1], ext[2]});
        std::vector<Edge> m;
        for (auto [a, b] : build_pm_hanoi_minus_extremes(n))
            m.push_back(make_edge(d.old_to_new[a], d.old_to_new[b]));
        CHECK(is_matching(d.graph, m));
        CHECK(2 * static_cast<long long>(m.size()) == d.graph.vertex_count());
    }
}

TEST_CASE("minimum dominating sets of the apollonian family") {
    for (int n = 4; n <= 8; ++n) {
        auto g = gen_apollonian_iterative(n);
        auto d = build_apollonian_mds(n, g);
        CHECK(is_dominating_set(g, d));
        CHECK(BigInt(d.size()) == domination_number(n));
    }
    // at n = 4 the set is exactly the initial tetrahedron
    CHECK(build_apollonian_mds(4) == std::vector<VertexId>{0, 1, 2, 3});
    CHECK_THROWS_AS(build_apollonian_mds(3), InputError);
}

TEST_CASE("parity classes partition the extended graph") {
    for (int n = 1; n <= 7; n += 2) {
        auto g = gen_ext_hanoi(n);
        std::set<VertexId> seen;
        const long long want = (detail::ipow3(n) + 1) / 4;
        for (int k = 1; k <= 4; ++k) {
            auto cls = build_code_class(n, k);
            CHECK(static_cast<long long>(cls.size()) == want);
            CHECK(is_dominating_set(g, cls));
            seen.insert(cls.begin(), cls.end());
        }
        CHECK(static_cast<long long>(seen.size()) == g.vertex_count());
    }
    CHECK_THROWS_AS(build_code_class(2, 1), InputError);
    CHECK_THROWS_AS(build_code_class(3, 5), InputError);
}

TEST_CASE("extreme classification against a dominating set") {
    auto g = gen_ext_hanoi(3);
    auto t3 = classify_extreme_types(g, build_code_class(3, 3));
    // the f1/f2-even class holds the all-zero extreme and reaches no other
    CHECK(t3[0] == 'I');
    auto t4 = classify_extreme_types(g, build_code_class(3, 4));
    CHECK(t4 == std::array<char, 3>{'C', 'C', 'C'});
    CHECK_THROWS_AS(classify_extreme_types(g, std::vector<VertexId>{0}), InputError);
}
