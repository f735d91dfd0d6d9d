#pragma once

#include <array>
#include <string>
#include <vector>

#include "fgc/errors.hpp"
#include "fgc/generators.hpp"
#include "fgc/graph.hpp"

namespace fgc {

namespace detail {

// Perfect matching of H_n with the peg-2 extreme removed, as vertex-id pairs.
// Each copy of the recursive step loses its own peg-2 extreme; the two that
// are not the deleted extreme of the larger graph get paired by the bridge
// through the all-disks-on-peg-2 states.
inline std::vector<Edge> pm_hanoi_minus_c(int n) {
    if (n == 1) return {{0, 1}};
    std::vector<Edge> prev = pm_hanoi_minus_c(n - 1);
    std::vector<Edge> m;
    m.reserve(prev.size() * 3 + 1);
    for (int k = 0; k < 3; ++k)
        for (auto [a, b] : prev) m.emplace_back(3 * a + k, 3 * b + k);
    const VertexId rep2 = static_cast<VertexId>(ipow3(n - 1) - 1); // id of 2^(n-1)
    m.push_back(make_edge(3 * rep2 + 0, 3 * rep2 + 1));
    return m;
}

} // namespace detail

// A perfect matching of S+_n: a perfect matching of H_n minus the extreme c
// together with the edge (c, s).
inline std::vector<Edge> build_perfect_matching_ext_hanoi(int n) {
    if (n < 1) throw InputError("requires n >= 1");
    std::vector<Edge> m = detail::pm_hanoi_minus_c(n);
    const VertexId c = static_cast<VertexId>(detail::ipow3(n) - 1);
    const VertexId s = c + 1;
    m.push_back(make_edge(c, s));
    return m;
}

// A perfect matching of H_n minus all three extremes: per copy recursively,
// plus the three bridge edges.
inline std::vector<Edge> build_pm_hanoi_minus_extremes(int n) {
    if (n < 2) throw InputError("requires n >= 2");
    std::vector<Edge> m;
    if (n > 2) {
        std::vector<Edge> prev = build_pm_hanoi_minus_extremes(n - 1);
        m.reserve(prev.size() * 3 + 3);
        for (int k = 0; k < 3; ++k)
            for (auto [a, b] : prev) m.emplace_back(3 * a + k, 3 * b + k);
    }
    const VertexId rep = static_cast<VertexId>((detail::ipow3(n - 1) - 1) / 2);
    for (int k = 0; k < 3; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        m.push_back(make_edge(3 * k * rep + i, 3 * k * rep + j));
    }
    return m;
}

// The unique MDS of A_n for n >= 4: the vertices created up to iteration
// n - 3. Validated against the definitional checker and the domination
// number before it is returned.
inline std::vector<VertexId> build_apollonian_mds(int n, const LabeledGraph& g) {
    if (n < 4) throw InputError("requires n >= 4");
    std::vector<VertexId> d;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.birth_iteration(v) <= n - 3) d.push_back(v);
    const long long expected = (detail::ipow3(n - 3) + 5) / 2;
    if (static_cast<long long>(d.size()) != expected)
        throw InvariantError("apollonian MDS has wrong cardinality");
    if (!is_dominating_set(g, d)) throw InvariantError("apollonian MDS fails domination");
    return d;
}

inline std::vector<VertexId> build_apollonian_mds(int n) {
    return build_apollonian_mds(n, gen_apollonian_iterative(n));
}

// The k-th parity class of S+_n (odd n), defined by the parities of the
// digit counts f0, f1, f2 of each Hanoi label; class 4 also holds s.
inline std::vector<VertexId> build_code_class(int n, int k) {
    if (n < 1 || n % 2 == 0) throw InputError("code classes exist for odd n >= 1");
    if (k < 1 || k > 4) throw InputError("class index must be 1..4");
    const long long vcount = detail::ipow3(n);
    std::vector<VertexId> cls;
    for (VertexId v = 0; v < vcount; ++v) {
        std::string l = detail::hanoi_label(v, n);
        int f[3] = {0, 0, 0};
        for (char c : l) ++f[c - '0'];
        const bool e0 = f[0] % 2 == 0, e1 = f[1] % 2 == 0, e2 = f[2] % 2 == 0;
        const bool member = (k == 1 && e0 && e1) || (k == 2 && e0 && e2) ||
                            (k == 3 && e1 && e2) || (k == 4 && !e0 && !e1 && !e2);
        if (member) cls.push_back(v);
    }
    if (k == 4) cls.push_back(static_cast<VertexId>(vcount)); // the special vertex
    return cls;
}

// Types of the embedded Hanoi graph's extreme vertices relative to a
// dominating set d of S+_n: 'I' in d, 'D' dominated from inside the Hanoi
// part, 'C' dominated only from outside (by s).
inline std::array<char, 3> classify_extreme_types(const LabeledGraph& g,
                                                  const std::vector<VertexId>& d) {
    if (!is_dominating_set(g, d)) throw InputError("set is not dominating");
    const VertexId s = g.find_role(RoleKind::Special);
    std::vector<char> in(g.vertex_count(), 0);
    for (VertexId v : d) in[v] = 1;
    std::array<char, 3> types{};
    auto extremes = g.extreme_ids();
    for (int i = 0; i < 3; ++i) {
        const VertexId e = extremes[i];
        if (in[e]) {
            types[i] = 'I';
            continue;
        }
        bool inside = false;
        for (VertexId u : g.neighbors(e))
            if (u != s && in[u]) inside = true;
        types[i] = inside ? 'D' : 'C';
    }
    return types;
}

} // namespace fgc
