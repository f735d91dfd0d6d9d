#pragma once

#include <array>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fgc/errors.hpp"
#include "fgc/graph.hpp"

namespace fgc {

enum class Family { Apollonian, Hanoi, ExtHanoi };
enum class GenMethod { Iterative, SelfSimilar };

struct FamilySpec {
    Family family = Family::Apollonian;
    int n = 1;
    GenMethod method = GenMethod::Iterative;
};

// 3^16 vertices is the default memory ceiling for explicit graphs; the
// recurrence module covers everything beyond it.
inline constexpr int kDefaultGenCap = 16;

namespace detail {

inline void check_gen_cap(int n, int cap) {
    if (n > cap) throw ResourceError("generation cap exceeded (n=" + std::to_string(n) +
                                     ", cap=" + std::to_string(cap) + ")");
}

inline long long ipow3(int e) {
    long long r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

} // namespace detail

// A_0 is a triangle; each iteration puts one new vertex inside every triangle
// created at the previous iteration and joins it to that triangle's corners.
inline LabeledGraph gen_apollonian_iterative(int n, int cap = kDefaultGenCap) {
    if (n < 0) throw InputError("apollonian requires n >= 0");
    detail::check_gen_cap(n, cap);
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<int> birth = {0, 0, 0};
    using Tri = std::array<VertexId, 3>;
    std::vector<Tri> frontier = {{0, 1, 2}};
    int next = 3;
    for (int t = 1; t <= n; ++t) {
        std::vector<Tri> created;
        created.reserve(frontier.size() * 3);
        for (auto [u, v, w] : frontier) {
            VertexId z = next++;
            birth.push_back(t);
            edges.push_back(make_edge(u, z));
            edges.push_back(make_edge(v, z));
            edges.push_back(make_edge(w, z));
            created.push_back({u, v, z});
            created.push_back({v, w, z});
            created.push_back({w, u, z});
        }
        frontier = std::move(created);
    }
    std::vector<VertexRole> roles(next);
    roles[0] = outmost_role('X');
    roles[1] = outmost_role('Y');
    roles[2] = outmost_role('Z');
    if (n >= 1) roles[3] = center_role();
    return LabeledGraph("apollonian", n, next, std::move(edges), std::move(roles),
                        std::move(birth));
}

// Merge construction: three copies of A_n glued along their outmost vertices
// (the copies' X's collapse into the center of A_{n+1}).
inline LabeledGraph gen_apollonian_selfsimilar(int n, int cap = kDefaultGenCap) {
    if (n < 0) throw InputError("apollonian requires n >= 0");
    detail::check_gen_cap(n, cap);
    if (n <= 1) return gen_apollonian_iterative(n, cap);
    LabeledGraph prev = gen_apollonian_selfsimilar(n - 1, cap);
    const int vp = prev.vertex_count();
    // map[i][v] = id in the merged graph of vertex v in copy i
    std::array<std::vector<VertexId>, 3> map;
    // identifications: Y1=Z2 -> X, Y3=Z1 -> Y, Y2=Z3 -> Z, X1=X2=X3 -> center
    map[0] = {3, 0, 1};
    map[1] = {3, 2, 0};
    map[2] = {3, 1, 2};
    int next = 4;
    std::vector<int> birth(3 * vp - 5, 0);
    birth[3] = 1;
    for (int i = 0; i < 3; ++i) {
        map[i].resize(vp);
        for (VertexId v = 3; v < vp; ++v) {
            map[i][v] = next++;
            birth[map[i][v]] = prev.birth_iteration(v) + 1;
        }
    }
    std::set<Edge> edge_set;
    for (int i = 0; i < 3; ++i)
        for (auto [a, b] : prev.edges()) edge_set.insert(make_edge(map[i][a], map[i][b]));
    std::vector<Edge> edges(edge_set.begin(), edge_set.end());
    std::vector<VertexRole> roles(next);
    roles[0] = outmost_role('X');
    roles[1] = outmost_role('Y');
    roles[2] = outmost_role('Z');
    roles[3] = center_role();
    return LabeledGraph("apollonian", n, next, std::move(edges), std::move(roles),
                        std::move(birth));
}

namespace detail {

// Hanoi labels are strings over {0,1,2}; position i holds the peg of the
// (i+1)-th smallest disk. Vertex id reads the label as a ternary number with
// the smallest disk's digit most significant.
inline VertexId hanoi_id(const std::string& label) {
    VertexId id = 0;
    for (char c : label) id = id * 3 + (c - '0');
    return id;
}

inline std::string hanoi_label(VertexId id, int n) {
    std::string s(n, '0');
    for (int i = n - 1; i >= 0; --i) {
        s[i] = static_cast<char>('0' + id % 3);
        id /= 3;
    }
    return s;
}

inline std::vector<Edge> hanoi_edges_move_rule(int n) {
    const long long vcount = ipow3(n);
    std::vector<Edge> edges;
    for (VertexId v = 0; v < vcount; ++v) {
        std::string l = hanoi_label(v, n);
        for (int i = 0; i < n; ++i) {
            const char src = l[i];
            for (char dst = '0'; dst <= '2'; ++dst) {
                if (dst == src) continue;
                const char third = static_cast<char>('0' + '1' + '2' - src - dst);
                bool movable = true;
                for (int j = 0; j < i && movable; ++j) movable = (l[j] == third);
                if (!movable) continue;
                std::string m = l;
                m[i] = dst;
                VertexId u = hanoi_id(m);
                if (v < u) edges.emplace_back(v, u);
            }
        }
    }
    return edges;
}

inline std::vector<Edge> hanoi_edges_selfsimilar(int n) {
    if (n == 1) return {{0, 1}, {0, 2}, {1, 2}};
    std::vector<Edge> prev = hanoi_edges_selfsimilar(n - 1);
    std::vector<Edge> edges;
    edges.reserve(prev.size() * 3 + 3);
    // copy k: append digit k for the largest disk; id becomes 3*id + k
    for (int k = 0; k < 3; ++k)
        for (auto [a, b] : prev) edges.emplace_back(3 * a + k, 3 * b + k);
    // bridge for each k: moving the largest disk while the n-1 smaller disks
    // all sit on peg k links copy i's k-extreme to copy j's k-extreme
    const long long rep = (ipow3(n - 1) - 1) / 2; // id of label k^(n-1) divided by k
    for (int k = 0; k < 3; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        edges.push_back(make_edge(static_cast<VertexId>(3 * k * rep + i),
                                  static_cast<VertexId>(3 * k * rep + j)));
    }
    return edges;
}

} // namespace detail

inline LabeledGraph gen_hanoi(int n, GenMethod method = GenMethod::Iterative,
                              int cap = kDefaultGenCap) {
    if (n < 1) throw InputError("hanoi requires n >= 1");
    detail::check_gen_cap(n, cap);
    const long long vcount = detail::ipow3(n);
    std::vector<Edge> edges = method == GenMethod::Iterative
                                  ? detail::hanoi_edges_move_rule(n)
                                  : detail::hanoi_edges_selfsimilar(n);
    std::vector<VertexRole> roles(vcount);
    std::vector<std::string> labels(vcount);
    for (VertexId v = 0; v < vcount; ++v) labels[v] = detail::hanoi_label(v, n);
    roles[detail::hanoi_id(std::string(n, '0'))] = extreme_role('a');
    roles[detail::hanoi_id(std::string(n, '1'))] = extreme_role('b');
    roles[detail::hanoi_id(std::string(n, '2'))] = extreme_role('c');
    return LabeledGraph("hanoi", n, static_cast<int>(vcount), std::move(edges),
                        std::move(roles), {}, std::move(labels));
}

inline LabeledGraph gen_ext_hanoi(int n, int cap = kDefaultGenCap) {
    if (n < 1) throw InputError("ext-hanoi requires n >= 1");
    detail::check_gen_cap(n, cap);
    LabeledGraph h = gen_hanoi(n, GenMethod::Iterative, cap);
    const VertexId s = h.vertex_count();
    std::vector<Edge> edges = h.edges();
    std::vector<VertexRole> roles;
    std::vector<std::string> labels;
    roles.reserve(s + 1);
    labels.reserve(s + 1);
    for (VertexId v = 0; v < s; ++v) {
        roles.push_back(h.role(v));
        labels.push_back(h.label(v));
    }
    roles.push_back(special_role());
    labels.emplace_back("s");
    for (VertexId e : h.extreme_ids()) edges.push_back(make_edge(e, s));
    return LabeledGraph("ext-hanoi", n, s + 1, std::move(edges), std::move(roles), {},
                        std::move(labels));
}

inline LabeledGraph generate(const FamilySpec& spec, int cap = kDefaultGenCap) {
    switch (spec.family) {
        case Family::Apollonian:
            return spec.method == GenMethod::Iterative
                       ? gen_apollonian_iterative(spec.n, cap)
                       : gen_apollonian_selfsimilar(spec.n, cap);
        case Family::Hanoi: return gen_hanoi(spec.n, spec.method, cap);
        case Family::ExtHanoi: return gen_ext_hanoi(spec.n, cap);
    }
    throw InputError("unknown family");
}

} // namespace fgc
