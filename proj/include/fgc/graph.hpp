#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgc/errors.hpp"

namespace fgc {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>; // canonical: first < second

inline Edge make_edge(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

enum class RoleKind { Outmost, Center, Extreme, Special, Interior };

struct VertexRole {
    RoleKind kind = RoleKind::Interior;
    char tag = 0; // 'X'/'Y'/'Z' for outmost, 'a'/'b'/'c' for extreme

    bool operator==(const VertexRole&) const = default;
};

inline VertexRole outmost_role(char tag) { return {RoleKind::Outmost, tag}; }
inline VertexRole extreme_role(char tag) { return {RoleKind::Extreme, tag}; }
inline VertexRole center_role() { return {RoleKind::Center, 0}; }
inline VertexRole special_role() { return {RoleKind::Special, 0}; }

inline std::string role_name(const VertexRole& r) {
    switch (r.kind) {
        case RoleKind::Outmost: return std::string("outmost:") + r.tag;
        case RoleKind::Center: return "center";
        case RoleKind::Extreme: return std::string("extreme:") + r.tag;
        case RoleKind::Special: return "special";
        case RoleKind::Interior: return "interior";
    }
    return "interior";
}

// Immutable simple graph with role-tagged vertices. Construction validates
// the basic shape (no self-loops, no parallel edges, endpoints in range);
// every query afterwards is pure and thread-safe.
class LabeledGraph {
public:
    LabeledGraph(std::string family, int n, int vertex_count, std::vector<Edge> edges,
                 std::vector<VertexRole> roles, std::vector<int> birth_iteration,
                 std::vector<std::string> labels = {})
        : family_(std::move(family)),
          n_(n),
          vertex_count_(vertex_count),
          edges_(std::move(edges)),
          roles_(std::move(roles)),
          birth_(std::move(birth_iteration)),
          labels_(std::move(labels)) {
        if (vertex_count_ < 0) throw InputError("negative vertex count");
        for (auto& e : edges_) e = make_edge(e.first, e.second);
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto [a, b] = edges_[i];
            if (a < 0 || b >= vertex_count_) throw InputError("edge endpoint out of range");
            if (a == b) throw InputError("self-loop");
            if (i > 0 && edges_[i] == edges_[i - 1]) throw InputError("parallel edge");
        }
        if (roles_.empty()) roles_.resize(vertex_count_);
        if (birth_.empty()) birth_.resize(vertex_count_, 0);
        if (static_cast<int>(roles_.size()) != vertex_count_ ||
            static_cast<int>(birth_.size()) != vertex_count_)
            throw InputError("role/birth array size mismatch");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count_)
            throw InputError("label array size mismatch");
        adj_.resize(vertex_count_);
        for (auto [a, b] : edges_) {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    const std::string& family() const { return family_; }
    int n() const { return n_; }
    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= vertex_count_) throw InputError("vertex id out of range");
    }

    const std::vector<VertexId>& neighbors(VertexId v) const {
        check_vertex(v);
        return adj_[v];
    }

    bool has_edge(VertexId a, VertexId b) const {
        Edge e = make_edge(a, b);
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    const VertexRole& role(VertexId v) const {
        check_vertex(v);
        return roles_[v];
    }

    int birth_iteration(VertexId v) const {
        check_vertex(v);
        return birth_[v];
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(VertexId v) const {
        check_vertex(v);
        if (labels_.empty()) throw InputError("graph has no labels");
        return labels_[v];
    }

    VertexId find_role(RoleKind kind, char tag = 0) const {
        for (VertexId v = 0; v < vertex_count_; ++v)
            if (roles_[v].kind == kind && (tag == 0 || roles_[v].tag == tag)) return v;
        throw InputError("no vertex with requested role");
    }

    // Extreme vertices a, b, c in tag order (Hanoi families).
    std::array<VertexId, 3> extreme_ids() const {
        return {find_role(RoleKind::Extreme, 'a'), find_role(RoleKind::Extreme, 'b'),
                find_role(RoleKind::Extreme, 'c')};
    }

    // Outmost vertices X, Y, Z in tag order (Apollonian family).
    std::array<VertexId, 3> outmost_ids() const {
        return {find_role(RoleKind::Outmost, 'X'), find_role(RoleKind::Outmost, 'Y'),
                find_role(RoleKind::Outmost, 'Z')};
    }

private:
    std::string family_;
    int n_;
    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<VertexRole> roles_;
    std::vector<int> birth_;
    std::vector<std::string> labels_;
    std::vector<std::vector<VertexId>> adj_;
};

struct GraphStats {
    long long num_vertices = 0;
    long long num_edges = 0;
    std::map<int, long long> degree_histogram;

    bool operator==(const GraphStats&) const = default;
};

inline GraphStats stats(const LabeledGraph& g) {
    GraphStats s;
    s.num_vertices = g.vertex_count();
    s.num_edges = static_cast<long long>(g.edges().size());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        s.degree_histogram[static_cast<int>(g.neighbors(v).size())]++;
    return s;
}

inline bool is_matching(const LabeledGraph& g, const std::vector<Edge>& m) {
    std::vector<char> covered(g.vertex_count(), 0);
    for (auto [a, b] : m) {
        if (!g.has_edge(a, b)) throw InputError("matching edge not in graph");
        if (covered[a] || covered[b]) return false;
        covered[a] = covered[b] = 1;
    }
    return true;
}

inline bool is_dominating_set(const LabeledGraph& g, const std::vector<VertexId>& d) {
    std::vector<char> in(g.vertex_count(), 0);
    for (VertexId v : d) {
        g.check_vertex(v);
        in[v] = 1;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (in[v]) continue;
        bool dominated = false;
        for (VertexId u : g.neighbors(v))
            if (in[u]) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

struct DeletionResult {
    LabeledGraph graph;
    std::vector<VertexId> old_to_new; // -1 for deleted vertices
};

inline DeletionResult delete_vertices(const LabeledGraph& g, const std::vector<VertexId>& u) {
    std::vector<char> drop(g.vertex_count(), 0);
    for (VertexId v : u) {
        g.check_vertex(v);
        drop[v] = 1;
    }
    std::vector<VertexId> old_to_new(g.vertex_count(), -1);
    int next = 0;
    std::vector<VertexRole> roles;
    std::vector<int> birth;
    std::vector<std::string> labels;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (drop[v]) continue;
        old_to_new[v] = next++;
        roles.push_back(g.role(v));
        birth.push_back(g.birth_iteration(v));
        if (g.has_labels()) labels.push_back(g.label(v));
    }
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        if (!drop[a] && !drop[b]) edges.push_back(make_edge(old_to_new[a], old_to_new[b]));
    LabeledGraph out(g.family(), g.n(), next, std::move(edges), std::move(roles),
                     std::move(birth), std::move(labels));
    return {std::move(out), std::move(old_to_new)};
}

inline bool graph_equal(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

// Edge-list text format:
//   # family=<name> n=<N> vertices=<V>
//   u v          (one canonical pair per line, ascending, 0-indexed)
inline void write_edgelist(const LabeledGraph& g, std::ostream& os) {
    os << "# family=" << g.family() << " n=" << g.n() << " vertices=" << g.vertex_count()
       << "\n";
    for (auto [a, b] : g.edges()) os << a << " " << b << "\n";
}

inline nlohmann::json to_json(const LabeledGraph& g) {
    nlohmann::json j;
    j["family"] = g.family();
    j["n"] = g.n();
    j["vertices"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    auto roles = nlohmann::json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        roles[std::to_string(v)] = role_name(g.role(v));
    j["roles"] = std::move(roles);
    if (g.has_labels()) {
        auto labels = nlohmann::json::object();
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (!g.label(v).empty()) labels[std::to_string(v)] = g.label(v);
        j["labels"] = std::move(labels);
    }
    return j;
}

} // namespace fgc
