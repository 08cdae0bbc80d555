#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crp {

using Vertex = int32_t;
using Weight = int64_t;

/// Distance sentinel: strictly greater than any realizable path length
/// (n * W is the longest simple path), safe to add twice without overflow.
inline constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
inline constexpr int64_t kNegInf = std::numeric_limits<int64_t>::min() / 4;

inline Weight add_weights(Weight a, Weight b) {
    if (a >= kInf || b >= kInf) return kInf;
    return a + b;
}

struct Edge {
    Vertex tail = -1;
    Vertex head = -1;
    Weight weight = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

class InstanceError : public std::runtime_error {
public:
    explicit InstanceError(const std::string& what) : std::runtime_error(what) {}
};

/// Directed graph annotated with the distinguished s-t shortest path P.
/// Vertices are dense integers 0..n-1. Edges are kept sorted by (tail, head)
/// so that serialization is canonical. Immutable after construction.
class AnnotatedGraph {
public:
    AnnotatedGraph() = default;

    /// Validates structure (path edges exist, weights in [1, W], no
    /// duplicates/self-loops) and canonicalizes edge order. Shortest-path
    /// optimality of P is *not* checked here; see validate_instance().
    AnnotatedGraph(int n, std::vector<Edge> edges, bool weighted, Weight max_weight,
                   std::vector<Vertex> path);

    int n = 0;
    std::vector<Edge> edges;
    bool weighted = false;
    Weight W = 1;
    std::vector<Vertex> path;  // P = (s = path[0], ..., t = path.back())

    Vertex s() const { return path.front(); }
    Vertex t() const { return path.back(); }
    int h_st() const { return static_cast<int>(path.size()) - 1; }
    int m() const { return static_cast<int>(edges.size()); }

    /// Sum of P's edge weights (= number of edges when unweighted).
    Weight path_length() const;

    /// Index of vertex v within P, or -1.
    int path_index(Vertex v) const { return path_index_[v]; }
    bool on_path(Vertex v) const { return path_index_[v] >= 0; }

    /// True iff edge #e is one of the h_st edges of P.
    bool edge_on_path(int e) const { return edge_on_path_[e]; }

    /// Edge id of the k-th path edge (path[k] -> path[k+1]).
    int path_edge_id(int k) const { return path_edge_ids_[k]; }

    /// Out-edge / in-edge ids per vertex (into `edges`).
    const std::vector<int>& out_edges(Vertex v) const { return out_[v]; }
    const std::vector<int>& in_edges(Vertex v) const { return in_[v]; }

    friend bool operator==(const AnnotatedGraph& a, const AnnotatedGraph& b) {
        return a.n == b.n && a.edges == b.edges && a.weighted == b.weighted &&
               a.W == b.W && a.path == b.path;
    }

private:
    std::vector<int> path_index_;
    std::vector<char> edge_on_path_;
    std::vector<int> path_edge_ids_;
    std::vector<std::vector<int>> out_, in_;
};

enum class ViewMode {
    Full,
    WithoutPathEdges,
    Reversed,
    ReversedWithoutPathEdges,
};

/// Lightweight semantic view over an AnnotatedGraph: optionally drops the
/// h_st edges of P and/or flips edge directions. No copying; edge ids are
/// shared with the base graph.
class SubgraphView {
public:
    SubgraphView(const AnnotatedGraph& base, ViewMode mode) : base_(&base), mode_(mode) {}

    const AnnotatedGraph& base() const { return *base_; }
    ViewMode mode() const { return mode_; }

    bool reversed() const {
        return mode_ == ViewMode::Reversed || mode_ == ViewMode::ReversedWithoutPathEdges;
    }
    bool drops_path_edges() const {
        return mode_ == ViewMode::WithoutPathEdges ||
               mode_ == ViewMode::ReversedWithoutPathEdges;
    }

    /// Edge #e of the base graph, present in this view?
    bool contains(int e) const { return !(drops_path_edges() && base_->edge_on_path(e)); }

    /// View-direction endpoints of base edge #e.
    Vertex tail(int e) const { return reversed() ? base_->edges[e].head : base_->edges[e].tail; }
    Vertex head(int e) const { return reversed() ? base_->edges[e].tail : base_->edges[e].head; }
    Weight weight(int e) const { return base_->edges[e].weight; }

    /// Ids of view-edges leaving / entering v (filtered, direction-adjusted).
    std::vector<int> out_edge_ids(Vertex v) const;
    std::vector<int> in_edge_ids(Vertex v) const;

    int edge_count() const;
};

inline SubgraphView view(const AnnotatedGraph& g, ViewMode mode) { return SubgraphView(g, mode); }

/// Parses the `congest-rpaths-instance v1` text format. Throws InstanceError
/// with a line number on malformed input.
AnnotatedGraph load_graph(const std::string& text);

/// Canonical text form; load_graph(serialize(g)) == g.
std::string serialize(const AnnotatedGraph& g);

AnnotatedGraph load_graph_file(const std::string& path);
void save_graph_file(const AnnotatedGraph& g, const std::string& path);

struct GenOptions {
    /// Force the planted path to have exactly this many edges (0 = pick
    /// from the seed, between 1 and ~n/3).
    int h_st = 0;
    /// Add a shallow binary-tree scaffold over all vertices so the
    /// undirected diameter stays O(log n).
    bool scaffold = false;
};

/// Deterministic random instance with a planted shortest s-t path.
/// Non-path edges are weighted so that no alternative can beat P
/// (unweighted: edges never skip forward more than one level; weighted:
/// weights respect a shortest-path potential). The undirected link graph
/// is always connected.
AnnotatedGraph gen_random_instance(int n, int extra_edges, bool weighted, Weight W,
                                   uint64_t seed, const GenOptions& opts = {});

struct Diagnostics {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Centralized re-check of every AnnotatedGraph invariant, including
/// shortest-path optimality of P and undirected connectivity.
Diagnostics validate_instance(const AnnotatedGraph& g);

}  // namespace crp
