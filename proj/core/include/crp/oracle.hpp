#pragma once

#include <vector>

#include "crp/graph.hpp"

namespace crp::oracle {

/// Single-source shortest-path distances in a view (BFS when the instance is
/// unweighted, Dijkstra otherwise). `skip_edge` removes one base-graph edge
/// id for replacement-path queries.
std::vector<Weight> shortest_distances(const AnnotatedGraph& g, const SubgraphView& v,
                                       Vertex src, int skip_edge = -1);

/// Exact |st <> e| for every edge e of P, by recomputing shortest paths with
/// that edge removed. Naive on purpose: this is the ground truth the
/// distributed pipelines are checked against.
std::vector<Weight> rpaths(const AnnotatedGraph& g);

/// min over P-edges of |st <> e|.
Weight two_sisp(const AnnotatedGraph& g);

enum class DetourMode { Short, Long };

/// Best replacement length per P-edge restricted to detours of <= zeta hops
/// (Short) or > zeta hops (Long). Detour hop counts follow the hop-indexed
/// walk DP; see exact_hop_walk_weights.
std::vector<Weight> detour_constrained(const AnnotatedGraph& g, int zeta, DetourMode mode);

/// result[u][d-1] for d in [1, zeta]: largest path index reachable from u by
/// a walk of exactly d edges avoiding P-edges, or kNegInf.
std::vector<std::vector<int64_t>> fstar(const AnnotatedGraph& g, int zeta);

/// result[tau][v] = min weight of an exactly-tau-edge walk src -> v in the
/// view, tau = 0..max_hops.
std::vector<std::vector<Weight>> exact_hop_walk_weights(const SubgraphView& v, Vertex src,
                                                        int max_hops);

/// Range-restricted short-detour optimum: best replacement path whose detour
/// starts at index in [a_lo, a_hi], ends at index in [b_lo, b_hi], with at
/// most zeta detour hops. Ranges are clamped to [0, h_st].
Weight X(const AnnotatedGraph& g, int64_t a_lo, int64_t a_hi, int64_t b_lo, int64_t b_hi,
         int zeta);

/// Same without the hop restriction.
Weight Y(const AnnotatedGraph& g, int64_t a_lo, int64_t a_hi, int64_t b_lo, int64_t b_hi);

/// Hop diameter of an undirected multigraph given as an edge list
/// (directions ignored); kInf if disconnected.
int64_t undirected_diameter(int n, const std::vector<Edge>& edges);

struct OracleReport {
    std::vector<Weight> rpath_values;
    Weight two_sisp_value = kInf;
    std::vector<Weight> short_restricted;  // empty unless requested
    std::vector<Weight> long_restricted;
};

OracleReport full_report(const AnnotatedGraph& g, int zeta, bool with_restricted);

}  // namespace crp::oracle
