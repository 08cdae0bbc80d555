#include "crp/oracle.hpp"

#include <algorithm>
#include <queue>

namespace crp::oracle {

std::vector<Weight> shortest_distances(const AnnotatedGraph& g, const SubgraphView& v,
                                       Vertex src, int skip_edge) {
    std::vector<Weight> dist(g.n, kInf);
    dist[src] = 0;
    if (!g.weighted) {
        std::deque<Vertex> q{src};
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            for (int e : v.out_edge_ids(u)) {
                if (e == skip_edge) continue;
                Vertex w = v.head(e);
                if (dist[w] > dist[u] + 1) {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
        return dist;
    }
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.emplace(0, src);
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        for (int e : v.out_edge_ids(u)) {
            if (e == skip_edge) continue;
            Vertex w = v.head(e);
            Weight nd = d + v.weight(e);
            if (nd < dist[w]) {
                dist[w] = nd;
                pq.emplace(nd, w);
            }
        }
    }
    return dist;
}

std::vector<Weight> rpaths(const AnnotatedGraph& g) {
    std::vector<Weight> out(g.h_st(), kInf);
    SubgraphView full = view(g, ViewMode::Full);
    for (int k = 0; k < g.h_st(); ++k)
        out[k] = shortest_distances(g, full, g.s(), g.path_edge_id(k))[g.t()];
    return out;
}

Weight two_sisp(const AnnotatedGraph& g) {
    Weight best = kInf;
    for (Weight w : rpaths(g)) best = std::min(best, w);
    return best;
}

std::vector<std::vector<Weight>> exact_hop_walk_weights(const SubgraphView& v, Vertex src,
                                                        int max_hops) {
    const AnnotatedGraph& g = v.base();
    std::vector<std::vector<Weight>> d(max_hops + 1, std::vector<Weight>(g.n, kInf));
    d[0][src] = 0;
    for (int tau = 1; tau <= max_hops; ++tau) {
        for (int e = 0; e < g.m(); ++e) {
            if (!v.contains(e)) continue;
            Vertex a = v.tail(e), b = v.head(e);
            if (d[tau - 1][a] < kInf)
                d[tau][b] = std::min(d[tau][b], d[tau - 1][a] + v.weight(e));
        }
    }
    return d;
}

namespace {

/// Per-edge optimum over detour pairs (j, l), j <= i < l, with the detour
/// hop count filtered by `keep`.
template <typename HopFilter>
std::vector<Weight> detour_optimum(const AnnotatedGraph& g, int max_hops, HopFilter keep) {
    const int h = g.h_st();
    std::vector<Weight> out(h, kInf);
    std::vector<Weight> dist_prefix(h + 1), dist_suffix(h + 1);
    dist_prefix[0] = 0;
    for (int k = 0; k < h; ++k)
        dist_prefix[k + 1] = dist_prefix[k] + g.edges[g.path_edge_id(k)].weight;
    for (int k = 0; k <= h; ++k) dist_suffix[k] = dist_prefix[h] - dist_prefix[k];

    SubgraphView gp = view(g, ViewMode::WithoutPathEdges);
    for (int j = 0; j < h; ++j) {
        auto dp = exact_hop_walk_weights(gp, g.path[j], max_hops);
        // best[l] = min filtered-hop walk weight from v_j to v_l
        for (int l = j + 1; l <= h; ++l) {
            Weight best = kInf;
            for (int tau = 1; tau <= max_hops; ++tau)
                if (keep(tau)) best = std::min(best, dp[tau][g.path[l]]);
            if (best >= kInf) continue;
            Weight total = dist_prefix[j] + best + dist_suffix[l];
            for (int i = j; i < l; ++i) out[i] = std::min(out[i], total);
        }
    }
    return out;
}

}  // namespace

std::vector<Weight> detour_constrained(const AnnotatedGraph& g, int zeta, DetourMode mode) {
    // A detour is simple, so n hops always suffice.
    int cap = g.n;
    if (mode == DetourMode::Short)
        return detour_optimum(g, std::min(zeta, cap), [](int) { return true; });
    return detour_optimum(g, cap, [zeta](int tau) { return tau > zeta; });
}

std::vector<std::vector<int64_t>> fstar(const AnnotatedGraph& g, int zeta) {
    // f*_u(d) = max over out-neighbors x in G\P of f*_x(d-1); walk semantics.
    std::vector<std::vector<int64_t>> f(g.n, std::vector<int64_t>(zeta, kNegInf));
    std::vector<int64_t> prev(g.n, kNegInf), cur(g.n, kNegInf);
    for (Vertex v = 0; v < g.n; ++v)
        if (g.on_path(v)) prev[v] = g.path_index(v);
    SubgraphView gp = view(g, ViewMode::WithoutPathEdges);
    for (int d = 1; d <= zeta; ++d) {
        std::fill(cur.begin(), cur.end(), kNegInf);
        for (int e = 0; e < g.m(); ++e) {
            if (!gp.contains(e)) continue;
            Vertex u = gp.tail(e), x = gp.head(e);
            cur[u] = std::max(cur[u], prev[x]);
        }
        for (Vertex v = 0; v < g.n; ++v) f[v][d - 1] = cur[v];
        std::swap(prev, cur);
    }
    return f;
}

namespace {

Weight range_optimum(const AnnotatedGraph& g, int64_t a_lo, int64_t a_hi, int64_t b_lo,
                     int64_t b_hi, int hop_cap) {
    const int h = g.h_st();
    a_lo = std::max<int64_t>(a_lo, 0);
    a_hi = std::min<int64_t>(a_hi, h);
    b_lo = std::max<int64_t>(b_lo, 0);
    b_hi = std::min<int64_t>(b_hi, h);
    if (a_lo > a_hi || b_lo > b_hi) return kInf;

    std::vector<Weight> dist_prefix(h + 1);
    dist_prefix[0] = 0;
    for (int k = 0; k < h; ++k)
        dist_prefix[k + 1] = dist_prefix[k] + g.edges[g.path_edge_id(k)].weight;

    SubgraphView gp = view(g, ViewMode::WithoutPathEdges);
    Weight best = kInf;
    for (int64_t j = a_lo; j <= a_hi; ++j) {
        auto dp = exact_hop_walk_weights(gp, g.path[j], hop_cap);
        for (int64_t l = std::max(b_lo, j + 1); l <= b_hi; ++l) {
            Weight d = kInf;
            for (int tau = 1; tau <= hop_cap; ++tau) d = std::min(d, dp[tau][g.path[l]]);
            if (d >= kInf) continue;
            best = std::min(best, dist_prefix[j] + d + (dist_prefix[h] - dist_prefix[l]));
        }
    }
    return best;
}

}  // namespace

Weight X(const AnnotatedGraph& g, int64_t a_lo, int64_t a_hi, int64_t b_lo, int64_t b_hi,
         int zeta) {
    return range_optimum(g, a_lo, a_hi, b_lo, b_hi, std::min(zeta, g.n));
}

Weight Y(const AnnotatedGraph& g, int64_t a_lo, int64_t a_hi, int64_t b_lo, int64_t b_hi) {
    return range_optimum(g, a_lo, a_hi, b_lo, b_hi, g.n);
}

int64_t undirected_diameter(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<Vertex>> adj(n);
    for (const Edge& e : edges) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    int64_t diam = 0;
    std::vector<int64_t> dist(n);
    for (Vertex src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<Vertex> q;
        q.push(src);
        dist[src] = 0;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (Vertex v = 0; v < n; ++v) {
            if (dist[v] < 0) return kInf;
            diam = std::max(diam, dist[v]);
        }
    }
    return diam;
}

OracleReport full_report(const AnnotatedGraph& g, int zeta, bool with_restricted) {
    OracleReport rep;
    rep.rpath_values = rpaths(g);
    rep.two_sisp_value = kInf;
    for (Weight w : rep.rpath_values) rep.two_sisp_value = std::min(rep.two_sisp_value, w);
    if (with_restricted) {
        rep.short_restricted = detour_constrained(g, zeta, DetourMode::Short);
        rep.long_restricted = detour_constrained(g, zeta, DetourMode::Long);
    }
    return rep;
}

}  // namespace crp::oracle
