#include "crp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "crp/oracle.hpp"
#include "crp/rng.hpp"

namespace crp {

AnnotatedGraph::AnnotatedGraph(int n_, std::vector<Edge> edges_, bool weighted_,
                               Weight max_weight, std::vector<Vertex> path_)
    : n(n_), edges(std::move(edges_)), weighted(weighted_), W(max_weight), path(std::move(path_)) {
    if (n < 2) throw InstanceError("instance needs at least 2 vertices");
    if (W < 1) throw InstanceError("W must be >= 1");
    if (path.size() < 2) throw InstanceError("path must have at least one edge");

    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
    });

    std::map<std::pair<Vertex, Vertex>, int> by_endpoints;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const Edge& ed = edges[e];
        if (ed.tail < 0 || ed.tail >= n || ed.head < 0 || ed.head >= n)
            throw InstanceError("edge endpoint out of range");
        if (ed.tail == ed.head) throw InstanceError("self-loops are not allowed");
        if (ed.weight < 1 || ed.weight > W)
            throw InstanceError("edge weight out of [1, W]");
        if (!weighted && ed.weight != 1)
            throw InstanceError("unweighted instance with non-unit weight");
        if (!by_endpoints.emplace(std::make_pair(ed.tail, ed.head), e).second)
            throw InstanceError("duplicate edge");
    }

    path_index_.assign(n, -1);
    for (int i = 0; i < static_cast<int>(path.size()); ++i) {
        Vertex v = path[i];
        if (v < 0 || v >= n) throw InstanceError("path vertex out of range");
        if (path_index_[v] != -1) throw InstanceError("path repeats a vertex");
        path_index_[v] = i;
    }

    edge_on_path_.assign(edges.size(), 0);
    path_edge_ids_.clear();
    for (int k = 0; k + 1 < static_cast<int>(path.size()); ++k) {
        auto it = by_endpoints.find({path[k], path[k + 1]});
        if (it == by_endpoints.end()) throw InstanceError("path edge missing from edge list");
        edge_on_path_[it->second] = 1;
        path_edge_ids_.push_back(it->second);
    }

    out_.assign(n, {});
    in_.assign(n, {});
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        out_[edges[e].tail].push_back(e);
        in_[edges[e].head].push_back(e);
    }
}

Weight AnnotatedGraph::path_length() const {
    Weight total = 0;
    for (int k = 0; k < h_st(); ++k) total += edges[path_edge_ids_[k]].weight;
    return total;
}

std::vector<int> SubgraphView::out_edge_ids(Vertex v) const {
    const auto& raw = reversed() ? base_->in_edges(v) : base_->out_edges(v);
    std::vector<int> result;
    result.reserve(raw.size());
    for (int e : raw)
        if (contains(e)) result.push_back(e);
    return result;
}

std::vector<int> SubgraphView::in_edge_ids(Vertex v) const {
    const auto& raw = reversed() ? base_->out_edges(v) : base_->in_edges(v);
    std::vector<int> result;
    result.reserve(raw.size());
    for (int e : raw)
        if (contains(e)) result.push_back(e);
    return result;
}

int SubgraphView::edge_count() const {
    if (!drops_path_edges()) return base_->m();
    return base_->m() - base_->h_st();
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
    throw InstanceError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

AnnotatedGraph load_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    int n = -1;
    bool weighted = false;
    Weight maxw = 1;
    std::vector<Edge> edges;
    std::vector<Vertex> path;
    bool saw_magic = false, saw_header = false, saw_path = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (!saw_magic) {
            std::string a, b;
            ls >> a >> b;
            if (a != "congest-rpaths-instance" || b != "v1")
                parse_fail(line_no, "expected 'congest-rpaths-instance v1'");
            saw_magic = true;
            continue;
        }
        std::string tok;
        ls >> tok;
        if (tok == "n") {
            std::string kw1, kw2;
            int wflag = -1;
            if (!(ls >> n >> kw1 >> wflag >> kw2 >> maxw) || kw1 != "weighted" || kw2 != "W")
                parse_fail(line_no, "malformed header, expected 'n <n> weighted <0|1> W <W>'");
            if (wflag != 0 && wflag != 1) parse_fail(line_no, "weighted flag must be 0 or 1");
            weighted = wflag == 1;
            saw_header = true;
        } else if (tok == "e") {
            if (!saw_header) parse_fail(line_no, "edge before header");
            Edge e;
            if (!(ls >> e.tail >> e.head)) parse_fail(line_no, "malformed edge");
            if (weighted) {
                if (!(ls >> e.weight)) parse_fail(line_no, "weighted instance edge missing weight");
            } else {
                e.weight = 1;
                Weight stray;
                if (ls >> stray) parse_fail(line_no, "unweighted instance edge carries a weight");
            }
            edges.push_back(e);
        } else if (tok == "path") {
            if (saw_path) parse_fail(line_no, "duplicate path line");
            Vertex v;
            while (ls >> v) path.push_back(v);
            saw_path = true;
        } else {
            parse_fail(line_no, "unknown record '" + tok + "'");
        }
    }
    if (!saw_magic) throw InstanceError("missing format line");
    if (!saw_header) throw InstanceError("missing header line");
    if (!saw_path) throw InstanceError("missing path line");
    return AnnotatedGraph(n, std::move(edges), weighted, maxw, std::move(path));
}

std::string serialize(const AnnotatedGraph& g) {
    std::ostringstream out;
    out << "congest-rpaths-instance v1\n";
    out << "n " << g.n << " weighted " << (g.weighted ? 1 : 0) << " W " << g.W << "\n";
    for (const Edge& e : g.edges) {
        out << "e " << e.tail << " " << e.head;
        if (g.weighted) out << " " << e.weight;
        out << "\n";
    }
    out << "path";
    for (Vertex v : g.path) out << " " << v;
    out << "\n";
    return out.str();
}

AnnotatedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InstanceError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str());
}

void save_graph_file(const AnnotatedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InstanceError("cannot write " + path);
    out << serialize(g);
}

namespace {

/// Levels make planted-path optimality structural: every edge (u, v) must
/// satisfy level(v) <= level(u) + 1 (unweighted) or carry weight at least
/// potential(v) - potential(u) (weighted). Any s-t route then costs at
/// least |P|.
struct PlantedPlan {
    std::vector<Vertex> path;
    std::vector<int64_t> potential;  // unweighted: level; weighted: prefix weight
};

}  // namespace

AnnotatedGraph gen_random_instance(int n, int extra_edges, bool weighted, Weight W,
                                   uint64_t seed, const GenOptions& opts) {
    if (n < 2) throw InstanceError("gen: n must be >= 2");
    if (extra_edges < 0) throw InstanceError("gen: extra_edges must be >= 0");
    if (W < 1) throw InstanceError("gen: W must be >= 1");

    Rng rng(mix_seed(seed, 0x9ea1u));

    int h = opts.h_st;
    if (h <= 0) h = static_cast<int>(rng.next_range(1, std::max<int64_t>(1, n / 3)));
    h = std::min(h, n - 1);

    if (static_cast<int64_t>(extra_edges) > static_cast<int64_t>(n) * (n - 1) - h)
        throw InstanceError("gen: extra_edges exceeds n(n-1) - h_st");

    // Path occupies a random subset of vertices; remaining ones float.
    std::vector<Vertex> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.next_below(static_cast<uint64_t>(i + 1))]);

    PlantedPlan plan;
    plan.path.assign(perm.begin(), perm.begin() + h + 1);
    plan.potential.assign(n, 0);

    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> used;
    auto add_edge = [&](Vertex a, Vertex b, Weight w) {
        edges.push_back({a, b, w});
        used.insert({a, b});
    };

    Weight path_total = 0;
    std::vector<Weight> path_w(h, 1);
    if (weighted) {
        // Modest path weights keep the potential span comfortably below W.
        Weight cap = std::max<Weight>(1, std::min<Weight>(W, std::max<Weight>(1, W / (2 * h))));
        for (int k = 0; k < h; ++k) path_w[k] = rng.next_range(1, cap);
    }
    for (int k = 0; k < h; ++k) {
        add_edge(plan.path[k], plan.path[k + 1], path_w[k]);
        path_total += path_w[k];
        plan.potential[plan.path[k + 1]] = path_total;
    }
    for (int i = h + 1; i < n; ++i)
        plan.potential[perm[i]] = rng.next_range(0, weighted ? path_total : h);

    auto admissible = [&](Vertex a, Vertex b) -> std::optional<Weight> {
        if (a == b || used.count({a, b})) return std::nullopt;
        int64_t gap = plan.potential[b] - plan.potential[a];
        if (!weighted) {
            if (gap > 1) return std::nullopt;
            return Weight{1};
        }
        Weight lo = std::max<int64_t>(1, gap);
        if (lo > W) return std::nullopt;
        Weight hi = std::min<Weight>(W, lo + std::max<Weight>(1, path_total));
        return static_cast<Weight>(rng.next_range(lo, hi));
    };

    auto try_add_between = [&](Vertex a, Vertex b) {
        if (auto w = admissible(a, b)) {
            add_edge(a, b, *w);
            return true;
        }
        return false;
    };

    if (opts.scaffold) {
        // Binary-tree links over vertex ids; orientation child -> parent is
        // always admissible since it never advances the potential.
        for (int v = 1; v < n; ++v) {
            int p = (v - 1) / 2;
            Vertex a = perm[v], b = perm[p];
            if (used.count({a, b})) continue;
            if (!try_add_between(a, b)) try_add_between(b, a);
        }
    }

    int added = 0;
    int64_t attempts = 0;
    const int64_t max_attempts = 400LL * (extra_edges + 1) + 64LL * n;
    while (added < extra_edges && attempts < max_attempts) {
        ++attempts;
        Vertex a = static_cast<Vertex>(rng.next_below(n));
        Vertex b = static_cast<Vertex>(rng.next_below(n));
        if (try_add_between(a, b)) ++added;
    }
    if (added < extra_edges)
        throw InstanceError("gen: could not place requested extra_edges under optimality "
                            "constraints");

    // Connect any vertex whose undirected component misses s. An edge
    // (v, s) is always admissible: potential(s) = 0.
    {
        std::vector<char> seen(n, 0);
        std::vector<std::vector<Vertex>> und(n);
        for (const Edge& e : edges) {
            und[e.tail].push_back(e.head);
            und[e.head].push_back(e.tail);
        }
        std::queue<Vertex> q;
        q.push(plan.path[0]);
        seen[plan.path[0]] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : und[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (seen[v]) continue;
            add_edge(v, plan.path[0], 1);
            // Flood the newly attached component.
            std::queue<Vertex> q2;
            q2.push(v);
            seen[v] = 1;
            while (!q2.empty()) {
                Vertex u = q2.front();
                q2.pop();
                for (Vertex w2 : und[u])
                    if (!seen[w2]) {
                        seen[w2] = 1;
                        q2.push(w2);
                    }
            }
        }
    }

    return AnnotatedGraph(n, std::move(edges), weighted, W, plan.path);
}

Diagnostics validate_instance(const AnnotatedGraph& g) {
    Diagnostics d;
    auto flag = [&](const std::string& msg) { d.violations.push_back(msg); };

    if (g.path.front() == g.path.back()) flag("s equals t");

    // Structural invariants are enforced by the constructor; re-derive the
    // semantic ones.
    Weight p_len = g.path_length();
    std::vector<Weight> dist_s = oracle::shortest_distances(g, view(g, ViewMode::Full), g.s());
    if (dist_s[g.t()] != p_len)
        flag("P is not a shortest s-t path: dist(s,t)=" +
             (dist_s[g.t()] >= kInf ? std::string("inf") : std::to_string(dist_s[g.t()])) +
             " but |P|=" + std::to_string(p_len));

    // Undirected connectivity: the simulator's link graph must have finite
    // diameter.
    {
        std::vector<std::vector<Vertex>> und(g.n);
        for (const Edge& e : g.edges) {
            und[e.tail].push_back(e.head);
            und[e.head].push_back(e.tail);
        }
        std::vector<char> seen(g.n, 0);
        std::queue<Vertex> q;
        q.push(g.s());
        seen[g.s()] = 1;
        int reached = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : und[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    q.push(v);
                }
        }
        if (reached != g.n) flag("link graph is not connected (undirected)");
    }
    return d;
}

}  // namespace crp
