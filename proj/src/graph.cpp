#include "cohnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

namespace cohnet {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
};

std::vector<std::vector<int>> adjacency(const ArcSet& a) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(a.n));
    for (const ArcSet::Arc& arc : a.arcs) {
        adj[static_cast<std::size_t>(arc.i)].push_back(arc.j);
        adj[static_cast<std::size_t>(arc.j)].push_back(arc.i);
    }
    for (auto& nb : adj)
        std::sort(nb.begin(), nb.end());
    return adj;
}

// All simple cycles whose smallest vertex is s, restricted to the vertices
// kept in the mask. Mirrored traversals are suppressed by requiring the
// second path vertex to be smaller than the last.
void dfs_cycles(int s, int v, const std::vector<std::vector<int>>& adj,
                const std::vector<bool>& keep, std::vector<int>& path,
                std::vector<bool>& on_path, std::vector<std::vector<int>>& out) {
    for (int u : adj[static_cast<std::size_t>(v)]) {
        if (!keep[static_cast<std::size_t>(u)])
            continue;
        if (u == s && path.size() >= 3) {
            if (path[1] < path.back())
                out.push_back(path);
        } else if (u > s && !on_path[static_cast<std::size_t>(u)]) {
            path.push_back(u);
            on_path[static_cast<std::size_t>(u)] = true;
            dfs_cycles(s, u, adj, keep, path, on_path, out);
            on_path[static_cast<std::size_t>(u)] = false;
            path.pop_back();
        }
    }
}

std::vector<std::vector<int>> find_cycles(const ArcSet& a) {
    const auto adj = adjacency(a);
    const std::size_t n = static_cast<std::size_t>(a.n);

    // Peel degree-1 nodes; what remains is the union of all cycles plus any
    // bridges between them.
    std::vector<int> degree(n, 0);
    for (const ArcSet::Arc& arc : a.arcs) {
        ++degree[static_cast<std::size_t>(arc.i)];
        ++degree[static_cast<std::size_t>(arc.j)];
    }
    std::vector<bool> keep(n, true);
    std::vector<int> stack;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] <= 1)
            stack.push_back(static_cast<int>(v));
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (!keep[static_cast<std::size_t>(v)])
            continue;
        keep[static_cast<std::size_t>(v)] = false;
        for (int u : adj[static_cast<std::size_t>(v)])
            if (keep[static_cast<std::size_t>(u)] && --degree[static_cast<std::size_t>(u)] <= 1)
                stack.push_back(u);
    }

    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<bool> on_path(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (!keep[s])
            continue;
        path.assign(1, static_cast<int>(s));
        on_path[s] = true;
        dfs_cycles(static_cast<int>(s), static_cast<int>(s), adj, keep, path, on_path, cycles);
        on_path[s] = false;
    }
    return cycles;
}

} // namespace

void WeightedGraph::validate() const {
    if (n < 1)
        throw ValidationError("graph: need at least one node");
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges) {
        if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n)
            throw ValidationError("graph: edge endpoint out of range");
        if (e.i >= e.j)
            throw ValidationError("graph: edges must satisfy i < j with no self loops");
        if (!std::isfinite(e.w) || e.w < 0.0)
            throw ValidationError("graph: edge weight must be finite and nonnegative");
        if (!seen.insert({e.i, e.j}).second)
            throw ValidationError("graph: duplicate edge");
    }
}

WeightedGraph complete_graph(const DistanceMatrix& d) {
    d.validate();
    WeightedGraph g;
    g.n = d.n;
    g.edges.reserve(static_cast<std::size_t>(d.n) * (d.n - 1) / 2);
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j)
            g.edges.push_back({i, j, d.at(i, j)});
    return g;
}

bool ArcSet::contains(int i, int j) const {
    if (i > j)
        std::swap(i, j);
    for (const Arc& a : arcs)
        if (a.i == i && a.j == j)
            return true;
    return false;
}

ArcSet mst(const WeightedGraph& g) {
    g.validate();
    std::vector<WeightedGraph::Edge> sorted = g.edges;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.w != b.w)
            return a.w < b.w;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    });

    UnionFind uf(g.n);
    ArcSet result;
    result.n = g.n;
    for (const auto& e : sorted) {
        if (uf.unite(e.i, e.j)) {
            result.arcs.push_back({e.i, e.j, e.w, {}});
            if (result.arcs.size() == static_cast<std::size_t>(g.n) - 1)
                break;
        }
    }
    if (result.arcs.size() != static_cast<std::size_t>(g.n) - 1)
        throw ConnectivityError("mst: input graph is disconnected");
    std::sort(result.arcs.begin(), result.arcs.end(), [](const auto& a, const auto& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    return result;
}

ArcSet mst(const DistanceMatrix& d) {
    return mst(complete_graph(d));
}

ArcSet clusterize(const DistanceMatrix& d) {
    d.validate();
    const int n = d.n;

    ArcSet result;
    result.n = n;
    auto find_arc = [&result](int i, int j) -> ArcSet::Arc* {
        if (i > j)
            std::swap(i, j);
        for (ArcSet::Arc& a : result.arcs)
            if (a.i == i && a.j == j)
                return &a;
        return nullptr;
    };

    for (int j = 0; j < n; ++j) {
        double dmin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i)
            if (i != j)
                dmin = std::min(dmin, d.at(i, j));

        // Minimizer set; ties are kept exactly as stored.
        int chosen = -1;
        int fallback = -1;
        for (int i = 0; i < n; ++i) {
            if (i == j || d.at(i, j) != dmin)
                continue;
            if (fallback < 0)
                fallback = i;
            if (chosen < 0 && !result.contains(i, j))
                chosen = i;
        }

        if (chosen >= 0) {
            const int a = std::min(j, chosen);
            const int b = std::max(j, chosen);
            result.arcs.push_back({a, b, d.at(a, b), {j}});
        } else {
            // Every minimum-cost arc of j is already present; j keeps its
            // coverage through the existing arc and is noted as co-selector.
            find_arc(j, fallback)->selected_by.push_back(j);
        }
    }

    std::sort(result.arcs.begin(), result.arcs.end(), [](const auto& a, const auto& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    return result;
}

PropertyReport check_graph_properties(const ArcSet& a, const DistanceMatrix& d) {
    PropertyReport report;

    std::vector<bool> incident(static_cast<std::size_t>(a.n), false);
    for (const ArcSet::Arc& arc : a.arcs) {
        incident[static_cast<std::size_t>(arc.i)] = true;
        incident[static_cast<std::size_t>(arc.j)] = true;
    }
    report.every_node_incident =
        std::all_of(incident.begin(), incident.end(), [](bool b) { return b; });

    const std::size_t lower = static_cast<std::size_t>((a.n + 1) / 2);
    report.arc_count_in_bounds =
        a.size() >= lower && a.size() <= static_cast<std::size_t>(a.n);

    report.cycles = find_cycles(a);
    report.acyclic = report.cycles.empty();
    report.cycles_constant_weight = true;
    for (const std::vector<int>& cycle : report.cycles) {
        double wmin = std::numeric_limits<double>::infinity();
        double wmax = -wmin;
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const int u = cycle[k];
            const int v = cycle[(k + 1) % cycle.size()];
            const double w = d.at(std::min(u, v), std::max(u, v));
            wmin = std::min(wmin, w);
            wmax = std::max(wmax, w);
        }
        if (wmax - wmin > 1e-12)
            report.cycles_constant_weight = false;
    }

    if (report.acyclic) {
        const ArcSet tree = mst(d);
        report.subset_of_mst = std::all_of(a.arcs.begin(), a.arcs.end(), [&](const auto& arc) {
            return tree.contains(arc.i, arc.j);
        });
    }
    return report;
}

std::vector<std::vector<int>> connected_components(const ArcSet& a) {
    const auto adj = adjacency(a);
    std::vector<bool> seen(static_cast<std::size_t>(a.n), false);
    std::vector<std::vector<int>> components;
    for (int start = 0; start < a.n; ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<int> block;
        std::vector<int> queue{start};
        seen[static_cast<std::size_t>(start)] = true;
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            block.push_back(v);
            for (int u : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    queue.push_back(u);
                }
            }
        }
        std::sort(block.begin(), block.end());
        components.push_back(std::move(block));
    }
    return components;
}

} // namespace cohnet
