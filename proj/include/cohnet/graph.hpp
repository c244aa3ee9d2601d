#pragma once

#include <cstddef>
#include <vector>

#include "cohnet/metrics.hpp"

namespace cohnet {

/// Weighted undirected graph over node indices 0..n-1.
struct WeightedGraph {
    struct Edge {
        int i = 0; ///< i < j
        int j = 0;
        double w = 0.0;
    };

    int n = 0;
    std::vector<Edge> edges;

    void validate() const; ///< no self loops, no duplicates, endpoints in range
};

/// Complete graph weighted by a distance matrix.
WeightedGraph complete_graph(const DistanceMatrix& d);

/// Arcs selected by the clusterization step or by an MST extraction.
struct ArcSet {
    struct Arc {
        int i = 0; ///< i < j
        int j = 0;
        double weight = 0.0;
        std::vector<int> selected_by; ///< nodes whose minimum picked this arc
    };

    int n = 0;
    std::vector<Arc> arcs; ///< sorted by (i, j)

    std::size_t size() const { return arcs.size(); }
    bool contains(int i, int j) const;
};

/// Minimum spanning tree; deterministic under ties by ordering edges
/// lexicographically on (weight, i, j). Throws ConnectivityError when the
/// input graph does not span all nodes.
ArcSet mst(const WeightedGraph& g);
ArcSet mst(const DistanceMatrix& d);

/// Per-node minimum-distance arc selection. Each node contributes the arc to
/// its nearest neighbor; among tied minima the smallest index not already
/// linked to the node wins, and when every tied arc already exists the node
/// is recorded as a co-selector of the existing one.
ArcSet clusterize(const DistanceMatrix& d);

struct PropertyReport {
    bool every_node_incident = false;
    bool arc_count_in_bounds = false;  ///< ceil(n/2) <= |arcs| <= n
    bool cycles_constant_weight = true; ///< within 1e-12 per cycle
    bool acyclic = false;
    bool subset_of_mst = false; ///< evaluated only when acyclic
    std::vector<std::vector<int>> cycles; ///< node lists of detected cycles

    bool guaranteed_ok() const {
        return every_node_incident && arc_count_in_bounds && cycles_constant_weight;
    }
};

PropertyReport check_graph_properties(const ArcSet& a, const DistanceMatrix& d);

/// Partition of 0..n-1 into connected blocks, each sorted, ordered by their
/// smallest member.
std::vector<std::vector<int>> connected_components(const ArcSet& a);

} // namespace cohnet
