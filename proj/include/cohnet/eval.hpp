#pragma once

#include <utility>
#include <vector>

#include "cohnet/graph.hpp"
#include "cohnet/simgen.hpp"

namespace cohnet {

/// Undirected edge-set comparison of a reconstruction against ground truth.
/// Edges are (min, max) pairs of 1-based node ids.
struct TopologyScore {
    std::vector<std::pair<int, int>> true_edges;
    std::vector<std::pair<int, int>> found_edges;
    int shared = 0;
    double recall = 0.0;    ///< |true & found| / |true|
    double precision = 0.0; ///< |true & found| / |found|
    bool exact = false;
};

TopologyScore score_topology(const NetworkSpec& truth, const ArcSet& found);

/// Head-to-head run of the correlation and coherence pipelines on one
/// simulated ensemble.
struct ComparisonReport {
    DistanceMatrix correlation_distances;
    DistanceMatrix coherence_distances;
    ArcSet correlation_mst;
    ArcSet coherence_mst;
    ArcSet coherence_forest;
    PropertyReport forest_properties;
    TopologyScore correlation_mst_score;
    TopologyScore coherence_mst_score;
    TopologyScore coherence_forest_score;
};

ComparisonReport compare_metrics(const SimulationRun& run, const WelchConfig& config = {});

} // namespace cohnet
