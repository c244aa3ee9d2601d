#include "cohnet/eval.hpp"

#include <algorithm>
#include <string>

namespace cohnet {

namespace {

std::vector<std::pair<int, int>> arc_edges(const ArcSet& a) {
    std::vector<std::pair<int, int>> out;
    out.reserve(a.arcs.size());
    for (const ArcSet::Arc& arc : a.arcs)
        out.emplace_back(arc.i + 1, arc.j + 1);
    std::sort(out.begin(), out.end());
    return out;
}

DistanceMatrix matrix_or_throw(DistanceResult&& r) {
    if (!r.ok()) {
        std::string msg = "distance computation failed for pairs:";
        for (const PairFailure& f : r.failures)
            msg += " (" + std::to_string(f.i + 1) + "," + std::to_string(f.j + 1) + ")";
        throw DegenerateInputError(msg);
    }
    return std::move(r.matrix);
}

} // namespace

TopologyScore score_topology(const NetworkSpec& truth, const ArcSet& found) {
    if (truth.n != found.n)
        throw ValidationError("score_topology: node counts differ (" + std::to_string(truth.n) +
                              " vs " + std::to_string(found.n) + ")");

    TopologyScore score;
    score.true_edges = truth.edges();
    score.found_edges = arc_edges(found);

    std::vector<std::pair<int, int>> common;
    std::set_intersection(score.true_edges.begin(), score.true_edges.end(),
                          score.found_edges.begin(), score.found_edges.end(),
                          std::back_inserter(common));
    score.shared = static_cast<int>(common.size());
    score.recall = score.true_edges.empty()
                       ? 0.0
                       : static_cast<double>(score.shared) / score.true_edges.size();
    score.precision = score.found_edges.empty()
                          ? 0.0
                          : static_cast<double>(score.shared) / score.found_edges.size();
    score.exact = score.true_edges == score.found_edges;
    return score;
}

ComparisonReport compare_metrics(const SimulationRun& run, const WelchConfig& config) {
    ComparisonReport report;
    report.correlation_distances =
        matrix_or_throw(build_distance_matrix(run.ensemble, MetricKind::correlation));
    report.coherence_distances =
        matrix_or_throw(build_distance_matrix(run.ensemble, MetricKind::coherence, config));

    report.correlation_mst = mst(report.correlation_distances);
    report.coherence_mst = mst(report.coherence_distances);
    report.coherence_forest = clusterize(report.coherence_distances);
    report.forest_properties =
        check_graph_properties(report.coherence_forest, report.coherence_distances);

    report.correlation_mst_score = score_topology(run.spec, report.correlation_mst);
    report.coherence_mst_score = score_topology(run.spec, report.coherence_mst);
    report.coherence_forest_score = score_topology(run.spec, report.coherence_forest);
    return report;
}

} // namespace cohnet
