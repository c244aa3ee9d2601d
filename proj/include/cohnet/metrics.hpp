#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cohnet/series.hpp"
#include "cohnet/spectral.hpp"

namespace cohnet {

enum class MetricKind {
    correlation, ///< sqrt(2 (1 - rho)), in [0, 2]
    static_ls,   ///< sqrt(1 - rho^2), in [0, 1]
    coherence,   ///< sqrt of the normalized Wiener residual, in [0, 1]
};

std::string to_string(MetricKind kind);
MetricKind metric_kind_from_string(const std::string& name);

/// Symmetric pairwise distance matrix over process indices 0..n-1.
struct DistanceMatrix {
    int n = 0;
    MetricKind kind = MetricKind::correlation;
    std::vector<double> d;    ///< n*n, row major
    WelchConfig welch;        ///< estimator settings used for coherence runs

    double at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
    double& at(int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; }

    double max_entry() const { return kind == MetricKind::correlation ? 2.0 : 1.0; }

    /// Symmetry within 1e-12, zero diagonal, finite entries in [0, max].
    void validate() const;
};

double correlation_distance(double rho);
double static_distance(double rho);
double coherence_distance(const SpectralPair& p);

struct PairFailure {
    int i = 0;
    int j = 0;
    std::string reason;
};

/// Matrix plus the pairs that could not be computed; failed entries are NaN.
struct DistanceResult {
    DistanceMatrix matrix;
    std::vector<PairFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// All pairwise distances of the requested kind. Series are preprocessed
/// internally. Degenerate pairs are reported rather than aborting the run;
/// configuration-level problems (segment length vs data length) still throw.
DistanceResult build_distance_matrix(const Ensemble& e, MetricKind kind,
                                     const WelchConfig& config = {});

} // namespace cohnet
