#include "cohnet/metrics.hpp"

#include <cmath>
#include <limits>

namespace cohnet {

std::string to_string(MetricKind kind) {
    switch (kind) {
    case MetricKind::correlation: return "correlation";
    case MetricKind::static_ls: return "static";
    case MetricKind::coherence: return "coherence";
    }
    return "unknown";
}

MetricKind metric_kind_from_string(const std::string& name) {
    if (name == "correlation")
        return MetricKind::correlation;
    if (name == "static" || name == "static_ls")
        return MetricKind::static_ls;
    if (name == "coherence")
        return MetricKind::coherence;
    throw ValidationError("unknown metric '" + name + "'");
}

void DistanceMatrix::validate() const {
    if (n < 2)
        throw ValidationError("distance matrix: need at least 2 processes");
    if (d.size() != static_cast<std::size_t>(n) * n)
        throw ValidationError("distance matrix: storage size mismatch");
    const double bound = max_entry() + 1e-9;
    for (int i = 0; i < n; ++i) {
        if (std::abs(at(i, i)) > 1e-9)
            throw ValidationError("distance matrix: nonzero diagonal at index " +
                                  std::to_string(i + 1));
        for (int j = 0; j < n; ++j) {
            const double v = at(i, j);
            if (!std::isfinite(v) || v < 0.0 || v > bound)
                throw ValidationError("distance matrix: invalid entry at (" +
                                      std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
            if (std::abs(v - at(j, i)) > 1e-12)
                throw ValidationError("distance matrix: asymmetric at (" +
                                      std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
        }
    }
}

double correlation_distance(double rho) {
    if (!(rho >= -1.0 && rho <= 1.0))
        throw RangeError("correlation_distance: rho outside [-1, 1]");
    return std::sqrt(2.0 * (1.0 - rho));
}

double static_distance(double rho) {
    if (!(rho >= -1.0 && rho <= 1.0))
        throw RangeError("static_distance: rho outside [-1, 1]");
    return std::sqrt(std::max(0.0, 1.0 - rho * rho));
}

double coherence_distance(const SpectralPair& p) {
    return std::sqrt(residual_cost(p));
}

DistanceResult build_distance_matrix(const Ensemble& e, MetricKind kind,
                                     const WelchConfig& config) {
    e.validate();
    const int n = e.count();
    if (n < 2)
        throw DegenerateInputError("distance matrix: need at least 2 series");

    if (kind == MetricKind::coherence) {
        config.validate();
        if (e.length() < config.segment_length)
            throw InsufficientDataError("distance matrix: series shorter than one Welch segment");
        if (config.segment_count(e.length()) < 2)
            throw DegenerateCoherenceError(
                "distance matrix: Welch configuration yields fewer than 2 segments");
    }

    std::vector<Series> pre;
    pre.reserve(static_cast<std::size_t>(n));
    for (const Series& s : e.series)
        pre.push_back(preprocess(s));

    DistanceResult result;
    result.matrix.n = n;
    result.matrix.kind = kind;
    result.matrix.welch = config;
    result.matrix.d.assign(static_cast<std::size_t>(n) * n, 0.0);

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double dist;
            try {
                switch (kind) {
                case MetricKind::correlation:
                    dist = correlation_distance(correlation_index(pre[i], pre[j]));
                    break;
                case MetricKind::static_ls:
                    dist = static_distance(correlation_index(pre[i], pre[j]));
                    break;
                case MetricKind::coherence:
                default:
                    dist = coherence_distance(estimate_spectral_pair(pre[i], pre[j], config));
                    break;
                }
            } catch (const DegenerateInputError& ex) {
                result.failures.push_back({i, j, ex.what()});
                dist = std::numeric_limits<double>::quiet_NaN();
            }
            result.matrix.at(i, j) = dist;
            result.matrix.at(j, i) = dist;
        }
    }
    return result;
}

} // namespace cohnet
