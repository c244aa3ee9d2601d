#pragma once

#include <cstddef>
#include <vector>

#include "cohnet/errors.hpp"

namespace cohnet {

/// One realization of a stationary process.
struct Series {
    int id = 0;                 ///< process index, 1-based
    std::vector<double> values;

    std::size_t length() const { return values.size(); }
};

/// A set of series of uniform length whose ids form a contiguous 1..N range.
struct Ensemble {
    std::vector<Series> series;

    int count() const { return static_cast<int>(series.size()); }
    std::size_t length() const { return series.empty() ? 0 : series.front().length(); }

    /// Throws ValidationError unless lengths are uniform (>= 2), samples are
    /// finite and ids are exactly 1..N in order.
    void validate() const;

    const Series& by_id(int id) const;
};

/// Returns the series with its sample mean removed.
Series preprocess(const Series& s);

/// Biased sample cross-covariance (1/T) * sum_t x(t) * y(t+lag).
/// Inputs are expected to be zero-mean (see preprocess).
double cross_covariance(const Series& x, const Series& y, long lag);

/// Zero-lag correlation, clamped to [-1, 1].
double correlation_index(const Series& x, const Series& y);

/// Least-squares constant gain for modeling y from x.
double optimal_gain(const Series& x, const Series& y);

/// Mean-square error left after modeling y with the optimal gain on x.
double residual_energy(const Series& x, const Series& y);

} // namespace cohnet
