#include "cohnet/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace cohnet {

void Ensemble::validate() const {
    if (series.empty())
        throw ValidationError("ensemble: no series");
    const std::size_t T = series.front().length();
    if (T < 2)
        throw ValidationError("ensemble: series length must be at least 2");
    for (std::size_t k = 0; k < series.size(); ++k) {
        const Series& s = series[k];
        if (s.length() != T)
            throw ValidationError("ensemble: series X" + std::to_string(s.id) +
                                  " has length " + std::to_string(s.length()) +
                                  ", expected " + std::to_string(T));
        if (s.id != static_cast<int>(k) + 1)
            throw ValidationError("ensemble: ids must be contiguous 1..N, found id " +
                                  std::to_string(s.id) + " at position " + std::to_string(k + 1));
        for (double v : s.values)
            if (!std::isfinite(v))
                throw ValidationError("ensemble: non-finite sample in series X" +
                                      std::to_string(s.id));
    }
}

const Series& Ensemble::by_id(int id) const {
    if (id < 1 || id > count())
        throw RangeError("ensemble: no series with id " + std::to_string(id));
    return series[static_cast<std::size_t>(id - 1)];
}

Series preprocess(const Series& s) {
    if (s.length() < 2)
        throw DegenerateInputError("preprocess: series needs at least 2 samples");
    double sum = 0.0;
    for (double v : s.values) {
        if (!std::isfinite(v))
            throw DegenerateInputError("preprocess: non-finite sample");
        sum += v;
    }
    const double mean = sum / static_cast<double>(s.length());
    Series out;
    out.id = s.id;
    out.values.reserve(s.length());
    for (double v : s.values)
        out.values.push_back(v - mean);
    return out;
}

double cross_covariance(const Series& x, const Series& y, long lag) {
    const std::size_t T = x.length();
    if (y.length() != T)
        throw DegenerateInputError("cross_covariance: length mismatch");
    if (T == 0 || static_cast<std::size_t>(std::labs(lag)) >= T)
        throw RangeError("cross_covariance: |lag| must be smaller than the series length");

    // Biased estimate: the sum over valid t is divided by T, not by the
    // overlap length, so the covariance sequence stays positive semidefinite.
    double acc = 0.0;
    if (lag >= 0) {
        const std::size_t n = T - static_cast<std::size_t>(lag);
        for (std::size_t t = 0; t < n; ++t)
            acc += x.values[t] * y.values[t + static_cast<std::size_t>(lag)];
    } else {
        const std::size_t shift = static_cast<std::size_t>(-lag);
        const std::size_t n = T - shift;
        for (std::size_t t = 0; t < n; ++t)
            acc += x.values[t + shift] * y.values[t];
    }
    return acc / static_cast<double>(T);
}

double correlation_index(const Series& x, const Series& y) {
    const double rx = cross_covariance(x, x, 0);
    const double ry = cross_covariance(y, y, 0);
    if (rx <= 0.0 || ry <= 0.0)
        throw DegenerateInputError("correlation_index: zero variance input");
    const double rho = cross_covariance(x, y, 0) / std::sqrt(rx * ry);
    // Rounding can push the quotient past the closed interval by ~1e-16.
    return std::clamp(rho, -1.0, 1.0);
}

double optimal_gain(const Series& x, const Series& y) {
    const double rx = cross_covariance(x, x, 0);
    if (rx <= 0.0)
        throw DegenerateInputError("optimal_gain: zero variance input");
    return cross_covariance(x, y, 0) / rx;
}

double residual_energy(const Series& x, const Series& y) {
    const double rx = cross_covariance(x, x, 0);
    if (rx <= 0.0)
        throw DegenerateInputError("residual_energy: zero variance input");
    const double ry = cross_covariance(y, y, 0);
    const double rxy = cross_covariance(x, y, 0);
    return std::max(0.0, ry - rxy * rxy / rx);
}

} // namespace cohnet
