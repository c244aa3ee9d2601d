#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "cohnet/series.hpp"

namespace cohnet {

/// Welch estimator settings.
///
/// Coherence from a single unaveraged periodogram is identically one, so a
/// configuration must yield at least two segments for the given data length.
struct WelchConfig {
    std::size_t segment_length = 128; ///< must be a power of two, >= 16
    double overlap = 0.5;             ///< fraction of segment_length, in [0, 1)
    std::string window = "hann";      ///< "hann", "hamming" or "rect"
    double floor_rel = 1e-12;         ///< spectral floor, relative to max of each auto spectrum

    std::size_t hop() const;
    std::size_t segment_count(std::size_t samples) const;
    void validate() const;
};

/// Angular frequencies (radians/sample), strictly increasing in (0, pi].
struct FrequencyGrid {
    std::vector<double> omegas;

    std::size_t size() const { return omegas.size(); }
    void validate() const;
};

/// Auto/cross spectra and coherence for one ordered pair: x is the input
/// process, y the output. phi_xy is the cross spectrum of (x, y) under the
/// convention R_xy(tau) = E[x(t) y(t+tau)].
struct SpectralPair {
    FrequencyGrid grid;
    std::vector<double> phi_x;
    std::vector<double> phi_y;
    std::vector<std::complex<double>> phi_xy;
    std::vector<double> coherence; ///< |phi_xy|^2 / (phi_x * phi_y), clamped to [0, 1]
    std::vector<bool> floored;     ///< bins where an auto spectrum fell below the floor
    double floor_x = 0.0;          ///< absolute floor applied to phi_x
    double floor_y = 0.0;          ///< absolute floor applied to phi_y

    void validate() const;
};

/// Frequency response of the least-squares linear filter modeling y from x.
struct FilterResponse {
    FrequencyGrid grid;
    std::vector<std::complex<double>> values;
    std::vector<bool> unreliable; ///< bins whose denominator was floored
};

/// Welch-averaged spectra of a preprocessed pair on the FFT bin grid of the
/// segment length, DC excluded.
SpectralPair estimate_spectral_pair(const Series& x, const Series& y,
                                    const WelchConfig& config = {});

/// Frequency response phi_xy / phi_x per grid point. Bins where phi_x sits
/// below the spectral floor are computed against the floor and flagged.
FilterResponse wiener_response(const SpectralPair& p);

/// Normalized minimum modeling error: the quadrature approximation of
/// (1/pi) * integral over (0, pi] of (1 - coherence), in [0, 1].
double residual_cost(const SpectralPair& p);

} // namespace cohnet
