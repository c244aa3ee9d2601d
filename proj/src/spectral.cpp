#include "cohnet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include <fftw3.h>

namespace cohnet {

namespace {

// FFTW plan creation and destruction are not thread safe; execution of
// distinct plans is.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

class RealFft {
public:
    explicit RealFft(std::size_t n)
        : n_(n),
          in_(fftw_alloc_real(n)),
          out_(fftw_alloc_complex(n / 2 + 1)) {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), in_, out_, FFTW_ESTIMATE);
    }

    RealFft(const RealFft&) = delete;
    RealFft& operator=(const RealFft&) = delete;

    ~RealFft() {
        {
            std::lock_guard<std::mutex> lock(fftw_mutex());
            fftw_destroy_plan(plan_);
        }
        fftw_free(in_);
        fftw_free(out_);
    }

    double* input() { return in_; }
    void execute() { fftw_execute(plan_); }
    std::complex<double> bin(std::size_t k) const { return {out_[k][0], out_[k][1]}; }

private:
    std::size_t n_;
    double* in_;
    fftw_complex* out_;
    fftw_plan plan_;
};

std::vector<double> make_window(const std::string& name, std::size_t n) {
    std::vector<double> w(n, 1.0);
    if (name == "rect")
        return w;
    const double pi = std::numbers::pi;
    for (std::size_t k = 0; k < n; ++k) {
        const double phase = 2.0 * pi * static_cast<double>(k) / static_cast<double>(n - 1);
        if (name == "hann")
            w[k] = 0.5 - 0.5 * std::cos(phase);
        else // hamming
            w[k] = 0.54 - 0.46 * std::cos(phase);
    }
    return w;
}

bool power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

} // namespace

std::size_t WelchConfig::hop() const {
    const double h = static_cast<double>(segment_length) * (1.0 - overlap);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(h)));
}

std::size_t WelchConfig::segment_count(std::size_t samples) const {
    if (samples < segment_length)
        return 0;
    return (samples - segment_length) / hop() + 1;
}

void WelchConfig::validate() const {
    if (!power_of_two(segment_length) || segment_length < 16)
        throw ValidationError("welch: segment_length must be a power of two, at least 16");
    if (!(overlap >= 0.0 && overlap < 1.0))
        throw ValidationError("welch: overlap must lie in [0, 1)");
    if (window != "hann" && window != "hamming" && window != "rect")
        throw ValidationError("welch: unknown window '" + window + "'");
    if (!(floor_rel > 0.0 && floor_rel < 1.0))
        throw ValidationError("welch: floor_rel must lie in (0, 1)");
}

void FrequencyGrid::validate() const {
    if (omegas.size() < 8)
        throw ValidationError("frequency grid: need at least 8 points");
    const double pi = std::numbers::pi;
    double prev = 0.0;
    for (double w : omegas) {
        if (!(w > prev) || w > pi + 1e-15)
            throw ValidationError("frequency grid: points must increase strictly within (0, pi]");
        prev = w;
    }
}

void SpectralPair::validate() const {
    grid.validate();
    const std::size_t k = grid.size();
    if (phi_x.size() != k || phi_y.size() != k || phi_xy.size() != k ||
        coherence.size() != k || floored.size() != k)
        throw ValidationError("spectral pair: inconsistent array sizes");
    for (std::size_t i = 0; i < k; ++i) {
        if (phi_x[i] < 0.0 || phi_y[i] < 0.0)
            throw ValidationError("spectral pair: negative auto spectrum");
        if (coherence[i] < 0.0 || coherence[i] > 1.0)
            throw ValidationError("spectral pair: coherence outside [0, 1]");
    }
}

SpectralPair estimate_spectral_pair(const Series& x, const Series& y,
                                    const WelchConfig& config) {
    config.validate();
    const std::size_t T = x.length();
    if (y.length() != T)
        throw DegenerateInputError("spectral pair: length mismatch");
    const std::size_t L = config.segment_length;
    if (T < L)
        throw InsufficientDataError("spectral pair: series shorter than one segment (" +
                                    std::to_string(T) + " < " + std::to_string(L) + ")");
    const std::size_t segments = config.segment_count(T);
    if (segments < 2)
        throw DegenerateCoherenceError(
            "spectral pair: configuration yields a single segment; coherence would be "
            "identically 1");

    const std::vector<double> win = make_window(config.window, L);
    double win_power = 0.0;
    for (double w : win)
        win_power += w * w;

    const std::size_t bins = L / 2; // FFT bins 1..L/2, DC dropped
    std::vector<double> pxx(bins, 0.0), pyy(bins, 0.0);
    std::vector<std::complex<double>> pxy(bins, {0.0, 0.0});
    std::vector<std::complex<double>> fx(bins);

    RealFft fft(L);
    const std::size_t hop = config.hop();
    for (std::size_t s = 0; s < segments; ++s) {
        const std::size_t off = s * hop;
        double* in = fft.input();
        for (std::size_t k = 0; k < L; ++k)
            in[k] = x.values[off + k] * win[k];
        fft.execute();
        for (std::size_t k = 0; k < bins; ++k)
            fx[k] = fft.bin(k + 1);

        for (std::size_t k = 0; k < L; ++k)
            in[k] = y.values[off + k] * win[k];
        fft.execute();
        for (std::size_t k = 0; k < bins; ++k) {
            const std::complex<double> fy = fft.bin(k + 1);
            pxx[k] += std::norm(fx[k]);
            pyy[k] += std::norm(fy);
            pxy[k] += std::conj(fx[k]) * fy;
        }
    }

    const double scale = 1.0 / (static_cast<double>(segments) * win_power);
    SpectralPair p;
    p.grid.omegas.resize(bins);
    p.phi_x.resize(bins);
    p.phi_y.resize(bins);
    p.phi_xy.resize(bins);
    p.coherence.resize(bins);
    p.floored.assign(bins, false);
    const double pi = std::numbers::pi;
    for (std::size_t k = 0; k < bins; ++k) {
        p.grid.omegas[k] = 2.0 * pi * static_cast<double>(k + 1) / static_cast<double>(L);
        p.phi_x[k] = pxx[k] * scale;
        p.phi_y[k] = pyy[k] * scale;
        p.phi_xy[k] = pxy[k] * scale;
    }

    const double max_x = *std::max_element(p.phi_x.begin(), p.phi_x.end());
    const double max_y = *std::max_element(p.phi_y.begin(), p.phi_y.end());
    if (max_x <= 0.0 || max_y <= 0.0)
        throw DegenerateInputError("spectral pair: zero spectral power");
    p.floor_x = config.floor_rel * max_x;
    p.floor_y = config.floor_rel * max_y;

    for (std::size_t k = 0; k < bins; ++k) {
        const double dx = std::max(p.phi_x[k], p.floor_x);
        const double dy = std::max(p.phi_y[k], p.floor_y);
        if (p.phi_x[k] < p.floor_x || p.phi_y[k] < p.floor_y)
            p.floored[k] = true;
        p.coherence[k] = std::clamp(std::norm(p.phi_xy[k]) / (dx * dy), 0.0, 1.0);
    }
    return p;
}

FilterResponse wiener_response(const SpectralPair& p) {
    p.validate();
    const std::size_t bins = p.grid.size();
    FilterResponse r;
    r.grid = p.grid;
    r.values.resize(bins);
    r.unreliable.assign(bins, false);
    for (std::size_t k = 0; k < bins; ++k) {
        const double denom = std::max(p.phi_x[k], p.floor_x);
        if (denom <= 0.0)
            throw DegenerateInputError("wiener_response: zero input spectrum with no floor");
        if (p.phi_x[k] < p.floor_x)
            r.unreliable[k] = true;
        r.values[k] = p.phi_xy[k] / denom;
    }
    return r;
}

double residual_cost(const SpectralPair& p) {
    p.validate();
    const std::vector<double>& w = p.grid.omegas;
    const std::vector<double>& c = p.coherence;
    const std::size_t bins = w.size();

    // Trapezoid over the grid plus a constant-extension strip covering
    // [0, omega_1); the integrand is even in omega, so the half-line integral
    // normalized by pi equals the full one normalized by 2*pi.
    double acc = (1.0 - c[0]) * w[0];
    for (std::size_t k = 1; k < bins; ++k)
        acc += 0.5 * ((1.0 - c[k - 1]) + (1.0 - c[k])) * (w[k] - w[k - 1]);
    return std::clamp(acc / std::numbers::pi, 0.0, 1.0);
}

} // namespace cohnet
