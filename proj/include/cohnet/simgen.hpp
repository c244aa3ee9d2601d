#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "cohnet/series.hpp"

namespace cohnet {

/// Discrete-time SISO transfer function of order at most two,
/// b(z^-1) / a(z^-1) with a0 fixed to 1.
struct TransferFunction2 {
    std::array<double, 3> b{1.0, 0.0, 0.0};
    std::array<double, 3> a{1.0, 0.0, 0.0};

    double max_pole_modulus() const;
    bool stable(double pole_cap = 0.9) const { return max_pole_modulus() <= pole_cap; }

    /// Frequency response at angular frequency omega (radians/sample).
    std::complex<double> response(double omega) const;
};

/// Runs the filter over the input with zero initial conditions.
std::vector<double> apply_filter(const TransferFunction2& tf, const std::vector<double>& input);

/// Ground-truth generative model: a tree of SISO links driven from a white
/// root, with independent white disturbances at every non-root node.
struct NetworkSpec {
    int n = 0;
    int root = 1;                           ///< node ids are 1-based
    std::map<int, int> parent;              ///< node -> parent, root excluded
    std::map<int, TransferFunction2> filters; ///< node -> link filter from its parent
    double noise_ratio = 0.5;               ///< fraction of each node's power from its noise

    void validate() const;

    /// Undirected ground-truth edges as (min, max) id pairs, sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Node ids ordered so that parents precede children.
    std::vector<int> topological_order() const;
};

struct SimulationRun {
    NetworkSpec spec;
    std::uint64_t seed = 0;
    std::size_t steps = 0;
    Ensemble ensemble;
};

/// Uniform random recursive tree: node k >= 2 attaches to a parent drawn
/// uniformly from 1..k-1.
std::map<int, int> random_tree(int n, std::uint64_t seed);
std::map<int, int> random_tree(int n, std::mt19937_64& rng);

/// Random stable filter: pole pair (real or conjugate) with modulus in
/// [0.3, 0.9], zeros with modulus at most 1, gain in [0.5, 2] with random
/// sign. A quarter of the draws degenerate to first order.
TransferFunction2 random_filter(std::uint64_t seed);
TransferFunction2 random_filter(std::mt19937_64& rng);

/// Random tree topology plus a random link filter per non-root node.
NetworkSpec random_network(int n, double noise_ratio, std::uint64_t seed);

/// Samples dropped before the retained window to wash out filter transients.
inline constexpr std::size_t kWarmupSamples = 200;

/// Simulates the network for `steps` retained samples. Each non-root node is
/// its filtered parent plus white noise scaled so the noise contributes
/// `noise_ratio` of the node's power, measured on the retained window.
SimulationRun synthesize(const NetworkSpec& spec, std::size_t steps, std::uint64_t seed);

/// Draws a random network and simulates it, all from one seed.
SimulationRun random_run(int n, double noise_ratio, std::size_t steps, std::uint64_t seed);

} // namespace cohnet
