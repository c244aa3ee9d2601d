#include "cohnet/simgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cohnet {

namespace {

constexpr double kPoleCap = 0.9;

double sample_variance(const std::vector<double>& v, std::size_t from) {
    const std::size_t n = v.size() - from;
    double mean = 0.0;
    for (std::size_t t = from; t < v.size(); ++t)
        mean += v[t];
    mean /= static_cast<double>(n);
    double acc = 0.0;
    for (std::size_t t = from; t < v.size(); ++t) {
        const double c = v[t] - mean;
        acc += c * c;
    }
    return acc / static_cast<double>(n);
}

} // namespace

double TransferFunction2::max_pole_modulus() const {
    // Poles are the roots of z^2 + a1 z + a2.
    const double a1 = a[1];
    const double a2 = a[2];
    const double disc = a1 * a1 - 4.0 * a2;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        return std::max(std::abs((-a1 + s) / 2.0), std::abs((-a1 - s) / 2.0));
    }
    return std::sqrt(a2); // conjugate pair, |z|^2 = a2
}

std::complex<double> TransferFunction2::response(double omega) const {
    const std::complex<double> e1 = std::polar(1.0, -omega);
    const std::complex<double> e2 = e1 * e1;
    return (b[0] + b[1] * e1 + b[2] * e2) / (a[0] + a[1] * e1 + a[2] * e2);
}

std::vector<double> apply_filter(const TransferFunction2& tf, const std::vector<double>& input) {
    std::vector<double> out(input.size());
    double x1 = 0.0, x2 = 0.0, y1 = 0.0, y2 = 0.0;
    for (std::size_t t = 0; t < input.size(); ++t) {
        const double xt = input[t];
        const double yt =
            tf.b[0] * xt + tf.b[1] * x1 + tf.b[2] * x2 - tf.a[1] * y1 - tf.a[2] * y2;
        x2 = x1;
        x1 = xt;
        y2 = y1;
        y1 = yt;
        out[t] = yt;
    }
    return out;
}

void NetworkSpec::validate() const {
    if (n < 2)
        throw ValidationError("network: need at least 2 nodes");
    if (root < 1 || root > n)
        throw ValidationError("network: root id out of range");
    if (!(noise_ratio >= 0.0 && noise_ratio <= 1.0))
        throw ValidationError("network: noise_ratio must lie in [0, 1]");
    if (parent.size() != static_cast<std::size_t>(n) - 1)
        throw ValidationError("network: parent map must cover every non-root node");
    for (const auto& [node, par] : parent) {
        if (node < 1 || node > n || node == root)
            throw ValidationError("network: bad node id " + std::to_string(node) +
                                  " in parent map");
        if (par < 1 || par > n || par == node)
            throw ValidationError("network: bad parent for node " + std::to_string(node));
        auto it = filters.find(node);
        if (it == filters.end())
            throw ValidationError("network: missing filter for node " + std::to_string(node));
        if (!it->second.stable(kPoleCap))
            throw ValidationError("network: unstable link filter at node " +
                                  std::to_string(node));
    }
    // Reachability from the root certifies the parent relation is a tree.
    if (topological_order().size() != static_cast<std::size_t>(n))
        throw ValidationError("network: parent relation is not a tree rooted at " +
                              std::to_string(root));
}

std::vector<std::pair<int, int>> NetworkSpec::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(parent.size());
    for (const auto& [node, par] : parent)
        out.emplace_back(std::min(node, par), std::max(node, par));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> NetworkSpec::topological_order() const {
    std::vector<std::vector<int>> children(static_cast<std::size_t>(n) + 1);
    for (const auto& [node, par] : parent)
        if (par >= 1 && par <= n)
            children[static_cast<std::size_t>(par)].push_back(node);
    for (auto& c : children)
        std::sort(c.begin(), c.end());

    std::vector<int> order;
    std::vector<int> queue{root};
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    seen[static_cast<std::size_t>(root)] = true;
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        order.push_back(v);
        for (int c : children[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = true;
                queue.push_back(c);
            }
        }
    }
    return order;
}

std::map<int, int> random_tree(int n, std::mt19937_64& rng) {
    if (n < 2)
        throw RangeError("random_tree: need at least 2 nodes");
    std::map<int, int> parent;
    for (int k = 2; k <= n; ++k) {
        std::uniform_int_distribution<int> pick(1, k - 1);
        parent[k] = pick(rng);
    }
    return parent;
}

std::map<int, int> random_tree(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_tree(n, rng);
}

TransferFunction2 random_filter(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto coin = [&] { return unit(rng) < 0.5; };
    auto sign = [&] { return coin() ? 1.0 : -1.0; };
    std::uniform_real_distribution<double> pole_mod(0.3, kPoleCap);
    std::uniform_real_distribution<double> angle(0.0, std::acos(-1.0));
    std::uniform_real_distribution<double> zero_real(-1.0, 1.0);
    std::uniform_real_distribution<double> gain_mag(0.5, 2.0);

    TransferFunction2 tf;
    const bool second_order = unit(rng) < 0.75;
    if (second_order) {
        if (coin()) { // conjugate pole pair r e^{+-i theta}
            const double r = pole_mod(rng);
            const double th = angle(rng);
            tf.a[1] = -2.0 * r * std::cos(th);
            tf.a[2] = r * r;
        } else { // two real poles, independent signs
            const double p1 = sign() * pole_mod(rng);
            const double p2 = sign() * pole_mod(rng);
            tf.a[1] = -(p1 + p2);
            tf.a[2] = p1 * p2;
        }
        if (coin()) { // conjugate zero pair
            const double r = unit(rng);
            const double th = angle(rng);
            tf.b[1] = -2.0 * r * std::cos(th);
            tf.b[2] = r * r;
        } else {
            const double z1 = zero_real(rng);
            const double z2 = zero_real(rng);
            tf.b[1] = -(z1 + z2);
            tf.b[2] = z1 * z2;
        }
    } else { // first order: a2 = 0, b2 = 0
        const double p = sign() * pole_mod(rng);
        tf.a[1] = -p;
        tf.a[2] = 0.0;
        tf.b[1] = -zero_real(rng);
        tf.b[2] = 0.0;
    }
    const double g = sign() * gain_mag(rng);
    for (double& c : tf.b)
        c *= g;
    return tf;
}

TransferFunction2 random_filter(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_filter(rng);
}

NetworkSpec random_network(int n, double noise_ratio, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    NetworkSpec spec;
    spec.n = n;
    spec.root = 1;
    spec.noise_ratio = noise_ratio;
    spec.parent = random_tree(n, rng);
    for (int k = 2; k <= n; ++k)
        spec.filters[k] = random_filter(rng);
    spec.validate();
    return spec;
}

SimulationRun synthesize(const NetworkSpec& spec, std::size_t steps, std::uint64_t seed) {
    spec.validate();
    if (steps < 100)
        throw RangeError("synthesize: need at least 100 steps");

    const std::size_t total = steps + kWarmupSamples;
    const std::size_t nodes = static_cast<std::size_t>(spec.n);

    // Noise streams are drawn upfront in node-id order so the realization is
    // a function of (n, seed, total) alone.
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<double>> noise(nodes);
    for (std::size_t k = 0; k < nodes; ++k) {
        noise[k].resize(total);
        for (double& v : noise[k])
            v = gauss(rng);
    }

    std::vector<std::vector<double>> signal(nodes);
    const double ratio = spec.noise_ratio;
    for (int node : spec.topological_order()) {
        const std::size_t idx = static_cast<std::size_t>(node - 1);
        if (node == spec.root) {
            signal[idx] = noise[idx];
            continue;
        }
        const std::size_t pidx = static_cast<std::size_t>(spec.parent.at(node) - 1);
        std::vector<double> det = apply_filter(spec.filters.at(node), signal[pidx]);
        if (ratio >= 1.0) {
            signal[idx] = noise[idx];
        } else if (ratio <= 0.0) {
            signal[idx] = std::move(det);
        } else {
            const double vs = sample_variance(det, kWarmupSamples);
            const double vu = sample_variance(noise[idx], kWarmupSamples);
            if (vs <= 0.0 || vu <= 0.0)
                throw ValidationError("synthesize: degenerate component variance at node " +
                                      std::to_string(node));
            const double sigma = std::sqrt(ratio / (1.0 - ratio) * vs / vu);
            signal[idx].resize(total);
            for (std::size_t t = 0; t < total; ++t)
                signal[idx][t] = det[t] + sigma * noise[idx][t];
        }
    }

    SimulationRun run;
    run.spec = spec;
    run.seed = seed;
    run.steps = steps;
    run.ensemble.series.resize(nodes);
    for (std::size_t k = 0; k < nodes; ++k) {
        Series& s = run.ensemble.series[k];
        s.id = static_cast<int>(k) + 1;
        s.values.assign(signal[k].begin() + static_cast<std::ptrdiff_t>(kWarmupSamples),
                        signal[k].end());
    }
    return run;
}

SimulationRun random_run(int n, double noise_ratio, std::size_t steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const NetworkSpec spec = random_network(n, noise_ratio, rng());
    return synthesize(spec, steps, rng());
}

} // namespace cohnet
