#pragma once

// Seeded, reproducible Monte Carlo estimation of cluster-count
// distributions. Each trial draws from its own counter-derived stream, so
// the histogram is a pure function of (n, trials, seed) no matter how the
// trials are scheduled across workers.

#include "sticky/diagram.hpp"
#include "sticky/numeric.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

namespace sticky {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// SplitMix64. The generator is part of the output contract: histograms must
// be bit-identical across platforms and runs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        state_ += kGolden;
        return mix64(state_);
    }

private:
    std::uint64_t state_;
};

// Stream for trial t: SplitMix64 started from mix64(seed + golden*(t+1)).
// Distinct trials get distinct, decorrelated starting states.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(mix64(seed + kGolden * (trial + 1)));
}

// The n +/-1 velocity draws of one trial, 64 draws per generator word.
inline std::vector<int> trial_velocities(std::uint64_t seed, std::uint64_t trial,
                                         std::size_t n) {
    SplitMix64 stream = trial_stream(seed, trial);
    std::vector<int> velocities(n);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i % 64 == 0) {
            word = stream.next();
        }
        velocities[i] = (word >> (i % 64)) & 1 ? 1 : -1;
    }
    return velocities;
}

} // namespace detail

enum class VelocityModel {
    UnitMassPlusMinusOne,
};

struct McConfig {
    std::size_t n = 1;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    VelocityModel model = VelocityModel::UnitMassPlusMinusOne;
};

struct McResult {
    std::map<std::size_t, std::uint64_t> histogram;
    std::uint64_t trials = 0;

    Rational exact_frequency(std::size_t k) const {
        auto it = histogram.find(k);
        const std::uint64_t count = it == histogram.end() ? 0 : it->second;
        return make_rational(BigInt(count), BigInt(trials));
    }

    double estimate(std::size_t k) const {
        auto it = histogram.find(k);
        const std::uint64_t count = it == histogram.end() ? 0 : it->second;
        return static_cast<double>(count) / static_cast<double>(trials);
    }

    double std_error(std::size_t k) const {
        const double p = estimate(k);
        return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    }

    friend bool operator==(const McResult&, const McResult&) = default;
};

inline McResult sample_cluster_counts(const McConfig& config, unsigned workers = 1) {
    if (config.n < 1) {
        throw ValidationError("monte carlo needs n >= 1");
    }
    if (config.trials < 1) {
        throw ValidationError("monte carlo needs trials >= 1");
    }
    if (workers < 1) {
        throw ValidationError("monte carlo needs workers >= 1");
    }

    const std::uint64_t worker_count =
        std::min<std::uint64_t>(workers, config.trials);
    std::vector<std::vector<std::uint64_t>> tallies(
        static_cast<std::size_t>(worker_count),
        std::vector<std::uint64_t>(config.n + 1, 0));

    auto run_range = [&](std::size_t w, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t>& tally = tallies[w];
        std::vector<Particle> particles(config.n);
        for (std::uint64_t t = lo; t < hi; ++t) {
            const std::vector<int> velocities =
                detail::trial_velocities(config.seed, t, config.n);
            for (std::size_t i = 0; i < config.n; ++i) {
                particles[i] = Particle{Rational(1), Rational(i + 1),
                                        Rational(velocities[i])};
            }
            const ClusterSet clusters = predict_clusters(ParticleSystem(particles));
            ++tally[clusters.clusters.size()];
        }
    };

    if (worker_count == 1) {
        run_range(0, 0, config.trials);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(worker_count));
        const std::uint64_t base = config.trials / worker_count;
        const std::uint64_t extra = config.trials % worker_count;
        std::uint64_t lo = 0;
        for (std::uint64_t w = 0; w < worker_count; ++w) {
            const std::uint64_t hi = lo + base + (w < extra ? 1 : 0);
            threads.emplace_back(run_range, static_cast<std::size_t>(w), lo, hi);
            lo = hi;
        }
        for (std::thread& thread : threads) {
            thread.join();
        }
    }

    McResult result;
    result.trials = config.trials;
    for (std::size_t k = 1; k <= config.n; ++k) {
        std::uint64_t total = 0;
        for (const std::vector<std::uint64_t>& tally : tallies) {
            total += tally[k];
        }
        if (total > 0) {
            result.histogram[k] = total;
        }
    }
    return result;
}

struct OneClusterEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

inline OneClusterEstimate estimate_one_cluster_probability(const McConfig& config,
                                                           unsigned workers = 1) {
    const McResult result = sample_cluster_counts(config, workers);
    return OneClusterEstimate{result.estimate(1), result.std_error(1), result.trials};
}

} // namespace sticky
